#include "ventropy/product.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "ventropy/errors.hpp"

namespace ventropy {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t digits_needed(std::uint64_t m, const RadixSequence& radix) {
    std::uint64_t r = 0, p = 1;
    while (p <= m) {
        p *= radix.s(r);
        ++r;
    }
    return r;  // smallest r with P_r > m
}

std::uint64_t trig_degree(std::uint64_t m) { return (m + 1) / 2; }

// Shared uniform product grid: digit grids on Vilenkin factors, equispaced
// angles on trig factors. Factor 0 varies fastest.
struct ProductGrid {
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 1;

    static ProductGrid build(const ProductSpec& spec,
                             const std::vector<std::uint64_t>& vilenkin_depth,
                             const std::vector<std::uint64_t>& trig_points,
                             std::uint64_t budget) {
        ProductGrid g;
        for (unsigned j = 0; j < spec.d(); ++j) {
            std::uint64_t size = 1;
            if (spec.factors[j].kind == FactorSystem::Kind::Vilenkin) {
                for (std::uint64_t k = 0; k < vilenkin_depth[j]; ++k) {
                    if (__builtin_mul_overflow(size,
                            static_cast<std::uint64_t>(spec.factors[j].radix.s(k)), &size))
                        throw resource_error("product grid exceeds budget");
                }
            } else {
                size = trig_points[j];
            }
            g.sizes.push_back(size);
            if (__builtin_mul_overflow(g.total, size, &g.total) || g.total > budget)
                throw resource_error("product grid exceeds budget");
        }
        return g;
    }

    Coordinate coordinate(const ProductSpec& spec, unsigned j, std::uint64_t gj) const {
        if (spec.factors[j].kind == FactorSystem::Kind::Vilenkin)
            return grid_point(gj, spec.factors[j].radix);
        return kTwoPi * static_cast<double>(gj) / static_cast<double>(sizes[j]);
    }

    OmegaPoint point(const ProductSpec& spec, std::uint64_t g) const {
        OmegaPoint x;
        x.reserve(sizes.size());
        for (unsigned j = 0; j < sizes.size(); ++j) {
            x.push_back(coordinate(spec, j, g % sizes[j]));
            g /= sizes[j];
        }
        return x;
    }
};

std::uint64_t trig_grid_points(double p, std::uint64_t maxdeg) {
    const double p_eff = std::isinf(p) ? 8.0 : std::ceil(p);
    return std::max<std::uint64_t>(4096,
        8 * static_cast<std::uint64_t>(p_eff) * std::max<std::uint64_t>(maxdeg, 1));
}

// Per-factor basis values over that factor's grid axis.
Eigen::VectorXd factor_axis_values(const FactorSystem& factor, std::uint64_t m,
                                   std::uint64_t size, const ProductGrid& grid, unsigned j,
                                   const ProductSpec& spec) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(size));
    for (std::uint64_t g = 0; g < size; ++g)
        v[static_cast<Eigen::Index>(g)] = factor_value(factor, m, grid.coordinate(spec, j, g));
    return v;
}

double reduce_norm(const Eigen::VectorXd& values, double weight, double p) {
    if (std::isinf(p)) return values.cwiseAbs().maxCoeff();
    long double acc = 0.0L;
    if (p == 2.0) {
        for (Eigen::Index i = 0; i < values.size(); ++i)
            acc += static_cast<long double>(values[i]) * values[i];
        return static_cast<double>(std::sqrt(acc * weight));
    }
    for (Eigen::Index i = 0; i < values.size(); ++i)
        acc += std::pow(std::fabs(static_cast<long double>(values[i])), (long double)p);
    return static_cast<double>(std::pow(acc * weight, 1.0L / p));
}

} // namespace

FactorSystem FactorSystem::vilenkin(RadixSequence radix, OrderingMode ordering) {
    FactorSystem f;
    f.kind = Kind::Vilenkin;
    f.radix = std::move(radix);
    f.ordering = ordering;
    return f;
}

FactorSystem FactorSystem::trigonometric() {
    FactorSystem f;
    f.kind = Kind::Trigonometric;
    return f;
}

FactorSystem FactorSystem::parse(const std::string& text) {
    if (text == "trig") return trigonometric();
    if (text.rfind("v:", 0) == 0)
        return vilenkin(RadixSequence::parse(text.substr(2)), OrderingMode::Z);
    if (text.rfind("v~:", 0) == 0)
        return vilenkin(RadixSequence::parse(text.substr(3)), OrderingMode::Ztilde);
    throw input_error("bad factor spec '" + text + "' (expected v:<pattern>, v~:<pattern> or trig)");
}

std::string FactorSystem::to_string() const {
    if (kind == Kind::Trigonometric) return "trig";
    return (ordering == OrderingMode::Z ? "v:" : "v~:") + radix.to_string();
}

ProductSpec::ProductSpec(std::vector<FactorSystem> f) : factors(std::move(f)) {
    if (factors.empty()) throw input_error("product spec requires d >= 1 factors");
}

ProductSpec ProductSpec::walsh(unsigned d) {
    if (d < 1) throw input_error("product spec requires d >= 1 factors");
    std::vector<FactorSystem> f(d, FactorSystem::vilenkin(
                                       RadixSequence(std::vector<std::uint32_t>{2})));
    return ProductSpec(std::move(f));
}

ProductSpec ProductSpec::parse(const std::string& text) {
    std::vector<FactorSystem> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        factors.push_back(FactorSystem::parse(text.substr(start, end - start)));
        start = end + 1;
        if (end == text.size()) break;
    }
    return ProductSpec(std::move(factors));
}

std::string ProductSpec::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j) out += ';';
        out += factors[j].to_string();
    }
    return out;
}

double factor_value(const FactorSystem& factor, std::uint64_t m, const Coordinate& x) {
    if (factor.kind == FactorSystem::Kind::Vilenkin) {
        const auto* point = std::get_if<GroupPoint>(&x);
        if (!point) throw input_error("coordinate kind mismatch: expected digits");
        return real_basis(m, factor.ordering, *point, factor.radix);
    }
    const auto* angle = std::get_if<double>(&x);
    if (!angle) throw input_error("coordinate kind mismatch: expected an angle");
    return trig_basis(m, *angle);
}

double eval_product_basis(const MultiIndex& m, const OmegaPoint& x, const ProductSpec& spec) {
    if (m.dim() != spec.d() || x.size() != spec.d())
        throw input_error("eval_product_basis: dimension mismatch");
    double v = 1.0;
    for (unsigned j = 0; j < spec.d(); ++j)
        v *= factor_value(spec.factors[j], m.components[j], x[j]);
    return v;
}

void CoefficientVector::set(MultiIndex m, double a) {
    if (a == 0.0)
        terms.erase(m);
    else
        terms[std::move(m)] = a;
}

double CoefficientVector::coefficient_l2() const {
    long double q = 0.0L;
    for (const auto& [m, a] : terms) q += static_cast<long double>(a) * a;
    return static_cast<double>(std::sqrt(q));
}

std::string CoefficientVector::to_json() const {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [m, a] : terms) obj[m.key()] = a;
    return obj.dump();
}

CoefficientVector CoefficientVector::from_json(const std::string& text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("bad coefficient JSON: ") + e.what());
    }
    if (!obj.is_object()) throw input_error("coefficient JSON must be an object");
    CoefficientVector f;
    std::size_t dim = 0;
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_number()) throw input_error("coefficient values must be numbers");
        MultiIndex m = MultiIndex::parse_key(key);
        if (dim == 0) dim = m.dim();
        if (m.dim() != dim) throw input_error("coefficient keys have mixed dimensions");
        f.set(std::move(m), value.get<double>());
    }
    return f;
}

CoefficientVector spherical_partial_sum(const CoefficientVector& f, double R, NormMode mode) {
    if (R < 0) throw input_error("spherical_partial_sum: R must be >= 0");
    CoefficientVector out;
    for (const auto& [m, a] : f.terms)
        if (norm_le(m, R, mode)) out.set(m, a);
    return out;
}

LayerWindow::LayerWindow(std::int64_t m1_, std::int64_t m2_, NormMode mode_)
    : m1(m1_), m2(m2_), mode(mode_) {
    if (m1 < -1 || m2 < m1) throw input_error("window requires -1 <= M1 <= M2");
}

std::vector<MultiIndex> window_basis(const LayerWindow& window, unsigned d,
                                     std::uint64_t budget) {
    std::vector<MultiIndex> basis;
    for (std::int64_t l = window.m1 + 1; l <= window.m2; ++l) {
        auto layer = layer_enumerate(d, window.mode, static_cast<std::uint64_t>(l), budget);
        basis.insert(basis.end(), layer.begin(), layer.end());
        if (basis.size() > budget) throw resource_error("window basis exceeds budget");
    }
    return basis;
}

CoefficientVector coordinate_map_J(const Eigen::VectorXd& alpha, const LayerWindow& window,
                                   unsigned d) {
    const auto basis = window_basis(window, d);
    if (alpha.size() != static_cast<Eigen::Index>(basis.size()))
        throw input_error("coordinate_map_J: alpha length " + std::to_string(alpha.size()) +
                          " != window dimension " + std::to_string(basis.size()));
    CoefficientVector f;
    for (std::size_t k = 0; k < basis.size(); ++k)
        f.set(basis[k], alpha[static_cast<Eigen::Index>(k)]);
    return f;
}

Eigen::VectorXd coordinate_map_J_inverse(const CoefficientVector& f, const LayerWindow& window,
                                         unsigned d) {
    const auto basis = window_basis(window, d);
    std::set<MultiIndex> in_window(basis.begin(), basis.end());
    for (const auto& [m, a] : f.terms)
        if (!in_window.count(m))
            throw input_error("coordinate_map_J_inverse: support outside the window");
    Eigen::VectorXd alpha(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        alpha[static_cast<Eigen::Index>(k)] = f.coefficient(basis[k]);
    return alpha;
}

double fourier_coefficient(const EvaluableFunction& f, const MultiIndex& m,
                           const ProductSpec& spec, std::uint64_t budget) {
    if (m.dim() != spec.d()) throw input_error("fourier_coefficient: dimension mismatch");
    if (f.resolution.size() != spec.d())
        throw input_error("fourier_coefficient: resolution must list one entry per factor");
    std::vector<std::uint64_t> depth(spec.d(), 0), points(spec.d(), 0);
    for (unsigned j = 0; j < spec.d(); ++j) {
        if (spec.factors[j].kind == FactorSystem::Kind::Vilenkin) {
            depth[j] = std::max<std::uint64_t>(
                f.resolution[j], digits_needed(m.components[j], spec.factors[j].radix));
        } else {
            points[j] = std::max<std::uint64_t>(
                4096, 8 * (f.resolution[j] + trig_degree(m.components[j])));
        }
    }
    const ProductGrid grid = ProductGrid::build(spec, depth, points, budget);
    long double acc = 0.0L;
    for (std::uint64_t g = 0; g < grid.total; ++g) {
        const OmegaPoint x = grid.point(spec, g);
        acc += static_cast<long double>(f.f(x)) * eval_product_basis(m, x, spec);
    }
    return static_cast<double>(acc / static_cast<long double>(grid.total));
}

double lp_norm(const CoefficientVector& f, double p, const ProductSpec& spec,
               std::uint64_t budget) {
    if (!(p >= 1.0)) throw input_error("lp_norm requires 1 <= p <= infinity");
    if (f.terms.empty()) return 0.0;
    const unsigned d = spec.d();
    std::vector<std::uint64_t> max_index(d, 0);
    for (const auto& [m, a] : f.terms) {
        if (m.dim() != d) throw input_error("lp_norm: coefficient dimension mismatch");
        for (unsigned j = 0; j < d; ++j)
            max_index[j] = std::max(max_index[j], m.components[j]);
    }
    std::vector<std::uint64_t> depth(d, 0), points(d, 0);
    for (unsigned j = 0; j < d; ++j) {
        if (spec.factors[j].kind == FactorSystem::Kind::Vilenkin)
            depth[j] = digits_needed(max_index[j], spec.factors[j].radix);
        else
            points[j] = trig_grid_points(p, trig_degree(max_index[j]));
    }
    const ProductGrid grid = ProductGrid::build(spec, depth, points, budget);

    Eigen::VectorXd values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.total));
    for (const auto& [m, a] : f.terms) {
        std::vector<Eigen::VectorXd> axis;
        axis.reserve(d);
        for (unsigned j = 0; j < d; ++j)
            axis.push_back(factor_axis_values(spec.factors[j], m.components[j], grid.sizes[j],
                                              grid, j, spec));
        for (std::uint64_t g = 0; g < grid.total; ++g) {
            double v = a;
            std::uint64_t rem = g;
            for (unsigned j = 0; j < d; ++j) {
                v *= axis[j][static_cast<Eigen::Index>(rem % grid.sizes[j])];
                rem /= grid.sizes[j];
            }
            values[static_cast<Eigen::Index>(g)] += v;
        }
    }
    return reduce_norm(values, 1.0 / static_cast<double>(grid.total), p);
}

WindowEvaluator::WindowEvaluator(const LayerWindow& window, const ProductSpec& spec,
                                 double p_hint, std::uint64_t budget)
    : basis_(window_basis(window, spec.d())) {
    const unsigned d = spec.d();
    std::vector<std::uint64_t> max_index(d, 0);
    for (const auto& m : basis_)
        for (unsigned j = 0; j < d; ++j)
            max_index[j] = std::max(max_index[j], m.components[j]);
    std::vector<std::uint64_t> depth(d, 0), points(d, 0);
    for (unsigned j = 0; j < d; ++j) {
        if (spec.factors[j].kind == FactorSystem::Kind::Vilenkin)
            depth[j] = digits_needed(max_index[j], spec.factors[j].radix);
        else
            points[j] = trig_grid_points(p_hint, trig_degree(max_index[j]));
    }
    const ProductGrid grid = ProductGrid::build(spec, depth, points, budget);
    weight_ = 1.0 / static_cast<double>(grid.total);

    values_.resize(static_cast<Eigen::Index>(grid.total), static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        std::vector<Eigen::VectorXd> axis;
        axis.reserve(d);
        for (unsigned j = 0; j < d; ++j)
            axis.push_back(factor_axis_values(spec.factors[j], basis_[k].components[j],
                                              grid.sizes[j], grid, j, spec));
        for (std::uint64_t g = 0; g < grid.total; ++g) {
            double v = 1.0;
            std::uint64_t rem = g;
            for (unsigned j = 0; j < d; ++j) {
                v *= axis[j][static_cast<Eigen::Index>(rem % grid.sizes[j])];
                rem /= grid.sizes[j];
            }
            values_(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(k)) = v;
        }
    }
}

double WindowEvaluator::norm_p(const Eigen::VectorXd& alpha, double p) const {
    if (alpha.size() != values_.cols())
        throw input_error("WindowEvaluator::norm_p: alpha length mismatch");
    const Eigen::VectorXd v = values_ * alpha;
    return reduce_norm(v, weight_, p);
}

} // namespace ventropy
