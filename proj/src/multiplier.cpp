#include "ventropy/multiplier.hpp"

#include <algorithm>
#include <cmath>

#include "ventropy/errors.hpp"

namespace ventropy {

MultiplierSpec MultiplierSpec::finite(double gamma, double xi, NormMode mode) {
    if (!(gamma > 0) || !(xi >= 0)) throw input_error("finite family requires gamma > 0, xi >= 0");
    MultiplierSpec s;
    s.family = Family::Finite;
    s.gamma = gamma;
    s.xi = xi;
    s.mode = mode;
    return s;
}

MultiplierSpec MultiplierSpec::exponential(double gamma, double r, NormMode mode) {
    if (!(gamma > 0) || !(r > 0))
        throw input_error("exponential family requires gamma > 0, r > 0");
    MultiplierSpec s;
    s.family = Family::Exponential;
    s.gamma = gamma;
    s.r = r;
    s.mode = mode;
    return s;
}

namespace {

double parse_param(const std::string& text, const std::string& name) {
    const std::string tag = name + "=";
    std::size_t pos = text.find(tag);
    if (pos == std::string::npos)
        throw input_error("multiplier spec is missing '" + name + "=': " + text);
    pos += tag.size();
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(item, &used);
    } catch (const std::exception&) {
        throw input_error("bad multiplier parameter '" + item + "'");
    }
    if (used != item.size()) throw input_error("bad multiplier parameter '" + item + "'");
    return v;
}

} // namespace

MultiplierSpec MultiplierSpec::parse(const std::string& text, NormMode mode) {
    if (text.rfind("finite:", 0) == 0)
        return finite(parse_param(text, "gamma"), parse_param(text, "xi"), mode);
    if (text.rfind("exp:", 0) == 0)
        return exponential(parse_param(text, "gamma"), parse_param(text, "r"), mode);
    throw input_error("multiplier spec must start with 'finite:' or 'exp:': " + text);
}

std::string MultiplierSpec::to_string() const {
    if (family == Family::Finite)
        return "finite:gamma=" + std::to_string(gamma) + ",xi=" + std::to_string(xi);
    return "exp:gamma=" + std::to_string(gamma) + ",r=" + std::to_string(r);
}

double lambda_value(const MultiplierSpec& spec, double t) {
    if (t < 0 || !std::isfinite(t)) throw input_error("lambda_value: t must be finite and >= 0");
    if (spec.family == MultiplierSpec::Family::Finite) {
        if (t <= 1.0) return 0.0;
        return std::pow(t, -spec.gamma) * std::pow(std::log2(t), -spec.xi);
    }
    return std::exp(-spec.gamma * std::pow(t, spec.r));
}

double lambda_at(const MultiplierSpec& spec, const MultiIndex& k) {
    const double t = spec.mode == NormMode::Euclid ? k.norm()
                                                   : static_cast<double>(k.max_norm());
    return lambda_value(spec, t);
}

CoefficientVector apply_multiplier(const MultiplierSpec& spec, const CoefficientVector& f) {
    CoefficientVector out;
    for (const auto& [m, a] : f.terms) out.set(m, lambda_at(spec, m) * a);
    return out;
}

std::vector<double> diagonal_sequence(const MultiplierSpec& spec, const LayerWindow& window,
                                      unsigned d, std::uint64_t budget) {
    std::vector<double> diag;
    for (const auto& m : window_basis(window, d, budget)) diag.push_back(lambda_at(spec, m));
    return diag;
}

std::uint64_t DyadicLevels::sum_m() const {
    std::uint64_t s = 0;
    for (auto v : m) s += v;
    return s;
}

std::uint64_t next_level(const MultiplierSpec& spec, std::uint64_t n_k,
                         std::uint64_t scan_budget) {
    const double base = std::fabs(lambda_value(spec, static_cast<double>(n_k)));
    if (!(base > 0)) throw input_error("next_level requires lambda(N_k) != 0");
    for (std::uint64_t l = n_k + 1; l - n_k <= scan_budget; ++l) {
        if (2.0 * std::fabs(lambda_value(spec, static_cast<double>(l))) <= base) return l;
    }
    throw resource_error("dyadic level scan exceeded budget: lambda decays too slowly");
}

DyadicLevels dyadic_levels(const MultiplierSpec& spec, std::uint64_t base, std::size_t count,
                           LayerCounter& counter, double eps, std::uint64_t scan_budget) {
    if (count < 1) throw input_error("dyadic_levels: count must be >= 1");
    if (!(eps > 0)) throw input_error("dyadic_levels: eps must be > 0");
    if (!(std::fabs(lambda_value(spec, static_cast<double>(base))) > 0))
        throw input_error("dyadic_levels: |lambda(N)| must be positive");

    DyadicLevels out;
    out.eps = eps;
    out.levels.push_back(base);
    for (std::size_t k = 1; k < count; ++k)
        out.levels.push_back(next_level(spec, out.levels.back(), scan_budget));

    const bool closed = counter.has_closed_form();
    for (std::size_t k = 0; k + 1 < out.levels.size(); ++k) {
        const double hi = closed ? counter.count_A_dbl(static_cast<double>(out.levels[k + 1]))
                                 : static_cast<double>(counter.count_A(out.levels[k + 1]));
        const double lo = closed ? counter.count_A_dbl(static_cast<double>(out.levels[k]))
                                 : static_cast<double>(counter.count_A(out.levels[k]));
        out.theta.push_back(hi - lo);
    }

    if (!out.theta.empty()) {
        out.theta12 = out.theta.front();
        out.M = static_cast<std::uint64_t>(std::floor(std::log2(out.theta12) / eps));
        for (std::uint64_t k = 1; k <= out.M; ++k)
            out.m.push_back(static_cast<std::uint64_t>(
                                std::floor(std::pow(2.0, -eps * static_cast<double>(k)) *
                                           out.theta12)) + 1);
    }
    return out;
}

KepsReport K_eps_check(const MultiplierSpec& spec, double eps, double p, unsigned d,
                       NormMode mode, std::uint64_t n_lo, std::uint64_t n_hi,
                       std::uint64_t step, std::uint64_t scan_budget,
                       std::uint64_t work_budget) {
    if (!(p >= 1 && p <= 2)) throw input_error("K_eps_check requires 1 <= p <= 2");
    if (!(eps > 0)) throw input_error("K_eps_check requires eps > 0");
    if (n_lo < spec.first_nonzero_level() || n_hi < n_lo || step == 0)
        throw input_error("K_eps_check: bad N range");

    LayerCounter counter(d, mode, work_budget);
    KepsReport rep;
    rep.eps = eps;
    rep.p = p;
    for (std::uint64_t n = n_lo; n <= n_hi; n += step) {
        // M depends only on theta_{N_1,N_2}; two levels fix it, then extend.
        DyadicLevels two = dyadic_levels(spec, n, 2, counter, eps, scan_budget);
        DyadicLevels lv = dyadic_levels(spec, n, std::max<std::size_t>(2, two.M + 1), counter,
                                        eps, scan_budget);
        double sum = 0.0;
        for (std::uint64_t k = 1; k <= lv.M; ++k) {
            sum += std::pow(2.0, -static_cast<double>(k) * (1.0 - eps / 2.0)) *
                   std::pow(lv.theta[k - 1], 1.0 / p) / std::sqrt(lv.theta12);
        }
        const double ratio = sum / std::pow(lv.theta12, 1.0 / p - 0.5);
        rep.bases.push_back(n);
        rep.ratios.push_back(ratio);
    }
    rep.sup_ratio = 0;
    for (double v : rep.ratios) rep.sup_ratio = std::max(rep.sup_ratio, v);
    // Bounded-trend evidence: the sequence typically ramps up before it
    // saturates, so compare the last quarter against the quarter before it
    // rather than against the start of the range.
    const std::size_t m = rep.ratios.size();
    if (m < 4) {
        rep.consistent = true;
    } else {
        double q3 = 0, q4 = 0;
        for (std::size_t i = m / 2; i < 3 * m / 4; ++i) q3 = std::max(q3, rep.ratios[i]);
        for (std::size_t i = 3 * m / 4; i < m; ++i) q4 = std::max(q4, rep.ratios[i]);
        rep.consistent = q4 <= 1.10 * q3;
    }
    return rep;
}

} // namespace ventropy
