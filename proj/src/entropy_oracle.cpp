#include "ventropy/entropy_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ventropy/errors.hpp"
#include "ventropy/rng.hpp"

namespace ventropy {

namespace {

double lp_vector_norm(const Eigen::VectorXd& x, double p) {
    if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
    if (p == 2.0) return x.norm();
    if (p == 1.0) return x.cwiseAbs().sum();
    double acc = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::fabs(x[i]), p);
    return std::pow(acc, 1.0 / p);
}

double holder_conjugate(double p) {
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

} // namespace

BodySpec BodySpec::coordinate(int n, double p) {
    if (n < 1) throw input_error("BodySpec: dimension must be >= 1");
    if (!(p >= 1.0)) throw input_error("BodySpec: p must be in [1, infinity]");
    BodySpec b;
    b.n_ = n;
    b.p_ = p;
    return b;
}

BodySpec BodySpec::sup(int n) {
    return coordinate(n, std::numeric_limits<double>::infinity());
}

BodySpec BodySpec::window(std::shared_ptr<const WindowEvaluator> evaluator, double p) {
    if (!evaluator) throw input_error("BodySpec: null window evaluator");
    BodySpec b;
    b.n_ = evaluator->dim();
    b.p_ = p;
    b.evaluator_ = std::move(evaluator);
    return b;
}

BodySpec BodySpec::scaled(Eigen::VectorXd diag) const {
    if (diag.size() != n_) throw input_error("BodySpec::scaled: diagonal length mismatch");
    for (Eigen::Index i = 0; i < diag.size(); ++i)
        if (diag[i] == 0.0)
            throw input_error("BodySpec::scaled: zero diagonal entry (degenerate body)");
    BodySpec b = *this;
    if (b.diag_) {
        for (Eigen::Index i = 0; i < diag.size(); ++i) diag[i] *= (*b.diag_)[i];
    }
    b.diag_ = std::move(diag);
    return b;
}

double BodySpec::gauge(const Eigen::VectorXd& x) const {
    if (x.size() != n_) throw input_error("BodySpec::gauge: dimension mismatch");
    const Eigen::VectorXd y = diag_ ? (x.array() / diag_->array()).matrix() : x;
    if (evaluator_) return evaluator_->norm_p(y, p_);
    return lp_vector_norm(y, p_);
}

double BodySpec::support(const Eigen::VectorXd& x, std::uint64_t seed,
                         std::uint64_t samples) const {
    if (x.size() != n_) throw input_error("BodySpec::support: dimension mismatch");
    const Eigen::VectorXd z = diag_ ? (x.array() * diag_->array()).matrix() : x;
    if (is_coordinate()) return lp_vector_norm(z, holder_conjugate(p_));
    // Sampled maximization of <z, y>/gauge(y) over directions; an under-estimate.
    double best = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Eigen::VectorXd dir = rng::sphere_point(n_, seed ^ 0x5c0eULL, i);
        const double g = evaluator_->norm_p(dir, p_);
        if (g > 0) best = std::max(best, std::fabs(dir.dot(z)) / g);
    }
    return best;
}

BodySpec BodySpec::polar() const {
    if (!is_coordinate() || diag_)
        throw input_error("polar() is defined for unscaled coordinate bodies");
    return coordinate(n_, holder_conjugate(p_));
}

double BodySpec::circumradius(std::uint64_t seed, std::uint64_t samples) const {
    if (is_coordinate()) {
        // sup of the Euclidean norm over the l_p ball: n^(1/2 - 1/p) for p >= 2,
        // 1 for p <= 2; a diagonal scaling multiplies by at most max |diag|.
        const double shape = p_ <= 2.0
            ? 1.0
            : std::pow(static_cast<double>(n_), 0.5 - (std::isinf(p_) ? 0.0 : 1.0 / p_));
        return diag_ ? shape * diag_->cwiseAbs().maxCoeff() : shape;
    }
    // Window body: sampled directional estimate sup ||dir||_2 / gauge(dir),
    // padded because sampling can only under-estimate.
    double best = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Eigen::VectorXd dir = rng::sphere_point(n_, seed ^ 0xc1c2c3ULL, i);
        const double g = gauge(dir);
        if (g > 0) best = std::max(best, 1.0 / g);
    }
    for (int axis = 0; axis < n_; ++axis) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
        e[axis] = 1.0;
        const double g = gauge(e);
        if (g > 0) best = std::max(best, 1.0 / g);
    }
    return best * 1.25;
}

namespace {

// Deterministic cloud: ~60% random interior, ~15% boundary, rest lattice.
struct Cloud {
    std::vector<Eigen::VectorXd> points;
    double lattice_step = 0;
};

Cloud build_cloud(const BodySpec& body, std::uint64_t budget, std::uint64_t seed) {
    if (budget < 16) throw resource_error("cover_and_pack: sample budget too small");
    const int n = body.dim();
    Cloud cloud;
    cloud.points.reserve(budget);

    const std::uint64_t n_random = budget * 3 / 5;
    const std::uint64_t n_boundary = budget * 3 / 20;
    for (std::uint64_t i = 0; i < n_random; ++i) {
        const Eigen::VectorXd dir = rng::sphere_point(n, seed, i);
        const double g = body.gauge(dir);
        if (g <= 0) continue;
        const double u = std::pow(rng::uniform(seed, 0x7ad1a1, i), 1.0 / n);
        cloud.points.push_back(dir * (u / g));
    }
    for (std::uint64_t i = 0; i < n_boundary; ++i) {
        const Eigen::VectorXd dir = rng::sphere_point(n, seed, n_random + i);
        const double g = body.gauge(dir);
        if (g > 0) cloud.points.push_back(dir / g);
    }

    // Lattice refinement: axis-aligned grid of step h clipped to the body.
    const double R = body.circumradius(seed);
    const std::uint64_t lattice_budget = budget - cloud.points.size();
    const double per_axis = std::floor(std::pow(static_cast<double>(lattice_budget),
                                                1.0 / n));
    const auto half = static_cast<std::int64_t>(std::max(1.0, per_axis / 2.0));
    const double h = R / static_cast<double>(half);
    cloud.lattice_step = h;
    std::vector<std::int64_t> g(n, -half);
    while (true) {
        Eigen::VectorXd x(n);
        for (int j = 0; j < n; ++j) x[j] = h * static_cast<double>(g[j]);
        if (body.gauge(x) <= 1.0) {
            cloud.points.push_back(std::move(x));
            if (cloud.points.size() >= budget) break;
        }
        int j = 0;
        for (; j < n; ++j) {
            if (++g[j] <= half) break;
            g[j] = -half;
        }
        if (j == n) break;
    }
    if (cloud.points.empty()) cloud.points.push_back(Eigen::VectorXd::Zero(n));
    return cloud;
}

// Both builders stop at cap+1 centers; a capped count only means "more than cap".
std::uint64_t greedy_cover_size(const Cloud& cloud, const BodySpec& target, double eps,
                                std::uint64_t cap) {
    const std::size_t m = cloud.points.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = cloud.points[a];
        const auto& pb = cloud.points[b];
        for (Eigen::Index j = 0; j < pa.size(); ++j)
            if (pa[j] != pb[j]) return pa[j] < pb[j];
        return false;
    });
    std::vector<bool> covered(m, false);
    std::uint64_t centers = 0;
    for (std::size_t oi = 0; oi < m; ++oi) {
        const std::size_t i = order[oi];
        if (covered[i]) continue;
        if (++centers > cap) return centers;
        for (std::size_t oj = oi; oj < m; ++oj) {
            const std::size_t j = order[oj];
            if (!covered[j] && target.gauge(cloud.points[i] - cloud.points[j]) <= eps)
                covered[j] = true;
        }
    }
    return centers;
}

std::uint64_t farthest_point_size(const Cloud& cloud, const BodySpec& target, double eps,
                                  std::uint64_t cap) {
    const std::size_t m = cloud.points.size();
    std::vector<double> dist(m, std::numeric_limits<double>::infinity());
    std::size_t next = 0;
    std::uint64_t selected = 0;
    while (true) {
        const auto& center = cloud.points[next];
        if (++selected > cap) return selected;
        double far_d = 0;
        std::size_t far_i = next;
        for (std::size_t j = 0; j < m; ++j) {
            const double dj = target.gauge(cloud.points[j] - center);
            if (dj < dist[j]) dist[j] = dj;
            if (dist[j] > far_d) {
                far_d = dist[j];
                far_i = j;
            }
        }
        if (far_d <= eps) break;
        next = far_i;
    }
    return selected;
}

// Covering witness with synthetic centers: scan in lexicographic order and
// center each ball one target-radius past the first uncovered point along the
// first axis. Exact on intervals, where first-uncovered centering would waste
// half a ball at the boundary.
std::uint64_t shifted_cover_size(const Cloud& cloud, const BodySpec& target, double eps,
                                 std::uint64_t cap) {
    const std::size_t m = cloud.points.size();
    const int n = static_cast<int>(cloud.points.front().size());
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n);
    e1[0] = 1.0;
    const double g1 = target.gauge(e1);
    if (!(g1 > 0)) return cap + 1;
    const Eigen::VectorXd shift = e1 * (eps / g1);

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = cloud.points[a];
        const auto& pb = cloud.points[b];
        for (Eigen::Index j = 0; j < pa.size(); ++j)
            if (pa[j] != pb[j]) return pa[j] < pb[j];
        return false;
    });
    std::vector<bool> covered(m, false);
    std::uint64_t centers = 0;
    for (std::size_t oi = 0; oi < m; ++oi) {
        const std::size_t i = order[oi];
        if (covered[i]) continue;
        if (++centers > cap) return centers;
        const Eigen::VectorXd center = cloud.points[i] + shift;
        for (std::size_t oj = oi; oj < m; ++oj) {
            const std::size_t j = order[oj];
            if (!covered[j] && target.gauge(center - cloud.points[j]) <= eps)
                covered[j] = true;
        }
    }
    return centers;
}

// Covering radius achieved by m centers: farthest-point seeding plus a few
// coordinate-midpoint recentering passes, keeping the best pass.
double kcenter_radius(const Cloud& cloud, const BodySpec& target, std::uint64_t m) {
    const std::size_t count = cloud.points.size();
    m = std::min<std::uint64_t>(m, count);
    std::vector<Eigen::VectorXd> centers;
    centers.reserve(m);
    std::vector<double> dist(count, std::numeric_limits<double>::infinity());
    std::size_t next = 0;
    for (std::uint64_t c = 0; c < m; ++c) {
        centers.push_back(cloud.points[next]);
        double far_d = -1;
        for (std::size_t j = 0; j < count; ++j) {
            const double dj = target.gauge(cloud.points[j] - centers.back());
            if (dj < dist[j]) dist[j] = dj;
            if (dist[j] > far_d) {
                far_d = dist[j];
                next = j;
            }
        }
    }
    std::vector<int> owner(count, 0);
    std::vector<std::vector<std::size_t>> members(centers.size());
    double best = std::numeric_limits<double>::infinity();
    for (int pass = 0; pass < 12; ++pass) {
        double radius = 0;
        for (auto& v : members) v.clear();
        for (std::size_t j = 0; j < count; ++j) {
            double dj = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < centers.size(); ++c) {
                const double v = target.gauge(cloud.points[j] - centers[c]);
                if (v < dj) {
                    dj = v;
                    owner[j] = static_cast<int>(c);
                }
            }
            members[owner[j]].push_back(j);
            radius = std::max(radius, dj);
        }
        best = std::min(best, radius);
        // 1-center pull: walk each center toward its farthest member, which
        // shrinks the cluster radius in any norm.
        for (std::size_t c = 0; c < centers.size(); ++c) {
            if (members[c].empty()) continue;
            Eigen::VectorXd center = centers[c];
            for (int step = 0; step < 10; ++step) {
                double far_d = -1;
                std::size_t far_j = members[c].front();
                for (std::size_t j : members[c]) {
                    const double v = target.gauge(cloud.points[j] - center);
                    if (v > far_d) {
                        far_d = v;
                        far_j = j;
                    }
                }
                center += (0.5 / (1.0 + step)) * (cloud.points[far_j] - center);
            }
            centers[c] = center;
        }
    }
    return best;
}

// Smallest center count <= hint whose k-center radius fits within eps.
std::uint64_t refined_cover_size(const Cloud& cloud, const BodySpec& target, double eps,
                                 std::uint64_t hint) {
    if (hint <= 1 || hint > 256) return hint;
    std::uint64_t lo = 1, hi = hint;  // hi is already witnessed by the caller
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (kcenter_radius(cloud, target, mid) <= eps)
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

CoverPackResult cover_and_pack_on(const Cloud& cloud, const BodySpec& target, double eps,
                                  std::uint64_t cap, bool refine) {
    // The cloud-point witnesses are eps-packings and eps-covers at once; the
    // shifted and refined witnesses are covers only. Any 2eps-packing is at
    // most any eps-cover, so min/max keeps the reported pair coherent.
    const std::uint64_t greedy = greedy_cover_size(cloud, target, eps, cap);
    const std::uint64_t fps = farthest_point_size(cloud, target, eps, cap);
    const std::uint64_t shifted = shifted_cover_size(cloud, target, eps, cap);
    CoverPackResult r;
    r.net_size = std::min({greedy, fps, shifted});
    if (refine) r.net_size = refined_cover_size(cloud, target, eps, r.net_size);
    r.pack_size = std::max(greedy, fps);
    r.cloud_size = cloud.points.size();
    r.lattice_step = cloud.lattice_step;
    return r;
}

} // namespace

CoverPackResult cover_and_pack(const BodySpec& body, const BodySpec& target, double eps,
                               std::uint64_t sample_budget, std::uint64_t seed) {
    if (!(eps > 0)) throw input_error("cover_and_pack: eps must be > 0");
    if (body.dim() != target.dim())
        throw input_error("cover_and_pack: body and target dimensions differ");
    const Cloud cloud = build_cloud(body, sample_budget, seed);
    return cover_and_pack_on(cloud, target, eps, cloud.points.size(), true);
}

VolumeRatio mc_volume_ratio(const BodySpec& body_a, const BodySpec& body_b,
                            std::uint64_t samples, std::uint64_t seed) {
    if (body_a.dim() != body_b.dim())
        throw input_error("mc_volume_ratio: body dimensions differ");
    const int n = body_a.dim();
    const double R = std::max(body_a.circumradius(seed), body_b.circumradius(seed));
    VolumeRatio out;
    out.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Eigen::VectorXd dir = rng::sphere_point(n, seed ^ 0x5a5a5aULL, i);
        const double u = std::pow(rng::uniform(seed, 0xba11, i), 1.0 / n);
        const Eigen::VectorXd x = dir * (u * R);
        if (body_a.gauge(x) <= 1.0) ++out.hits_a;
        if (body_b.gauge(x) <= 1.0) ++out.hits_b;
    }
    if (out.hits_a < 100 || out.hits_b < 100)
        throw precision_error("mc_volume_ratio: fewer than 100 hits in a body");
    const auto a = static_cast<double>(out.hits_a), b = static_cast<double>(out.hits_b);
    const auto s = static_cast<double>(samples);
    out.estimate = a / b;
    // Binomial variance of both hit fractions, propagated independently.
    out.stderr_value = out.estimate * std::sqrt((1.0 - a / s) / a + (1.0 - b / s) / b);
    return out;
}

EntropyBracket entropy_estimate(const std::vector<double>& diag, double p, double q, int k,
                                std::uint64_t budget, std::uint64_t seed) {
    if (diag.empty() || diag.size() > 6)
        throw input_error("entropy_estimate: diag length must be 1..6");
    if (k < 1 || k > 12) throw input_error("entropy_estimate: k must be 1..12");

    std::vector<double> nz;
    for (double v : diag)
        if (v != 0.0) nz.push_back(v);
    EntropyBracket out;
    out.k = k;
    out.degenerate = nz.size() != diag.size();
    if (nz.empty()) return out;  // zero operator: e_k = 0
    const int n = static_cast<int>(nz.size());

    double log_det = 0;
    Eigen::VectorXd scale(n);
    for (int i = 0; i < n; ++i) {
        log_det += std::log(std::fabs(nz[i]));
        scale[i] = std::fabs(nz[i]);
    }
    if (p == q) {
        out.volume_ratio = 1.0;
        out.volume_ratio_stderr = 0.0;
    } else {
        const VolumeRatio vr = mc_volume_ratio(BodySpec::coordinate(n, p),
                                               BodySpec::coordinate(n, q),
                                               std::max<std::uint64_t>(budget, 20000), seed);
        out.volume_ratio = vr.estimate;
        out.volume_ratio_stderr = vr.stderr_value;
    }
    out.lower = std::pow(2.0, -static_cast<double>(k - 1) / n) *
                std::exp(log_det / n) * std::pow(out.volume_ratio, 1.0 / n);

    const BodySpec body = BodySpec::coordinate(n, p).scaled(scale);
    const BodySpec target = BodySpec::coordinate(n, q);
    const std::uint64_t centers_allowed = 1ULL << (k - 1);

    // Radius where one ball suffices, as the bisection's upper anchor.
    const Cloud cloud = build_cloud(body, budget, seed);
    double hi = 0;
    for (const auto& x : cloud.points) hi = std::max(hi, target.gauge(x));
    hi = std::max(2.0 * hi, 1e-12);
    // The k-center radius with 2^{k-1} centers does not depend on the probe
    // radius, so it enters once rather than inside the bisection.
    if (centers_allowed <= 256)
        hi = std::min(hi, std::max(kcenter_radius(cloud, target, centers_allowed), 1e-12));
    double lo = 0.0;
    CoverPackResult last;
    for (int iter = 0; iter < 30 && (hi - lo) > 0.004 * hi; ++iter) {
        const double mid = 0.5 * (hi + lo);
        const CoverPackResult r = cover_and_pack_on(cloud, target, mid, centers_allowed, false);
        if (r.net_size <= centers_allowed) {
            hi = mid;
            last = r;
        } else {
            lo = mid;
        }
    }
    if (last.cloud_size == 0 || last.net_size > centers_allowed)
        last = cover_and_pack_on(cloud, target, hi, centers_allowed, true);
    out.upper = hi;
    out.probe = last;
    return out;
}

UrysohnReport urysohn_check(const BodySpec& body, std::uint64_t samples, std::uint64_t seed) {
    const int n = body.dim();
    if (n > 5) throw input_error("urysohn_check: n must be <= 5");
    UrysohnReport rep;
    rep.n = n;
    rep.advisory = !body.support_exact();

    const VolumeRatio vr = mc_volume_ratio(body, BodySpec::euclid(n), samples, seed);
    rep.lhs = std::pow(vr.estimate, 1.0 / n);
    rep.lhs_stderr = rep.lhs * vr.stderr_value / (vr.estimate * n);

    long double acc = 0.0L, acc2 = 0.0L;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Eigen::VectorXd x = rng::sphere_point(n, seed ^ 0x0417ULL, i);
        const double v = body.support(x, seed);
        acc += v;
        acc2 += static_cast<long double>(v) * v;
    }
    const double mean = static_cast<double>(acc / samples);
    const double var = std::max(0.0, static_cast<double>(acc2 / samples) - mean * mean);
    rep.rhs = mean;
    rep.rhs_stderr = std::sqrt(var / static_cast<double>(samples));
    rep.holds = rep.lhs <= rep.rhs + 3.0 * (rep.lhs_stderr + rep.rhs_stderr);

    if (body.is_coordinate()) {
        const VolumeRatio vp = mc_volume_ratio(body.polar(), BodySpec::euclid(n), samples,
                                               seed ^ 0x90fULL);
        rep.volume_product = std::pow(vr.estimate * vp.estimate, 1.0 / n);
    }
    return rep;
}

} // namespace ventropy
