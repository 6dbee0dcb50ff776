#include "ventropy/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ventropy/errors.hpp"
#include "ventropy/special.hpp"

namespace ventropy {

namespace {

std::uint64_t isqrt64(std::uint64_t q) {
    if (q == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(q)));
    while (r > 0 && r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r))
            throw resource_error("lattice count exceeds 64 bits");
    return r;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Recursive exact count of {z in Z^dim : sum z_j^2 <= R^2}.
std::uint64_t ball_count_rec(unsigned dim, double R, std::uint64_t q_used) {
    std::uint64_t span = 0;
    while (exact_le_sq(q_used + (span + 1) * (span + 1), R)) ++span;
    if (!exact_le_sq(q_used, R)) return 0;
    if (dim == 1) return 2 * span + 1;
    std::uint64_t total = ball_count_rec(dim - 1, R, q_used);  // z_dim = 0
    for (std::uint64_t x = 1; x <= span; ++x)
        total += 2 * ball_count_rec(dim - 1, R, q_used + x * x);
    return total;
}

} // namespace

double gauss_error_exponent(unsigned d) {
    if (d <= 1) return 0.0;
    if (d == 2) return 132.0 / 208.0;
    if (d == 3) return 21.0 / 16.0;
    return static_cast<double>(d - 2);
}

BallCount ball_count(unsigned d, double R, std::uint64_t scan_budget) {
    if (d < 1) throw input_error("ball_count: d must be >= 1");
    if (R < 0 || !std::isfinite(R)) throw input_error("ball_count: R must be finite and >= 0");
    const auto half = static_cast<std::uint64_t>(std::floor(R));
    double box = 1.0;
    for (unsigned j = 0; j < d; ++j) box *= static_cast<double>(2 * half + 1);
    if (box > static_cast<double>(scan_budget))
        throw resource_error("ball_count: scan box exceeds budget");

    BallCount out;
    out.d = d;
    out.R = R;
    out.count = ball_count_rec(d, R, 0);
    out.main_term = static_cast<double>(2.0L * pi_pow_half(d) /
                                        (static_cast<long double>(d) * gamma_half(d)) *
                                        std::pow(static_cast<long double>(R), (long double)d));
    out.error = static_cast<double>(out.count) - out.main_term;
    out.theta = gauss_error_exponent(d);
    return out;
}

LayerCounter::LayerCounter(unsigned d, NormMode mode, std::uint64_t work_budget)
    : d_(d), mode_(mode), work_budget_(work_budget) {
    if (d < 1) throw input_error("LayerCounter: d must be >= 1");
}

double LayerCounter::count_A_dbl(double l) const {
    if (l < 0) return 0.0;
    const double fl = std::floor(l);
    if (mode_ == NormMode::Max)
        return static_cast<double>(std::pow(static_cast<long double>(fl) + 1.0L, (int)d_));
    if (d_ == 1) return fl + 1.0;
    throw resource_error("no closed-form layer count for Euclidean mode with d >= 2");
}

double LayerCounter::layer_dim_dbl(double l) const {
    if (l < 0.5) return l < -0.5 ? 0.0 : 1.0;  // layer 0 is the constant layer
    if (mode_ == NormMode::Max) {
        // (l+1)^d - l^d expanded so huge l does not cancel catastrophically
        long double sum = 0.0L;
        for (unsigned j = 0; j < d_; ++j)
            sum += static_cast<long double>(binomial(d_, j)) *
                   std::pow(static_cast<long double>(l), (int)j);
        return static_cast<double>(sum);
    }
    if (d_ == 1) return 1.0;
    throw resource_error("no closed-form layer count for Euclidean mode with d >= 2");
}

void LayerCounter::extend_to(std::uint64_t l) {
    if (l < cumulative_.size()) return;
    if (cumulative_.empty()) cumulative_.push_back(1);  // #A_0 = 1

    if (d_ == 2) {
        // #A_l column by column: sum_x (isqrt(l^2 - x^2) + 1)
        for (std::uint64_t t = cumulative_.size(); t <= l; ++t) {
            work_done_ += t + 1;
            if (work_done_ > work_budget_)
                throw resource_error("lattice enumeration exceeds work budget");
            std::uint64_t c = 0;
            const std::uint64_t t2 = t * t;
            for (std::uint64_t x = 0; x <= t; ++x) c += isqrt64(t2 - x * x) + 1;
            cumulative_.push_back(c);
        }
        return;
    }

    // d >= 3: convolve sum-of-squares representation counts up to l^2, growing
    // geometrically so repeated queries do not rebuild from scratch each time.
    std::uint64_t target = std::max<std::uint64_t>(l, 2 * (cumulative_.size() - 1));
    const std::uint64_t m_max = target * target;
    const std::uint64_t conv_work = (d_ - 1) * (m_max + 1) * (target + 1) / 2;
    work_done_ += conv_work;
    if (work_done_ > work_budget_)
        throw resource_error("lattice enumeration exceeds work budget");

    std::vector<std::uint64_t> cur(m_max + 1, 0);
    for (std::uint64_t t = 0; t * t <= m_max; ++t) cur[t * t] = 1;
    std::vector<std::uint64_t> next(m_max + 1);
    for (unsigned dim = 2; dim <= d_; ++dim) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint64_t t = 0; t * t <= m_max; ++t) {
            const std::uint64_t t2 = t * t;
            for (std::uint64_t m = t2; m <= m_max; ++m) {
                if (__builtin_add_overflow(next[m], cur[m - t2], &next[m]))
                    throw resource_error("lattice count exceeds 64 bits");
            }
        }
        cur.swap(next);
    }
    cumulative_.assign(target + 1, 0);
    std::uint64_t acc = 0, m = 0;
    for (std::uint64_t t = 0; t <= target; ++t) {
        for (; m <= t * t; ++m)
            if (__builtin_add_overflow(acc, cur[m], &acc))
                throw resource_error("lattice count exceeds 64 bits");
        cumulative_[t] = acc;
    }
}

std::uint64_t LayerCounter::count_A(std::uint64_t l) {
    if (mode_ == NormMode::Max) return checked_pow(l + 1, d_);
    if (d_ == 1) return l + 1;
    extend_to(l);
    return cumulative_[l];
}

std::uint64_t LayerCounter::layer_dim(std::uint64_t l) {
    if (l == 0) return 1;
    return count_A(l) - count_A(l - 1);
}

std::uint64_t LayerCounter::dim_window(std::int64_t m1, std::int64_t m2) {
    if (m1 < -1 || m2 < m1) throw input_error("window requires -1 <= M1 <= M2");
    if (m2 == m1) return 0;
    const std::uint64_t hi = count_A(static_cast<std::uint64_t>(m2));
    const std::uint64_t lo = m1 < 0 ? 0 : count_A(static_cast<std::uint64_t>(m1));
    return hi - lo;
}

LayerCounts layer_table(unsigned d, NormMode mode, std::uint64_t l_max,
                        std::uint64_t work_budget) {
    LayerCounter counter(d, mode, work_budget);
    LayerCounts out;
    out.d = d;
    out.mode = mode;
    out.rows.reserve(l_max + 1);
    for (std::uint64_t l = 0; l <= l_max; ++l)
        out.rows.push_back({l, counter.count_A(l), counter.layer_dim(l)});
    return out;
}

namespace {

void enumerate_euclid(unsigned d, std::uint64_t l2, std::vector<std::uint64_t>& point,
                      std::uint64_t q_used, std::vector<MultiIndex>& out,
                      std::uint64_t budget) {
    if (point.size() == d) {
        if (out.size() >= budget) throw resource_error("layer enumeration exceeds budget");
        out.emplace_back(point);
        return;
    }
    for (std::uint64_t c = 0; q_used + c * c <= l2; ++c) {
        point.push_back(c);
        enumerate_euclid(d, l2, point, q_used + c * c, out, budget);
        point.pop_back();
    }
}

void enumerate_box(unsigned d, std::uint64_t l, std::vector<std::uint64_t>& point,
                   bool touched, std::vector<MultiIndex>& out, std::uint64_t budget) {
    if (point.size() == d) {
        if (touched) {
            if (out.size() >= budget) throw resource_error("layer enumeration exceeds budget");
            out.emplace_back(point);
        }
        return;
    }
    for (std::uint64_t c = 0; c <= l; ++c) {
        point.push_back(c);
        enumerate_box(d, l, point, touched || c == l, out, budget);
        point.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> layer_enumerate(unsigned d, NormMode mode, std::uint64_t l,
                                        std::uint64_t budget) {
    if (d < 1) throw input_error("layer_enumerate: d must be >= 1");
    std::vector<MultiIndex> out;
    std::vector<std::uint64_t> point;
    if (mode == NormMode::Max) {
        if (l == 0) return {MultiIndex(std::vector<std::uint64_t>(d, 0))};
        enumerate_box(d, l, point, false, out, budget);
    } else {
        enumerate_euclid(d, l * l, point, 0, out, budget);
        if (l > 0) {
            const std::uint64_t prev = (l - 1) * (l - 1);
            std::erase_if(out, [&](const MultiIndex& m) { return m.norm_sq() <= prev; });
        }
    }
    std::sort(out.begin(), out.end(), layer_order);
    return out;
}

PropositionReport proposition_check(unsigned d, NormMode mode, std::uint64_t l_max,
                                    std::uint64_t work_budget) {
    if (d < 2) throw input_error("proposition_check: d must be >= 2");
    if (l_max < 1) throw input_error("proposition_check: l_max must be >= 1");
    LayerCounter counter(d, mode, work_budget);

    PropositionReport rep;
    rep.d = d;
    rep.mode = mode;
    rep.l_max = l_max;
    rep.lower_dim_ok = true;
    rep.lower_layer_ok = true;
    rep.ratio_min = std::numeric_limits<double>::infinity();
    rep.ratio_max = 0.0;

    const bool euclid = mode == NormMode::Euclid;
    rep.theta = euclid ? gauss_error_exponent(d) : static_cast<double>(d) - 2.0;
    const long double E = euclid
        ? std::pow(2.0L, 1 - (int)d) * pi_pow_half(d) / gamma_half(d)
        : static_cast<long double>(d);
    const long double F = euclid ? E / d : 1.0L;
    rep.E = static_cast<double>(E);
    rep.F = static_cast<double>(F);

    for (std::uint64_t l = 1; l <= l_max; ++l) {
        const auto dl = static_cast<long double>(counter.layer_dim(l));
        const long double lead = E * std::pow((long double)l, (int)d - 1);
        const long double dev = dl - lead;
        if (euclid) {
            const long double scale = std::pow((long double)l, (long double)rep.theta);
            rep.c_prime = std::max(rep.c_prime, static_cast<double>(std::fabs(dev) / scale));
        } else {
            if (dev < 0) rep.lower_layer_ok = false;
            const long double scale = d >= 3 ? std::pow((long double)l, (int)d - 2) : 1.0L;
            rep.c_prime = std::max(rep.c_prime, static_cast<double>(dev / scale));
        }
        if (l >= 20) {
            const double ratio = static_cast<double>(dl / lead);
            rep.ratio_min = std::min(rep.ratio_min, ratio);
            rep.ratio_max = std::max(rep.ratio_max, ratio);
        }

        const auto dim = static_cast<long double>(counter.count_A(l));
        const long double dim_lead = F * std::pow((long double)l, (int)d);
        if (dim < dim_lead) rep.lower_dim_ok = false;
        rep.c_dim = std::max(rep.c_dim, static_cast<double>(
            (dim - dim_lead) / std::pow((long double)l, (int)d - 1)));
    }
    if (!(l_max >= 20)) rep.ratio_min = rep.ratio_max = 1.0;
    rep.ok = std::isfinite(rep.c_prime) && std::isfinite(rep.c_dim) && rep.lower_dim_ok &&
             (euclid || rep.lower_layer_ok);
    return rep;
}

} // namespace ventropy
