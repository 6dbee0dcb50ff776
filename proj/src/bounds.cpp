#include "ventropy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "ventropy/entropy_oracle.hpp"
#include "ventropy/errors.hpp"
#include "ventropy/parallel.hpp"
#include "ventropy/rng.hpp"
#include "ventropy/special.hpp"

namespace ventropy {

namespace {

long double layer_dim_ld(LayerCounter& counter, std::uint64_t l) {
    if (counter.has_closed_form())
        return static_cast<long double>(counter.layer_dim_dbl(static_cast<double>(l)));
    return static_cast<long double>(counter.layer_dim(l));
}

double dim_T_dbl(LayerCounter& counter, std::uint64_t n) {
    if (counter.has_closed_form()) return counter.count_A_dbl(static_cast<double>(n));
    return static_cast<double>(counter.count_A(n));
}

// Leading coefficient of dim T_N ~ F N^d used to convert between the
// dimension variable and the layer variable in scan brackets.
double dim_lead_coefficient(unsigned d, NormMode mode) {
    if (mode == NormMode::Max) return 1.0;
    return static_cast<double>(std::pow(2.0L, 1 - (int)d) * pi_pow_half(d) /
                               (static_cast<long double>(d) * gamma_half(d)));
}

void check_pq(double p, double q) {
    if (!(p >= 1.0) || !(q >= 1.0))
        throw input_error("p and q must lie in [1, infinity]");
}

} // namespace

LevyEstimate levy_mean_estimate(const LayerWindow& window, const ProductSpec& spec, double p,
                                std::uint64_t samples, std::uint64_t seed, unsigned workers,
                                std::uint64_t grid_budget) {
    if (samples < 100) throw input_error("levy_mean_estimate requires >= 100 samples");
    const WindowEvaluator evaluator(window, spec, p, grid_budget);
    const int n = evaluator.dim();
    if (n < 1) throw input_error("levy_mean_estimate: empty window");

    std::vector<double> norm_sq(samples);
    parallel_for(0, samples, workers, [&](std::uint64_t i) {
        const Eigen::VectorXd x = rng::sphere_point(n, seed, i);
        const double v = evaluator.norm_p(x, p);
        norm_sq[i] = v * v;
    });

    long double sum = 0.0L, sum2 = 0.0L;
    for (double v : norm_sq) {
        sum += v;
        sum2 += static_cast<long double>(v) * v;
    }
    LevyEstimate est;
    est.n = n;
    est.p = p;
    est.samples = samples;
    est.seed = seed;
    est.mean_sq = static_cast<double>(sum / samples);
    const double var = std::max(
        0.0, static_cast<double>(sum2 / samples) - est.mean_sq * est.mean_sq);
    est.stderr_mean_sq = std::sqrt(var / static_cast<double>(samples));
    est.estimate = std::sqrt(est.mean_sq);
    est.stderr_estimate = est.estimate > 0 ? est.stderr_mean_sq / (2.0 * est.estimate) : 0.0;
    return est;
}

AsymptoticConstants constants(unsigned d, double r, double gamma) {
    if (d < 1 || !(r > 0) || !(gamma > 0))
        throw input_error("constants: require d >= 1, r > 0, gamma > 0");
    const long double dr = static_cast<long double>(d) + r;
    const long double outer = std::pow(static_cast<long double>(gamma), d / dr);
    const long double bracket = dr * std::pow(2.0L, (int)d - 1) * d * gamma_half(d) * kLn2L /
                                (r * pi_pow_half(d));
    const long double bracket_star = dr * kLn2L / r;
    AsymptoticConstants out;
    out.d = d;
    out.r = r;
    out.gamma = gamma;
    out.c = static_cast<double>(outer * std::pow(bracket, r / dr));
    out.c_star = static_cast<double>(outer * std::pow(bracket_star, r / dr));
    return out;
}

double A_N_k(const MultiplierSpec& spec, std::uint64_t N, std::uint64_t k, unsigned d,
             NormMode mode, LayerCounter& counter) {
    if (spec.family != MultiplierSpec::Family::Exponential)
        throw input_error("A_N_k is defined for the exponential family");
    if (N < 1) throw input_error("A_N_k requires N >= 1");
    if (counter.d() != d || counter.mode() != mode)
        throw input_error("A_N_k: counter does not match (d, mode)");
    long double weighted = 0.0L;
    for (std::uint64_t l = 1; l <= N; ++l)
        weighted += std::pow(static_cast<long double>(l), (long double)spec.r) *
                    layer_dim_ld(counter, l);
    const long double n = static_cast<long double>(dim_T_dbl(counter, N));
    return static_cast<double>(
        -(static_cast<long double>(k) * kLn2L + spec.gamma * weighted) / n);
}

SupAResult sup_A(const MultiplierSpec& spec, std::uint64_t k, unsigned d, NormMode mode,
                 std::uint64_t work_budget) {
    if (spec.family != MultiplierSpec::Family::Exponential)
        throw input_error("sup_A is defined for the exponential family");
    if (k < 1) throw input_error("sup_A requires k >= 1");
    const double x_k = std::pow(static_cast<double>(d) / spec.r,
                                1.0 / (static_cast<double>(d) + spec.r)) *
                       std::pow(static_cast<double>(k),
                                1.0 / (static_cast<double>(d) + spec.r));

    for (int attempt = 0; attempt < 2; ++attempt) {
        const auto bracket = static_cast<std::uint64_t>(
            std::ceil(4.0 * (attempt == 0 ? 1.0 : 4.0) * std::max(x_k, 1.0)));
        LayerCounter counter(d, mode, work_budget);
        long double weighted = 0.0L;
        SupAResult best;
        best.value = -std::numeric_limits<double>::infinity();
        for (std::uint64_t N = 1; N <= bracket; ++N) {
            weighted += std::pow(static_cast<long double>(N), (long double)spec.r) *
                        layer_dim_ld(counter, N);
            const long double n = static_cast<long double>(dim_T_dbl(counter, N));
            const double value = static_cast<double>(
                -(static_cast<long double>(k) * kLn2L + spec.gamma * weighted) / n);
            if (value > best.value) {
                best.value = value;
                best.n_star = N;
            }
        }
        best.scanned_to = bracket;
        if (best.n_star < bracket) return best;
    }
    throw resource_error("sup_A: maximum sits on the bracket edge after widening");
}

GMaximizerResult g_maximizer(double gamma, double xi, unsigned d, std::uint64_t k) {
    if (!(gamma > 0) || !(xi >= 0) || d < 1 || k < 1)
        throw input_error("g_maximizer: require gamma > 0, xi >= 0, d >= 1, k >= 1");
    const double ln2 = static_cast<double>(kLn2L);
    GMaximizerResult out;
    out.c1 = d * ln2 * ln2 / (gamma * ln2 + d * xi);
    out.c2 = d * ln2 / gamma;

    const auto g = [&](double x) {
        return -static_cast<double>(k) / x - (gamma / d) * std::log2(x) -
               (xi > 0 ? xi * std::log2(std::log2(x)) : 0.0);
    };
    const auto gprime = [&](double x) {
        double v = static_cast<double>(k) / (x * x) - gamma / (d * ln2 * x);
        if (xi > 0) v -= xi / (ln2 * ln2 * x * std::log2(x));
        return v;
    };

    if (gprime(2.0) <= 0.0) {  // maximum pinned at the left endpoint
        out.x_k = 2.0;
        out.value = g(2.0);
        out.boundary = true;
        return out;
    }
    double lo = 2.0, hi = std::max(4.0, 2.0 * out.c2 * static_cast<double>(k));
    while (gprime(hi) > 0.0) hi *= 2.0;
    while (hi - lo > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        (gprime(mid) > 0.0 ? lo : hi) = mid;
    }
    out.x_k = 0.5 * (lo + hi);
    out.value = g(out.x_k);
    if (xi == 0.0) {
        const double closed = static_cast<double>(k) * d * ln2 / gamma;
        if (std::fabs(out.x_k - closed) > 1e-6 * closed)
            throw std::logic_error("g_maximizer: root disagrees with the xi = 0 closed form");
        out.x_k = closed;
        out.value = g(closed);
    }
    return out;
}

namespace {

// Shared sup-over-N scan of exp((-c_k ln 2 + log V + sum_{nonzero} d_l ln|lambda(l)|)/n).
struct ScanResult {
    std::uint64_t n_opt = 0;
    double dim_n = 0;
    double term = 0;
    double sigma = 0;  // the bare layer product at the optimum
    double lambda_at_opt = 0;
};

std::uint64_t scan_bracket(const MultiplierSpec& spec, std::uint64_t k, unsigned d,
                           NormMode mode, int widen) {
    double n_bracket;
    if (spec.family == MultiplierSpec::Family::Finite) {
        // g_maximizer works in the dimension variable; convert through
        // dim T_N ~ F N^d and apply the safety factor to N itself.
        const double x = g_maximizer(spec.gamma, spec.xi, d, std::max<std::uint64_t>(k, 1)).x_k;
        const double f = dim_lead_coefficient(d, mode);
        n_bracket = std::ceil(4.0 * std::pow(std::max(x, 2.0) / f, 1.0 / d));
    } else {
        n_bracket = std::ceil(4.0 * std::pow(static_cast<double>(d) / spec.r,
                                             1.0 / (d + spec.r)) *
                              std::pow(static_cast<double>(k), 1.0 / (d + spec.r)));
    }
    for (int w = 0; w < widen; ++w) n_bracket *= 4.0;
    return static_cast<std::uint64_t>(std::max(8.0, n_bracket));
}

template <typename LogVolumeFn>
ScanResult scan_sup(const MultiplierSpec& spec, double k_eff, unsigned d, NormMode mode,
                    std::uint64_t bracket, std::uint64_t work_budget,
                    std::uint64_t scan_cap, LogVolumeFn&& log_volume) {
    LayerCounter counter(d, mode, work_budget);
    const std::uint64_t first = spec.first_nonzero_level();
    long double logprod = 0.0L;
    ScanResult best;
    best.term = -1.0;
    for (std::uint64_t N = first; N <= bracket && N <= scan_cap; ++N) {
        const double lambda = lambda_value(spec, static_cast<double>(N));
        logprod += layer_dim_ld(counter, N) * std::log(std::fabs(lambda));
        const long double n = static_cast<long double>(dim_T_dbl(counter, N));
        const auto term = static_cast<double>(
            std::exp((-static_cast<long double>(k_eff) * kLn2L +
                      static_cast<long double>(log_volume(N, counter)) + logprod) / n));
        if (term > best.term) {
            best.term = term;
            best.n_opt = N;
            best.dim_n = static_cast<double>(n);
            best.sigma = static_cast<double>(std::exp(logprod / n));
            best.lambda_at_opt = std::fabs(lambda);
        }
    }
    return best;
}

} // namespace

double lower_product_term(const MultiplierSpec& spec, std::uint64_t k, std::uint64_t N,
                          LayerCounter& counter) {
    if (N < 1) throw input_error("lower_product_term requires N >= 1");
    long double logprod = 0.0L;
    for (std::uint64_t l = spec.first_nonzero_level(); l <= N; ++l)
        logprod += layer_dim_ld(counter, l) *
                   std::log(std::fabs(lambda_value(spec, static_cast<double>(l))));
    const long double n = static_cast<long double>(dim_T_dbl(counter, N));
    return static_cast<double>(
        std::exp((-static_cast<long double>(k) * kLn2L + logprod) / n));
}

LowerBoundReport lower_bound_expr(const MultiplierSpec& spec, std::uint64_t k, double p,
                                  double q, unsigned d, std::uint64_t work_budget) {
    check_pq(p, q);
    if (k < 1) throw input_error("lower_bound_expr requires k >= 1");
    ScanResult best;
    std::uint64_t bracket = 0;
    for (int attempt = 0;; ++attempt) {
        bracket = scan_bracket(spec, k, d, spec.mode, attempt);
        best = scan_sup(spec, static_cast<double>(k), d, spec.mode, bracket, work_budget,
                        bracket, [](std::uint64_t, LayerCounter&) { return 0.0; });
        if (best.n_opt < bracket) break;
        if (attempt >= 1)
            throw resource_error("lower_bound_expr: maximum on the bracket edge after widening");
    }

    LowerBoundReport rep;
    rep.query = BoundQuery{spec, k, p, q, d};
    rep.n_opt = best.n_opt;
    rep.dim_n = best.dim_n;
    rep.product_term = best.term;
    rep.sigma = best.sigma;
    rep.lambda_n_opt = best.lambda_at_opt;
    const bool p_inf = std::isinf(p);
    const bool q_one = q == 1.0;
    const double log2n = std::log2(std::max(2.0, rep.dim_n));
    if (!p_inf && !q_one)
        rep.v_factor = 1.0;
    else if (p_inf && q_one)
        rep.v_factor = 1.0 / log2n;
    else
        rep.v_factor = 1.0 / std::sqrt(log2n);
    rep.value = rep.product_term * rep.v_factor;
    return rep;
}

ChiReport chi_k(const MultiplierSpec& spec, std::uint64_t k, double q, unsigned d,
                VolumeMode volume_mode, const std::optional<ProductSpec>& mc_spec,
                std::uint64_t mc_samples, std::uint64_t mc_seed,
                std::uint64_t work_budget) {
    if (!(q >= 1.0)) throw input_error("chi_k requires 1 <= q <= infinity");
    if (k < 1) throw input_error("chi_k requires k >= 1");

    const ProductSpec system = mc_spec ? *mc_spec : ProductSpec::walsh(d);
    const auto log_volume = [&](std::uint64_t N, LayerCounter& counter) -> double {
        if (volume_mode == VolumeMode::Surrogate) return 0.0;
        if (q == 2.0) return 0.0;
        if (dim_T_dbl(counter, N) > 12.0) return 0.0;  // MC cap; past it fall back to 1
        const LayerWindow window(-1, static_cast<std::int64_t>(N), spec.mode);
        auto evaluator = std::make_shared<WindowEvaluator>(window, system, std::max(q, 2.0));
        const VolumeRatio ratio = mc_volume_ratio(BodySpec::window(evaluator, 2.0),
                                                  BodySpec::window(evaluator, q),
                                                  mc_samples, mc_seed);
        return std::log(ratio.estimate);
    };

    ScanResult best;
    std::uint64_t bracket = 0;
    for (int attempt = 0;; ++attempt) {
        bracket = scan_bracket(spec, k, d, spec.mode, attempt);
        best = scan_sup(spec, static_cast<double>(k) - 1.0, d, spec.mode, bracket, work_budget,
                        bracket, log_volume);
        if (best.n_opt < bracket) break;
        if (attempt >= 1)
            throw resource_error("chi_k: maximum on the bracket edge after widening");
    }

    ChiReport rep;
    rep.query = BoundQuery{spec, k, 2.0, q, d};
    rep.volume_mode = volume_mode;
    rep.n_opt = best.n_opt;
    rep.dim_n = best.dim_n;
    rep.value = 3.0 * best.term;
    return rep;
}

UpperBoundReport upper_bound_expr(const MultiplierSpec& spec, std::uint64_t k, double p,
                                  double q, unsigned d, double eps,
                                  std::uint64_t work_budget, std::uint64_t scan_budget) {
    check_pq(p, q);
    if (!(p >= 2.0)) throw input_error("upper_bound_expr requires 2 <= p <= infinity");
    if (!(eps > 0)) throw input_error("upper_bound_expr requires eps > 0");
    if (k < 1) throw input_error("upper_bound_expr requires k >= 1");

    UpperBoundReport rep;
    rep.query = BoundQuery{spec, k, p, q, d};
    rep.eps = eps;
    rep.chi = chi_k(spec, k, q, d, VolumeMode::Surrogate, std::nullopt, 0, 1, work_budget).value;

    // Smallest b admitting a level, then the deepest admissible level: lambda
    // ends up as close to the threshold 2^{-b} chi as the ladder allows.
    const std::uint64_t first = spec.first_nonzero_level();
    const double lambda_best = lambda_value(spec, static_cast<double>(first));
    std::uint64_t b = 0;
    while (std::ldexp(rep.chi, -static_cast<int>(b)) > lambda_best) {
        if (++b > 64) throw resource_error("upper_bound_expr: chi_k dwarfs every lambda level");
    }
    const double threshold = std::ldexp(rep.chi, -static_cast<int>(b));
    std::uint64_t N = first;
    while (N - first < scan_budget &&
           lambda_value(spec, static_cast<double>(N + 1)) >= threshold)
        ++N;
    if (lambda_value(spec, static_cast<double>(N + 1)) >= threshold)
        throw resource_error("upper_bound_expr: level scan exceeded budget");
    rep.b = b;
    rep.N = N;
    rep.lambda_N = lambda_value(spec, static_cast<double>(N));

    LayerCounter counter(d, spec.mode, work_budget);
    DyadicLevels levels = dyadic_levels(spec, N, 2, counter, eps, scan_budget);
    rep.theta12 = levels.theta12;
    rep.M = levels.M;
    rep.dim_n = dim_T_dbl(counter, N);

    const bool q_inf = std::isinf(q);
    if (q_inf && levels.M >= 1)
        levels = dyadic_levels(spec, N, levels.M + 1, counter, eps, scan_budget);
    rep.m = levels.m;
    rep.sum_m = static_cast<double>(levels.sum_m());
    rep.eta = static_cast<double>(k) + rep.sum_m;
    rep.index = rep.eta + static_cast<double>(b) * rep.dim_n;

    if (q_inf) {
        double sup_log = 0.0;
        for (std::uint64_t j = 1; j <= levels.M && j <= levels.theta.size(); ++j)
            sup_log = std::max(sup_log, std::log2(levels.theta[j - 1]));
        rep.head_term = std::sqrt(std::max(1.0, sup_log));
    } else {
        rep.head_term = std::sqrt(std::max(2.0, q));
    }

    // q < 2 inherits the q = 2 estimate, whose tail telescopes to 2^-M.
    const double exponent = 0.5 - (q_inf ? 0.0 : 1.0 / std::max(q, 2.0));
    if (std::fabs(exponent) < 1e-15) {
        rep.tail_sum = std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(levels.M, 1000)));
    } else {
        double tail = 0.0;
        std::vector<std::uint64_t> ladder(levels.levels);
        for (std::uint64_t j = levels.M + 1;; ++j) {
            while (ladder.size() < j + 1) ladder.push_back(next_level(spec, ladder.back(),
                                                                      scan_budget));
            const double theta = counter.has_closed_form()
                ? counter.count_A_dbl(static_cast<double>(ladder[j])) -
                      counter.count_A_dbl(static_cast<double>(ladder[j - 1]))
                : static_cast<double>(counter.count_A(ladder[j]) -
                                      counter.count_A(ladder[j - 1]));
            const double term = std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(
                                   j, 1000))) * std::pow(theta, exponent);
            tail += term;
            if (term < 1e-15) break;
            if (j > levels.M + 400)
                throw resource_error("upper_bound_expr: tail sum failed to converge");
        }
        rep.tail_sum = tail;
    }
    rep.value = rep.lambda_N * (rep.head_term + rep.tail_sum);
    return rep;
}

} // namespace ventropy
