#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ventropy/bounds.hpp"
#include "ventropy/errors.hpp"

using namespace ventropy;

namespace {

const double kLn2 = std::log(2.0);

// Test-only oracle: both constants through lgammal, a different route than
// the exact half-integer recursion used by the library.
double c_oracle(unsigned d, double r, double gamma) {
    const long double dr = d + static_cast<long double>(r);
    const long double log_bracket = std::log(dr) + (d - 1) * std::log(2.0L) +
                                    std::log((long double)d) + lgammal(d / 2.0L) +
                                    std::log(std::log(2.0L)) - std::log((long double)r) -
                                    (d / 2.0L) * std::log(3.14159265358979323846264338327950288L);
    return static_cast<double>(
        std::exp((d / dr) * std::log((long double)gamma) + (r / dr) * log_bracket));
}

double c_star_oracle(unsigned d, double r, double gamma) {
    const long double dr = d + static_cast<long double>(r);
    const long double log_bracket =
        std::log(dr) + std::log(std::log(2.0L)) - std::log((long double)r);
    return static_cast<double>(
        std::exp((d / dr) * std::log((long double)gamma) + (r / dr) * log_bracket));
}

} // namespace

TEST_CASE("asymptotic constants") {
    const auto c111 = constants(1, 1.0, 1.0);
    CHECK(c111.c == doctest::Approx(std::sqrt(2.0 * kLn2)).epsilon(1e-14));
    CHECK(c111.c_star == doctest::Approx(1.1774100225154747).epsilon(1e-12));

    // d = 1 collapses the Euclidean bracket onto the max-norm one exactly
    for (double r : {0.25, 0.5, 1.0})
        for (double gamma : {0.5, 1.0, 2.0}) {
            const auto c = constants(1, r, gamma);
            CHECK(std::fabs(c.c - c.c_star) <= 1e-12 * c.c);
        }

    const auto c211 = constants(2, 1.0, 1.0);
    CHECK(c211.c == doctest::Approx(std::cbrt(12.0 * kLn2 / M_PI)).epsilon(1e-12));
    CHECK(c211.c_star == doctest::Approx(std::cbrt(3.0 * kLn2)).epsilon(1e-12));

    for (unsigned d : {1u, 2u, 3u, 4u, 5u})
        for (double r : {0.25, 0.5, 1.0}) {
            const auto c = constants(d, r, 1.3);
            REQUIRE(c.c == doctest::Approx(c_oracle(d, r, 1.3)).epsilon(1e-10));
            REQUIRE(c.c_star == doctest::Approx(c_star_oracle(d, r, 1.3)).epsilon(1e-10));
        }
    CHECK_THROWS_AS(constants(0, 1.0, 1.0), input_error);
}

TEST_CASE("A_N_k examples") {
    const auto spec = MultiplierSpec::exponential(1.0, 1.0, NormMode::Max);
    LayerCounter counter(1, NormMode::Max);
    CHECK(A_N_k(spec, 2, 0, 1, NormMode::Max, counter) == doctest::Approx(-1.0));
    CHECK(A_N_k(spec, 36, 1000, 1, NormMode::Max, counter) ==
          doctest::Approx(-36.7337).epsilon(5e-4 / 36.7337));
    CHECK_THROWS_AS(
        A_N_k(MultiplierSpec::finite(1.0, 0.0, NormMode::Max), 1, 0, 1, NormMode::Max, counter),
        input_error);
}

TEST_CASE("sup_A pins and asymptotics") {
    const auto spec = MultiplierSpec::exponential(1.0, 1.0, NormMode::Max);
    const auto s = sup_A(spec, 1000, 1, NormMode::Max);
    CHECK(s.n_star == 36);
    CHECK(s.value == doctest::Approx(-36.7337).epsilon(5e-4 / 36.7337));

    const auto big = sup_A(spec, 1000000, 1, NormMode::Max);
    const double ratio = std::fabs(big.value) / (constants(1, 1.0, 1.0).c_star * 1000.0);
    CHECK(ratio >= 0.98);
    CHECK(ratio <= 1.0);

    double prev = sup_A(spec, 100, 1, NormMode::Max).value;
    for (std::uint64_t k : {200u, 400u, 800u}) {
        const double cur = sup_A(spec, k, 1, NormMode::Max).value;
        CHECK(cur < prev);
        prev = cur;
    }

    // Euclidean mode runs off the enumerated lattice
    const auto se = sup_A(MultiplierSpec::exponential(1.0, 0.5, NormMode::Euclid), 5000, 2,
                          NormMode::Euclid);
    CHECK(se.n_star > 1);
    CHECK(se.n_star < se.scanned_to);
}

TEST_CASE("sup_A tracks the Euclidean-lattice constant") {
    const auto spec = MultiplierSpec::exponential(1.0, 0.25, NormMode::Euclid);
    const auto s = sup_A(spec, 1000000, 2, NormMode::Euclid);
    const double expected = constants(2, 0.25, 1.0).c * std::pow(1e6, 0.25 / 2.25);
    const double ratio = std::fabs(s.value) / expected;
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.05);
}

TEST_CASE("g_maximizer") {
    const auto g0 = g_maximizer(1.0, 0.0, 1, 100);
    CHECK(g0.x_k == doctest::Approx(100.0 * kLn2).epsilon(1e-10));
    CHECK_FALSE(g0.boundary);

    const auto g1 = g_maximizer(1.0, 1.0, 1, 100);
    CHECK(g1.x_k >= 28.38 - 0.01);
    CHECK(g1.x_k <= 69.32);
    CHECK(g1.x_k >= g1.c1 * 100);
    CHECK(g1.x_k <= g1.c2 * 100);

    // g(x_k) + (gamma/d) log2 k + xi log2 log2 k stays bounded over k
    double worst = 0;
    for (double k = 100; k <= 1e6; k *= 3.16) {
        const auto g = g_maximizer(1.0, 1.0, 1, static_cast<std::uint64_t>(k));
        const double centered =
            g.value + std::log2(k) + std::log2(std::log2(k));
        worst = std::max(worst, std::fabs(centered));
    }
    CHECK(worst < 5.0);

    CHECK(g_maximizer(1.0, 0.0, 1, 1).boundary);  // maximizer below 2ation
}

TEST_CASE("lower_product_term examples") {
    const auto spec = MultiplierSpec::finite(2.0, 0.0, NormMode::Max);
    LayerCounter counter(1, NormMode::Max);
    const double term = lower_product_term(spec, 5, 4, counter);
    CHECK(term == doctest::Approx(0.5 * std::pow(576.0, -0.2)).epsilon(1e-12));
    CHECK(term >= lambda_value(spec, 4.0));

    // k = n = dim T_N: the product term dominates |lambda(N)| / 2
    for (std::uint64_t N : {3u, 6u, 10u}) {
        const std::uint64_t n = counter.count_A(N);
        const double t = lower_product_term(spec, n, N, counter);
        CHECK(t >= 0.5 * lambda_value(spec, static_cast<double>(N)) - 1e-15);
    }
}

TEST_CASE("lower_bound_expr") {
    const auto spec = MultiplierSpec::finite(1.0, 0.0, NormMode::Max);
    const auto rep = lower_bound_expr(spec, 20, 2.0, 2.0, 1);
    CHECK(rep.v_factor == 1.0);
    CHECK(rep.value == rep.product_term);
    CHECK(rep.n_opt >= 2);
    CHECK(rep.sigma >= rep.lambda_n_opt);  // product domination

    LayerCounter counter(1, NormMode::Max);
    CHECK(rep.product_term ==
          doctest::Approx(lower_product_term(spec, 20, rep.n_opt, counter)).epsilon(1e-12));

    const auto repinf = lower_bound_expr(spec, 20, std::numeric_limits<double>::infinity(),
                                         1.0, 1);
    CHECK(repinf.v_factor == doctest::Approx(1.0 / std::log2(repinf.dim_n)));
    const auto rep_pinf = lower_bound_expr(spec, 20, std::numeric_limits<double>::infinity(),
                                           2.0, 1);
    CHECK(rep_pinf.v_factor == doctest::Approx(1.0 / std::sqrt(std::log2(rep_pinf.dim_n))));

    double prev = 1e300;
    for (std::uint64_t k : {10u, 20u, 40u, 80u}) {
        const double v = lower_bound_expr(spec, k, 2.0, 2.0, 1).value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("chi_k examples") {
    const auto spec = MultiplierSpec::finite(1.0, 0.0, NormMode::Max);
    const auto chi = chi_k(spec, 10, 2.0, 1);
    CHECK(chi.n_opt == 6);
    CHECK(chi.value == doctest::Approx(0.4807).epsilon(2e-3));

    double prev = 1e300;
    for (std::uint64_t k : {5u, 10u, 20u, 40u}) {
        const double v = chi_k(spec, k, 2.0, 1).value;
        CHECK(v < prev);
        prev = v;
    }

    // definitional unwinding for the exponential family
    const auto expo = MultiplierSpec::exponential(1.0, 1.0, NormMode::Max);
    const auto ec = chi_k(expo, 50, 2.0, 1);
    LayerCounter counter(1, NormMode::Max);
    const double a = A_N_k(expo, ec.n_opt, 50, 1, NormMode::Max, counter);
    CHECK(ec.value == doctest::Approx(3.0 * std::exp(a + kLn2 / ec.dim_n)).epsilon(1e-10));

    // Monte-Carlo volume mode stays within a sqrt(q) factor of the surrogate
    const auto mc = chi_k(spec, 10, 4.0, 1, VolumeMode::MonteCarlo, ProductSpec::walsh(1),
                          50000, 3);
    CHECK(mc.value >= chi_k(spec, 10, 4.0, 1).value * 0.99);
    CHECK(mc.value <= chi_k(spec, 10, 4.0, 1).value * 3.0);
}

TEST_CASE("upper_bound_expr") {
    const auto expo = MultiplierSpec::exponential(1.0, 1.0, NormMode::Max);
    const auto rep = upper_bound_expr(expo, 100, 2.0, 2.0, 1, 0.5);
    CHECK(rep.head_term == doctest::Approx(std::sqrt(2.0)));
    CHECK(rep.tail_sum == doctest::Approx(std::ldexp(1.0, -static_cast<int>(rep.M))));
    CHECK(rep.lambda_N >= std::ldexp(rep.chi, -static_cast<int>(rep.b)));
    CHECK(lambda_value(expo, static_cast<double>(rep.N + 1)) <
          std::ldexp(rep.chi, -static_cast<int>(rep.b)));
    CHECK(rep.eta >= 100.0);
    CHECK(rep.index == doctest::Approx(rep.eta + rep.b * rep.dim_n));
    CHECK(rep.value == doctest::Approx(rep.lambda_N * (rep.head_term + rep.tail_sum)));

    // eta tracks k for the exponential ladder
    const auto rep4 = upper_bound_expr(expo, 10000, 2.0, 2.0, 1, 0.5);
    CHECK(rep4.eta / 10000.0 <= rep.eta / 100.0 + 1e-12);
    CHECK(rep4.eta / 10000.0 < 1.5);

    // monotone in k
    CHECK(rep4.value < rep.value);

    // q = infinity branch exercises the level ladder
    const auto repinf = upper_bound_expr(expo, 100, 2.0,
                                         std::numeric_limits<double>::infinity(), 1, 0.5);
    CHECK(repinf.head_term >= 1.0);
    CHECK(std::isfinite(repinf.tail_sum));
    CHECK(repinf.value > 0);

    const auto fin = MultiplierSpec::finite(1.5, 0.0, NormMode::Max);
    const auto frep = upper_bound_expr(fin, 60, 2.0, 2.0, 1, 0.4);
    CHECK(frep.value > 0);
    CHECK(frep.lambda_N >= std::ldexp(frep.chi, -static_cast<int>(frep.b)));

    CHECK_THROWS_AS(upper_bound_expr(expo, 100, 1.5, 2.0, 1, 0.5), input_error);
}

TEST_CASE("lower and upper cohere at the aligned index") {
    for (auto spec : {MultiplierSpec::exponential(1.0, 1.0, NormMode::Max),
                      MultiplierSpec::finite(1.5, 0.0, NormMode::Max)}) {
        const auto up = upper_bound_expr(spec, 120, 2.0, 2.0, 1, 0.5);
        const auto lo = lower_bound_expr(
            spec, static_cast<std::uint64_t>(std::ceil(up.index)), 2.0, 2.0, 1);
        CHECK(lo.value <= up.value);
    }
}

TEST_CASE("levy mean estimates") {
    const LayerWindow window(-1, 15, NormMode::Max);
    const auto walsh = ProductSpec::walsh(1);

    const auto e2 = levy_mean_estimate(window, walsh, 2.0, 2000, 42, 2);
    CHECK(e2.n == 16);
    CHECK(std::fabs(e2.estimate - 1.0) <= 3.0 * e2.stderr_estimate + 1e-12);

    const auto e4 = levy_mean_estimate(window, walsh, 4.0, 2000, 42, 2);
    CHECK(e4.estimate >= 1.0 - 3.0 * e4.stderr_estimate);
    CHECK(e4.estimate <= 2.0 * 2.0);  // sqrt(p) envelope with a generous constant
    CHECK(e4.estimate == doctest::Approx(1.2719).epsilon(2e-2));  // regression baseline

    // worker-count independence and seed reproducibility, bit for bit
    const auto w1 = levy_mean_estimate(window, walsh, 4.0, 500, 7, 1);
    const auto w2 = levy_mean_estimate(window, walsh, 4.0, 500, 7, 2);
    CHECK(w1.estimate == w2.estimate);
    CHECK(w1.stderr_mean_sq == w2.stderr_mean_sq);
    const auto w3 = levy_mean_estimate(window, walsh, 4.0, 500, 8, 1);
    CHECK(w3.estimate != w1.estimate);

    CHECK_THROWS_AS(levy_mean_estimate(window, walsh, 2.0, 50, 1, 1), input_error);
}
