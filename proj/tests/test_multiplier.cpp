#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ventropy/errors.hpp"
#include "ventropy/multiplier.hpp"
#include "ventropy/rng.hpp"

using namespace ventropy;

TEST_CASE("lambda_value examples") {
    const auto finite2 = MultiplierSpec::finite(2.0, 0.0);
    CHECK(lambda_value(finite2, std::sqrt(2.0)) == doctest::Approx(0.5));
    CHECK(lambda_value(MultiplierSpec::finite(1.7, 2.3), 1.0) == 0.0);
    CHECK(lambda_value(MultiplierSpec::finite(1.7, 2.3), 0.3) == 0.0);
    CHECK(lambda_value(MultiplierSpec::exponential(1.0, 1.0), 2.0) ==
          doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("lambda monotone on a log grid") {
    const std::vector<MultiplierSpec> specs = {
        MultiplierSpec::finite(0.5, 0.0), MultiplierSpec::finite(1.0, 1.0),
        MultiplierSpec::finite(2.0, 0.5), MultiplierSpec::exponential(1.0, 0.5),
        MultiplierSpec::exponential(0.3, 1.0)};
    for (const auto& spec : specs) {
        double t = 1.0 + 1e-9, prev = std::fabs(lambda_value(spec, t));
        while (t < 1e6) {
            t *= 1.07;
            const double cur = std::fabs(lambda_value(spec, t));
            REQUIRE(cur <= prev + 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("spec parsing round trip") {
    const auto f = MultiplierSpec::parse("finite:gamma=2.5,xi=0.75");
    CHECK(f.family == MultiplierSpec::Family::Finite);
    CHECK(f.gamma == doctest::Approx(2.5));
    CHECK(f.xi == doctest::Approx(0.75));
    const auto e = MultiplierSpec::parse("exp:gamma=1.5,r=0.25", NormMode::Max);
    CHECK(e.family == MultiplierSpec::Family::Exponential);
    CHECK(e.r == doctest::Approx(0.25));
    CHECK(e.mode == NormMode::Max);
    CHECK_THROWS_AS(MultiplierSpec::parse("poly:gamma=1"), input_error);
    CHECK_THROWS_AS(MultiplierSpec::parse("finite:gamma=0,xi=1"), input_error);
    CHECK_THROWS_AS(MultiplierSpec::parse("exp:gamma=1"), input_error);
}

TEST_CASE("apply_multiplier examples") {
    const auto spec = MultiplierSpec::finite(1.0, 0.0, NormMode::Euclid);
    CHECK(apply_multiplier(spec, CoefficientVector{}).support_size() == 0);

    const auto f11 = CoefficientVector::basis(MultiIndex({1, 1}));
    const auto g = apply_multiplier(spec, f11);
    CHECK(g.coefficient(MultiIndex({1, 1})) == doctest::Approx(1.0 / std::sqrt(2.0)));

    const auto f10 = CoefficientVector::basis(MultiIndex({1, 0}));
    CHECK(apply_multiplier(spec, f10).support_size() == 0);  // lambda(1) = 0
}

TEST_CASE("diagonal_sequence examples") {
    const auto finite = MultiplierSpec::finite(1.0, 0.0, NormMode::Max);
    const auto diag = diagonal_sequence(finite, LayerWindow(0, 3, NormMode::Max), 1);
    REQUIRE(diag.size() == 3);
    CHECK(diag[0] == 0.0);
    CHECK(diag[1] == doctest::Approx(0.5));
    CHECK(diag[2] == doctest::Approx(1.0 / 3.0));

    const auto expo = MultiplierSpec::exponential(1.0, 1.0, NormMode::Max);
    const auto diag2 = diagonal_sequence(expo, LayerWindow(-1, 1, NormMode::Max), 1);
    REQUIRE(diag2.size() == 2);
    CHECK(diag2[0] == doctest::Approx(1.0));
    CHECK(diag2[1] == doctest::Approx(std::exp(-1.0)));

    CHECK(diagonal_sequence(expo, LayerWindow(2, 2, NormMode::Max), 1).empty());
}

TEST_CASE("diagonal matches apply_multiplier through the coordinate map") {
    const LayerWindow window(1, 4, NormMode::Euclid);
    const unsigned d = 2;
    for (auto spec : {MultiplierSpec::finite(1.3, 0.5, NormMode::Euclid),
                      MultiplierSpec::exponential(0.7, 0.5, NormMode::Euclid)}) {
        const auto diag = diagonal_sequence(spec, window, d);
        const auto basis = window_basis(window, d);
        REQUIRE(diag.size() == basis.size());
        Eigen::VectorXd alpha(static_cast<Eigen::Index>(basis.size()));
        for (Eigen::Index i = 0; i < alpha.size(); ++i)
            alpha[i] = 2.0 * rng::uniform(3, 1, static_cast<std::uint64_t>(i)) - 1.0;
        const auto f = coordinate_map_J(alpha, window, d);
        const auto lf = apply_multiplier(spec, f);
        const Eigen::VectorXd beta = coordinate_map_J_inverse(lf, window, d);
        for (Eigen::Index i = 0; i < alpha.size(); ++i)
            REQUIRE(std::fabs(beta[i] - diag[static_cast<std::size_t>(i)] * alpha[i]) <= 1e-12);
    }
}

TEST_CASE("dyadic level examples") {
    CHECK(next_level(MultiplierSpec::exponential(1.0, 1.0), 2) == 3);
    CHECK(next_level(MultiplierSpec::finite(1.0, 0.0), 4) == 8);

    LayerCounter counter(1, NormMode::Max);
    const auto expo = MultiplierSpec::exponential(1.0, 1.0, NormMode::Max);
    const auto single = dyadic_levels(expo, 5, 1, counter, 0.5);
    CHECK(single.levels == std::vector<std::uint64_t>{5});
    CHECK(single.theta.empty());

    const auto lv = dyadic_levels(expo, 2, 6, counter, 0.5);
    REQUIRE(lv.levels.size() == 6);
    const double base = std::fabs(lambda_value(expo, 2.0));
    for (std::size_t k = 1; k < lv.levels.size(); ++k) {
        const double lk = std::fabs(lambda_value(expo, static_cast<double>(lv.levels[k])));
        REQUIRE(lk <= std::pow(2.0, -static_cast<double>(k)) * base);
    }
}

TEST_CASE("covering split sizes are summable") {
    LayerCounter counter(2, NormMode::Euclid);
    for (double eps : {0.25, 0.5, 1.0}) {
        const auto spec = MultiplierSpec::finite(1.5, 0.0, NormMode::Euclid);
        const auto lv = dyadic_levels(spec, 16, 2, counter, eps);
        const double cap = lv.theta12 * std::pow(2.0, -eps) / (1.0 - std::pow(2.0, -eps)) +
                           static_cast<double>(lv.M);
        CHECK(static_cast<double>(lv.sum_m()) <= cap + 1e-9);
    }
}

TEST_CASE("summability class evidence") {
    const auto finite = MultiplierSpec::finite(1.5, 0.0, NormMode::Euclid);
    const auto rep = K_eps_check(finite, 0.4, 2.0, 1, NormMode::Euclid, 2, 64);
    CHECK(rep.consistent);
    CHECK(rep.sup_ratio > 0);
    CHECK(rep.sup_ratio < 100);

    const auto expo = MultiplierSpec::exponential(1.0, 0.5, NormMode::Euclid);
    const auto rep2 = K_eps_check(expo, 0.25, 2.0, 2, NormMode::Euclid, 2, 32);
    CHECK(rep2.consistent);

    // p = 2 makes the normalizer theta^(1/p - 1/2) = 1: the reported ratio is
    // the bare sum over the ladder
    LayerCounter counter(1, NormMode::Euclid);
    const auto one = K_eps_check(finite, 0.4, 2.0, 1, NormMode::Euclid, 16, 16);
    const auto two = dyadic_levels(finite, 16, 2, counter, 0.4);
    const auto lv = dyadic_levels(finite, 16, two.M + 1, counter, 0.4);
    double bare = 0;
    for (std::uint64_t k = 1; k <= lv.M; ++k)
        bare += std::pow(2.0, -static_cast<double>(k) * 0.8) *
                std::sqrt(lv.theta[k - 1] / lv.theta12);
    REQUIRE(one.ratios.size() == 1);
    CHECK(one.ratios[0] == doctest::Approx(bare).epsilon(1e-12));

    CHECK_THROWS_AS(K_eps_check(finite, 0.4, 3.0, 1, NormMode::Euclid, 2, 8), input_error);
}

TEST_CASE("level scan budget") {
    // gamma so small that lambda halves only after ~2^20 steps from N = 1000
    const auto slow = MultiplierSpec::finite(0.05, 0.0);
    CHECK_THROWS_AS(next_level(slow, 1000, 1000), resource_error);
}
