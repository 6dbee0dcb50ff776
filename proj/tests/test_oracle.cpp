#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ventropy/entropy_oracle.hpp"
#include "ventropy/errors.hpp"
#include "ventropy/rng.hpp"

using namespace ventropy;

TEST_CASE("body gauges are norms") {
    for (const auto& body : {BodySpec::euclid(3), BodySpec::sup(3), BodySpec::one(3),
                             BodySpec::coordinate(3, 1.5)}) {
        for (int i = 0; i < 200; ++i) {
            const Eigen::VectorXd x = rng::gauss_vector(3, 5, 2 * i);
            const Eigen::VectorXd y = rng::gauss_vector(3, 5, 2 * i + 1);
            REQUIRE(body.gauge(x + y) <= body.gauge(x) + body.gauge(y) + 1e-9);
            REQUIRE(body.gauge(-x) == doctest::Approx(body.gauge(x)));
            REQUIRE(body.gauge(2.5 * x) == doctest::Approx(2.5 * body.gauge(x)));
        }
    }
    CHECK(BodySpec::euclid(2).polar().p() == doctest::Approx(2.0));
    CHECK(std::isinf(BodySpec::one(2).polar().p()));
    CHECK(BodySpec::sup(2).polar().p() == doctest::Approx(1.0));
}

TEST_CASE("support functions are dual norms") {
    Eigen::VectorXd x(2);
    x << 3.0, -4.0;
    CHECK(BodySpec::euclid(2).support(x) == doctest::Approx(5.0));
    CHECK(BodySpec::sup(2).support(x) == doctest::Approx(7.0));   // sup box -> l1
    CHECK(BodySpec::one(2).support(x) == doctest::Approx(4.0));   // one ball -> sup
}

TEST_CASE("scaled bodies") {
    Eigen::VectorXd diag(2);
    diag << 2.0, 0.5;
    const auto body = BodySpec::euclid(2).scaled(diag);
    Eigen::VectorXd x(2);
    x << 2.0, 0.0;
    CHECK(body.gauge(x) == doctest::Approx(1.0));  // on the boundary of diag * B_2
    x << 0.0, 0.5;
    CHECK(body.gauge(x) == doctest::Approx(1.0));
    CHECK(body.circumradius() == doctest::Approx(2.0));
    Eigen::VectorXd bad(2);
    bad << 1.0, 0.0;
    CHECK_THROWS_AS(BodySpec::euclid(2).scaled(bad * 0.0), input_error);
}

TEST_CASE("mc_volume_ratio closed forms") {
    const auto same = mc_volume_ratio(BodySpec::euclid(2), BodySpec::euclid(2), 20000, 9);
    CHECK(same.estimate == doctest::Approx(1.0));

    const auto sup2 = mc_volume_ratio(BodySpec::sup(2), BodySpec::euclid(2), 100000, 7);
    CHECK(std::fabs(sup2.estimate - 4.0 / M_PI) <= 3.0 * sup2.stderr_value);

    const auto one2 = mc_volume_ratio(BodySpec::one(2), BodySpec::euclid(2), 100000, 7);
    CHECK(std::fabs(one2.estimate - 2.0 / M_PI) <= 3.0 * one2.stderr_value);

    // deterministic in the seed
    const auto again = mc_volume_ratio(BodySpec::sup(2), BodySpec::euclid(2), 100000, 7);
    CHECK(again.estimate == sup2.estimate);

    CHECK_THROWS_AS(mc_volume_ratio(BodySpec::euclid(5), BodySpec::sup(5), 200, 1),
                    precision_error);
}

TEST_CASE("cover_and_pack on the interval") {
    const auto r = cover_and_pack(BodySpec::euclid(1), BodySpec::euclid(1), 0.25, 20000, 3);
    CHECK(r.net_size == 4);  // exact 1-D covering count
    CHECK(r.net_size <= r.pack_size);

    const auto whole = cover_and_pack(BodySpec::euclid(1), BodySpec::euclid(1), 1.0, 20000, 3);
    CHECK(whole.net_size == 1);  // eps >= half the diameter

    // packing/covering sandwich: pack(2 eps) <= cover(eps) <= pack(eps)
    for (double eps : {0.1, 0.2, 0.4}) {
        const auto fine = cover_and_pack(BodySpec::euclid(1), BodySpec::euclid(1), eps,
                                         20000, 3);
        const auto coarse = cover_and_pack(BodySpec::euclid(1), BodySpec::euclid(1), 2 * eps,
                                           20000, 3);
        REQUIRE(coarse.pack_size <= fine.net_size);
        REQUIRE(fine.net_size <= fine.pack_size);
    }
}

TEST_CASE("cover_and_pack on the disc") {
    const auto r = cover_and_pack(BodySpec::euclid(2), BodySpec::euclid(2), 0.5, 20000, 3);
    CHECK(r.net_size >= 4);  // area comparison
    CHECK(r.net_size <= 9);
    CHECK(r.pack_size >= r.net_size);
    CHECK(r.cloud_size > 10000);
    CHECK(r.lattice_step > 0);
}

TEST_CASE("entropy_estimate is deterministic in the seed") {
    const auto a = entropy_estimate({1.0, 0.5}, 2.0, 2.0, 3, 8000, 21);
    const auto b = entropy_estimate({1.0, 0.5}, 2.0, 2.0, 3, 8000, 21);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.probe.net_size == b.probe.net_size);
}

TEST_CASE("entropy_estimate in one dimension") {
    for (int k = 1; k <= 6; ++k) {
        const auto br = entropy_estimate({1.0}, 2.0, 2.0, k, 20000, 5);
        const double exact = std::ldexp(1.0, -(k - 1));
        CHECK(br.lower == doctest::Approx(exact));
        CHECK(br.upper >= br.lower - 1e-12);
        CHECK(std::fabs(br.upper - exact) <= 0.05 * exact);
    }
}

TEST_CASE("entropy_estimate brackets for the diagonal section") {
    const std::vector<double> diag = {1.0, 0.5, 0.25};
    double prev_lower = 1e300, prev_upper = 1e300;
    for (int k = 1; k <= 6; ++k) {
        const auto br = entropy_estimate(diag, 2.0, 2.0, k, 30000, 5);
        REQUIRE(br.lower <= br.upper);
        REQUIRE(br.lower <= prev_lower + 1e-12);
        REQUIRE(br.upper <= prev_upper + 1e-12);
        prev_lower = br.lower;
        prev_upper = br.upper;
        const double expect = std::pow(2.0, -(k - 1) / 3.0) * std::cbrt(1.0 / 8.0);
        REQUIRE(br.lower == doctest::Approx(expect).epsilon(1e-12));
    }

    // k = 1: a single center, so the upper estimate sits near max |lambda_j|
    const auto k1 = entropy_estimate(diag, 2.0, 2.0, 1, 30000, 5);
    CHECK(k1.upper == doctest::Approx(1.0).epsilon(0.1));

    // homogeneity: scaling the diagonal scales the bracket
    const auto half = entropy_estimate({0.5, 0.25, 0.125}, 2.0, 2.0, 4, 30000, 5);
    const auto full = entropy_estimate(diag, 2.0, 2.0, 4, 30000, 5);
    CHECK(half.lower == doctest::Approx(0.5 * full.lower));
    CHECK(half.upper == doctest::Approx(0.5 * full.upper).epsilon(0.05));

    // degenerate diagonal: restricted to the nonzero coordinates
    const auto degen = entropy_estimate({1.0, 0.0}, 2.0, 2.0, 3, 20000, 5);
    CHECK(degen.degenerate);
    CHECK(degen.lower == doctest::Approx(0.25));

    CHECK_THROWS_AS(entropy_estimate({}, 2.0, 2.0, 1, 1000, 1), input_error);
    CHECK_THROWS_AS(entropy_estimate({1.0}, 2.0, 2.0, 13, 1000, 1), input_error);
}

TEST_CASE("urysohn numeric checks") {
    const auto eu = urysohn_check(BodySpec::euclid(2), 50000, 11);
    CHECK(eu.holds);
    CHECK(eu.lhs == doctest::Approx(1.0).epsilon(0.02));
    CHECK(eu.rhs == doctest::Approx(1.0).epsilon(1e-12));

    const auto sup2 = urysohn_check(BodySpec::sup(2), 100000, 11);
    CHECK(sup2.holds);
    CHECK(std::fabs(sup2.lhs - 1.1284) <= 3.0 * sup2.lhs_stderr + 1e-4);
    CHECK(std::fabs(sup2.rhs - 1.2732) <= 3.0 * sup2.rhs_stderr + 1e-4);
    CHECK(sup2.volume_product > 0.5);

    const auto one2 = urysohn_check(BodySpec::one(2), 100000, 11);
    CHECK(one2.holds);
    CHECK(std::fabs(one2.lhs - 0.7979) <= 3.0 * one2.lhs_stderr + 1e-4);
    CHECK(std::fabs(one2.rhs - 0.9003) <= 3.0 * one2.rhs_stderr + 1e-4);

    for (int n = 2; n <= 4; ++n)
        for (const auto& body : {BodySpec::euclid(n), BodySpec::sup(n), BodySpec::one(n)})
            REQUIRE(urysohn_check(body, 30000, 13).holds);

    CHECK_THROWS_AS(urysohn_check(BodySpec::euclid(6), 1000, 1), input_error);
}

TEST_CASE("window bodies integrate with the oracle") {
    const LayerWindow window(-1, 3, NormMode::Max);
    auto evaluator = std::make_shared<WindowEvaluator>(window, ProductSpec::walsh(1), 4.0);
    const auto body = BodySpec::window(evaluator, 4.0);
    CHECK(body.dim() == 4);
    CHECK_FALSE(body.support_exact());
    // || . ||_(2) is Euclidean on coordinates, so the 2-vs-2 ratio is 1
    const auto same = mc_volume_ratio(BodySpec::window(evaluator, 2.0), BodySpec::euclid(4),
                                      40000, 17);
    CHECK(same.estimate == doctest::Approx(1.0).epsilon(3.0 * same.stderr_value + 0.01));
    const auto rep = urysohn_check(body, 2000, 19);
    CHECK(rep.advisory);
}
