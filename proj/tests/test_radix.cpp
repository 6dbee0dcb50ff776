#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ventropy/errors.hpp"
#include "ventropy/radix.hpp"
#include "ventropy/rng.hpp"

using namespace ventropy;

namespace {

const RadixSequence r2 = RadixSequence::parse("2");
const RadixSequence r3 = RadixSequence::parse("3");
const RadixSequence r4 = RadixSequence::parse("4");
const RadixSequence r23 = RadixSequence::parse("2,3");
const std::vector<RadixSequence> patterns = {r2, r3, r4, r23};

} // namespace

TEST_CASE("radix sequence basics") {
    CHECK(r23.s(0) == 2);
    CHECK(r23.s(1) == 3);
    CHECK(r23.s(2) == 2);
    CHECK(r3.P(0) == 1);
    CHECK(r3.P(3) == 27);
    CHECK(r23.P(4) == 36);
    CHECK_THROWS_AS(RadixSequence::parse(""), input_error);
    CHECK_THROWS_AS(RadixSequence::parse("1"), input_error);
    CHECK_THROWS_AS(RadixSequence::parse("2,x"), input_error);
    CHECK_THROWS_AS(r2.P(70), std::overflow_error);
}

TEST_CASE("digits_of examples") {
    CHECK(digits_of(0, r3).entries.empty());
    CHECK(digits_of(23, r3).entries == std::vector<std::uint32_t>{2, 1, 2});
    CHECK(digits_of(47, r4).entries == std::vector<std::uint32_t>{3, 3, 2});
}

TEST_CASE("round trip over all patterns") {
    for (const auto& radix : patterns)
        for (std::uint64_t n = 0; n < 1000000; ++n)
            REQUIRE(value(digits_of(n, radix), radix) == n);
}

TEST_CASE("oplus and ominus examples") {
    CHECK(oplus(17, 0, r3) == 17);
    CHECK(oplus(1, 2, r3) == 0);
    CHECK(oplus(3, 3, r4) == 2);
    CHECK(ominus(0, 1, r3) == 2);
    CHECK(ominus(0, 5, r3) == 7);
    CHECK(ominus(0, 12, r4) == 4);
}

TEST_CASE("group laws on random triples") {
    for (const auto& radix : patterns) {
        for (int i = 0; i < 10000; ++i) {
            const std::uint64_t a = rng::word(7, 1, i) % 1000000;
            const std::uint64_t b = rng::word(7, 2, i) % 1000000;
            const std::uint64_t c = rng::word(7, 3, i) % 1000000;
            REQUIRE(oplus(a, b, radix) == oplus(b, a, radix));
            REQUIRE(oplus(a, oplus(b, c, radix), radix) == oplus(oplus(a, b, radix), c, radix));
            REQUIRE(ominus(a, a, radix) == 0);
            REQUIRE(oplus(a, neg(a, radix), radix) == 0);
        }
    }
}

TEST_CASE("classification examples and methods agree") {
    CHECK(classify(0, r3) == ParityClass::M);
    CHECK(classify(14, r3) == ParityClass::K);
    CHECK(classify(12, r4) == ParityClass::L);
    for (const auto& radix : patterns)
        for (std::uint64_t n = 0; n < 20000; ++n)
            REQUIRE(classify(n, radix, ClassifyMethod::Direct) ==
                    classify(n, radix, ClassifyMethod::FastRule));
}

TEST_CASE("negation stays in the same digit range") {
    for (const auto& radix : patterns) {
        for (std::uint64_t n = 1; n < 100000; ++n) {
            const std::size_t r = digits_of(n, radix).size();
            const std::uint64_t nn = neg(n, radix);
            REQUIRE(nn >= radix.P(r - 1));
            REQUIRE(nn < radix.P(r));
        }
    }
}

TEST_CASE("digit vectors handle values beyond the integer view") {
    Digits big;
    big.entries.assign(80, 1);  // would overflow 64 bits as an integer in radix 2
    const Digits sum = oplus(big, big, r2);  // digit-wise (1+1) mod 2 = 0
    CHECK(sum.entries.empty());
    CHECK_THROWS_AS(value(big, r2), std::overflow_error);
}

TEST_CASE("real image of group points") {
    GroupPoint x{{1}};  // 1/2 in radix 2
    CHECK(x.real_image(r2) == doctest::Approx(0.5));
    GroupPoint y{{2, 1}};  // 2/3 + 1/9 in radix 3
    CHECK(y.real_image(r3) == doctest::Approx(2.0 / 3 + 1.0 / 9));
}
