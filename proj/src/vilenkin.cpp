#include "ventropy/vilenkin.hpp"

#include <cmath>

#include "ventropy/errors.hpp"

namespace ventropy {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;

// Total phase of psi_n(x) as a fraction of a full turn, reduced per factor so
// each term is the exact rational ((n_k x_k) mod s_k) / s_k before rounding.
double phase_fraction(const Digits& nd, const GroupPoint& x, const RadixSequence& radix) {
    double frac = 0.0;
    for (std::size_t k = 0; k < nd.entries.size(); ++k) {
        const std::uint64_t xk = x.at(k);
        if (xk == 0 || nd.entries[k] == 0) continue;
        const std::uint64_t s = radix.s(k);
        const std::uint64_t t = (static_cast<std::uint64_t>(nd.entries[k]) * xk) % s;
        frac += static_cast<double>(t) / static_cast<double>(s);
    }
    return frac;
}

} // namespace

std::complex<double> psi(std::uint64_t n, const GroupPoint& x, const RadixSequence& radix) {
    const double frac = phase_fraction(digits_of(n, radix), x, radix);
    return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

double eval_X(std::uint64_t n, const GroupPoint& x, const RadixSequence& radix) {
    const auto v = psi(n, x, radix);
    return classify(n, radix) == ParityClass::M ? v.real() : kSqrt2 * v.real();
}

double eval_Y(std::uint64_t n, const GroupPoint& x, const RadixSequence& radix) {
    if (classify(n, radix) == ParityClass::M) return 0.0;
    return kSqrt2 * psi(n, x, radix).imag();
}

double real_basis(std::uint64_t n, OrderingMode mode, const GroupPoint& x,
                  const RadixSequence& radix) {
    if (classify(n, radix) != ParityClass::L) return eval_X(n, x, radix);
    return eval_Y(mode == OrderingMode::Z ? neg(n, radix) : n, x, radix);
}

BasisIdentity real_basis_identity(std::uint64_t n, OrderingMode mode,
                                  const RadixSequence& radix) {
    if (classify(n, radix) != ParityClass::L) return {'X', n};
    return {'Y', mode == OrderingMode::Z ? neg(n, radix) : n};
}

GroupPoint grid_point(std::uint64_t j, const RadixSequence& radix) {
    return GroupPoint{digits_of(j, radix).entries};
}

double integrate_cylinder(const std::function<double(const GroupPoint&)>& f, std::size_t r,
                          const RadixSequence& radix, std::uint64_t budget) {
    std::uint64_t points = 1;
    for (std::size_t k = 0; k < r; ++k) {
        if (__builtin_mul_overflow(points, static_cast<std::uint64_t>(radix.s(k)), &points) ||
            points > budget)
            throw resource_error("cylinder grid exceeds integration budget");
    }
    // Kahan accumulation keeps the exact finite sum exact to ~1 ulp.
    double sum = 0.0, c = 0.0;
    GroupPoint x;
    x.entries.assign(r, 0);
    for (std::uint64_t j = 0; j < points; ++j) {
        const double y = f(x) - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
        for (std::size_t k = 0; k < r; ++k) {  // odometer increment
            if (++x.entries[k] < radix.s(k)) break;
            x.entries[k] = 0;
        }
    }
    return sum / static_cast<double>(points);
}

std::complex<double> integrate_cylinder(
    const std::function<std::complex<double>(const GroupPoint&)>& f, std::size_t r,
    const RadixSequence& radix, std::uint64_t budget) {
    const std::function<double(const GroupPoint&)> real_part =
        [&](const GroupPoint& x) { return f(x).real(); };
    const std::function<double(const GroupPoint&)> imag_part =
        [&](const GroupPoint& x) { return f(x).imag(); };
    return {integrate_cylinder(real_part, r, radix, budget),
            integrate_cylinder(imag_part, r, radix, budget)};
}

double trig_basis(std::uint64_t m, double x) {
    if (m == 0) return 1.0;
    if (m % 2 == 0) return kSqrt2 * std::cos(static_cast<double>(m / 2) * x);
    return kSqrt2 * std::sin(static_cast<double>((m + 1) / 2) * x);
}

TableRow table_row(std::uint64_t n, const RadixSequence& radix) {
    return TableRow{n,
                    digits_of(n, radix),
                    neg(n, radix),
                    classify(n, radix),
                    real_basis_identity(n, OrderingMode::Z, radix),
                    real_basis_identity(n, OrderingMode::Ztilde, radix)};
}

} // namespace ventropy
