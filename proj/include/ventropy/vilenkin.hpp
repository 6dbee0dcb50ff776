#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "ventropy/radix.hpp"

namespace ventropy {

enum class OrderingMode { Z, Ztilde };

/// Complex character value prod_k exp(2 pi i n_k x_k / s_k); modulus 1.
std::complex<double> psi(std::uint64_t n, const GroupPoint& x, const RadixSequence& radix);

/// X_n = sqrt(2) Re(psi_n) and Y_n = sqrt(2) Im(psi_n) for n in K u L;
/// X_n = psi_n (real) and Y_n = 0 for n in M.
double eval_X(std::uint64_t n, const GroupPoint& x, const RadixSequence& radix);
double eval_Y(std::uint64_t n, const GroupPoint& x, const RadixSequence& radix);

/// Z_n(x) (mode Z) or Z~_n(x) (mode Ztilde); |result| <= sqrt(2).
double real_basis(std::uint64_t n, OrderingMode mode, const GroupPoint& x,
                  const RadixSequence& radix);

/// Which X/Y function the n-th element of the ordering is, e.g. Z_6 = Y_3 for
/// constant radix 3. Used for the identity tables.
struct BasisIdentity {
    char kind;            // 'X' or 'Y'
    std::uint64_t index;

    std::string to_string() const { return std::string(1, kind) + std::to_string(index); }
    bool operator==(const BasisIdentity& o) const { return kind == o.kind && index == o.index; }
};

BasisIdentity real_basis_identity(std::uint64_t n, OrderingMode mode, const RadixSequence& radix);

/// Grid point j of the depth-r cylinder grid: coordinates are the digits of j.
GroupPoint grid_point(std::uint64_t j, const RadixSequence& radix);

inline constexpr std::uint64_t kDefaultIntegrationBudget = 1ULL << 20;

/// Exact normalized-Haar integral of a function of the first r digits:
/// (1/P_r) * sum over all P_r digit combinations. Throws resource_error if
/// P_r exceeds the budget.
double integrate_cylinder(const std::function<double(const GroupPoint&)>& f, std::size_t r,
                          const RadixSequence& radix,
                          std::uint64_t budget = kDefaultIntegrationBudget);

std::complex<double> integrate_cylinder(
    const std::function<std::complex<double>(const GroupPoint&)>& f, std::size_t r,
    const RadixSequence& radix, std::uint64_t budget = kDefaultIntegrationBudget);

/// Real trigonometric system on [0, 2pi] with measure dt/(2 pi):
/// phi_0 = 1, phi_{2k} = sqrt(2) cos(kx), phi_{2k-1} = sqrt(2) sin(kx).
double trig_basis(std::uint64_t m, double x);

/// One row of the ordering table emitted by `vilenkin-table`.
struct TableRow {
    std::uint64_t n;
    Digits digits;
    std::uint64_t ominus_n;
    ParityClass cls;
    BasisIdentity z;
    BasisIdentity ztilde;
};

TableRow table_row(std::uint64_t n, const RadixSequence& radix);

} // namespace ventropy
