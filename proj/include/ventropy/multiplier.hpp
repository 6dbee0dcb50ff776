#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ventropy/lattice.hpp"
#include "ventropy/multi_index.hpp"
#include "ventropy/product.hpp"

namespace ventropy {

inline constexpr std::uint64_t kDefaultLevelScanBudget = 10'000'000ULL;

/// Parametrized multiplier function lambda plus the index-norm mode.
/// Finite:      lambda(t) = t^-gamma (log2 t)^-xi for t > 1, 0 on [0, 1]
/// Exponential: lambda(t) = exp(-gamma t^r)
struct MultiplierSpec {
    enum class Family { Finite, Exponential };

    Family family = Family::Finite;
    double gamma = 1.0;  // > 0
    double xi = 0.0;     // >= 0, Finite only
    double r = 1.0;      // > 0, Exponential only
    NormMode mode = NormMode::Euclid;

    static MultiplierSpec finite(double gamma, double xi, NormMode mode = NormMode::Euclid);
    static MultiplierSpec exponential(double gamma, double r, NormMode mode = NormMode::Euclid);

    /// CLI grammar: "finite:gamma=G,xi=X" or "exp:gamma=G,r=R".
    static MultiplierSpec parse(const std::string& text, NormMode mode = NormMode::Euclid);
    std::string to_string() const;

    /// Smallest integer level with lambda != 0 (2 for Finite, 1 for Exponential).
    std::uint64_t first_nonzero_level() const { return family == Family::Finite ? 2 : 1; }
};

double lambda_value(const MultiplierSpec& spec, double t);

/// lambda_k: lambda(|k|) in Euclid mode, lambda(|k|_*) in Max mode.
double lambda_at(const MultiplierSpec& spec, const MultiIndex& k);

/// Termwise a_k -> lambda_k a_k; annihilated terms leave the support.
CoefficientVector apply_multiplier(const MultiplierSpec& spec, const CoefficientVector& f);

/// lambda values in the canonical window ordering: the diagonal of the finite
/// section acting on coordinates.
std::vector<double> diagonal_sequence(const MultiplierSpec& spec, const LayerWindow& window,
                                      unsigned d, std::uint64_t budget = kDefaultScanBudget);

/// Dyadic level ladder N_1 = N, N_{k+1} = min{l : 2 |lambda(l)| <= |lambda(N_k)|},
/// with the block dimensions theta and the covering split (M, m_k) at eps.
struct DyadicLevels {
    std::vector<std::uint64_t> levels;  // N_1 .. N_{count}
    std::vector<double> theta;          // theta_{N_k,N_{k+1}}, one per consecutive pair
    double eps = 0;
    double theta12 = 0;                 // theta_{N_1,N_2}
    std::uint64_t M = 0;                // floor(log2(theta12) / eps)
    std::vector<std::uint64_t> m;       // m_k = floor(2^{-eps k} theta12) + 1, k = 1..M

    std::uint64_t sum_m() const;
};

/// One ladder step; scans upward from N_k. Throws resource_error when the scan
/// exceeds the step budget (lambda decays too slowly).
std::uint64_t next_level(const MultiplierSpec& spec, std::uint64_t n_k,
                         std::uint64_t scan_budget = kDefaultLevelScanBudget);

DyadicLevels dyadic_levels(const MultiplierSpec& spec, std::uint64_t base, std::size_t count,
                           LayerCounter& counter, double eps,
                           std::uint64_t scan_budget = kDefaultLevelScanBudget);

struct KepsReport {
    double eps = 0;
    double p = 0;
    std::vector<std::uint64_t> bases;   // scanned N values
    std::vector<double> ratios;         // normalized membership ratio per N
    double sup_ratio = 0;
    bool consistent = false;            // bounded, non-diverging trend over the range
};

/// Evidence check for the summability class membership: for each N computes
/// sum_{k=1}^{M} 2^{-k(1-eps/2)} theta_{N_k,N_{k+1}}^{1/p} / theta_{N_1,N_2}^{1/2}
/// divided by theta_{N_1,N_2}^{1/p-1/2}, and reports whether the ratio stays
/// bounded over the scanned range. Finite-range evidence, not a proof.
KepsReport K_eps_check(const MultiplierSpec& spec, double eps, double p, unsigned d,
                       NormMode mode, std::uint64_t n_lo, std::uint64_t n_hi,
                       std::uint64_t step = 1,
                       std::uint64_t scan_budget = kDefaultLevelScanBudget,
                       std::uint64_t work_budget = kDefaultLatticeWork);

} // namespace ventropy
