#pragma once

#include <cstdint>
#include <vector>

#include "ventropy/multi_index.hpp"

namespace ventropy {

inline constexpr std::uint64_t kDefaultScanBudget = 1'000'000'000ULL;
inline constexpr std::uint64_t kDefaultLatticeWork = 1ULL << 31;

/// Working exponent for the lattice-point error term E_d(R):
/// 0 for d = 1, 132/208 for d = 2, 21/16 for d = 3, d - 2 for d >= 4.
double gauss_error_exponent(unsigned d);

struct BallCount {
    unsigned d = 0;
    double R = 0;
    std::uint64_t count = 0;  // exact #{z in Z^d : |z| <= R}
    double main_term = 0;     // (2 pi^{d/2} / (d Gamma(d/2))) R^d
    double error = 0;         // count - main_term
    double theta = 0;
};

/// Exact count of integer points in the closed Euclidean ball of radius R.
/// The box scan is refused when (2 floor(R) + 1)^d exceeds the budget.
BallCount ball_count(unsigned d, double R, std::uint64_t scan_budget = kDefaultScanBudget);

struct LayerCountRow {
    std::uint64_t l = 0;
    std::uint64_t count_A = 0;  // #A_l  (== dim T_l)
    std::uint64_t layer_dim = 0;  // d_l = #A_l - #A_{l-1}
};

struct LayerCounts {
    unsigned d = 0;
    NormMode mode = NormMode::Euclid;
    std::vector<LayerCountRow> rows;  // l = 0 .. l_max
};

/// Cached exact layer counts for one (d, mode). Max mode and d = 1 use closed
/// forms; Euclidean counting for d = 2 sums integer columns, d >= 3 runs a
/// sum-of-squares convolution, both under a work budget.
class LayerCounter {
  public:
    LayerCounter(unsigned d, NormMode mode, std::uint64_t work_budget = kDefaultLatticeWork);

    unsigned d() const { return d_; }
    NormMode mode() const { return mode_; }

    std::uint64_t count_A(std::uint64_t l);              // #A_l, exact
    std::uint64_t layer_dim(std::uint64_t l);            // d_l, exact
    std::uint64_t dim_window(std::int64_t m1, std::int64_t m2);  // dim T_{m1,m2}

    /// Closed-form double-precision counts for arbitrarily large l (Max mode,
    /// or d = 1); falls back to the exact path otherwise.
    double count_A_dbl(double l) const;
    double layer_dim_dbl(double l) const;
    bool has_closed_form() const { return mode_ == NormMode::Max || d_ == 1; }

  private:
    void extend_to(std::uint64_t l);

    unsigned d_;
    NormMode mode_;
    std::uint64_t work_budget_;
    std::uint64_t work_done_ = 0;
    std::vector<std::uint64_t> cumulative_;  // cumulative_[l] = #A_l (Euclid d >= 2 cache)
};

LayerCounts layer_table(unsigned d, NormMode mode, std::uint64_t l_max,
                        std::uint64_t work_budget = kDefaultLatticeWork);

/// Multi-indices of the layer A_l \ A_{l-1}, sorted by (exact squared norm,
/// lexicographic). Deterministic across runs and platforms.
std::vector<MultiIndex> layer_enumerate(unsigned d, NormMode mode, std::uint64_t l,
                                        std::uint64_t budget = kDefaultScanBudget);

struct PropositionReport {
    unsigned d = 0;
    NormMode mode = NormMode::Euclid;
    std::uint64_t l_max = 0;
    double theta = 0;
    double E = 0;             // 2^{1-d} pi^{d/2} / Gamma(d/2)  (Euclid); d (Max)
    double F = 0;             // E / d (Euclid); 1 (Max)
    double c_prime = 0;       // minimal constant for the layer inequalities
    double c_dim = 0;         // minimal constant for the dim T_N upper inequality
    bool lower_dim_ok = false;    // F N^d <= dim T_N over the range
    bool lower_layer_ok = false;  // layer lower bound holds over the range
    double ratio_min = 0, ratio_max = 0;  // d_l / (E l^{d-1}) over 20 <= l <= l_max
    bool ok = false;          // finite constants exist over the range
};

/// Fits the minimal constants making the layer/dimension envelopes hold over
/// 1 <= l, N <= l_max. Requires d >= 2.
PropositionReport proposition_check(unsigned d, NormMode mode, std::uint64_t l_max,
                                    std::uint64_t work_budget = kDefaultLatticeWork);

} // namespace ventropy
