#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ventropy/lattice.hpp"
#include "ventropy/multiplier.hpp"
#include "ventropy/product.hpp"

namespace ventropy {

struct LevyEstimate {
    int n = 0;
    double p = 2;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double estimate = 0;         // sqrt of the sphere average of ||x||_(p)^2
    double mean_sq = 0;          // sphere average of ||x||^2
    double stderr_mean_sq = 0;   // standard error of that mean
    double stderr_estimate = 0;  // propagated to the square root
};

/// Monte-Carlo Levy mean of ||.||_(p) on the window: uniform sphere points
/// from normalized counter-keyed normals, so the result depends only on
/// (inputs, seed), not on the worker count.
LevyEstimate levy_mean_estimate(const LayerWindow& window, const ProductSpec& spec, double p,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned workers = 0,
                                std::uint64_t grid_budget = kDefaultGridBudget);

struct AsymptoticConstants {
    unsigned d = 1;
    double r = 1, gamma = 1;
    double c = 0;        // Euclidean-norm constant
    double c_star = 0;   // max-norm constant
};

/// The stretched-exponential decay constants for the exponential family.
AsymptoticConstants constants(unsigned d, double r, double gamma);

/// A_{N,k} = -(1/n) (k ln 2 + gamma sum_{l=1}^N l^r d_l) with n = dim T_N.
/// Exponential family only.
double A_N_k(const MultiplierSpec& spec, std::uint64_t N, std::uint64_t k, unsigned d,
             NormMode mode, LayerCounter& counter);

struct SupAResult {
    std::uint64_t n_star = 0;  // argmax N
    double value = 0;          // A_{N*,k}
    std::uint64_t scanned_to = 0;
};

/// Maximizes A_{N,k} over a bracket derived from the closed-form maximizer
/// (times safety factor 4, widened once on an edge hit).
SupAResult sup_A(const MultiplierSpec& spec, std::uint64_t k, unsigned d, NormMode mode,
                 std::uint64_t work_budget = kDefaultLatticeWork);

struct GMaximizerResult {
    double x_k = 0;      // stationary point of g on [2, inf)
    double value = 0;    // g(x_k)
    bool boundary = false;  // true when the maximum sits at x = 2
    double c1 = 0, c2 = 0;  // bracket constants: c1 k <= x_k <= c2 k
};

/// Maximizer of g(x) = -k/x - (gamma/d) log2 x - xi log2(log2 x) on [2, inf),
/// by bracketed root-finding on g' (closed form checked when xi = 0).
GMaximizerResult g_maximizer(double gamma, double xi, unsigned d, std::uint64_t k);

struct BoundQuery {
    MultiplierSpec spec;
    std::uint64_t k = 1;
    double p = 2;
    double q = 2;
    unsigned d = 1;
};

struct LowerBoundReport {
    BoundQuery query;
    std::uint64_t n_opt = 0;    // optimizing N (interior to the scan)
    double dim_n = 0;           // n = dim T_{N_opt}
    double product_term = 0;    // 2^{-k/n} sigma at the optimum
    double sigma = 0;           // (prod over nonzero layers |lambda(l)|^{d_l})^{1/n}
    double lambda_n_opt = 0;    // |lambda(N_opt)|, dominated by sigma
    double v_factor = 1;        // the (p, q) log factor
    double value = 0;           // product_term * v_factor, absolute constant set to 1
    bool constants_normalized = true;
};

LowerBoundReport lower_bound_expr(const MultiplierSpec& spec, std::uint64_t k, double p,
                                  double q, unsigned d,
                                  std::uint64_t work_budget = kDefaultLatticeWork);

/// The lower-bound expression at one fixed section level N:
/// 2^{-k/n} (prod over layers l <= N with lambda(l) != 0 of |lambda(l)|^{d_l})^{1/n},
/// n = dim T_N. lower_bound_expr maximizes this over N.
double lower_product_term(const MultiplierSpec& spec, std::uint64_t k, std::uint64_t N,
                          LayerCounter& counter);

enum class VolumeMode { Surrogate, MonteCarlo };

struct ChiReport {
    BoundQuery query;           // q is the relevant exponent
    VolumeMode volume_mode = VolumeMode::Surrogate;
    std::uint64_t n_opt = 0;
    double dim_n = 0;
    double value = 0;           // chi_k = 3 sup_N (...)^{1/n}
    bool constants_normalized = true;
};

/// chi_k = 3 sup_N (2^{-k+1} V_ratio prod_{nonzero} |lambda(j)|^{d_j})^{1/n}.
/// Surrogate mode sets V_ratio = 1; MonteCarlo estimates the 2-vs-q ball
/// volume ratio on windows of dimension <= 12 over `mc_spec` factors.
ChiReport chi_k(const MultiplierSpec& spec, std::uint64_t k, double q, unsigned d,
                VolumeMode volume_mode = VolumeMode::Surrogate,
                const std::optional<ProductSpec>& mc_spec = std::nullopt,
                std::uint64_t mc_samples = 200000, std::uint64_t mc_seed = 1,
                std::uint64_t work_budget = kDefaultLatticeWork);

struct UpperBoundReport {
    BoundQuery query;
    double eps = 0;
    double chi = 0;          // chi_k used for the level selection
    std::uint64_t N = 0;     // chosen section level
    double lambda_N = 0;
    std::uint64_t b = 0;     // smallest b with |lambda(N)| >= 2^{-b} chi_k
    double dim_n = 0;        // n = dim T_N
    double theta12 = 0;
    std::uint64_t M = 0;
    std::vector<std::uint64_t> m;  // covering split sizes m_1..m_M
    double sum_m = 0;        // sum of the covering split sizes m_l
    double eta = 0;          // k + sum m_l
    double index = 0;        // eta + b n: the bound is valid at this entropy index
    double head_term = 0;    // sqrt(q) branch or sup_j sqrt(log2 theta_j) branch
    double tail_sum = 0;     // sum_{j>M} 2^{-j} theta_j^{1/2-1/q}, truncated at 1e-15
    double value = 0;        // |lambda(N)| (head_term + tail_sum)
    bool constants_normalized = true;
};

UpperBoundReport upper_bound_expr(const MultiplierSpec& spec, std::uint64_t k, double p,
                                  double q, unsigned d, double eps,
                                  std::uint64_t work_budget = kDefaultLatticeWork,
                                  std::uint64_t scan_budget = kDefaultLevelScanBudget);

} // namespace ventropy
