#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ventropy/product.hpp"

namespace ventropy {

/// Symmetric convex body in R^n given by its gauge (Minkowski functional):
/// a coordinate l_p ball, or a window ball {alpha : ||alpha||_(p) <= 1},
/// optionally pushed forward by a diagonal scaling.
class BodySpec {
  public:
    static BodySpec coordinate(int n, double p);  // l_p ball; p in [1, inf]
    static BodySpec euclid(int n) { return coordinate(n, 2.0); }
    static BodySpec sup(int n);  // sup box, p = inf
    static BodySpec one(int n) { return coordinate(n, 1.0); }
    static BodySpec window(std::shared_ptr<const WindowEvaluator> evaluator, double p);

    /// The image diag * K of this body under a diagonal map (all entries != 0).
    BodySpec scaled(Eigen::VectorXd diag) const;

    int dim() const { return n_; }
    bool is_coordinate() const { return evaluator_ == nullptr; }
    double p() const { return p_; }

    /// Gauge ||x||_K; x is in the body iff gauge(x) <= 1.
    double gauge(const Eigen::VectorXd& x) const;

    /// Support function h_K(x) = sup_{y in K} <x, y> = ||x||_{K polar}.
    /// Exact (dual-norm) for coordinate bodies; for window bodies a sampled
    /// maximization that may under-estimate (support_exact() reports which).
    double support(const Eigen::VectorXd& x, std::uint64_t seed = 1,
                   std::uint64_t samples = 512) const;
    bool support_exact() const { return is_coordinate(); }

    /// Polar body; defined for unscaled coordinate bodies (l_p -> l_p').
    BodySpec polar() const;

    /// Euclidean circumradius (exact for coordinate bodies, sampled estimate
    /// with a safety margin for window bodies).
    double circumradius(std::uint64_t seed = 1, std::uint64_t samples = 4096) const;

  private:
    BodySpec() = default;
    int n_ = 0;
    double p_ = 2.0;
    std::shared_ptr<const WindowEvaluator> evaluator_;
    std::optional<Eigen::VectorXd> diag_;
};

struct CoverPackResult {
    std::uint64_t net_size = 0;   // smallest found eps-cover of the cloud
    std::uint64_t pack_size = 0;  // largest found eps-distinguishable subset
    std::uint64_t cloud_size = 0;
    double lattice_step = 0;      // achieved cloud resolution
};

/// Builds a deterministic point cloud in `body` (counter-keyed random interior
/// and boundary points plus a lattice refinement) and reports covering and
/// packing witnesses at radius eps in the metric of `target`.
CoverPackResult cover_and_pack(const BodySpec& body, const BodySpec& target, double eps,
                               std::uint64_t sample_budget, std::uint64_t seed);

struct EntropyBracket {
    int k = 0;
    double lower = 0;   // volumetric bound
    double upper = 0;   // bisection covering radius on the cloud
    CoverPackResult probe;  // witnesses at the final upper radius
    bool degenerate = false;  // some diagonal entries were 0; computed on the
                              // nonzero coordinates only
    double volume_ratio = 1.0;      // Vol(B_p)/Vol(B_q) estimate used in `lower`
    double volume_ratio_stderr = 0;
};

/// Bracket for e_k of the diagonal operator diag : l_p -> l_q section.
EntropyBracket entropy_estimate(const std::vector<double>& diag, double p, double q, int k,
                                std::uint64_t budget, std::uint64_t seed);

struct VolumeRatio {
    double estimate = 0;
    double stderr_value = 0;
    std::uint64_t hits_a = 0, hits_b = 0, samples = 0;
};

/// Hit-ratio Monte-Carlo estimate of Vol(A)/Vol(B) with both bodies sampled
/// inside a common enclosing ball. Throws precision_error below 100 hits.
VolumeRatio mc_volume_ratio(const BodySpec& body_a, const BodySpec& body_b,
                            std::uint64_t samples, std::uint64_t seed);

struct UrysohnReport {
    int n = 0;
    double lhs = 0;          // (Vol K / Vol B_2)^(1/n), Monte-Carlo
    double lhs_stderr = 0;
    double rhs = 0;          // sphere average of the support function
    double rhs_stderr = 0;
    bool holds = false;      // lhs <= rhs + 3 (lhs_stderr + rhs_stderr)
    bool advisory = false;   // rhs may be under-estimated (window bodies)
    double volume_product = 0;  // (Vol V Vol V^polar / Vol B_2^2)^(1/n)
};

UrysohnReport urysohn_check(const BodySpec& body, std::uint64_t samples, std::uint64_t seed);

} // namespace ventropy
