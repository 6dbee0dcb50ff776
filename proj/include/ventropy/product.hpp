#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "ventropy/lattice.hpp"
#include "ventropy/multi_index.hpp"
#include "ventropy/radix.hpp"
#include "ventropy/vilenkin.hpp"

namespace ventropy {

inline constexpr std::uint64_t kDefaultGridBudget = 1ULL << 24;

/// One factor of the product system: a Vilenkin ordering on its group, or the
/// real trigonometric system on [0, 2pi] with normalized measure.
struct FactorSystem {
    enum class Kind { Vilenkin, Trigonometric };

    Kind kind = Kind::Vilenkin;
    RadixSequence radix{std::vector<std::uint32_t>{2}};
    OrderingMode ordering = OrderingMode::Z;

    static FactorSystem vilenkin(RadixSequence radix, OrderingMode ordering = OrderingMode::Z);
    static FactorSystem trigonometric();

    /// CLI grammar: "v:<radix-pattern>" (optionally "v~:" for the Z~ ordering)
    /// or "trig"; factors in a product are separated by ';'.
    static FactorSystem parse(const std::string& text);
    std::string to_string() const;
};

/// Coordinate of a point of Omega: digits for a Vilenkin factor, an angle in
/// [0, 2pi] for a trigonometric factor.
using Coordinate = std::variant<GroupPoint, double>;
using OmegaPoint = std::vector<Coordinate>;

struct ProductSpec {
    std::vector<FactorSystem> factors;

    explicit ProductSpec(std::vector<FactorSystem> f);
    unsigned d() const { return static_cast<unsigned>(factors.size()); }

    /// d identical Walsh (radix-2 Vilenkin) factors, the default system.
    static ProductSpec walsh(unsigned d);
    static ProductSpec parse(const std::string& text);  // ';'-separated factor list
    std::string to_string() const;
};

/// Value of the factor-j basis function with index m at the coordinate.
double factor_value(const FactorSystem& factor, std::uint64_t m, const Coordinate& x);

/// phi_m(x) = prod_j phi^{(j)}_{m_j}(x_j); |result| <= sqrt(2)^d.
double eval_product_basis(const MultiIndex& m, const OmegaPoint& x, const ProductSpec& spec);

/// Finite-support expansion sum a_k phi_k.
struct CoefficientVector {
    std::map<MultiIndex, double> terms;

    double coefficient(const MultiIndex& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? 0.0 : it->second;
    }
    void set(MultiIndex m, double a);  // erases the term when a == 0
    std::size_t support_size() const { return terms.size(); }
    double coefficient_l2() const;

    static CoefficientVector basis(MultiIndex m) {
        CoefficientVector f;
        f.set(std::move(m), 1.0);
        return f;
    }

    std::string to_json() const;  // {"k1,...,kd": a, ...}
    static CoefficientVector from_json(const std::string& text);

    bool operator==(const CoefficientVector& o) const { return terms == o.terms; }
};

/// Keeps exactly the terms with |m| <= R (Euclid, exact comparison) or
/// |m|_* <= R (Max). Idempotent.
CoefficientVector spherical_partial_sum(const CoefficientVector& f, double R, NormMode mode);

/// T_{M1,M2} = H_{M1+1} (+) ... (+) H_{M2}; dimension comes from the lattice.
struct LayerWindow {
    std::int64_t m1 = -1;
    std::int64_t m2 = 0;
    NormMode mode = NormMode::Euclid;

    LayerWindow(std::int64_t m1_, std::int64_t m2_, NormMode mode_);
};

/// The canonical ordered basis Upsilon of the window: layer-major, within a
/// layer by nondecreasing |m| with lexicographic ties.
std::vector<MultiIndex> window_basis(const LayerWindow& window, unsigned d,
                                     std::uint64_t budget = kDefaultScanBudget);

/// J(alpha) = sum alpha_k xi_k; input error unless length(alpha) = dim window.
CoefficientVector coordinate_map_J(const Eigen::VectorXd& alpha, const LayerWindow& window,
                                   unsigned d);

/// Inverse of J; input error if f has support outside the window.
Eigen::VectorXd coordinate_map_J_inverse(const CoefficientVector& f, const LayerWindow& window,
                                         unsigned d);

/// A function on Omega with declared resolution: digit depth for Vilenkin
/// coordinates, trigonometric degree bound for trig coordinates.
struct EvaluableFunction {
    std::function<double(const OmegaPoint&)> f;
    std::vector<std::uint64_t> resolution;  // one entry per factor
};

/// Integral f_hat(m) = int f phi_m dmu: exact on Vilenkin factors for cylinder
/// functions of the declared depth, uniform-grid quadrature on trig factors.
double fourier_coefficient(const EvaluableFunction& f, const MultiIndex& m,
                           const ProductSpec& spec, std::uint64_t budget = kDefaultGridBudget);

inline double fourier_coefficient(const CoefficientVector& f, const MultiIndex& m) {
    return f.coefficient(m);
}

/// L^p(Omega, mu) norm of the represented function. Exact digit grids on
/// Vilenkin factors; uniform trig grids sized max(4096, 8 p_eff maxdeg) per
/// axis (exact for even integer p); p = infinity is the grid maximum.
double lp_norm(const CoefficientVector& f, double p, const ProductSpec& spec,
               std::uint64_t budget = kDefaultGridBudget);

/// Dense evaluation of a window's basis on the shared product grid. Rows are
/// grid points with uniform weight; norm_p(alpha) = ||J(alpha)||_p evaluated
/// as a matrix-vector product, the workhorse behind Levy means and window
/// bodies.
class WindowEvaluator {
  public:
    WindowEvaluator(const LayerWindow& window, const ProductSpec& spec, double p_hint,
                    std::uint64_t budget = kDefaultGridBudget);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MultiIndex>& basis() const { return basis_; }
    const Eigen::MatrixXd& matrix() const { return values_; }
    double weight() const { return weight_; }

    double norm_p(const Eigen::VectorXd& alpha, double p) const;

  private:
    std::vector<MultiIndex> basis_;
    Eigen::MatrixXd values_;  // grid points x n
    double weight_ = 1.0;     // uniform grid weight
};

} // namespace ventropy
