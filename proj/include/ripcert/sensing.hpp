#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ripcert/combinatorics.hpp"
#include "ripcert/linalg.hpp"

namespace ripcert {

inline constexpr double kUnitColumnTol = 1e-9;

/// An n × N real sensing matrix. RIP for real Φ over complex vectors reduces
/// to the real case: the extremal Rayleigh quotient of the real symmetric
/// matrix Φ_TᵀΦ_T − Id is attained at a real eigenvector.
class SensingMatrix {
 public:
  explicit SensingMatrix(DenseMatrix data);

  std::size_t rows() const noexcept { return data_.rows(); }
  std::size_t cols() const noexcept { return data_.cols(); }
  const DenseMatrix& data() const noexcept { return data_; }

  /// Every column has Euclidean norm within kUnitColumnTol of 1.
  bool unit_columns() const noexcept { return unit_columns_; }

  /// Copy with each nonzero column scaled to unit norm.
  SensingMatrix normalized() const;

 private:
  DenseMatrix data_;
  bool unit_columns_ = false;
};

enum class RipMethod { exact, coherence, extrapolated, lazy };

/// Sound claim δ_k ≤ delta for every k in [k_min, k_max]. An empty range
/// (k_max = k_min − 1) means nothing was certified.
struct RipCertificate {
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  double delta = 0.0;
  RipMethod method = RipMethod::lazy;
  std::size_t base_order = 0;
  double base_epsilon = 0.0;

  bool certified() const noexcept { return k_max >= k_min; }
};

/// Spectral radius of Φ_TᵀΦ_T − Id_k.
double delta_subset(const SensingMatrix& phi, std::span<const std::size_t> subset);

/// Exact δ_k: max of delta_subset over all k-subsets of columns.
double rip_delta_exact(const SensingMatrix& phi, std::size_t k, const EnumerationOptions& opts = {});

/// Like rip_delta_exact but also returns a maximizing subset (colex-smallest).
struct RipExtremum {
  double delta = 0.0;
  std::vector<std::size_t> subset;
};
RipExtremum rip_delta_exact_argmax(const SensingMatrix& phi, std::size_t k,
                                   const EnumerationOptions& opts = {});

/// max_{i<j} |⟨u_i, u_j⟩|; requires unit columns.
double coherence(const SensingMatrix& phi);

/// ε(k−1)/(m−1): the order-k parameter implied by an order-m parameter ε.
double extrapolate_order(std::size_t m, double epsilon, std::size_t k);

/// Certificate for every k in [m, cap] with eps·(k−1)/(m−1) ≤ delta, given
/// δ_m ≤ eps. `delta` of the result is eps·(k_max−1)/(m−1), or the requested
/// delta when nothing is certified.
RipCertificate extrapolated_certificate(RipMethod method, std::size_t m, double eps, double delta,
                                        std::size_t cap);

/// Coherence-based certificate: δ_k ≤ (k−1)μ for k in [2, k_max].
RipCertificate coherence_certify(const SensingMatrix& phi, double delta);

/// Lazy certification: compute ε = δ_m exactly and certify every k ≥ m with
/// ε(k−1)/(m−1) ≤ delta, capped at the row count.
RipCertificate lazy_certify(const SensingMatrix& phi, std::size_t m, double delta,
                            const EnumerationOptions& opts = {});

/// Order suggested for quasi-polynomial lazy certification, ⌈(log₂ N)³⌉, at least 2.
std::size_t quasi_polynomial_order(std::size_t cols) noexcept;

struct SparseEntry {
  std::size_t index = 0;
  double value = 0.0;
};
using SparseVector = std::vector<SparseEntry>;

/// ‖Φx‖² / ‖x‖².
double rip_ratio(const SensingMatrix& phi, const SparseVector& x);

/// True iff |‖Φx‖²/‖x‖² − 1| > delta, i.e. x shows δ_s > delta for s = |supp x|.
bool check_rip_witness(const SensingMatrix& phi, const SparseVector& x, double delta);

}  // namespace ripcert
