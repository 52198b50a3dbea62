#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ripcert/graphs.hpp"
#include "ripcert/rng.hpp"
#include "ripcert/sensing.hpp"

namespace ripcert {

struct CholeskyReductionConfig {
  double c = 0.3;                 ///< B = Id + c·A/√n.
  std::optional<double> psd_tol;  ///< Defaults to 1e-10 · max|B|.
};

/// Output of the Cholesky reduction. On PSD failure `matrix` is the n × n
/// zero matrix and `psd` is false.
struct CholeskyReduction {
  SensingMatrix matrix;
  bool psd = true;
  double psd_tol = 0.0;
};

/// Id + c·A/√n for a symmetric A of dimension n.
SymMatrix reduction_target(const SymMatrix& signed_matrix, double c);

/// C with CᵀC = Id + c·A/√n (A = signed adjacency of g), or zero.
CholeskyReduction cholesky_reduce(const Graph& g, const CholeskyReductionConfig& cfg);
CholeskyReduction cholesky_reduce(const SymMatrix& signed_matrix, const CholeskyReductionConfig& cfg);

struct ViolationWitness {
  SparseVector x;             ///< Uniform unit vector on the subset.
  double excess = 0.0;
  double lower_bound = 0.0;   ///< ‖C(G)x‖² ≥ 1 + lower_bound = 1 + 2cε(k−1)/√n.
};

/// Throws NotAViolation when the subset's excess is negative.
ViolationWitness violation_witness(const Graph& g, std::span<const std::size_t> subset,
                                   const CholeskyReductionConfig& cfg);

struct BlockMatrix {
  std::vector<SensingMatrix> blocks;
  SensingMatrix assembled;
  std::vector<std::size_t> row_offsets;  ///< Start row of each block.
  std::vector<std::size_t> col_offsets;  ///< Start column of each block.
};

BlockMatrix block_diag(std::span<const SensingMatrix> blocks);

/// diag(C(G), B) with B a seeded n × bn_cols ±1/√n matrix. The random B
/// stands in for a deterministic RIP construction.
BlockMatrix rectangular_embed(const Graph& g, const CholeskyReductionConfig& cfg, std::size_t bn_cols,
                              Seed seed);

enum class HardnessRegime { hyp1, hyp2 };

/// Optional inputs for hardness_params; unset fields take regime defaults.
struct HardnessOverrides {
  std::optional<double> alpha;
  std::optional<double> beta;     ///< hyp1 only.
  std::optional<double> cexc;     ///< hyp2 only; defaults to kappa / alpha.
  std::optional<double> c;
  std::optional<double> c_prime;
  std::optional<double> gap;      ///< hyp1 distinguishing gap λ > 1.
  std::optional<double> kappa;    ///< hyp2 only.
  std::optional<double> delta0;   ///< hyp2 only; target acceptance parameter.
};

struct HardnessParams {
  HardnessRegime regime = HardnessRegime::hyp1;
  std::size_t n = 0;
  std::size_t k = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  double c = 0.0;
  double c_prime = 0.0;
  double alpha = 0.0;
  double beta = 0.0;   ///< hyp1
  double cexc = 0.0;   ///< hyp2
  double gap = 0.0;    ///< hyp1
  double kappa = 0.0;  ///< hyp2
  double delta0 = 0.0; ///< hyp2
  /// 2cε(k−1)/√n: RIP parameter forced by a k-subgraph with excess ε.
  double violation_bound = 0.0;
  std::vector<std::string> notes;
};

/// Validated parameter bundle; throws InfeasibleParameters naming the first
/// violated inequality.
HardnessParams hardness_params(HardnessRegime regime, std::size_t n, const HardnessOverrides& overrides = {});

}  // namespace ripcert
