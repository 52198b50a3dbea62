#include "ripcert/reduction.hpp"

#include <cmath>
#include <sstream>

#include "ripcert/error.hpp"
#include "ripcert/random.hpp"

namespace ripcert {

SymMatrix reduction_target(const SymMatrix& signed_matrix, double c) {
  SymMatrix b = signed_matrix;
  b *= c / std::sqrt(static_cast<double>(b.dim()));
  b += SymMatrix::identity(b.dim());
  return b;
}

CholeskyReduction cholesky_reduce(const SymMatrix& signed_matrix, const CholeskyReductionConfig& cfg) {
  if (!(cfg.c >= 0.0) || !std::isfinite(cfg.c)) throw Error(ErrorKind::InvalidInput, "c must be >= 0");
  const SymMatrix b = reduction_target(signed_matrix, cfg.c);
  const double tol = cfg.psd_tol.value_or(default_psd_tol(b));
  auto factor = cholesky(b, tol);
  if (!factor) {
    return CholeskyReduction{SensingMatrix(DenseMatrix(b.dim(), b.dim())), false, tol};
  }
  return CholeskyReduction{SensingMatrix(std::move(*factor)), true, tol};
}

CholeskyReduction cholesky_reduce(const Graph& g, const CholeskyReductionConfig& cfg) {
  return cholesky_reduce(signed_adjacency(g), cfg);
}

ViolationWitness violation_witness(const Graph& g, std::span<const std::size_t> subset,
                                   const CholeskyReductionConfig& cfg) {
  const double eps = excess(g, subset);
  if (eps < 0.0) throw Error(ErrorKind::NotAViolation, "subset has negative excess");
  const double k = static_cast<double>(subset.size());
  const double n = static_cast<double>(g.vertex_count());

  ViolationWitness w;
  w.excess = eps;
  w.lower_bound = 2.0 * cfg.c * eps * (k - 1.0) / std::sqrt(n);
  const double v = 1.0 / std::sqrt(k);
  for (std::size_t i : subset) w.x.push_back(SparseEntry{i, v});
  return w;
}

BlockMatrix block_diag(std::span<const SensingMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "block_diag needs at least one block");
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_offsets;
  std::vector<std::size_t> col_offsets;
  for (const auto& b : blocks) {
    row_offsets.push_back(rows);
    col_offsets.push_back(cols);
    rows += b.rows();
    cols += b.cols();
  }

  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const DenseMatrix& d = blocks[i].data();
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) m(row_offsets[i] + r, col_offsets[i] + c) = d(r, c);
  }
  return BlockMatrix{std::vector<SensingMatrix>(blocks.begin(), blocks.end()), SensingMatrix(std::move(m)),
                     std::move(row_offsets), std::move(col_offsets)};
}

BlockMatrix rectangular_embed(const Graph& g, const CholeskyReductionConfig& cfg, std::size_t bn_cols,
                              Seed seed) {
  const std::size_t n = g.vertex_count();
  if (bn_cols < n) throw Error(ErrorKind::InvalidInput, "bn_cols must be >= n");
  const std::vector<SensingMatrix> blocks{cholesky_reduce(g, cfg).matrix, gen_bernoulli_sensing(n, bn_cols, seed)};
  return block_diag(blocks);
}

namespace {

[[noreturn]] void infeasible(const std::string& inequality, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(6);
  os << inequality << " violated (" << lhs << " vs " << rhs << ")";
  throw Error(ErrorKind::InfeasibleParameters, os.str());
}

void require_less(const char* inequality, double lhs, double rhs) {
  if (!(lhs < rhs)) infeasible(inequality, lhs, rhs);
}

void require_at_most(const char* inequality, double lhs, double rhs) {
  if (!(lhs <= rhs)) infeasible(inequality, lhs, rhs);
}

void fill_common(HardnessParams& p) {
  const double n = static_cast<double>(p.n);
  p.violation_bound = 2.0 * p.c * p.epsilon * (static_cast<double>(p.k) - 1.0) / std::sqrt(n);
  if (p.k < 2) p.notes.push_back("k < 2 at this n: instance is degenerate");
  if (p.k > p.n) p.notes.push_back("k > n at this n");
  if (p.epsilon > 0.5) p.notes.push_back("epsilon > 1/2 at this n: no graph has such a subgraph");
}

HardnessParams hyp1_params(std::size_t n, const HardnessOverrides& o) {
  HardnessParams p;
  p.regime = HardnessRegime::hyp1;
  p.n = n;
  p.alpha = o.alpha.value_or(0.75);
  p.beta = o.beta.value_or(1.0 / 3.0);
  p.c = o.c.value_or(0.3);
  p.gap = o.gap.value_or(2.0);

  require_less("0 < beta", 0.0, p.beta);
  require_less("beta < 1/2", p.beta, 0.5);
  require_less("2*beta < alpha", 2.0 * p.beta, p.alpha);
  require_less("alpha < beta + 1/2", p.alpha, p.beta + 0.5);
  require_less("0 < c", 0.0, p.c);
  require_less("3c < 1", 3.0 * p.c, 1.0);
  require_less("1 < gap", 1.0, p.gap);

  p.c_prime = o.c_prime.value_or(0.9 * 2.0 * p.c / p.gap);
  require_less("0 < c'", 0.0, p.c_prime);
  require_less("gap*c' < 2c", p.gap * p.c_prime, 2.0 * p.c);

  const double nd = static_cast<double>(n);
  p.k = static_cast<std::size_t>(std::llround(std::pow(nd, p.alpha)));
  p.epsilon = std::pow(nd, -p.beta);
  p.delta = p.c_prime * p.epsilon * static_cast<double>(p.k) / std::sqrt(nd);
  fill_common(p);
  return p;
}

HardnessParams hyp2_params(std::size_t n, const HardnessOverrides& o) {
  HardnessParams p;
  p.regime = HardnessRegime::hyp2;
  p.n = n;
  p.kappa = o.kappa.value_or(0.7);
  p.alpha = o.alpha.value_or(0.001);
  p.c = o.c.value_or(0.3);
  p.delta0 = o.delta0.value_or(0.3);

  require_less("0 < kappa", 0.0, p.kappa);
  require_less("kappa < 1", p.kappa, 1.0);
  require_less("0 < alpha", 0.0, p.alpha);
  require_less("alpha < 1", p.alpha, 1.0);
  require_at_most("alpha <= kappa", p.alpha, p.kappa);
  p.cexc = o.cexc.value_or(p.kappa / p.alpha);
  require_less("0 < C", 0.0, p.cexc);
  require_at_most("alpha*C <= kappa", p.alpha * p.cexc, p.kappa);
  require_less("0 < c", 0.0, p.c);
  require_less("3c < 1", 3.0 * p.c, 1.0);
  require_less("0 < delta0", 0.0, p.delta0);

  p.c_prime = o.c_prime.value_or(0.9 * p.delta0 / (p.alpha * p.cexc));
  require_less("0 < c'", 0.0, p.c_prime);
  const double drive = p.c_prime * p.cexc * std::sqrt(p.alpha);
  require_less("3c < c'*C*sqrt(alpha)", 3.0 * p.c, drive);
  const double rhs = (drive / p.c - 3.0) * (drive / p.c - 3.0) / 32.0;
  require_less("ln(e/alpha) < (c'*C*sqrt(alpha)/c - 3)^2/32", std::log(std::exp(1.0) / p.alpha), rhs);

  p.delta = p.c_prime * p.alpha * p.cexc;
  require_less("delta = c'*alpha*C < delta0", p.delta, p.delta0);

  const double nd = static_cast<double>(n);
  p.k = static_cast<std::size_t>(std::llround(p.alpha * nd));
  p.epsilon = p.cexc / std::sqrt(nd);
  fill_common(p);
  if (!(2.0 * p.c * p.alpha * p.cexc > p.kappa / 2.0))
    p.notes.push_back("2c*alpha*C <= kappa/2: planted instances do not reach the kappa/2 gap");
  return p;
}

}  // namespace

HardnessParams hardness_params(HardnessRegime regime, std::size_t n, const HardnessOverrides& overrides) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be >= 2");
  return regime == HardnessRegime::hyp1 ? hyp1_params(n, overrides) : hyp2_params(n, overrides);
}

}  // namespace ripcert
