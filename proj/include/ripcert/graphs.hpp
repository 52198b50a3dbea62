#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ripcert/combinatorics.hpp"
#include "ripcert/linalg.hpp"

namespace ripcert {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on vertices {0, …, n-1}.
class Graph {
 public:
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(std::size_t u, std::size_t v) const noexcept { return adj_[u * n_ + v] != 0; }

  /// Throws InvalidInput on loops, out-of-range endpoints, or a repeated edge.
  void add_edge(std::size_t u, std::size_t v);
  /// Idempotent insert/remove; endpoints must be valid and distinct.
  void set_edge(std::size_t u, std::size_t v, bool present);

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Number of edges with both endpoints in `vertices`.
  std::size_t induced_edge_count(std::span<const std::size_t> vertices) const;

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const;

  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Zero diagonal, +1 on edges, -1 on non-edges.
SymMatrix signed_adjacency(const Graph& g);

/// A/2 + (a/√n)·J with J the all-ones matrix (diagonal included).
SymMatrix skewed_adjacency(const Graph& g, double a);

/// Edge density of the induced subgraph minus 1/2. Throws InvalidInput for
/// fewer than two vertices, repeated or out-of-range vertices.
double excess(const Graph& g, std::span<const std::size_t> vertices);

/// Smallest edge count a k-vertex subgraph needs to have excess at least eps.
std::size_t min_edges_for_excess(std::size_t k, double eps);

struct DensestSubgraph {
  std::vector<std::size_t> vertices;
  std::size_t edges = 0;
  double excess = 0.0;
};

/// Brute-force maximum-excess k-subset; ties go to the colex-smallest subset.
DensestSubgraph densest_k_oracle(const Graph& g, std::size_t k, const EnumerationOptions& opts = {});

enum class CertifierMethod { spectral, skewed };

/// A certified region in (k, ε) space: G has no k-subgraph with excess ≥ ε
/// for every (k, ε) where `certifies` is true.
struct SubgraphCertificate {
  CertifierMethod method = CertifierMethod::spectral;
  double lambda1 = 0.0;  ///< Upper bound on λ₁ used in the region predicate.
  double skew_a = 0.0;
  std::size_t n = 0;

  bool certifies(std::size_t k, double eps) const noexcept;
};

/// Region 2ε(k−1) > λ₁(A).
SubgraphCertificate spectral_certify(const Graph& g);

/// Region ε(k−1) + k·a/√n > λ₁(Â).
SubgraphCertificate skewed_certify(const Graph& g, double a);

/// True when either certificate covers (k, ε).
bool certifies_any(std::span<const SubgraphCertificate> certs, std::size_t k, double eps) noexcept;

struct SkewChoice {
  double a = 0.0;
  double objective = 0.0;  ///< f(a) = a² + 5/4 − (α·C + α·a)², negative when feasible.
};

/// Skew weight minimizing f(a) = a² + 5/4 − (α·cexc + α·a)², when the
/// minimum is negative (4α²C² + 5α² > 5); nullopt otherwise.
std::optional<SkewChoice> skew_feasible(double alpha, double cexc);

/// x with x_i = 1/√k on `vertices`, zero elsewhere.
std::vector<double> uniform_witness(std::size_t n, std::span<const std::size_t> vertices);

/// xᵀ m x for dense x.
double quadratic_form(const SymMatrix& m, std::span<const double> x);

}  // namespace ripcert
