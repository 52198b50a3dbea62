#include "ripcert/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ripcert/error.hpp"

namespace ripcert {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "graph needs at least one vertex");
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_)
    throw Error(ErrorKind::InvalidInput,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_pair(u, v);
  if (has_edge(u, v))
    throw Error(ErrorKind::InvalidInput,
                "repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  set_edge(u, v, true);
}

void Graph::set_edge(std::size_t u, std::size_t v, bool present) {
  check_pair(u, v);
  if (has_edge(u, v) == present) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = present ? 1 : 0;
  if (present)
    ++edge_count_;
  else
    --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::induced_edge_count(std::span<const std::size_t> vertices) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) count += has_edge(vertices[i], vertices[j]);
  return count;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.set_edge(u, v, true);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.set_edge(n - 1, 0, true);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.set_edge(u, u + 1, true);
  return g;
}

SymMatrix signed_adjacency(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, g.has_edge(i, j) ? 1.0 : -1.0);
  return a;
}

SymMatrix skewed_adjacency(const Graph& g, double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw Error(ErrorKind::InvalidInput, "skew a must be >= 0");
  const std::size_t n = g.vertex_count();
  const double shift = a / std::sqrt(static_cast<double>(n));
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, shift);
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, (g.has_edge(i, j) ? 0.5 : -0.5) + shift);
  }
  return m;
}

namespace {

void check_vertex_set(const Graph& g, std::span<const std::size_t> vertices) {
  if (vertices.size() < 2) throw Error(ErrorKind::InvalidInput, "excess needs at least two vertices");
  std::vector<std::size_t> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidInput, "vertex subset has repeated vertices");
  if (sorted.back() >= g.vertex_count()) throw Error(ErrorKind::InvalidInput, "vertex out of range");
}

double excess_of(std::size_t edges, std::size_t k) {
  const double pairs = static_cast<double>(k * (k - 1) / 2);
  return static_cast<double>(edges) / pairs - 0.5;
}

}  // namespace

double excess(const Graph& g, std::span<const std::size_t> vertices) {
  check_vertex_set(g, vertices);
  return excess_of(g.induced_edge_count(vertices), vertices.size());
}

std::size_t min_edges_for_excess(std::size_t k, double eps) {
  if (k < 2) throw Error(ErrorKind::InvalidInput, "k must be >= 2");
  const std::size_t pairs = k * (k - 1) / 2;
  // Same arithmetic as excess(), so the two never disagree at the boundary.
  const double guess = std::floor((0.5 + eps) * static_cast<double>(pairs));
  std::size_t e = guess <= 1.0 ? 0 : static_cast<std::size_t>(std::min(guess, static_cast<double>(pairs))) - 1;
  while (e <= pairs && excess_of(e, k) < eps) ++e;
  return e;
}

DensestSubgraph densest_k_oracle(const Graph& g, std::size_t k, const EnumerationOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (k < 2 || k > n) throw Error(ErrorKind::InvalidInput, "oracle needs 2 <= k <= n");

  struct Best {
    std::size_t edges = 0;
    std::uint64_t rank = 0;
    bool valid = false;
  };
  const Best best = reduce_subsets(
      n, k, opts, Best{},
      [&](Best& acc, std::span<const std::size_t> subset, std::uint64_t rank) {
        const std::size_t e = g.induced_edge_count(subset);
        if (!acc.valid || e > acc.edges) acc = Best{e, rank, true};
      },
      [](Best a, Best b) {
        if (!a.valid) return b;
        if (!b.valid) return a;
        if (b.edges > a.edges || (b.edges == a.edges && b.rank < a.rank)) return b;
        return a;
      });

  DensestSubgraph out;
  out.vertices = colex_unrank(best.rank, k);
  out.edges = best.edges;
  out.excess = excess_of(best.edges, k);
  return out;
}

bool SubgraphCertificate::certifies(std::size_t k, double eps) const noexcept {
  if (k < 2) return false;
  const double km1 = static_cast<double>(k - 1);
  if (method == CertifierMethod::spectral) return 2.0 * eps * km1 > lambda1;
  return eps * km1 + static_cast<double>(k) * skew_a / std::sqrt(static_cast<double>(n)) > lambda1;
}

namespace {

// λ₁ plus the eigensolver's error bound, so a certificate never rests on a
// rounding error in the computed eigenvalue.
double lambda1_upper(const SymMatrix& m) {
  const Spectrum s = sym_spectrum(m);
  return s.values.front() + s.error_bound;
}

}  // namespace

SubgraphCertificate spectral_certify(const Graph& g) {
  if (g.vertex_count() < 2) throw Error(ErrorKind::InvalidInput, "certifier needs n >= 2");
  return SubgraphCertificate{CertifierMethod::spectral, lambda1_upper(signed_adjacency(g)), 0.0,
                             g.vertex_count()};
}

SubgraphCertificate skewed_certify(const Graph& g, double a) {
  if (g.vertex_count() < 2) throw Error(ErrorKind::InvalidInput, "certifier needs n >= 2");
  return SubgraphCertificate{CertifierMethod::skewed, lambda1_upper(skewed_adjacency(g, a)), a,
                             g.vertex_count()};
}

bool certifies_any(std::span<const SubgraphCertificate> certs, std::size_t k, double eps) noexcept {
  return std::any_of(certs.begin(), certs.end(), [&](const auto& c) { return c.certifies(k, eps); });
}

std::optional<SkewChoice> skew_feasible(double alpha, double cexc) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidInput, "alpha must lie in ]0,1[");
  if (!(cexc > 0.0) || !std::isfinite(cexc)) throw Error(ErrorKind::InvalidInput, "cexc must be > 0");

  const double a2 = alpha * alpha;
  const double discriminant = 4.0 * a2 * cexc * cexc + 5.0 * a2 - 5.0;
  if (!(discriminant > 0.0)) return std::nullopt;

  const double a = a2 * cexc / (1.0 - a2);
  const double lhs = alpha * cexc + alpha * a;
  return SkewChoice{a, a * a + 1.25 - lhs * lhs};
}

std::vector<double> uniform_witness(std::size_t n, std::span<const std::size_t> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidInput, "witness support is empty");
  std::vector<double> x(n, 0.0);
  const double v = 1.0 / std::sqrt(static_cast<double>(vertices.size()));
  for (std::size_t i : vertices) {
    if (i >= n) throw Error(ErrorKind::InvalidInput, "vertex out of range");
    x[i] = v;
  }
  return x;
}

double quadratic_form(const SymMatrix& m, std::span<const double> x) {
  if (x.size() != m.dim()) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) row += m(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

}  // namespace ripcert
