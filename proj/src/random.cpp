#include "ripcert/random.hpp"

#include <algorithm>
#include <cmath>

#include "ripcert/error.hpp"

namespace ripcert {

Graph gen_gnp_half(std::size_t n, Seed seed) {
  const CounterRng rng(seed);
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rng.bit(pair_index(i, j))) g.set_edge(i, j, true);
  return g;
}

SymMatrix gen_model_a(std::size_t k, Seed seed) {
  const CounterRng rng(seed);
  SymMatrix a(k);
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i) a.set(i, j, rng.bit(pair_index(i, j)) ? 1.0 : -1.0);
  return a;
}

SensingMatrix gen_bernoulli_sensing(std::size_t n, std::size_t cols, Seed seed) {
  const CounterRng rng(seed);
  const double v = 1.0 / std::sqrt(static_cast<double>(n));
  DenseMatrix m(n, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = rng.bit(static_cast<std::uint64_t>(c) * n + r) ? v : -v;
  return SensingMatrix(std::move(m));
}

CholeskyReduction gen_model_c(std::size_t n, double c, Seed seed) {
  return cholesky_reduce(gen_model_a(n, seed), CholeskyReductionConfig{c, std::nullopt});
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, CounterRng& rng) {
  if (k > n) throw Error(ErrorKind::InvalidInput, "subset larger than ground set");
  // Partial Fisher-Yates.
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Graph plant_dense_subgraph(Graph g, std::span<const std::size_t> subset, double target_excess, Seed seed) {
  const std::size_t k = subset.size();
  const double current = excess(g, subset);  // validates the subset
  if (current >= target_excess) return g;

  const std::size_t needed = min_edges_for_excess(k, target_excess);
  if (needed > k * (k - 1) / 2)
    throw Error(ErrorKind::InvalidInput, "target excess exceeds 1/2");

  std::vector<Edge> missing;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (!g.has_edge(subset[a], subset[b])) missing.emplace_back(subset[a], subset[b]);

  CounterRng rng(seed);
  std::size_t to_add = needed - g.induced_edge_count(subset);
  for (std::size_t i = 0; i < to_add; ++i) {
    std::swap(missing[i], missing[i + rng.below(missing.size() - i)]);
    g.set_edge(missing[i].first, missing[i].second, true);
  }
  return g;
}

}  // namespace ripcert
