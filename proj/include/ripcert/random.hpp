#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ripcert/graphs.hpp"
#include "ripcert/linalg.hpp"
#include "ripcert/reduction.hpp"
#include "ripcert/rng.hpp"
#include "ripcert/sensing.hpp"

namespace ripcert {

/// Stream bit consumed by the unordered pair {i, j}, i < j.
constexpr std::uint64_t pair_index(std::size_t i, std::size_t j) noexcept {
  return static_cast<std::uint64_t>(j) * (j - 1) / 2 + i;
}

/// G(n, 1/2): edge {i, j} present iff its pair bit is set.
Graph gen_gnp_half(std::size_t n, Seed seed);

/// Symmetric ±1 matrix with zero diagonal; +1 exactly where gen_gnp_half
/// with the same seed has an edge.
SymMatrix gen_model_a(std::size_t k, Seed seed);

/// n × N matrix with iid ±1/√n entries.
SensingMatrix gen_bernoulli_sensing(std::size_t n, std::size_t cols, Seed seed);

/// Cholesky reduction of a Model A draw: CᵀC = Id + c·A/√n, or zero.
CholeskyReduction gen_model_c(std::size_t n, double c, Seed seed);

/// Uniformly random k-subset of {0..n-1}, sorted.
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, CounterRng& rng);

/// Adds the fewest edges inside `subset`, chosen uniformly among its
/// non-edges, so that the subset reaches excess ≥ target.
Graph plant_dense_subgraph(Graph g, std::span<const std::size_t> subset, double target_excess, Seed seed);

}  // namespace ripcert
