#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ripcert/parallel.hpp"

namespace ripcert {

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultSubsetBudget;
  unsigned workers = 1;  ///< 0 selects hardware concurrency.
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Colex rank of a strictly increasing subset: Σ C(s_i, i+1).
std::uint64_t colex_rank(std::span<const std::size_t> subset) noexcept;

/// Inverse of colex_rank for k-subsets.
std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t k);

/// Advances `subset` (a k-subset of {0..n-1}) to its colex successor.
/// Returns false, leaving `subset` unspecified, after the last subset.
bool next_colex(std::span<std::size_t> subset, std::size_t n) noexcept;

/// Throws BudgetExceeded when C(n, k) is over budget.
void require_within_budget(std::size_t n, std::size_t k, std::uint64_t budget);

/// Visits every k-subset of {0..n-1}. Ranks are split into contiguous
/// chunks, one accumulator per chunk; `visit(acc, subset, rank)` folds a
/// subset into a chunk accumulator and `combine(a, b)` merges chunk results
/// in rank order. The result is independent of the worker count as long as
/// `combine` is associative.
template <typename T, typename Visit, typename Combine>
T reduce_subsets(std::size_t n, std::size_t k, const EnumerationOptions& opts, T init,
                 Visit visit, Combine combine) {
  require_within_budget(n, k, opts.budget);
  const std::uint64_t total = binomial(n, k);
  if (total == 0) return init;

  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<T> partial(chunks, init);
  parallel_for(chunks, opts.workers, [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    std::vector<std::size_t> subset = colex_unrank(begin, k);
    T acc = init;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      visit(acc, std::span<const std::size_t>(subset), rank);
      if (rank + 1 < end) next_colex(subset, n);
    }
    partial[chunk] = std::move(acc);
  });

  T result = init;
  for (auto& p : partial) result = combine(std::move(result), std::move(p));
  return result;
}

}  // namespace ripcert
