#include "ripcert/combinatorics.hpp"

#include <limits>
#include <string>

#include "ripcert/error.hpp"

namespace ripcert {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t colex_rank(std::span<const std::size_t> subset) noexcept {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) rank += binomial(subset[i], i + 1);
  return rank;
}

std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t k) {
  std::vector<std::size_t> subset(k);
  for (std::size_t i = k; i-- > 0;) {
    // Largest c with C(c, i+1) <= rank.
    std::size_t c = i;
    while (binomial(c + 1, i + 1) <= rank) ++c;
    subset[i] = c;
    rank -= binomial(c, i + 1);
  }
  return subset;
}

bool next_colex(std::span<std::size_t> subset, std::size_t n) noexcept {
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t limit = i + 1 < k ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = j;
      return true;
    }
  }
  return false;
}

void require_within_budget(std::size_t n, std::size_t k, std::uint64_t budget) {
  const std::uint64_t total = binomial(n, k);
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                               ") = " + std::to_string(total) +
                                               " subsets exceeds budget " + std::to_string(budget));
  }
}

}  // namespace ripcert
