#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ripcert/rng.hpp"

namespace ripcert {

/// One empirical-vs-theoretical comparison. Unasserted checks are reported
/// but never fail a run.
struct BoundCheck {
  std::string name;
  double theoretical = 0.0;
  double empirical = 0.0;
  bool pass = true;
  bool asserted = true;
  std::string margin;  ///< How `pass` was decided.
};

struct ExperimentReport {
  std::string experiment;
  nlohmann::json params = nlohmann::json::object();
  Seed seed;
  std::size_t samples = 0;
  nlohmann::json per_sample = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();
  std::vector<BoundCheck> bounds;
  std::vector<std::string> flags;
  double runtime_s = 0.0;

  /// True when every asserted check passes.
  bool all_pass() const noexcept;

  /// Everything except runtime: identical for identical (id, params, seed).
  nlohmann::json stats_json() const;
  nlohmann::json to_json() const;
  /// One row per sample; columns are the per-sample keys.
  std::string to_csv() const;
};

struct ExperimentOptions {
  unsigned workers = 0;  ///< 0 selects hardware concurrency.
};

/// Binomial standard error √(p(1−p)/samples).
double binomial_sigma(double p, std::size_t samples) noexcept;

/// Median λ₁ of Model A matrices against the 2√n and 3√n thresholds.
ExperimentReport exp_fk_median(std::size_t n, std::size_t samples, Seed seed, const ExperimentOptions& opts = {});

/// Frequency of max|λ_i(A)| ≥ 3√n + t against 4·exp(−t²/32).
ExperimentReport exp_model_a_tail(std::size_t n, const std::vector<double>& t_grid, std::size_t samples,
                                  Seed seed, const ExperimentOptions& opts = {});

struct SkewNormParams {
  std::size_t n = 500;
  double a = 1.0;
  std::vector<double> eps_grid{2.0, 4.0, 6.0};
  std::size_t samples = 50;
  double finite_n_slack = 0.05;  ///< Allowed excess of mean ‖Â‖/√n over √(a²+5/4).
};

/// ‖Â‖/√n over G(n,1/2): mean against √(a²+5/4) and a+1, tails against exp(−ε²/8).
ExperimentReport exp_skew_norm(const SkewNormParams& p, Seed seed, const ExperimentOptions& opts = {});

/// Fractions of G(n,1/2) graphs certified by each algorithm at k = ⌊αn⌋, ε = C/√n.
ExperimentReport exp_certifier_duel(std::size_t n, double alpha, double cexc, double a, std::size_t samples,
                                    Seed seed, const ExperimentOptions& opts = {});

/// Frequency of a k-subgraph with excess ≥ ε against exp[k ln(ne/k) − ε²k(k−1)].
ExperimentReport exp_hoeffding_subgraph(std::size_t n, std::size_t k, const std::vector<double>& eps_grid,
                                        std::size_t samples, Seed seed, const ExperimentOptions& opts = {},
                                        std::uint64_t budget = 10'000'000);

struct LazySweepParams {
  std::size_t n = 64;
  std::size_t cols = 96;
  std::vector<std::size_t> m_grid{2, 3};
  std::vector<double> delta_grid{0.5};
  std::size_t samples = 20;
  std::uint64_t budget = 10'000'000;            ///< For computing δ_m.
  std::uint64_t validation_budget = 2'000'000;  ///< Exhaustive soundness check up to this many subsets.
  std::size_t validation_samples = 2000;        ///< Random subsets per k beyond the budget.
};

/// Lazy certification of Bernoulli matrices with soundness cross-validation.
ExperimentReport exp_lazy_sweep(const LazySweepParams& p, Seed seed, const ExperimentOptions& opts = {});

}  // namespace ripcert
