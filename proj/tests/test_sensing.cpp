#include <cmath>

#include <gtest/gtest.h>

#include "ripcert/error.hpp"
#include "ripcert/random.hpp"
#include "ripcert/sensing.hpp"

using namespace ripcert;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

SensingMatrix three_col() { return SensingMatrix(DenseMatrix::from_rows({{1, 0, kR}, {0, 1, kR}})); }

SensingMatrix duplicated() { return SensingMatrix(DenseMatrix::from_rows({{1, 1, 0}, {0, 0, 1}})); }

SensingMatrix random_unit(std::size_t n, std::size_t cols, std::uint64_t seed) {
  CounterRng rng(Seed{seed, 11});
  DenseMatrix m(n, cols);
  for (double& v : m.entries()) v = 2.0 * rng.uniform01() - 1.0;
  return SensingMatrix(m).normalized();
}

}  // namespace

TEST(DeltaSubset, Examples) {
  const SensingMatrix id(DenseMatrix::identity(3));
  const std::vector<std::size_t> t01{0, 1}, t02{0, 2}, t20{2, 0};
  EXPECT_NEAR(delta_subset(id, t01), 0.0, 1e-15);
  EXPECT_NEAR(delta_subset(three_col(), t02), kR, 1e-14);
  EXPECT_NEAR(delta_subset(three_col(), t20), kR, 1e-14);
  EXPECT_NEAR(delta_subset(duplicated(), t01), 1.0, 1e-14);
}

TEST(DeltaSubset, Errors) {
  const std::vector<std::size_t> big{0, 1, 2};
  const std::vector<std::size_t> oob{0, 5};
  const std::vector<std::size_t> dup{1, 1};
  try {
    delta_subset(three_col(), big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderTooLarge);
  }
  try {
    delta_subset(three_col(), oob);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
  EXPECT_THROW(delta_subset(three_col(), dup), Error);
}

TEST(RipDeltaExact, Examples) {
  const SensingMatrix id(DenseMatrix::identity(5));
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_NEAR(rip_delta_exact(id, k), 0.0, 1e-15);
  EXPECT_NEAR(rip_delta_exact(three_col(), 2), kR, 1e-14);
  const auto ext = rip_delta_exact_argmax(three_col(), 2);
  EXPECT_EQ(ext.subset, (std::vector<std::size_t>{0, 2}));

  // k = n = N: a single subset.
  const SensingMatrix sq(DenseMatrix::from_rows({{1, 0.5}, {0, 1}}));
  const SymMatrix g = gram(sq.data());
  SymMatrix shifted = g;
  shifted += [] { SymMatrix m = SymMatrix::identity(2); m *= -1.0; return m; }();
  EXPECT_NEAR(rip_delta_exact(sq, 2), spectral_radius(shifted), 1e-14);
}

TEST(RipDeltaExact, MonotoneInOrderAndWorkerIndependent) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto phi = random_unit(6, 10, s);
    double prev = 0.0;
    for (std::size_t k = 1; k <= 5; ++k) {
      const double d = rip_delta_exact(phi, k);
      EXPECT_GE(d + 1e-12, prev);
      prev = d;
      EXPECT_EQ(d, rip_delta_exact(phi, k, EnumerationOptions{kDefaultSubsetBudget, 4}));
    }
  }
}

TEST(RipDeltaExact, BudgetAndOrderErrors) {
  const auto phi = random_unit(8, 12, 1);
  EXPECT_THROW(rip_delta_exact(phi, 9), Error);
  EXPECT_THROW(rip_delta_exact(phi, 0), Error);
  try {
    rip_delta_exact(phi, 6, EnumerationOptions{100, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Coherence, Examples) {
  EXPECT_NEAR(coherence(SensingMatrix(DenseMatrix::identity(3))), 0.0, 1e-15);
  EXPECT_NEAR(coherence(three_col()), kR, 1e-14);
  EXPECT_NEAR(coherence(duplicated()), 1.0, 1e-14);
  try {
    coherence(SensingMatrix(DenseMatrix::from_rows({{2, 0}, {0, 1}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
}

TEST(Coherence, EqualsDeltaTwo) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto phi = random_unit(5, 9, 50 + s);
    EXPECT_NEAR(coherence(phi), rip_delta_exact(phi, 2), 1e-10);
  }
}

TEST(Extrapolate, Examples) {
  EXPECT_NEAR(extrapolate_order(2, 0.2, 6), 1.0, 1e-15);
  EXPECT_NEAR(extrapolate_order(4, 0.37, 4), 0.37, 1e-15);
  EXPECT_NEAR(extrapolate_order(3, 0.1, 5), 0.2, 1e-15);
  EXPECT_THROW(extrapolate_order(1, 0.1, 5), Error);
  EXPECT_THROW(extrapolate_order(4, 0.1, 3), Error);
}

TEST(Extrapolate, SoundOnRandomMatrices) {
  std::size_t violations = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto phi = random_unit(8, 12, 1000 + s);
    std::vector<double> d(6);
    for (std::size_t k = 2; k <= 5; ++k) d[k] = rip_delta_exact(phi, k);
    for (std::size_t m = 2; m <= 5; ++m)
      for (std::size_t k = m; k <= 5; ++k) violations += d[k] > extrapolate_order(m, d[m], k) + 1e-9;
  }
  EXPECT_EQ(violations, 0u);
}

TEST(LazyCertify, Examples) {
  const SensingMatrix id(DenseMatrix::identity(6));
  const auto c = lazy_certify(id, 2, 0.1);
  EXPECT_EQ(c.k_min, 2u);
  EXPECT_EQ(c.k_max, 6u);
  EXPECT_TRUE(c.certified());

  // Two unit columns at inner product 0.1, padded with orthogonal ones: δ₂ = 0.1.
  DenseMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 1.0;
  m(0, 1) = 0.1;
  m(1, 1) = std::sqrt(1.0 - 0.01);
  const SensingMatrix phi(m);
  ASSERT_NEAR(rip_delta_exact(phi, 2), 0.1, 1e-14);
  const auto cert = lazy_certify(phi, 2, 0.3);
  EXPECT_EQ(cert.k_max, 4u);
  EXPECT_EQ(cert.method, RipMethod::lazy);
  EXPECT_NEAR(cert.delta, 0.3, 1e-12);
}

TEST(LazyCertify, BernoulliMatrixSound) {
  const auto phi = gen_bernoulli_sensing(64, 128, Seed{5, 0});
  const double mu = coherence(phi);
  const auto cert = lazy_certify(phi, 2, 0.5);
  EXPECT_EQ(cert.k_max, static_cast<std::size_t>(std::floor(1.0 + 0.5 / mu)));
  for (std::size_t k = 2; k <= std::min<std::size_t>(cert.k_max, 3); ++k)
    EXPECT_LE(rip_delta_exact(phi, k), 0.5 + 1e-12);
}

TEST(LazyCertify, Errors) {
  const auto phi = random_unit(4, 6, 3);
  EXPECT_THROW(lazy_certify(phi, 1, 0.5), Error);
  EXPECT_THROW(lazy_certify(phi, 5, 0.5), Error);
  EXPECT_THROW(lazy_certify(phi, 2, 1.5), Error);
  EXPECT_THROW(lazy_certify(SensingMatrix(DenseMatrix::from_rows({{2, 0}, {0, 1}})), 2, 0.5), Error);
}

TEST(CoherenceCertify, MatchesLazyAtOrderTwo) {
  const auto phi = random_unit(6, 10, 8);
  const auto a = coherence_certify(phi, 0.9);
  const auto b = lazy_certify(phi, 2, 0.9);
  EXPECT_EQ(a.k_max, b.k_max);
  EXPECT_EQ(a.method, RipMethod::coherence);
}

TEST(Witness, Examples) {
  const SensingMatrix id(DenseMatrix::identity(3));
  EXPECT_FALSE(check_rip_witness(id, {{0, 1.0}, {2, -3.0}}, 0.1));
  EXPECT_NEAR(rip_ratio(duplicated(), {{0, 1.0}, {1, 1.0}}), 2.0, 1e-14);
  EXPECT_TRUE(check_rip_witness(duplicated(), {{0, 1.0}, {1, 1.0}}, 0.5));
  EXPECT_NEAR(rip_ratio(three_col(), {{0, 1.0}, {2, 1.0}}), 1.0 + kR, 1e-14);
  EXPECT_TRUE(check_rip_witness(three_col(), {{0, 1.0}, {2, 1.0}}, 0.5));
  EXPECT_THROW(rip_ratio(id, {{0, 0.0}}), Error);
}

TEST(Witness, NeverExceedsExactDelta) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto phi = random_unit(6, 9, 300 + s);
    const double d = rip_delta_exact(phi, 3);
    CounterRng rng(Seed{s, 1});
    for (int t = 0; t < 500; ++t) {
      const auto support = random_subset(9, 3, rng);
      SparseVector x;
      for (std::size_t j : support) x.push_back({j, 2.0 * rng.uniform01() - 1.0});
      EXPECT_FALSE(check_rip_witness(phi, x, d + 1e-9));
    }
  }
}

TEST(QuasiPolynomialOrder, Values) {
  EXPECT_EQ(quasi_polynomial_order(2), 2u);
  EXPECT_EQ(quasi_polynomial_order(4), 8u);
  EXPECT_EQ(quasi_polynomial_order(16), 64u);
}
