#include <cmath>

#include <gtest/gtest.h>

#include "ripcert/error.hpp"
#include "ripcert/random.hpp"
#include "ripcert/reduction.hpp"

using namespace ripcert;

namespace {

HardnessParams expect_infeasible(HardnessRegime r, std::size_t n, const HardnessOverrides& o) {
  try {
    hardness_params(r, n, o);
    ADD_FAILURE() << "expected InfeasibleParameters";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleParameters) << e.what();
  }
  return {};
}

}  // namespace

TEST(CholeskyReduce, SingleEdgeByHand) {
  const double c = 0.4;
  const auto red = cholesky_reduce(Graph::path(2), CholeskyReductionConfig{c, std::nullopt});
  ASSERT_TRUE(red.psd);
  const DenseMatrix& m = red.matrix.data();
  EXPECT_NEAR(m(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(m(0, 1), c / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(m(1, 0), 0.0);
  EXPECT_NEAR(m(1, 1), std::sqrt(1.0 - c * c / 2.0), 1e-15);
}

TEST(CholeskyReduce, ZeroWeightIsIdentity) {
  const auto red = cholesky_reduce(gen_gnp_half(12, Seed{3, 0}), CholeskyReductionConfig{0.0, std::nullopt});
  EXPECT_EQ(red.matrix.data(), DenseMatrix::identity(12));
}

TEST(CholeskyReduce, NotPsdGivesZero) {
  const auto red = cholesky_reduce(Graph::path(2), CholeskyReductionConfig{2.0, std::nullopt});
  EXPECT_FALSE(red.psd);
  EXPECT_EQ(red.matrix.data(), DenseMatrix(2, 2));
  EXPECT_THROW(cholesky_reduce(Graph(3), CholeskyReductionConfig{-1.0, std::nullopt}), Error);
}

TEST(CholeskyReduce, Reconstruction) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t n = 20 + 10 * s;
    const Graph g = gen_gnp_half(n, Seed{s, 1});
    const auto red = cholesky_reduce(g, CholeskyReductionConfig{0.3, std::nullopt});
    ASSERT_TRUE(red.psd);
    const SymMatrix back = gram(red.matrix.data());
    const SymMatrix want = reduction_target(signed_adjacency(g), 0.3);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(back(i, j) - want(i, j)));
    EXPECT_LE(worst, 10.0 * red.psd_tol * static_cast<double>(n));
  }
}

TEST(ViolationWitness, TriangleExample) {
  const std::vector<std::size_t> tri{0, 1, 2};
  const CholeskyReductionConfig cfg{0.3, std::nullopt};
  const auto w = violation_witness(Graph::complete(3), tri, cfg);
  EXPECT_NEAR(w.lower_bound, 2.0 * 0.3 * 0.5 * 2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(w.lower_bound, 0.3464, 1e-4);
  const auto red = cholesky_reduce(Graph::complete(3), cfg);
  EXPECT_NEAR(rip_ratio(red.matrix, w.x), 1.0 + w.lower_bound, 1e-12);
  EXPECT_TRUE(check_rip_witness(red.matrix, w.x, w.lower_bound - 1e-9));
}

TEST(ViolationWitness, PlantedCliqueAndErrors) {
  const std::size_t n = 60, k = 8;
  CounterRng rng(Seed{2, 2});
  const auto subset = random_subset(n, k, rng);
  const Graph g = plant_dense_subgraph(gen_gnp_half(n, Seed{2, 3}), subset, 0.5, Seed{2, 4});
  const auto w = violation_witness(g, subset, CholeskyReductionConfig{0.3, std::nullopt});
  EXPECT_DOUBLE_EQ(w.excess, 0.5);
  EXPECT_NEAR(w.lower_bound, 0.3 * (k - 1) / std::sqrt(double(n)), 1e-14);

  const auto zero = violation_witness(Graph::cycle(4), std::vector<std::size_t>{0, 1, 2, 3},
                                      CholeskyReductionConfig{0.3, std::nullopt});
  EXPECT_NEAR(zero.excess, 1.0 / 6.0, 1e-15);
  const std::vector<std::size_t> tri{0, 1, 2};
  try {
    violation_witness(Graph(4), tri, CholeskyReductionConfig{0.3, std::nullopt});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAViolation);
  }
}

TEST(BlockDiag, Examples) {
  const std::vector<SensingMatrix> ids{SensingMatrix(DenseMatrix::identity(2)), SensingMatrix(DenseMatrix::identity(3))};
  const auto bd = block_diag(ids);
  EXPECT_EQ(bd.assembled.data(), DenseMatrix::identity(5));
  EXPECT_EQ(bd.row_offsets, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(bd.col_offsets, (std::vector<std::size_t>{0, 2}));

  const std::vector<SensingMatrix> one{SensingMatrix(DenseMatrix::from_rows({{1, 2, 3}}))};
  EXPECT_EQ(block_diag(one).assembled.data(), one[0].data());
  EXPECT_THROW(block_diag(std::span<const SensingMatrix>{}), Error);
}

TEST(BlockDiag, DeltaIsMaxOfBlocks) {
  // δ₂ of [[1, t],[0, √(1−t²)]] is t.
  auto pair = [](double t) { return SensingMatrix(DenseMatrix::from_rows({{1, t}, {0, std::sqrt(1 - t * t)}})); };
  const std::vector<SensingMatrix> blocks{pair(0.1), pair(0.3)};
  const auto bd = block_diag(blocks);
  EXPECT_NEAR(rip_delta_exact(bd.assembled, 2), 0.3, 1e-14);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::vector<SensingMatrix> bs{gen_bernoulli_sensing(4, 6, Seed{s, 1}), gen_bernoulli_sensing(5, 7, Seed{s, 2})};
    const auto m = block_diag(bs);
    for (std::size_t k = 1; k <= 3; ++k)
      EXPECT_NEAR(rip_delta_exact(m.assembled, k), std::max(rip_delta_exact(bs[0], k), rip_delta_exact(bs[1], k)),
                  1e-10);
  }
}

TEST(RectangularEmbed, Shapes) {
  const Graph g(10);
  const auto e = rectangular_embed(g, CholeskyReductionConfig{0.0, std::nullopt}, 990, Seed{1, 0});
  EXPECT_EQ(e.assembled.rows(), 20u);
  EXPECT_EQ(e.assembled.cols(), 1000u);
  EXPECT_EQ(e.blocks[0].data(), DenseMatrix::identity(10));
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 10; c < 1000; ++c) EXPECT_EQ(e.assembled.data()(r, c), 0.0);
  EXPECT_THROW(rectangular_embed(g, CholeskyReductionConfig{}, 9, Seed{}), Error);
}

TEST(HardnessParams, Hyp1Defaults) {
  const auto p = hardness_params(HardnessRegime::hyp1, 10000);
  EXPECT_EQ(p.k, 1000u);
  EXPECT_NEAR(p.epsilon, std::pow(10.0, -4.0 / 3.0), 1e-15);
  EXPECT_NEAR(p.delta, p.c_prime * std::pow(10000.0, -1.0 / 12.0), 1e-14);
  EXPECT_NEAR(p.violation_bound, 2 * p.c * p.epsilon * 999 / 100.0, 1e-14);
  EXPECT_TRUE(p.notes.empty());
}

TEST(HardnessParams, Hyp1SecondRow) {
  // α = 1/3 with β = 1/10 gives δ ∝ n^{α − β − 1/2} = n^{−4/15}.
  HardnessOverrides o;
  o.alpha = 1.0 / 3.0;
  o.beta = 0.1;
  const auto a = hardness_params(HardnessRegime::hyp1, 1u << 20, o);
  const auto b = hardness_params(HardnessRegime::hyp1, 1u << 24, o);
  const double slope = std::log(b.delta / a.delta) / std::log(16.0);
  EXPECT_NEAR(slope, -4.0 / 15.0, 2e-3);  // k is rounded to an integer
}

TEST(HardnessParams, Hyp1Infeasible) {
  HardnessOverrides o;
  o.beta = 0.6;
  expect_infeasible(HardnessRegime::hyp1, 10000, o);
  o = {};
  o.alpha = 0.5;  // 2β = 2/3 ≥ α
  expect_infeasible(HardnessRegime::hyp1, 10000, o);
  o = {};
  o.alpha = 0.9;  // α ≥ β + 1/2
  expect_infeasible(HardnessRegime::hyp1, 10000, o);
  o = {};
  o.c = 0.34;
  expect_infeasible(HardnessRegime::hyp1, 10000, o);
  o = {};
  o.gap = 1.0;
  expect_infeasible(HardnessRegime::hyp1, 10000, o);
  o = {};
  o.c_prime = 0.31;  // λc' = 0.62 ≥ 2c = 0.6
  expect_infeasible(HardnessRegime::hyp1, 10000, o);
}

TEST(HardnessParams, Hyp2) {
  const auto p = hardness_params(HardnessRegime::hyp2, 100000);
  EXPECT_LT(p.delta, p.delta0);
  EXPECT_NEAR(p.delta, p.c_prime * p.alpha * p.cexc, 1e-15);
  HardnessOverrides o;
  o.alpha = 0.9;  // α > κ
  expect_infeasible(HardnessRegime::hyp2, 100000, o);
  o = {};
  o.c = 1.0;
  expect_infeasible(HardnessRegime::hyp2, 100000, o);
  o = {};
  o.alpha = 0.2;  // ln(e/α) too large relative to the margin
  expect_infeasible(HardnessRegime::hyp2, 100000, o);
}

TEST(ModelC, SampledSubsetsWithinDelta) {
  const std::size_t n = 200, k = 10;
  const double c = 0.3;
  const double delta = 3.0 * c * std::sqrt(double(k) / double(n)) * 1.5;
  std::size_t good = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto red = gen_model_c(n, c, Seed{77, s});
    if (!red.psd) continue;
    CounterRng rng(Seed{78, s});
    bool ok = true;
    for (int t = 0; t < 500 && ok; ++t) ok = delta_subset(red.matrix, random_subset(n, k, rng)) <= delta;
    good += ok;
  }
  EXPECT_GE(good, 95u);
}
