#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "ripcert/error.hpp"
#include "ripcert/io.hpp"
#include "ripcert/random.hpp"

using namespace ripcert;

namespace {

DenseMatrix awkward_matrix(std::uint64_t seed) {
  CounterRng rng(Seed{seed, 0});
  const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
  DenseMatrix m(r, c);
  for (double& v : m.entries()) v = (rng.uniform01() - 0.5) * std::pow(10.0, double(rng.below(20)) - 10.0);
  m(0, 0) = 1.0 / 3.0;
  return m;
}

}  // namespace

TEST(MatrixIo, CsvRoundTripExact) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DenseMatrix m = awkward_matrix(s);
    std::stringstream ss;
    io::write_matrix_csv(ss, m);
    EXPECT_EQ(io::read_matrix_csv(ss), m);
  }
}

TEST(MatrixIo, BinaryRoundTripExact) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DenseMatrix m = awkward_matrix(100 + s);
    std::stringstream ss;
    io::write_matrix_binary(ss, m);
    EXPECT_EQ(ss.str().substr(0, 5), "RIPM1");
    EXPECT_EQ(ss.str().size(), 5 + 16 + 8 * m.rows() * m.cols());
    EXPECT_EQ(io::read_matrix_binary(ss), m);
  }
}

TEST(MatrixIo, Errors) {
  std::stringstream ragged("1,2\n3\n");
  EXPECT_THROW(io::read_matrix_csv(ragged), Error);
  std::stringstream junk("1,x\n");
  EXPECT_THROW(io::read_matrix_csv(junk), Error);
  std::stringstream bad_magic("RIPM2xxxxxxxxxxxxxxxxxxx");
  EXPECT_THROW(io::read_matrix_binary(bad_magic), Error);
  std::stringstream ss;
  io::write_matrix_binary(ss, DenseMatrix::identity(3));
  std::stringstream truncated(ss.str().substr(0, ss.str().size() - 4));
  EXPECT_THROW(io::read_matrix_binary(truncated), Error);
  EXPECT_THROW(io::load_matrix("/nonexistent/file.csv"), Error);
}

TEST(MatrixIo, FilesSniffFormat) {
  const auto dir = std::filesystem::temp_directory_path();
  const DenseMatrix m = awkward_matrix(7);
  io::save_matrix(dir / "ripcert_io_test.ripm", m);
  io::save_matrix(dir / "ripcert_io_test.csv", m);
  EXPECT_EQ(io::load_matrix(dir / "ripcert_io_test.ripm"), m);
  EXPECT_EQ(io::load_matrix(dir / "ripcert_io_test.csv"), m);
  std::filesystem::remove(dir / "ripcert_io_test.ripm");
  std::filesystem::remove(dir / "ripcert_io_test.csv");
}

TEST(GraphIo, EdgeListRoundTrip) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = gen_gnp_half(1 + s, Seed{s, 0});
    std::stringstream ss;
    io::write_edge_list(ss, g);
    const Graph h = io::read_edge_list(ss);
    ASSERT_EQ(h.vertex_count(), g.vertex_count());
    EXPECT_EQ(h.edges(), g.edges());
  }
}

TEST(GraphIo, ParseAndErrors) {
  std::stringstream ok("# triangle\n3 3\n0 1\n1 2\n# inner comment\n0 2\n");
  EXPECT_EQ(io::read_edge_list(ok).edge_count(), 3u);
  std::stringstream count("3 2\n0 1\n");
  EXPECT_THROW(io::read_edge_list(count), Error);
  std::stringstream loop("3 1\n1 1\n");
  EXPECT_THROW(io::read_edge_list(loop), Error);
  std::stringstream range("3 1\n0 3\n");
  EXPECT_THROW(io::read_edge_list(range), Error);
  std::stringstream dup("3 2\n0 1\n1 0\n");
  EXPECT_THROW(io::read_edge_list(dup), Error);

  std::stringstream adj("0,1,0\n1,0,1\n0,1,0\n");
  EXPECT_EQ(io::read_adjacency_csv(adj).edge_count(), 2u);
  std::stringstream asym("0,1\n0,0\n");
  EXPECT_THROW(io::read_adjacency_csv(asym), Error);
}

TEST(Json, CertificateRoundTrip) {
  RipCertificate c{2, 7, 0.42, RipMethod::lazy, 2, 0.07};
  const auto back = io::rip_certificate_from_json(io::to_json(c));
  EXPECT_EQ(back.k_min, 2u);
  EXPECT_EQ(back.k_max, 7u);
  EXPECT_EQ(back.delta, 0.42);
  EXPECT_EQ(back.method, RipMethod::lazy);
  EXPECT_EQ(back.base_epsilon, 0.07);

  const auto s = skewed_certify(gen_gnp_half(20, Seed{}), 1.0);
  const auto sb = io::subgraph_certificate_from_json(io::to_json(s));
  EXPECT_EQ(sb.lambda1, s.lambda1);
  EXPECT_EQ(sb.skew_a, 1.0);
  EXPECT_EQ(sb.method, CertifierMethod::skewed);
  EXPECT_EQ(io::to_string(RipMethod::coherence), "coherence");
}
