#include "ripcert/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ripcert/error.hpp"

namespace ripcert::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double v = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || field.empty())
    throw Error(ErrorKind::InvalidInput,
                "line " + std::to_string(line_no) + ": cannot parse number '" + std::string(field) + "'");
  return v;
}

std::size_t parse_index(std::string_view field, std::size_t line_no) {
  field = trim(field);
  std::size_t v = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc{} || ptr != end || field.empty())
    throw Error(ErrorKind::InvalidInput,
                "line " + std::to_string(line_no) + ": cannot parse integer '" + std::string(field) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw Error(ErrorKind::InvalidInput, "truncated RIPM1 stream");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  return out;
}

}  // namespace

DenseMatrix read_matrix_csv(std::istream& in) {
  std::vector<double> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto fields = split(trim(line), ',');
    if (rows == 0) cols = fields.size();
    if (fields.size() != cols)
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": expected " +
                                               std::to_string(cols) + " fields");
    for (auto f : fields) entries.push_back(parse_double(f, line_no));
    ++rows;
  }
  if (rows == 0) throw Error(ErrorKind::InvalidInput, "empty matrix CSV");
  return DenseMatrix(rows, cols, std::move(entries));
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m) {
  std::array<char, 32> buf{};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), m(r, c));
      out.write(buf.data(), ptr - buf.data());
    }
    out << '\n';
  }
}

DenseMatrix read_matrix_binary(std::istream& in) {
  std::array<char, kBinaryMagic.size()> magic{};
  if (!in.read(magic.data(), magic.size()) || std::string_view(magic.data(), magic.size()) != kBinaryMagic)
    throw Error(ErrorKind::InvalidInput, "missing RIPM1 header");
  const std::uint64_t rows = get_u64(in);
  const std::uint64_t cols = get_u64(in);
  if (rows == 0 || cols == 0 || rows > (1ULL << 32) || cols > (1ULL << 32))
    throw Error(ErrorKind::InvalidInput, "implausible RIPM1 dimensions");
  std::vector<double> entries(rows * cols);
  for (double& v : entries) v = std::bit_cast<double>(get_u64(in));
  return DenseMatrix(rows, cols, std::move(entries));
}

void write_matrix_binary(std::ostream& out, const DenseMatrix& m) {
  out.write(kBinaryMagic.data(), kBinaryMagic.size());
  put_u64(out, m.rows());
  put_u64(out, m.cols());
  for (double v : m.entries()) put_u64(out, std::bit_cast<std::uint64_t>(v));
}

DenseMatrix load_matrix(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in | std::ios::binary);
  std::array<char, kBinaryMagic.size()> head{};
  in.read(head.data(), head.size());
  const bool binary = in.gcount() == static_cast<std::streamsize>(head.size()) &&
                      std::string_view(head.data(), head.size()) == kBinaryMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_matrix_binary(in) : read_matrix_csv(in);
}

void save_matrix(const std::filesystem::path& path, const DenseMatrix& m) {
  if (path.extension() == ".ripm") {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    write_matrix_binary(out, m);
  } else {
    auto out = open_out(path);
    write_matrix_csv(out, m);
  }
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto fields = split_ws(line);
    if (fields.size() != 2)
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": expected two integers");
    const std::size_t a = parse_index(fields[0], line_no);
    const std::size_t b = parse_index(fields[1], line_no);
    if (!header) {
      n = a;
      m = b;
      header = true;
    } else {
      edges.emplace_back(a, b);
    }
  }
  if (!header) throw Error(ErrorKind::InvalidInput, "edge list has no header line");
  if (edges.size() != m)
    throw Error(ErrorKind::InvalidInput, "header declares " + std::to_string(m) + " edges, found " +
                                             std::to_string(edges.size()));
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_adjacency_csv(std::istream& in) {
  const DenseMatrix m = read_matrix_csv(in);
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "adjacency matrix is not square");
  Graph g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0.0) throw Error(ErrorKind::InvalidInput, "adjacency diagonal must be zero");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double v = m(i, j);
      if ((v != 0.0 && v != 1.0) || m(j, i) != v)
        throw Error(ErrorKind::InvalidInput, "adjacency must be symmetric 0/1");
      if (v == 1.0) g.set_edge(i, j, true);
    }
  }
  return g;
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream probe(text);
  std::string line;
  bool csv = false;
  while (std::getline(probe, line)) {
    if (skippable(line)) continue;
    csv = line.find(',') != std::string::npos;
    break;
  }
  std::istringstream data(text);
  return csv ? read_adjacency_csv(data) : read_edge_list(data);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

std::string_view to_string(RipMethod m) noexcept {
  switch (m) {
    case RipMethod::exact: return "exact";
    case RipMethod::coherence: return "coherence";
    case RipMethod::extrapolated: return "extrapolated";
    case RipMethod::lazy: return "lazy";
  }
  return "unknown";
}

std::string_view to_string(CertifierMethod m) noexcept {
  return m == CertifierMethod::spectral ? "spectral" : "skewed";
}

nlohmann::json to_json(const RipCertificate& cert) {
  return {{"method", to_string(cert.method)}, {"k_min", cert.k_min},           {"k_max", cert.k_max},
          {"delta", cert.delta},              {"base_order", cert.base_order}, {"base_epsilon", cert.base_epsilon}};
}

RipCertificate rip_certificate_from_json(const nlohmann::json& j) {
  RipCertificate cert;
  const auto method = j.at("method").get<std::string>();
  if (method == "exact")
    cert.method = RipMethod::exact;
  else if (method == "coherence")
    cert.method = RipMethod::coherence;
  else if (method == "extrapolated")
    cert.method = RipMethod::extrapolated;
  else if (method == "lazy")
    cert.method = RipMethod::lazy;
  else
    throw Error(ErrorKind::InvalidInput, "unknown certificate method '" + method + "'");
  cert.k_min = j.at("k_min").get<std::size_t>();
  cert.k_max = j.at("k_max").get<std::size_t>();
  cert.delta = j.at("delta").get<double>();
  cert.base_order = j.at("base_order").get<std::size_t>();
  cert.base_epsilon = j.at("base_epsilon").get<double>();
  return cert;
}

nlohmann::json to_json(const SubgraphCertificate& cert) {
  return {{"method", to_string(cert.method)}, {"lambda1", cert.lambda1}, {"a", cert.skew_a}, {"n", cert.n}};
}

SubgraphCertificate subgraph_certificate_from_json(const nlohmann::json& j) {
  SubgraphCertificate cert;
  const auto method = j.at("method").get<std::string>();
  if (method == "spectral")
    cert.method = CertifierMethod::spectral;
  else if (method == "skewed")
    cert.method = CertifierMethod::skewed;
  else
    throw Error(ErrorKind::InvalidInput, "unknown certificate method '" + method + "'");
  cert.lambda1 = j.at("lambda1").get<double>();
  cert.skew_a = j.at("a").get<double>();
  cert.n = j.at("n").get<std::size_t>();
  return cert;
}

nlohmann::json to_json(const HardnessParams& p) {
  nlohmann::json j = {{"regime", p.regime == HardnessRegime::hyp1 ? "hyp1" : "hyp2"},
                      {"n", p.n},
                      {"k", p.k},
                      {"epsilon", p.epsilon},
                      {"delta", p.delta},
                      {"c", p.c},
                      {"c_prime", p.c_prime},
                      {"alpha", p.alpha},
                      {"violation_bound", p.violation_bound},
                      {"notes", p.notes}};
  if (p.regime == HardnessRegime::hyp1) {
    j["beta"] = p.beta;
    j["gap"] = p.gap;
    j["gap_delta"] = p.gap * p.delta;
  } else {
    j["C"] = p.cexc;
    j["kappa"] = p.kappa;
    j["delta0"] = p.delta0;
  }
  return j;
}

}  // namespace ripcert::io
