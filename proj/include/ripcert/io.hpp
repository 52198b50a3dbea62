#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ripcert/graphs.hpp"
#include "ripcert/linalg.hpp"
#include "ripcert/reduction.hpp"
#include "ripcert/sensing.hpp"

namespace ripcert::io {

/// Magic prefix of the binary matrix format. Layout: "RIPM1", rows and
/// cols as little-endian uint64, then rows·cols little-endian IEEE-754
/// doubles in row-major order.
inline constexpr std::string_view kBinaryMagic = "RIPM1";

DenseMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const DenseMatrix& m);

DenseMatrix read_matrix_binary(std::istream& in);
void write_matrix_binary(std::ostream& out, const DenseMatrix& m);

/// Dispatches on the magic bytes: RIPM1 binary, otherwise CSV.
DenseMatrix load_matrix(const std::filesystem::path& path);
/// Binary when the extension is .ripm, CSV otherwise.
void save_matrix(const std::filesystem::path& path, const DenseMatrix& m);

/// First line "n m", then m lines "u v" (0-based). Blank lines and lines
/// starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Dense symmetric 0/1 CSV with zero diagonal.
Graph read_adjacency_csv(std::istream& in);

/// Edge list unless the first data line contains a comma.
Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

std::string_view to_string(RipMethod m) noexcept;
std::string_view to_string(CertifierMethod m) noexcept;

nlohmann::json to_json(const RipCertificate& cert);
RipCertificate rip_certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SubgraphCertificate& cert);
SubgraphCertificate subgraph_certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HardnessParams& p);

}  // namespace ripcert::io
