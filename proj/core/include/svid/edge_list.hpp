#pragma once

#include "svid/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>

namespace svid {

struct EdgeListReport {
    Graph graph;
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

/// One edge per line as two whitespace-separated integer labels; lines whose
/// first non-blank character is '#' and blank lines are skipped. Labels are
/// remapped to dense ids in ascending label order. Nodes seen only in
/// self-loops are not created.
///
/// Throws ParseError (with line number) on malformed lines and DomainError
/// when no usable edge remains.
[[nodiscard]] EdgeListReport parse_edge_list(std::istream& in);
[[nodiscard]] EdgeListReport read_edge_list(const std::filesystem::path& path);

/// Canonical form: each edge once as "a b\n" with a < b (original labels),
/// lines sorted. Isolated nodes are not representable.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

} // namespace svid
