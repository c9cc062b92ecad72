#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

/// Optional vertex annotations, e.g. {7, "xAB"}. Sorted by vertex.
using RoleTable = std::vector<std::pair<Vertex, std::string>>;

struct LabeledGraph {
  SimpleGraph graph;
  RoleTable roles;
};

/// Edge-list text: `n=<count>` then one `u v` per line; `#` starts a comment.
/// Lines of the form `role <v> <name>` are collected into the role table.
/// Throws GraphError with the offending line number on malformed input.
LabeledGraph parse_labeled_graph(std::string_view text);
SimpleGraph parse_graph(std::string_view text);
/// Same format, parallel edges and loops allowed; multiedge ids follow line order.
Multigraph parse_multigraph(std::string_view text);

/// Canonical edge list: header, then edges sorted lexicographically, then roles.
std::string emit_graph(const SimpleGraph& g, const RoleTable& roles = {});
std::string emit_multigraph(const Multigraph& mg);
std::string emit_dot(const SimpleGraph& g, const RoleTable& roles = {});

/// One `u v` pair per line, `#` comments allowed.
Pairing parse_pairing(std::string_view text, std::size_t n);
std::string emit_pairing(const Pairing& p);
std::string emit_path_system(const PathSystem& paths);

/// Comma- or space-separated vertex ids, e.g. "0,2,5".
VertexSet parse_vertex_list(std::string_view text, std::size_t n);

std::string read_file(const std::string& path);

}  // namespace pathpair
