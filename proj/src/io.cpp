#include "pathpair/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pathpair {

namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r' && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

struct RawEdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  RoleTable roles;
};

RawEdgeList parse_raw(std::string_view text) {
  RawEdgeList raw;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      if (line.substr(0, 1) != "n") fail(line_no, "expected header 'n=<count>'");
      auto rest = trim(line.substr(1));
      if (rest.empty() || rest.front() != '=') fail(line_no, "expected header 'n=<count>'");
      auto count = parse_int(trim(rest.substr(1)), line_no);
      if (count < 0) fail(line_no, "negative vertex count");
      raw.n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }

    auto toks = tokens(line);
    if (!toks.empty() && toks[0] == "role") {
      if (toks.size() != 3) fail(line_no, "expected 'role <vertex> <name>'");
      auto v = parse_int(toks[1], line_no);
      if (v < 0 || static_cast<std::size_t>(v) >= raw.n) fail(line_no, "role vertex out of range");
      raw.roles.emplace_back(static_cast<Vertex>(v), std::string(toks[2]));
      continue;
    }
    if (toks.size() != 2) fail(line_no, "expected 'u v'");
    auto u = parse_int(toks[0], line_no);
    auto v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= raw.n ||
        static_cast<std::size_t>(v) >= raw.n) {
      fail(line_no, "vertex id out of range for n=" + std::to_string(raw.n));
    }
    raw.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    raw.lines.push_back(line_no);
  }
  if (!have_header) fail(line_no, "missing header 'n=<count>'");
  std::sort(raw.roles.begin(), raw.roles.end());
  return raw;
}

}  // namespace

LabeledGraph parse_labeled_graph(std::string_view text) {
  auto raw = parse_raw(text);
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto& e = raw.edges[i];
    if (e.u == e.v) fail(raw.lines[i], "loop at vertex " + std::to_string(e.u));
    seen.emplace_back(Edge::canonical(e.u, e.v), raw.lines[i]);
  }
  std::stable_sort(seen.begin(), seen.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      fail(seen[i].second, "duplicate edge " + std::to_string(seen[i].first.u) + " " +
                               std::to_string(seen[i].first.v));
    }
  }
  return {SimpleGraph(raw.n, std::move(raw.edges)), std::move(raw.roles)};
}

SimpleGraph parse_graph(std::string_view text) { return parse_labeled_graph(text).graph; }

Multigraph parse_multigraph(std::string_view text) {
  auto raw = parse_raw(text);
  return Multigraph::from_pairs(raw.n, raw.edges);
}

std::string emit_graph(const SimpleGraph& g, const RoleTable& roles) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  for (const auto& [v, name] : roles) out << "role " << v << ' ' << name << '\n';
  return out.str();
}

std::string emit_multigraph(const Multigraph& mg) {
  std::ostringstream out;
  out << "n=" << mg.vertex_count() << '\n';
  for (const auto& e : mg.edges()) out << e.u << ' ' << e.v << "  # id " << e.id << '\n';
  return out.str();
}

std::string emit_dot(const SimpleGraph& g, const RoleTable& roles) {
  std::ostringstream out;
  out << "graph G {\n";
  auto role = roles.begin();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    while (role != roles.end() && role->first < static_cast<Vertex>(v)) ++role;
    if (role != roles.end() && role->first == static_cast<Vertex>(v)) {
      out << " [label=\"" << v << ":" << role->second << "\"]";
    }
    out << ";\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Pairing parse_pairing(std::string_view text, std::size_t n) {
  std::vector<TerminalPair> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) fail(line_no, "expected 'u v'");
    auto u = parse_int(toks[0], line_no);
    auto v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      fail(line_no, "terminal out of range for n=" + std::to_string(n));
    }
    if (u == v) fail(line_no, "a pair needs two distinct terminals");
    pairs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Pairing(std::move(pairs));
}

std::string emit_pairing(const Pairing& p) {
  std::ostringstream out;
  for (const auto& pr : p) out << pr.first << ' ' << pr.second << '\n';
  return out.str();
}

std::string emit_path_system(const PathSystem& paths) {
  std::ostringstream out;
  for (const auto& path : paths.paths) {
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << path[i];
    out << '\n';
  }
  return out.str();
}

VertexSet parse_vertex_list(std::string_view text, std::size_t n) {
  std::vector<Vertex> members;
  for (auto tok : tokens(text)) {
    auto v = parse_int(tok, 1);
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw GraphError("vertex " + std::string(tok) + " out of range");
    }
    members.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(n, std::move(members));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pathpair
