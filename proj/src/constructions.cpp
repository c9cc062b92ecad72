#include "pathpair/constructions.hpp"

namespace pathpair {

SimpleGraph star(std::size_t m) {
  if (m == 0) throw GraphError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return SimpleGraph(m + 1, std::move(edges));
}

SimpleGraph complete(std::size_t t) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return SimpleGraph(t, std::move(edges));
}

SimpleGraph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(m + j)});
    }
  }
  return SimpleGraph(m + n, std::move(edges));
}

SimpleGraph k_t_q(std::size_t t, std::size_t q) {
  if (t == 0 || q == 0) throw GraphError("k_t_q needs t >= 1 and q >= 1");
  auto edges = complete(t).edges();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j + 1 < q; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(t + i * (q - 1) + j)});
    }
  }
  return SimpleGraph(t * q, std::move(edges));
}

std::string_view role_name(HubRole r) {
  switch (r) {
    case HubRole::A: return "A";
    case HubRole::B: return "B";
    case HubRole::C: return "C";
    case HubRole::xAB: return "xAB";
    case HubRole::xBC: return "xBC";
    case HubRole::xCA: return "xCA";
  }
  return "?";
}

bool is_hub(HubRole r) { return r == HubRole::xAB || r == HubRole::xBC || r == HubRole::xCA; }

TriangleHubGraph::TriangleHubGraph(std::size_t k) : k_(k) {
  if (k == 0) throw GraphError("triangle_hub needs k >= 1");
  const std::size_t cls = 2 * k - 1;
  const std::size_t n = 6 * k;
  roles_.resize(n);
  for (std::size_t i = 0; i < cls; ++i) {
    roles_[i] = HubRole::A;
    roles_[cls + i] = HubRole::B;
    roles_[2 * cls + i] = HubRole::C;
  }
  roles_[n - 3] = HubRole::xAB;
  roles_[n - 2] = HubRole::xBC;
  roles_[n - 1] = HubRole::xCA;

  const auto xab = static_cast<Vertex>(n - 3);
  const auto xbc = static_cast<Vertex>(n - 2);
  const auto xca = static_cast<Vertex>(n - 1);
  std::vector<Edge> edges{{xab, xbc}, {xbc, xca}, {xab, xca}};
  for (std::size_t v = 0; v < 3 * cls; ++v) {
    auto u = static_cast<Vertex>(v);
    switch (roles_[v]) {
      case HubRole::A: edges.push_back({u, xab}), edges.push_back({u, xca}); break;
      case HubRole::B: edges.push_back({u, xab}), edges.push_back({u, xbc}); break;
      case HubRole::C: edges.push_back({u, xbc}), edges.push_back({u, xca}); break;
      default: break;
    }
  }
  graph_ = SimpleGraph(n, std::move(edges));
}

Vertex TriangleHubGraph::hub(HubRole r) const {
  const auto n = static_cast<Vertex>(6 * k_);
  switch (r) {
    case HubRole::xAB: return n - 3;
    case HubRole::xBC: return n - 2;
    case HubRole::xCA: return n - 1;
    default: throw GraphError("role " + std::string(role_name(r)) + " is not a hub");
  }
}

std::array<Vertex, 3> TriangleHubGraph::hubs() const {
  return {hub(HubRole::xAB), hub(HubRole::xBC), hub(HubRole::xCA)};
}

std::vector<Vertex> TriangleHubGraph::class_members(HubRole cls) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    if (roles_[v] == cls) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

RoleTable TriangleHubGraph::role_table() const {
  RoleTable table;
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    table.emplace_back(static_cast<Vertex>(v), std::string(role_name(roles_[v])));
  }
  return table;
}

}  // namespace pathpair
