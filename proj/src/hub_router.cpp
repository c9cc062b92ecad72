#include "pathpair/hub_router.hpp"

#include <stdexcept>

namespace pathpair {

namespace {

HubRole rotation_successor(HubRole hub) {
  switch (hub) {
    case HubRole::xAB: return HubRole::xBC;
    case HubRole::xBC: return HubRole::xCA;
    default: return HubRole::xAB;
  }
}

HubRole common_hub(HubRole a, HubRole b) {
  if (a > b) std::swap(a, b);
  if (a == HubRole::A && b == HubRole::B) return HubRole::xAB;
  if (a == HubRole::B && b == HubRole::C) return HubRole::xBC;
  return HubRole::xCA;  // A and C
}

std::pair<HubRole, HubRole> class_hubs(HubRole cls) {
  switch (cls) {
    case HubRole::A: return {HubRole::xAB, HubRole::xCA};
    case HubRole::B: return {HubRole::xAB, HubRole::xBC};
    default: return {HubRole::xBC, HubRole::xCA};
  }
}

Path through(Vertex from, Vertex mid, Vertex to) { return {from, mid, to}; }

}  // namespace

RouteCase classify_pair(const TriangleHubGraph& g, Vertex u, Vertex v) {
  const auto& graph = g.graph();
  if (!graph.contains(u) || !graph.contains(v)) throw GraphError("terminal is not a vertex");
  if (u == v) throw GraphError("a pair needs two distinct terminals");
  const bool hu = is_hub(g.role(u));
  const bool hv = is_hub(g.role(v));
  if (hu && hv) return RouteCase::hub_hub;
  if (hu || hv) return graph.has_edge(u, v) ? RouteCase::hub_adjacent_class : RouteCase::hub_rotation;
  return g.role(u) == g.role(v) ? RouteCase::same_class : RouteCase::different_class;
}

PathSystem route(const TriangleHubGraph& g, const Pairing& pairing, SameClassHub choice) {
  const auto& graph = g.graph();
  pairing.check_within(graph.vertex_count());
  if (!pairing.is_full(graph.vertex_count())) {
    throw GraphError("route needs a full pairing of all " +
                     std::to_string(graph.vertex_count()) + " vertices");
  }

  PathSystem out;
  out.paths.reserve(pairing.size());
  for (const auto& [u, v] : pairing) {
    switch (classify_pair(g, u, v)) {
      case RouteCase::hub_hub:
      case RouteCase::hub_adjacent_class:
        out.paths.push_back({u, v});
        break;
      case RouteCase::hub_rotation: {
        const Vertex hub = is_hub(g.role(u)) ? u : v;
        const Vertex mid = g.hub(rotation_successor(g.role(hub)));
        out.paths.push_back(through(u, mid, v));
        break;
      }
      case RouteCase::same_class: {
        auto [lower, upper] = class_hubs(g.role(u));
        out.paths.push_back(through(u, g.hub(choice == SameClassHub::lower ? lower : upper), v));
        break;
      }
      case RouteCase::different_class:
        out.paths.push_back(through(u, g.hub(common_hub(g.role(u), g.role(v))), v));
        break;
    }
  }

  if (auto bad = path_system_violation(graph, pairing, out)) {
    throw std::logic_error("hub router produced an invalid path system: " + *bad);
  }
  return out;
}

}  // namespace pathpair
