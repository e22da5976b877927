#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fourplanar/base.hpp"

namespace fourplanar {

enum class NodeKind { GraphVertex, Crossing };

// A dart is a directed half-segment of the planarization. `twin` is the
// involution pairing the two darts of a segment; `next` is the
// counterclockwise successor around the origin node.
struct Dart {
  int origin = -1;
  int twin = -1;
  int next = -1;
};

struct MapNode {
  std::string name;
  NodeKind kind = NodeKind::GraphVertex;
};

// Dart-based oriented combinatorial map of a planarization. Two node kinds:
// graph vertices and crossings. Immutable after construction; all queries
// are read-only.
class CombMap {
 public:
  std::vector<MapNode> nodes;
  std::vector<Dart> darts;
  std::vector<std::string> dart_names;
  // Parent edge of G for each dart's segment (same value on twin darts).
  std::vector<int> segment_edge;
  std::vector<std::string> edge_names;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int dart_count() const { return static_cast<int>(darts.size()); }
  int segment_count() const { return dart_count() / 2; }

  const std::string& node_name(int n) const { return nodes[static_cast<size_t>(n)].name; }
  NodeKind kind(int n) const { return nodes[static_cast<size_t>(n)].kind; }
  bool is_vertex(int n) const { return kind(n) == NodeKind::GraphVertex; }

  int origin(int d) const { return darts[static_cast<size_t>(d)].origin; }
  int twin(int d) const { return darts[static_cast<size_t>(d)].twin; }
  int next(int d) const { return darts[static_cast<size_t>(d)].next; }
  // Face permutation: next-of-twin, fixed convention for the whole project.
  int face_next(int d) const { return next(twin(d)); }

  int sigma_degree(int n) const {
    int deg = 0;
    for (int d = 0; d < dart_count(); ++d)
      if (origin(d) == n) ++deg;
    return deg;
  }

  // Darts around a node in sigma (counterclockwise) order, starting at the
  // smallest dart index of the orbit.
  std::vector<int> node_orbit(int n) const {
    int start = -1;
    for (int d = 0; d < dart_count(); ++d)
      if (origin(d) == n) { start = d; break; }
    std::vector<int> orbit;
    if (start < 0) return orbit;
    int d = start;
    do {
      orbit.push_back(d);
      d = next(d);
    } while (d != start && static_cast<int>(orbit.size()) <= dart_count());
    return orbit;
  }

  // Enumerates all face orbits of the permutation next∘twin. Deterministic:
  // orbit k starts at the smallest dart index not covered by orbits 0..k-1.
  std::vector<std::vector<int>> face_orbits() const {
    std::vector<std::vector<int>> faces;
    std::vector<char> seen(static_cast<size_t>(dart_count()), 0);
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (seen[static_cast<size_t>(d0)]) continue;
      std::vector<int> orbit;
      int d = d0;
      do {
        seen[static_cast<size_t>(d)] = 1;
        orbit.push_back(d);
        d = face_next(d);
      } while (d != d0);
      faces.push_back(std::move(orbit));
    }
    return faces;
  }

  bool connected() const {
    if (nodes.empty()) return true;
    std::vector<char> vis(nodes.size(), 0);
    // Isolated nodes (no darts) are ignored here; callers flag them.
    int start = -1;
    for (int d = 0; d < dart_count(); ++d) { start = origin(d); break; }
    if (start < 0) return true;
    std::vector<int> stack{start};
    vis[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (int d = 0; d < dart_count(); ++d) {
        if (origin(d) != n) continue;
        int m = origin(twin(d));
        if (!vis[static_cast<size_t>(m)]) {
          vis[static_cast<size_t>(m)] = 1;
          stack.push_back(m);
        }
      }
    }
    for (size_t n = 0; n < nodes.size(); ++n) {
      if (!vis[n] && sigma_degree(static_cast<int>(n)) > 0) return false;
    }
    return true;
  }

  // V - E + F of the map; equals 2 exactly for a connected sphere embedding.
  // Nodes without darts do not contribute.
  int euler_characteristic() const {
    if (!connected()) throw Error(ErrorCode::DisconnectedMap, "euler characteristic of a disconnected map");
    int v = 0;
    for (int n = 0; n < node_count(); ++n)
      if (sigma_degree(n) > 0) ++v;
    if (v == 0) v = node_count();  // darts-free map: isolated nodes only
    int e = segment_count();
    int f = static_cast<int>(face_orbits().size());
    return v - e + f;
  }

  // Checks the dart and node invariants: twin is a fixed-point-free
  // involution, next is a permutation respecting origins, crossings have
  // sigma-degree 4 with the two passing edges alternating, and no edge
  // crosses itself.
  std::vector<Diagnostic> validate_local_structure() const {
    std::vector<Diagnostic> out;
    for (int d = 0; d < dart_count(); ++d) {
      int t = twin(d);
      if (t < 0 || t >= dart_count() || t == d || twin(t) != d)
        out.push_back({"TwinInvolution", dart_names[static_cast<size_t>(d)], "twin is not a fixed-point-free involution"});
      int nx = next(d);
      if (nx < 0 || nx >= dart_count() || origin(nx) != origin(d))
        out.push_back({"NextPermutation", dart_names[static_cast<size_t>(d)], "next leaves the origin's orbit"});
    }
    std::vector<int> next_preimage(static_cast<size_t>(dart_count()), 0);
    for (int d = 0; d < dart_count(); ++d) {
      int nx = next(d);
      if (nx >= 0 && nx < dart_count()) ++next_preimage[static_cast<size_t>(nx)];
    }
    for (int d = 0; d < dart_count(); ++d)
      if (next_preimage[static_cast<size_t>(d)] != 1)
        out.push_back({"NextPermutation", dart_names[static_cast<size_t>(d)], "next is not a permutation"});

    for (int n = 0; n < node_count(); ++n) {
      if (kind(n) != NodeKind::Crossing) continue;
      std::vector<int> orbit = node_orbit(n);
      if (orbit.size() != 4) {
        out.push_back({"CrossingDegree", node_name(n),
                       "sigma-degree " + std::to_string(orbit.size()) + ", expected 4"});
        continue;
      }
      int e0 = segment_edge[static_cast<size_t>(orbit[0])];
      int e1 = segment_edge[static_cast<size_t>(orbit[1])];
      int e2 = segment_edge[static_cast<size_t>(orbit[2])];
      int e3 = segment_edge[static_cast<size_t>(orbit[3])];
      if (e0 == e1 && e1 == e2 && e2 == e3) {
        out.push_back({"SelfCrossing", node_name(n),
                       "both passing edges are " + edge_names[static_cast<size_t>(e0)]});
      } else if (e0 != e2 || e1 != e3 || e0 == e1) {
        out.push_back({"CrossingAlternation", node_name(n), "darts do not alternate between two passing edges"});
      }
    }
    return out;
  }
};

}  // namespace fourplanar
