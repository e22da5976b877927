#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/combmap.hpp"

namespace fourplanar {

// One end of an edge. Serialized as "edgeId+" for the tail end and
// "edgeId-" for the head end; a loop contributes both ends to the same
// rotation.
struct EdgeEnd {
  std::string edge;
  bool at_head = false;
  bool operator==(const EdgeEnd&) const = default;
  auto operator<=>(const EdgeEnd&) const = default;
};

struct EdgeRec {
  std::string id;
  std::string tail;
  std::string head;
  std::vector<std::string> crossings;  // ordered tail -> head
};

// orientation +1: counterclockwise local order at the crossing is
// (first-toward-tail, second-toward-tail, first-toward-head,
// second-toward-head); -1 is the mirror image.
struct CrossingRec {
  std::string id;
  std::string first;
  std::string second;
  int orientation = +1;
};

// Input description of a drawing of a multigraph: combinatorial data only,
// no coordinates.
struct DrawingSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeRec> edges;
  std::vector<CrossingRec> crossings;
  std::map<std::string, std::vector<EdgeEnd>> rotations;  // ccw cyclic order
};

inline std::string end_name(const EdgeEnd& e) { return e.edge + (e.at_head ? "-" : "+"); }

// Sorts vertices, edges and crossings by id. Rotation lists keep their
// cyclic order but are rotated to start at the smallest entry.
inline DrawingSpec normalized(DrawingSpec s) {
  std::sort(s.vertices.begin(), s.vertices.end());
  std::sort(s.edges.begin(), s.edges.end(), [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  std::sort(s.crossings.begin(), s.crossings.end(),
            [](const CrossingRec& a, const CrossingRec& b) { return a.id < b.id; });
  for (auto& [v, rot] : s.rotations) {
    if (rot.size() < 2) continue;
    auto it = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), it, rot.end());
  }
  return s;
}

// The planarization P of a drawing: a combinatorial map whose nodes are the
// graph vertices plus one degree-4 node per crossing, with lookups back
// into the drawing spec. Node i is vertex i for i < |V|, node |V|+j is
// crossing j (indices into the normalized spec).
class Planarization {
 public:
  DrawingSpec spec;  // normalized
  CombMap map;

  struct SegRef {
    int edge = -1;  // index into spec.edges
    int seg = -1;   // 0..m for an edge with m crossings
    bool fwd = true;
  };
  std::vector<std::vector<int>> seg_fwd;  // [edge][seg] -> forward dart
  std::vector<SegRef> dart_seg;           // dart -> segment reference

  struct CrossingPos {
    int first_edge = -1, first_pos = -1;    // 0-based position in first's list
    int second_edge = -1, second_pos = -1;
  };
  std::vector<CrossingPos> crossing_pos;  // per crossing index

  std::vector<Diagnostic> diagnostics;  // e.g. isolated vertices

  int n() const { return static_cast<int>(spec.vertices.size()); }
  int edge_count() const { return static_cast<int>(spec.edges.size()); }
  int crossing_count() const { return static_cast<int>(spec.crossings.size()); }

  int vertex_node(int vi) const { return vi; }
  int crossing_node(int xi) const { return n() + xi; }

  int vertex_index(const std::string& id) const {
    auto it = std::lower_bound(spec.vertices.begin(), spec.vertices.end(), id);
    if (it == spec.vertices.end() || *it != id) return -1;
    return static_cast<int>(it - spec.vertices.begin());
  }
  int edge_index(const std::string& id) const {
    int lo = 0, hi = edge_count();
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (spec.edges[static_cast<size_t>(mid)].id < id) lo = mid + 1; else hi = mid;
    }
    if (lo < edge_count() && spec.edges[static_cast<size_t>(lo)].id == id) return lo;
    return -1;
  }
  int crossing_index(const std::string& id) const {
    int lo = 0, hi = crossing_count();
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (spec.crossings[static_cast<size_t>(mid)].id < id) lo = mid + 1; else hi = mid;
    }
    if (lo < crossing_count() && spec.crossings[static_cast<size_t>(lo)].id == id) return lo;
    return -1;
  }

  // Dart corresponding to an edge end (the dart leaving the endpoint).
  int end_dart(int edge, bool at_head) const {
    const auto& segs = seg_fwd[static_cast<size_t>(edge)];
    if (!at_head) return segs.front();
    return map.twin(segs.back());
  }

  // Crossing node visited at 0-based position `pos` of edge `edge`.
  int crossing_node_at(int edge, int pos) const {
    return crossing_node(crossing_index(spec.edges[static_cast<size_t>(edge)].crossings[static_cast<size_t>(pos)]));
  }
};

namespace detail {

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace detail

// Builds the planarization of a drawing. Throws DanglingReference,
// SelfCrossing, DisconnectedMap or NonSphere when the input does not
// describe a connected sphere drawing.
inline Planarization planarize(const DrawingSpec& input) {
  using detail::require;
  Planarization p;
  p.spec = normalized(input);
  const DrawingSpec& s = p.spec;
  const int nv = static_cast<int>(s.vertices.size());
  const int ne = static_cast<int>(s.edges.size());
  const int nc = static_cast<int>(s.crossings.size());

  for (int i = 1; i < nv; ++i)
    require(s.vertices[static_cast<size_t>(i - 1)] != s.vertices[static_cast<size_t>(i)],
            ErrorCode::ParseError, "duplicate vertex id " + s.vertices[static_cast<size_t>(i)]);
  for (int i = 1; i < ne; ++i)
    require(s.edges[static_cast<size_t>(i - 1)].id != s.edges[static_cast<size_t>(i)].id,
            ErrorCode::ParseError, "duplicate edge id " + s.edges[static_cast<size_t>(i)].id);
  for (int i = 1; i < nc; ++i)
    require(s.crossings[static_cast<size_t>(i - 1)].id != s.crossings[static_cast<size_t>(i)].id,
            ErrorCode::ParseError, "duplicate crossing id " + s.crossings[static_cast<size_t>(i)].id);

  // Nodes: vertices first, then crossings.
  for (const auto& v : s.vertices) p.map.nodes.push_back({v, NodeKind::GraphVertex});
  for (const auto& x : s.crossings) p.map.nodes.push_back({x.id, NodeKind::Crossing});

  for (int xi = 0; xi < nc; ++xi) {
    const CrossingRec& xr = s.crossings[static_cast<size_t>(xi)];
    require(xr.first != xr.second, ErrorCode::SelfCrossing, "crossing " + xr.id + " on a single edge");
    require(xr.orientation == 1 || xr.orientation == -1, ErrorCode::ParseError,
            "crossing " + xr.id + " orientation must be +1 or -1");
  }

  // Resolve crossing occurrences on edge lists.
  p.crossing_pos.assign(static_cast<size_t>(nc), {});
  std::vector<int> occurrences(static_cast<size_t>(nc), 0);
  for (int e = 0; e < ne; ++e) {
    const EdgeRec& er = s.edges[static_cast<size_t>(e)];
    require(p.vertex_index(er.tail) >= 0, ErrorCode::DanglingReference, "edge " + er.id + " tail " + er.tail);
    require(p.vertex_index(er.head) >= 0, ErrorCode::DanglingReference, "edge " + er.id + " head " + er.head);
    std::set<std::string> seen;
    for (int k = 0; k < static_cast<int>(er.crossings.size()); ++k) {
      const std::string& xid = er.crossings[static_cast<size_t>(k)];
      int xi = p.crossing_index(xid);
      require(xi >= 0, ErrorCode::DanglingReference, "edge " + er.id + " crossing " + xid);
      require(seen.insert(xid).second, ErrorCode::SelfCrossing, "edge " + er.id + " meets crossing " + xid + " twice");
      const CrossingRec& xr = s.crossings[static_cast<size_t>(xi)];
      auto& cp = p.crossing_pos[static_cast<size_t>(xi)];
      if (xr.first == er.id && cp.first_edge < 0) {
        cp.first_edge = e;
        cp.first_pos = k;
      } else if (xr.second == er.id && cp.second_edge < 0) {
        cp.second_edge = e;
        cp.second_pos = k;
      } else {
        throw Error(ErrorCode::DanglingReference,
                    "crossing " + xid + " listed on edge " + er.id + " but recorded for " + xr.first + "/" + xr.second);
      }
      ++occurrences[static_cast<size_t>(xi)];
    }
  }
  for (int xi = 0; xi < nc; ++xi) {
    const CrossingRec& xr = s.crossings[static_cast<size_t>(xi)];
    require(occurrences[static_cast<size_t>(xi)] == 2 && p.crossing_pos[static_cast<size_t>(xi)].first_edge >= 0 &&
                p.crossing_pos[static_cast<size_t>(xi)].second_edge >= 0,
            ErrorCode::DanglingReference, "crossing " + xr.id + " does not appear on exactly its two edges");
  }

  // Darts: two per segment, edge by edge.
  p.seg_fwd.assign(static_cast<size_t>(ne), {});
  for (int e = 0; e < ne; ++e) {
    const EdgeRec& er = s.edges[static_cast<size_t>(e)];
    const int m = static_cast<int>(er.crossings.size());
    p.map.edge_names.push_back(er.id);
    for (int j = 0; j <= m; ++j) {
      int fwd = p.map.dart_count();
      int bwd = fwd + 1;
      p.map.darts.push_back({});
      p.map.darts.push_back({});
      p.map.darts[static_cast<size_t>(fwd)].twin = bwd;
      p.map.darts[static_cast<size_t>(bwd)].twin = fwd;
      p.map.dart_names.push_back(er.id + "[" + std::to_string(j) + "]>");
      p.map.dart_names.push_back(er.id + "[" + std::to_string(j) + "]<");
      p.map.segment_edge.push_back(e);
      p.map.segment_edge.push_back(e);
      p.seg_fwd[static_cast<size_t>(e)].push_back(fwd);
      p.dart_seg.push_back({e, j, true});
      p.dart_seg.push_back({e, j, false});
      // origins
      int from = (j == 0) ? p.vertex_index(er.tail)
                          : p.crossing_node(p.crossing_index(er.crossings[static_cast<size_t>(j - 1)]));
      int to = (j == m) ? p.vertex_index(er.head)
                        : p.crossing_node(p.crossing_index(er.crossings[static_cast<size_t>(j)]));
      p.map.darts[static_cast<size_t>(fwd)].origin = from;
      p.map.darts[static_cast<size_t>(bwd)].origin = to;
    }
  }

  // sigma at vertices, from rotations.
  std::vector<int> end_seen(static_cast<size_t>(2 * ne), 0);
  for (const auto& [vid, rot] : s.rotations)
    require(p.vertex_index(vid) >= 0, ErrorCode::DanglingReference, "rotation for unknown vertex " + vid);
  for (const auto& vid : s.vertices) {
    auto it = s.rotations.find(vid);
    std::vector<EdgeEnd> rot = (it == s.rotations.end()) ? std::vector<EdgeEnd>{} : it->second;
    std::vector<int> rdarts;
    for (const EdgeEnd& ee : rot) {
      int e = p.edge_index(ee.edge);
      require(e >= 0, ErrorCode::DanglingReference, "rotation of " + vid + " references edge " + ee.edge);
      const EdgeRec& er = s.edges[static_cast<size_t>(e)];
      const std::string& endpoint = ee.at_head ? er.head : er.tail;
      require(endpoint == vid, ErrorCode::DanglingReference,
              "rotation of " + vid + " lists end " + end_name(ee) + " which is attached to " + endpoint);
      int slot = 2 * e + (ee.at_head ? 1 : 0);
      require(end_seen[static_cast<size_t>(slot)]++ == 0, ErrorCode::ParseError,
              "edge end " + end_name(ee) + " appears twice in rotations");
      rdarts.push_back(p.end_dart(e, ee.at_head));
    }
    for (size_t k = 0; k < rdarts.size(); ++k)
      p.map.darts[static_cast<size_t>(rdarts[k])].next = rdarts[(k + 1) % rdarts.size()];
    if (rdarts.empty())
      p.diagnostics.push_back({"IsolatedVertex", vid, "vertex has degree 0"});
  }
  for (int e = 0; e < ne; ++e)
    for (int h = 0; h < 2; ++h)
      require(end_seen[static_cast<size_t>(2 * e + h)] == 1, ErrorCode::DanglingReference,
              "edge end " + s.edges[static_cast<size_t>(e)].id + (h ? "-" : "+") + " missing from its rotation");

  // sigma at crossings, from orientation bits.
  for (int xi = 0; xi < nc; ++xi) {
    const CrossingRec& xr = s.crossings[static_cast<size_t>(xi)];
    const auto& cp = p.crossing_pos[static_cast<size_t>(xi)];
    auto toward_tail = [&](int e, int pos) { return p.map.twin(p.seg_fwd[static_cast<size_t>(e)][static_cast<size_t>(pos)]); };
    auto toward_head = [&](int e, int pos) { return p.seg_fwd[static_cast<size_t>(e)][static_cast<size_t>(pos + 1)]; };
    int a_t = toward_tail(cp.first_edge, cp.first_pos);
    int a_h = toward_head(cp.first_edge, cp.first_pos);
    int b_t = toward_tail(cp.second_edge, cp.second_pos);
    int b_h = toward_head(cp.second_edge, cp.second_pos);
    std::vector<int> cycle = (xr.orientation == 1) ? std::vector<int>{a_t, b_t, a_h, b_h}
                                                   : std::vector<int>{a_t, b_h, a_h, b_t};
    for (size_t k = 0; k < 4; ++k)
      p.map.darts[static_cast<size_t>(cycle[k])].next = cycle[(k + 1) % 4];
  }

  auto local = p.map.validate_local_structure();
  require(local.empty(), ErrorCode::NonSphere,
          local.empty() ? "" : "local structure violation: " + format(local.front()));
  require(p.map.connected(), ErrorCode::DisconnectedMap, "planarization is disconnected");
  int chi = p.map.euler_characteristic();
  require(chi == 2, ErrorCode::NonSphere, "Euler characteristic " + std::to_string(chi) + ", expected 2");
  return p;
}

// Per-edge crossing counts and the 4-planarity flag.
struct CrossingCensus {
  std::map<std::string, int> per_edge;
  int max = 0;
  bool is_4_planar = true;
};

inline CrossingCensus crossing_census(const Planarization& p) {
  CrossingCensus c;
  for (const EdgeRec& e : p.spec.edges) {
    int k = static_cast<int>(e.crossings.size());
    c.per_edge[e.id] = k;
    c.max = std::max(c.max, k);
  }
  c.is_4_planar = c.max <= 4;
  return c;
}

struct HomotopyReport {
  // rule "HomotopicPair" (edge_a, edge_b) or "HomotopicLoop" (edge_a only)
  std::vector<Diagnostic> violations;
  // rule "NotChecked" for parallel pairs whose arcs cross each other and
  // for pairs of loops at a common basepoint
  std::vector<Diagnostic> not_checked;
};

namespace detail {

// Flood-fill over faces, never crossing a segment of a blocked edge set.
// Returns the set of reached face indices.
inline std::vector<char> face_flood(const CombMap& map, const std::vector<std::vector<int>>& faces,
                                    const std::vector<int>& face_of, const std::vector<int>& seeds,
                                    const std::vector<char>& blocked_edge) {
  std::vector<char> in(faces.size(), 0);
  std::vector<int> stack;
  for (int f : seeds)
    if (!in[static_cast<size_t>(f)]) {
      in[static_cast<size_t>(f)] = 1;
      stack.push_back(f);
    }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int d : faces[static_cast<size_t>(f)]) {
      if (blocked_edge[static_cast<size_t>(map.segment_edge[static_cast<size_t>(d)])]) continue;
      int g = face_of[static_cast<size_t>(map.twin(d))];
      if (!in[static_cast<size_t>(g)]) {
        in[static_cast<size_t>(g)] = 1;
        stack.push_back(g);
      }
    }
  }
  return in;
}

// Graph vertices having a corner in a face of `side`, minus `exclude`.
inline int side_vertex_count(const CombMap& map, const std::vector<std::vector<int>>& faces,
                             const std::vector<char>& side, const std::set<int>& exclude) {
  std::set<int> vs;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (!side[f]) continue;
    for (int d : faces[f]) {
      int o = map.origin(d);
      if (map.is_vertex(o) && !exclude.count(o)) vs.insert(o);
    }
  }
  return static_cast<int>(vs.size());
}

}  // namespace detail

// Detects homotopic parallel edges and loops: a pair (or loop) is reported
// when one of the two regions of its closed curve contains no graph vertex
// besides the curve's endpoints. Pairs whose arcs cross each other are not
// decided and reported as NotChecked.
inline HomotopyReport homotopy_violations(const Planarization& p) {
  HomotopyReport rep;
  const CombMap& map = p.map;
  auto faces = map.face_orbits();
  std::vector<int> face_of(static_cast<size_t>(map.dart_count()), -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (int d : faces[f]) face_of[static_cast<size_t>(d)] = static_cast<int>(f);

  const int ne = p.edge_count();
  // curve_edges come with a per-edge flag: true when the closed-curve walk
  // traverses the edge in its tail-to-head direction.
  auto curve_test = [&](const std::vector<std::pair<int, bool>>& curve_edges, const std::set<int>& endpoints) {
    std::vector<char> blocked(static_cast<size_t>(ne), 0);
    for (auto [e, along] : curve_edges) blocked[static_cast<size_t>(e)] = 1;
    std::vector<int> seeds_l, seeds_r;
    for (auto [e, along] : curve_edges) {
      for (int d : p.seg_fwd[static_cast<size_t>(e)]) {
        int fw = face_of[static_cast<size_t>(d)];
        int bw = face_of[static_cast<size_t>(map.twin(d))];
        seeds_l.push_back(along ? fw : bw);
        seeds_r.push_back(along ? bw : fw);
      }
    }
    auto left = detail::face_flood(map, faces, face_of, seeds_l, blocked);
    auto right = detail::face_flood(map, faces, face_of, seeds_r, blocked);
    int lv = detail::side_vertex_count(map, faces, left, endpoints);
    int rv = detail::side_vertex_count(map, faces, right, endpoints);
    return std::min(lv, rv);
  };

  // Loops, individually.
  for (int e = 0; e < ne; ++e) {
    const EdgeRec& er = p.spec.edges[static_cast<size_t>(e)];
    if (er.tail != er.head) continue;
    int base = p.vertex_index(er.tail);
    if (curve_test({{e, true}}, {base}) < 1)
      rep.violations.push_back({"HomotopicLoop", er.id, "loop has no graph vertex on one side"});
  }

  // Parallel pairs.
  for (int a = 0; a < ne; ++a) {
    const EdgeRec& ea = p.spec.edges[static_cast<size_t>(a)];
    for (int b = a + 1; b < ne; ++b) {
      const EdgeRec& eb = p.spec.edges[static_cast<size_t>(b)];
      std::pair<std::string, std::string> ka = std::minmax(ea.tail, ea.head);
      std::pair<std::string, std::string> kb = std::minmax(eb.tail, eb.head);
      if (ka != kb) continue;
      if (ea.tail == ea.head) {
        rep.not_checked.push_back({"NotChecked", ea.id + "," + eb.id, "pair of loops at a common basepoint"});
        continue;
      }
      bool cross = false;
      for (const auto& x : ea.crossings)
        if (std::find(eb.crossings.begin(), eb.crossings.end(), x) != eb.crossings.end()) cross = true;
      if (cross) {
        rep.not_checked.push_back({"NotChecked", ea.id + "," + eb.id, "parallel edges whose arcs cross each other"});
        continue;
      }
      // Walk the closed curve a tail-to-head, then back along b; b is
      // traversed with the walk iff its tail is a's head.
      std::vector<std::pair<int, bool>> curve{{a, true}, {b, eb.tail == ea.head}};
      std::set<int> endpoints{p.vertex_index(ea.tail), p.vertex_index(ea.head)};
      int inner = curve_test(curve, endpoints);
      if (inner < 1)
        rep.violations.push_back({"HomotopicPair", ea.id + "," + eb.id, "parallel edges bound a vertex-free region"});
    }
  }
  return rep;
}

// Crossings whose removal disconnects the planarization, computed as
// articulation points of the map restricted to Crossing nodes. Reported as
// diagnostics: such drawings still satisfy the bound, by a separate
// argument, so the certifier treats them as warnings.
inline std::vector<std::string> cut_crossings(const Planarization& p) {
  const CombMap& map = p.map;
  const int nn = map.node_count();
  // Adjacency with per-entry segment ids so that one occurrence of the tree
  // edge (but not parallel copies) is skipped.
  std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(nn));
  int eid = 0;
  for (int d = 0; d < map.dart_count(); d += 2) {
    int u = map.origin(d);
    int v = map.origin(map.twin(d));
    inc[static_cast<size_t>(u)].push_back({v, eid});
    inc[static_cast<size_t>(v)].push_back({u, eid});
    ++eid;
  }
  std::vector<int> disc(static_cast<size_t>(nn), -1), low(static_cast<size_t>(nn), 0);
  std::vector<char> art(static_cast<size_t>(nn), 0);
  int timer = 0;
  struct Frame { int node; int via_edge; size_t idx; int children; };
  for (int root = 0; root < nn; ++root) {
    if (disc[static_cast<size_t>(root)] != -1 || inc[static_cast<size_t>(root)].empty()) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.idx < inc[static_cast<size_t>(fr.node)].size()) {
        auto [to, e] = inc[static_cast<size_t>(fr.node)][fr.idx++];
        if (e == fr.via_edge) continue;
        if (disc[static_cast<size_t>(to)] != -1) {
          low[static_cast<size_t>(fr.node)] = std::min(low[static_cast<size_t>(fr.node)], disc[static_cast<size_t>(to)]);
        } else {
          ++fr.children;
          disc[static_cast<size_t>(to)] = low[static_cast<size_t>(to)] = timer++;
          stack.push_back({to, e, 0, 0});
        }
      } else {
        int node = fr.node;
        int children = fr.children;
        stack.pop_back();
        if (stack.empty()) {
          if (children > 1) art[static_cast<size_t>(node)] = 1;
        } else {
          int parent = stack.back().node;
          low[static_cast<size_t>(parent)] = std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(node)]);
          if (stack.size() > 1 && low[static_cast<size_t>(node)] >= disc[static_cast<size_t>(parent)])
            art[static_cast<size_t>(parent)] = 1;
        }
      }
    }
  }
  std::vector<std::string> out;
  for (int v = 0; v < nn; ++v)
    if (art[static_cast<size_t>(v)] && map.kind(v) == NodeKind::Crossing) out.push_back(map.node_name(v));
  return out;
}

}  // namespace fourplanar
