#pragma once

#include <array>
#include <string>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/drawing.hpp"
#include "fourplanar/hexgeom.hpp"

namespace fourplanar {

// Edge end (as an EdgeEnd value) of an end dart, i.e. a dart whose origin
// is a graph vertex and which starts or finishes its edge.
inline EdgeEnd edge_end_of_dart(const Planarization& p, int dart) {
  const auto& sr = p.dart_seg[static_cast<size_t>(dart)];
  const EdgeRec& er = p.spec.edges[static_cast<size_t>(sr.edge)];
  const int last = static_cast<int>(er.crossings.size());
  if (sr.fwd && sr.seg == 0) return {er.id, false};
  if (!sr.fwd && sr.seg == last) return {er.id, true};
  throw Error(ErrorCode::PreconditionFailed, "dart " + p.map.dart_names[static_cast<size_t>(dart)] + " is not an end dart");
}

// Inserts the nine-diagonal pattern into one face of the drawing. The six
// corner darts must be orbit darts of a single face, given in face-orbit
// order, each with a graph-vertex origin. `p` is the planarization of `s`
// before any insertion; several faces of the same planarization can be
// filled in sequence because insertions only add rotation entries next to
// ends that already exist.
inline void insert_hexagon_diagonals_into_face(DrawingSpec& s, const Planarization& p,
                                               const std::array<int, 6>& corner_darts, const HexPattern& pat,
                                               const std::string& prefix) {
  std::array<std::string, 6> corner_vertex;
  for (int k = 0; k < 6; ++k) {
    int o = p.map.origin(corner_darts[static_cast<size_t>(k)]);
    if (!p.map.is_vertex(o))
      throw Error(ErrorCode::PreconditionFailed, "hexagon corner is not a graph vertex");
    corner_vertex[static_cast<size_t>(k)] = p.map.node_name(o);
  }
  auto diag_id = [&](int d) { return prefix + pat.diags[static_cast<size_t>(d)].tag; };
  auto x_id = [&](int xi) { return prefix + "x" + std::to_string(xi); };

  for (size_t xi = 0; xi < pat.xs.size(); ++xi) {
    const auto& x = pat.xs[xi];
    s.crossings.push_back({x_id(static_cast<int>(xi)), diag_id(x.d1), diag_id(x.d2), x.orientation});
  }
  for (size_t d = 0; d < pat.diags.size(); ++d) {
    const auto& dg = pat.diags[d];
    EdgeRec er;
    er.id = diag_id(static_cast<int>(d));
    er.tail = corner_vertex[static_cast<size_t>(dg.a)];
    er.head = corner_vertex[static_cast<size_t>(dg.b)];
    for (int xi : dg.crossings) er.crossings.push_back(x_id(xi));
    s.edges.push_back(std::move(er));
  }
  for (int k = 0; k < 6; ++k) {
    EdgeEnd anchor = edge_end_of_dart(p, corner_darts[static_cast<size_t>(k)]);
    auto& rot = s.rotations[corner_vertex[static_cast<size_t>(k)]];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end())
      throw Error(ErrorCode::DanglingReference, "rotation anchor " + end_name(anchor) + " missing");
    std::vector<EdgeEnd> add;
    for (int d : pat.corner_order[static_cast<size_t>(k)])
      add.push_back({diag_id(d), pat.diags[static_cast<size_t>(d)].b == k});
    rot.insert(it, add.begin(), add.end());
  }
}

// Planar triangulation of the sphere built by s stacking insertions into
// the 3-cycle; t = 2 + 2s triangular faces.
inline DrawingSpec stacked_triangulation(int s) {
  if (s < 0) throw Error(ErrorCode::BadParameter, "stacking count must be >= 0");
  DrawingSpec spec;
  spec.vertices = {"u1", "u2", "u3"};
  spec.edges.push_back({"t1", "u1", "u2", {}});
  spec.edges.push_back({"t2", "u2", "u3", {}});
  spec.edges.push_back({"t3", "u3", "u1", {}});
  spec.rotations["u1"] = {{"t1", false}, {"t3", true}};
  spec.rotations["u2"] = {{"t2", false}, {"t1", true}};
  spec.rotations["u3"] = {{"t3", false}, {"t2", true}};
  int next_vertex = 4, next_edge = 4;
  for (int step = 0; step < s; ++step) {
    Planarization p = planarize(spec);
    auto faces = p.map.face_orbits();
    const auto& orbit = faces.front();  // deterministic choice
    std::string w = "u" + std::to_string(next_vertex++);
    spec.vertices.push_back(w);
    std::array<std::string, 3> eid;
    std::vector<EdgeEnd> wrot;
    for (int k = 0; k < 3; ++k) {
      eid[static_cast<size_t>(k)] = "t" + std::to_string(next_edge++);
      std::string corner = p.map.node_name(p.map.origin(orbit[static_cast<size_t>(k)]));
      spec.edges.push_back({eid[static_cast<size_t>(k)], w, corner, {}});
      EdgeEnd anchor = edge_end_of_dart(p, orbit[static_cast<size_t>(k)]);
      auto& rot = spec.rotations[corner];
      auto it = std::find(rot.begin(), rot.end(), anchor);
      rot.insert(it, EdgeEnd{eid[static_cast<size_t>(k)], true});
    }
    // Seen from inside the face, the corners of the clockwise face walk
    // appear clockwise, so the ccw rotation at w reverses the orbit order.
    spec.rotations[w] = {{eid[2], false}, {eid[1], false}, {eid[0], false}};
  }
  return spec;
}

// Subdivides every edge once: each triangle becomes a hexagon whose corners
// alternate original vertices and subdivision vertices.
inline DrawingSpec hexangulate(const DrawingSpec& tri) {
  DrawingSpec h;
  h.vertices = tri.vertices;
  for (const EdgeRec& e : tri.edges) {
    if (!e.crossings.empty()) throw Error(ErrorCode::BadParameter, "triangulation must be crossing-free");
    std::string m = "m_" + e.id;
    h.vertices.push_back(m);
    h.edges.push_back({e.id + "a", e.tail, m, {}});
    h.edges.push_back({e.id + "b", m, e.head, {}});
    h.rotations[m] = {{e.id + "a", true}, {e.id + "b", false}};
  }
  for (const auto& [v, rot] : tri.rotations) {
    auto& out = h.rotations[v];
    for (const EdgeEnd& ee : rot)
      out.push_back(ee.at_head ? EdgeEnd{ee.edge + "b", true} : EdgeEnd{ee.edge + "a", false});
  }
  return h;
}

struct HexLayout {
  std::string prefix;
  std::array<std::string, 6> corners;
  std::array<Pt, 6> corner_xy;
  std::vector<std::pair<std::string, std::pair<double, double>>> crossing_xy;
};

struct OptimalDrawing {
  DrawingSpec spec;
  std::vector<HexLayout> hexes;
  uint64_t seed = 0;
};

// Fills every hexagonal face of a hexangulation with the nine-diagonal
// pattern and returns the drawing plus per-hexagon coordinates.
inline OptimalDrawing add_hexagon_diagonals(const DrawingSpec& hex, uint64_t seed = 0) {
  OptimalDrawing out;
  out.seed = seed;
  out.spec = hex;
  HexPattern pat = make_hex_pattern(seed);
  Planarization p = planarize(hex);
  auto faces = p.map.face_orbits();
  int idx = 0;
  for (const auto& orbit : faces) {
    if (orbit.size() != 6)
      throw Error(ErrorCode::BadParameter, "input face of size " + std::to_string(orbit.size()) + " is not a hexagon");
    std::array<int, 6> corners{};
    for (int k = 0; k < 6; ++k) corners[static_cast<size_t>(k)] = orbit[static_cast<size_t>(k)];
    std::string prefix = "h" + std::to_string(idx++) + "_";
    insert_hexagon_diagonals_into_face(out.spec, p, corners, pat, prefix);
    HexLayout lay;
    lay.prefix = prefix;
    for (int k = 0; k < 6; ++k) {
      lay.corners[static_cast<size_t>(k)] = p.map.node_name(p.map.origin(corners[static_cast<size_t>(k)]));
      lay.corner_xy[static_cast<size_t>(k)] = pat.corner_xy[static_cast<size_t>(k)];
    }
    for (size_t xi = 0; xi < pat.xs.size(); ++xi)
      lay.crossing_xy.push_back({prefix + "x" + std::to_string(xi), pat.xs_xy[xi]});
    out.hexes.push_back(std::move(lay));
  }
  return out;
}

// Optimal 4-planar drawing with t hexagons: n = 2t + 2 and |E| = 12t,
// attaining |E| = 6(n - 2) exactly.
inline OptimalDrawing generate_optimal(int t, uint64_t seed = 0) {
  if (t < 2 || t % 2 != 0)
    throw Error(ErrorCode::BadParameter, "hexagon count must be even and >= 2, got " + std::to_string(t));
  DrawingSpec tri = stacked_triangulation((t - 2) / 2);
  return add_hexagon_diagonals(hexangulate(tri), seed);
}

// The single-hexagon fixture: a 6-cycle with all nine diagonals drawn into
// one of its two faces (15 crossings, 26 faces).
inline OptimalDrawing hexagon_with_all_diagonals(uint64_t seed = 0) {
  OptimalDrawing out;
  out.seed = seed;
  DrawingSpec s;
  for (int k = 1; k <= 6; ++k) s.vertices.push_back("v" + std::to_string(k));
  for (int k = 1; k <= 6; ++k) {
    std::string tail = "v" + std::to_string(k);
    std::string head = "v" + std::to_string(k % 6 + 1);
    s.edges.push_back({"b" + std::to_string(k), tail, head, {}});
  }
  for (int k = 1; k <= 6; ++k) {
    std::string prev = "b" + std::to_string((k + 4) % 6 + 1);
    s.rotations["v" + std::to_string(k)] = {{"b" + std::to_string(k), false}, {prev, true}};
  }
  HexPattern pat = make_hex_pattern(seed);
  Planarization p = planarize(s);
  auto faces = p.map.face_orbits();
  const auto& orbit = faces.front();
  std::array<int, 6> corners{};
  for (int k = 0; k < 6; ++k) corners[static_cast<size_t>(k)] = orbit[static_cast<size_t>(k)];
  out.spec = s;
  insert_hexagon_diagonals_into_face(out.spec, p, corners, pat, "h0_");
  HexLayout lay;
  lay.prefix = "h0_";
  for (int k = 0; k < 6; ++k) {
    lay.corners[static_cast<size_t>(k)] = p.map.node_name(p.map.origin(corners[static_cast<size_t>(k)]));
    lay.corner_xy[static_cast<size_t>(k)] = pat.corner_xy[static_cast<size_t>(k)];
  }
  for (size_t xi = 0; xi < pat.xs.size(); ++xi)
    lay.crossing_xy.push_back({"h0_x" + std::to_string(xi), pat.xs_xy[xi]});
  out.hexes.push_back(std::move(lay));
  return out;
}

}  // namespace fourplanar
