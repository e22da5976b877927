#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/drawing.hpp"

namespace fourplanar {

// Per-face record: |f| is the boundary orbit length, v(f) the number of
// orbit darts whose origin is a graph vertex. Bridges and repeated vertices
// are double-counted, as the walk sees them.
struct FaceInfo {
  int id = -1;
  std::vector<int> boundary;  // dart orbit
  int size = 0;
  int vcount = 0;
  std::string klass;
};

inline std::string face_class(int vcount, int size) {
  std::string v = std::to_string(vcount);
  switch (size) {
    case 3: return v + "-triangle";
    case 4: return v + "-quadrilateral";
    case 5: return v + "-pentagon";
    default: return v + "-" + std::to_string(size) + "-gon";
  }
}

class FaceTable {
 public:
  std::vector<FaceInfo> faces;
  std::vector<int> face_of;  // dart -> face id
  std::map<std::string, int> census;

  int face_at(int dart) const { return face_of[static_cast<size_t>(dart)]; }
  int count() const { return static_cast<int>(faces.size()); }
  bool is(int f, const char* klass) const { return faces[static_cast<size_t>(f)].klass == klass; }
};

inline FaceTable classify(const Planarization& p) {
  FaceTable t;
  auto orbits = p.map.face_orbits();
  t.face_of.assign(static_cast<size_t>(p.map.dart_count()), -1);
  for (size_t i = 0; i < orbits.size(); ++i) {
    FaceInfo fi;
    fi.id = static_cast<int>(i);
    fi.boundary = orbits[i];
    fi.size = static_cast<int>(orbits[i].size());
    for (int d : orbits[i]) {
      t.face_of[static_cast<size_t>(d)] = fi.id;
      if (p.map.is_vertex(p.map.origin(d))) ++fi.vcount;
    }
    fi.klass = face_class(fi.vcount, fi.size);
    ++t.census[fi.klass];
    t.faces.push_back(std::move(fi));
  }
  return t;
}

// Number of graph-vertex endpoints of the segment carrying dart d.
inline int side_i(const Planarization& p, int d) {
  int i = 0;
  if (p.map.is_vertex(p.map.origin(d))) ++i;
  if (p.map.is_vertex(p.map.origin(p.map.twin(d)))) ++i;
  return i;
}

struct SideNeighbor {
  int face = -1;
  int i = 0;
  int dart = -1;  // the side of f across which the neighbor lies
};

// Neighbors across each boundary segment of f, with i = number of graph
// vertices among the segment's endpoints.
inline std::vector<SideNeighbor> i_neighbors(const Planarization& p, const FaceTable& t, int f) {
  std::vector<SideNeighbor> out;
  for (int d : t.faces[static_cast<size_t>(f)].boundary)
    out.push_back({t.face_at(p.map.twin(d)), side_i(p, d), d});
  return out;
}

struct CornerNeighbor {
  int face = -1;
  int crossing = -1;  // node id
  int dart = -1;      // corner dart of f at the crossing
  bool degenerate = false;  // opposite corner belongs to f itself
};

// Faces occupying the opposite corner at each crossing corner of f, one
// entry per corner occurrence.
inline std::vector<CornerNeighbor> vertex_neighbors(const Planarization& p, const FaceTable& t, int f) {
  std::vector<CornerNeighbor> out;
  for (int d : t.faces[static_cast<size_t>(f)].boundary) {
    int x = p.map.origin(d);
    if (p.map.kind(x) != NodeKind::Crossing) continue;
    int opposite = p.map.next(p.map.next(d));
    int g = t.face_at(opposite);
    out.push_back({g, x, d, g == f});
  }
  return out;
}

struct WedgeChain {
  int origin_face = -1;               // the 1-triangle
  std::vector<int> chain;             // traversed 0-quadrilaterals
  int terminal = -1;                  // wedge-neighbor
  int terminal_entry_dart = -1;       // dart of terminal facing the chain
};

// The 0-side of a 1-triangle: its unique boundary segment with two crossing
// endpoints.
inline int zero_side(const Planarization& p, const FaceTable& t, int f) {
  for (int d : t.faces[static_cast<size_t>(f)].boundary)
    if (side_i(p, d) == 0) return d;
  throw Error(ErrorCode::PreconditionFailed, "face has no 0-side");
}

// Follows 0-neighbors from a 1-triangle through 0-quadrilaterals until the
// first non-0-quadrilateral, crossing each quadrilateral to the side two
// orbit steps away.
inline WedgeChain wedge(const Planarization& p, const FaceTable& t, int f) {
  if (!t.is(f, "1-triangle"))
    throw Error(ErrorCode::PreconditionFailed, "wedge origin must be a 1-triangle");
  WedgeChain w;
  w.origin_face = f;
  int entry = p.map.twin(zero_side(p, t, f));  // dart of the next face
  int cur = t.face_at(entry);
  while (t.is(cur, "0-quadrilateral")) {
    w.chain.push_back(cur);
    if (w.chain.size() > 4)
      throw Error(ErrorCode::ChainTooLong, "wedge of face " + std::to_string(f) + " traverses more than 4 quadrilaterals");
    int opposite = p.map.face_next(p.map.face_next(entry));
    entry = p.map.twin(opposite);
    cur = t.face_at(entry);
  }
  w.terminal = cur;
  w.terminal_entry_dart = entry;
  return w;
}

// The 19-face pattern around a 0-triangle plus its planar-cycle closure.
struct HStarBlock {
  int center = -1;
  std::array<int, 3> pentagons{};
  std::array<int, 3> quads{};
  std::array<int, 12> one_triangles{};
  std::vector<int> interior;        // all faces inside the planar cycle
  std::vector<int> boundary_darts;  // interior-side darts of the cycle
};

struct HStarResult {
  std::vector<HStarBlock> blocks;
  std::vector<int> block_of;  // face -> block index or -1
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

// 0-neighbors of a ring face that are outside the given exclusion set.
inline std::vector<int> remaining_zero_neighbors(const Planarization& p, const FaceTable& t, int f,
                                                 const std::set<int>& core) {
  std::vector<int> out;
  for (const SideNeighbor& nb : i_neighbors(p, t, f))
    if (nb.i == 0 && !core.count(nb.face)) out.push_back(nb.face);
  return out;
}

}  // namespace detail

// Pattern test per the H* definition: a 0-triangle whose 0-neighbors are
// 0-pentagons, whose vertex-neighbors are 0-quadrilaterals, and whose six
// ring faces each have two remaining 0-neighbors that are 1-triangles, all
// 19 faces distinct. Vertex identities are never inspected. On success the
// block closure is computed by flooding across crossed segments only.
inline HStarResult detect_hstar(const Planarization& p, const FaceTable& t) {
  HStarResult res;
  res.block_of.assign(static_cast<size_t>(t.count()), -1);

  std::vector<char> planar_edge(static_cast<size_t>(p.edge_count()), 0);
  for (int e = 0; e < p.edge_count(); ++e)
    planar_edge[static_cast<size_t>(e)] = p.spec.edges[static_cast<size_t>(e)].crossings.empty();

  for (int f = 0; f < t.count(); ++f) {
    if (!t.is(f, "0-triangle")) continue;
    HStarBlock blk;
    blk.center = f;
    std::set<int> distinct{f};
    bool ok = true;
    std::string why;

    auto sides = i_neighbors(p, t, f);
    for (size_t k = 0; k < 3 && ok; ++k) {
      int g = sides[k].face;
      if (!t.is(g, "0-pentagon")) { ok = false; why = "0-neighbor is a " + t.faces[static_cast<size_t>(g)].klass; }
      else if (!distinct.insert(g).second) { ok = false; why = "repeated pentagon"; }
      else blk.pentagons[k] = g;
    }
    auto corners = vertex_neighbors(p, t, f);
    for (size_t k = 0; ok && k < corners.size() && k < 3; ++k) {
      int g = corners[k].face;
      if (!t.is(g, "0-quadrilateral")) { ok = false; why = "vertex-neighbor is a " + t.faces[static_cast<size_t>(g)].klass; }
      else if (!distinct.insert(g).second) { ok = false; why = "repeated quadrilateral"; }
      else blk.quads[k] = g;
    }
    if (ok) {
      std::set<int> core(distinct);
      size_t ti = 0;
      std::vector<int> ring;
      ring.insert(ring.end(), blk.pentagons.begin(), blk.pentagons.end());
      ring.insert(ring.end(), blk.quads.begin(), blk.quads.end());
      for (int g : ring) {
        auto rest = detail::remaining_zero_neighbors(p, t, g, core);
        if (rest.size() != 2) { ok = false; why = "ring face has " + std::to_string(rest.size()) + " remaining 0-neighbors"; break; }
        for (int h : rest) {
          if (!t.is(h, "1-triangle")) { ok = false; why = "remaining 0-neighbor is a " + t.faces[static_cast<size_t>(h)].klass; break; }
          if (!distinct.insert(h).second) { ok = false; why = "repeated 1-triangle"; break; }
          blk.one_triangles[ti++] = h;
        }
        if (!ok) break;
      }
      if (ok && ti != 12) { ok = false; why = "expected 12 distinct 1-triangles"; }
    }
    if (!ok) {
      res.diagnostics.push_back({"PatternIncomplete", "face " + std::to_string(f), why});
      continue;
    }

    // Block closure: flood across crossed segments, stop at planar edges.
    std::vector<char> in(static_cast<size_t>(t.count()), 0);
    std::vector<int> stack(distinct.begin(), distinct.end());
    for (int g : stack) in[static_cast<size_t>(g)] = 1;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (int d : t.faces[static_cast<size_t>(g)].boundary) {
        int e = p.map.segment_edge[static_cast<size_t>(d)];
        if (planar_edge[static_cast<size_t>(e)]) continue;
        int h = t.face_at(p.map.twin(d));
        if (!in[static_cast<size_t>(h)]) {
          in[static_cast<size_t>(h)] = 1;
          stack.push_back(h);
        }
      }
    }
    int covered = 0;
    for (char c : in) covered += c;
    if (covered == t.count()) {
      res.diagnostics.push_back({"OpenBlock", "face " + std::to_string(f), "closure reaches every face; no planar cycle surrounds the pattern"});
      continue;
    }
    bool overlap = false;
    for (int g = 0; g < t.count(); ++g) {
      if (!in[static_cast<size_t>(g)]) continue;
      if (res.block_of[static_cast<size_t>(g)] != -1) overlap = true;
      blk.interior.push_back(g);
      for (int d : t.faces[static_cast<size_t>(g)].boundary)
        if (!in[static_cast<size_t>(t.face_at(p.map.twin(d)))]) blk.boundary_darts.push_back(d);
    }
    if (overlap) {
      res.diagnostics.push_back({"OverlappingBlocks", "face " + std::to_string(f),
                                 "block closure shares faces with an earlier block; dropped"});
      continue;
    }
    int idx = static_cast<int>(res.blocks.size());
    for (int g : blk.interior) res.block_of[static_cast<size_t>(g)] = idx;
    res.blocks.push_back(std::move(blk));
  }
  return res;
}

}  // namespace fourplanar
