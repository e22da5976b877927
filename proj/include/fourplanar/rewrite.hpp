#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/drawing.hpp"
#include "fourplanar/extremal.hpp"
#include "fourplanar/faces.hpp"

namespace fourplanar {

enum class MoveKind { Fill, SwapBigon, RerouteV2, RerouteV1, HStarReplace };

inline const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::Fill: return "Fill";
    case MoveKind::SwapBigon: return "SwapBigon";
    case MoveKind::RerouteV2: return "RerouteV2";
    case MoveKind::RerouteV1: return "RerouteV1";
    case MoveKind::HStarReplace: return "HStarReplace";
  }
  return "?";
}

struct RewriteMove {
  MoveKind kind = MoveKind::Fill;
  int face = -1;                   // face id at the time of the move
  std::vector<std::string> edges;  // edges touched or created
  int delta_edges = 0;
  int delta_blocks = 0;
  int delta_crossings = 0;
};

struct MoveOutcome {
  DrawingSpec spec;
  RewriteMove move;
};

namespace rw {

inline EdgeRec& edge_by_id(DrawingSpec& s, const std::string& id) {
  for (EdgeRec& e : s.edges)
    if (e.id == id) return e;
  throw Error(ErrorCode::DanglingReference, "edge " + id + " not in drawing");
}

inline CrossingRec& crossing_by_id(DrawingSpec& s, const std::string& id) {
  for (CrossingRec& x : s.crossings)
    if (x.id == id) return x;
  throw Error(ErrorCode::DanglingReference, "crossing " + id + " not in drawing");
}

inline std::string fresh_edge_id(const DrawingSpec& s, const std::string& stem) {
  std::set<std::string> used;
  for (const EdgeRec& e : s.edges) used.insert(e.id);
  for (int k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

inline void remove_rotation_entry(DrawingSpec& s, const std::string& vertex, const EdgeEnd& ee) {
  auto& rot = s.rotations[vertex];
  auto it = std::find(rot.begin(), rot.end(), ee);
  if (it == rot.end())
    throw Error(ErrorCode::DanglingReference, "end " + end_name(ee) + " missing at " + vertex);
  rot.erase(it);
}

inline void insert_rotation_before(DrawingSpec& s, const std::string& vertex, const EdgeEnd& anchor,
                                   const EdgeEnd& ee) {
  auto& rot = s.rotations[vertex];
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end())
    throw Error(ErrorCode::DanglingReference, "anchor " + end_name(anchor) + " missing at " + vertex);
  rot.insert(it, ee);
}

inline void insert_rotation_after(DrawingSpec& s, const std::string& vertex, const EdgeEnd& anchor,
                                  const EdgeEnd& ee) {
  auto& rot = s.rotations[vertex];
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end())
    throw Error(ErrorCode::DanglingReference, "anchor " + end_name(anchor) + " missing at " + vertex);
  rot.insert(it + 1, ee);
}

// Flips the direction of an edge in place: tail/head swap, crossing list
// reversal, at_head flips in the rotations and an orientation flip at every
// crossing the edge passes (one strand reverses).
inline void reverse_edge(DrawingSpec& s, const std::string& id) {
  EdgeRec& e = edge_by_id(s, id);
  std::swap(e.tail, e.head);
  std::reverse(e.crossings.begin(), e.crossings.end());
  for (auto& [v, rot] : s.rotations)
    for (EdgeEnd& ee : rot)
      if (ee.edge == id) ee.at_head = !ee.at_head;
  for (CrossingRec& x : s.crossings)
    if (x.first == id || x.second == id) x.orientation = -x.orientation;
}

// Deletes a crossing record and its occurrences on both edge lists.
inline void erase_crossing(DrawingSpec& s, const std::string& xid) {
  CrossingRec rec = crossing_by_id(s, xid);
  for (const std::string& eid : {rec.first, rec.second}) {
    EdgeRec& e = edge_by_id(s, eid);
    e.crossings.erase(std::remove(e.crossings.begin(), e.crossings.end(), xid), e.crossings.end());
  }
  s.crossings.erase(std::remove_if(s.crossings.begin(), s.crossings.end(),
                                   [&](const CrossingRec& x) { return x.id == xid; }),
                    s.crossings.end());
}

// Deletes an edge outright: its record, rotation entries and crossings.
inline void erase_edge(DrawingSpec& s, const std::string& id) {
  EdgeRec victim = edge_by_id(s, id);
  std::vector<std::string> xs = victim.crossings;
  for (const std::string& xid : xs) erase_crossing(s, xid);
  for (auto& [v, rot] : s.rotations)
    rot.erase(std::remove_if(rot.begin(), rot.end(), [&](const EdgeEnd& ee) { return ee.edge == id; }),
              rot.end());
  s.edges.erase(std::remove_if(s.edges.begin(), s.edges.end(),
                               [&](const EdgeRec& e) { return e.id == id; }),
                s.edges.end());
}

// Swaps the parts of edges a and b between their shared endpoint w and
// their crossing x. Removes x; crossings on the swapped parts change their
// parent edge but keep their strand directions (both tails keep running
// toward w), so orientations are untouched.
inline void vertex_crossing_swap(DrawingSpec& s, const std::string& aid, const std::string& bid,
                                 const std::string& w, const std::string& xid) {
  {
    EdgeRec& a0 = edge_by_id(s, aid);
    EdgeRec& b0 = edge_by_id(s, bid);
    if (a0.tail == a0.head || b0.tail == b0.head)
      throw Error(ErrorCode::PreconditionFailed, "segment swap at a loop is not supported");
    if (a0.head != w) reverse_edge(s, aid);
    if (b0.head != w) reverse_edge(s, bid);
  }
  EdgeRec& a = edge_by_id(s, aid);
  EdgeRec& b = edge_by_id(s, bid);
  if (a.head != w || b.head != w)
    throw Error(ErrorCode::PreconditionFailed, "edges do not share endpoint " + w);
  auto pos = [](const EdgeRec& e, const std::string& x) {
    auto it = std::find(e.crossings.begin(), e.crossings.end(), x);
    if (it == e.crossings.end())
      throw Error(ErrorCode::DanglingReference, "crossing " + x + " not on edge " + e.id);
    return static_cast<size_t>(it - e.crossings.begin());
  };
  size_t ia = pos(a, xid), ib = pos(b, xid);
  std::vector<std::string> a_tail(a.crossings.begin() + static_cast<long>(ia) + 1, a.crossings.end());
  std::vector<std::string> b_tail(b.crossings.begin() + static_cast<long>(ib) + 1, b.crossings.end());
  a.crossings.resize(ia);
  b.crossings.resize(ib);
  a.crossings.insert(a.crossings.end(), b_tail.begin(), b_tail.end());
  b.crossings.insert(b.crossings.end(), a_tail.begin(), a_tail.end());
  // Relabel the moved strands.
  std::set<std::string> to_a(b_tail.begin(), b_tail.end());
  std::set<std::string> to_b(a_tail.begin(), a_tail.end());
  for (CrossingRec& x : s.crossings) {
    bool in_a = to_a.count(x.id) > 0, in_b = to_b.count(x.id) > 0;
    if (!in_a && !in_b) continue;
    for (std::string* field : {&x.first, &x.second}) {
      if (*field == bid && in_a) *field = aid;
      else if (*field == aid && in_b) *field = bid;
    }
  }
  // The two ends at w trade places in the rotation.
  for (EdgeEnd& ee : s.rotations[w]) {
    if (ee.edge == aid && ee.at_head) ee.edge = bid;
    else if (ee.edge == bid && ee.at_head) ee.edge = aid;
  }
  erase_crossing(s, xid);
}

// Swaps the parts of edges a and b between their two crossings x1, x2.
// Removes both crossings; strands moved against their old direction flip
// the orientation bit of every crossing they pass.
inline void crossing_crossing_swap(DrawingSpec& s, const std::string& aid, const std::string& bid,
                                   std::string x1, std::string x2) {
  EdgeRec& a = edge_by_id(s, aid);
  EdgeRec& b = edge_by_id(s, bid);
  auto pos = [](const EdgeRec& e, const std::string& x) {
    auto it = std::find(e.crossings.begin(), e.crossings.end(), x);
    if (it == e.crossings.end())
      throw Error(ErrorCode::DanglingReference, "crossing " + x + " not on edge " + e.id);
    return static_cast<size_t>(it - e.crossings.begin());
  };
  if (pos(a, x1) > pos(a, x2)) std::swap(x1, x2);
  size_t i1 = pos(a, x1), i2 = pos(a, x2);
  size_t j1 = pos(b, x1), j2 = pos(b, x2);
  bool antiparallel = j1 > j2;

  std::vector<std::string> a_mid(a.crossings.begin() + static_cast<long>(i1) + 1,
                                 a.crossings.begin() + static_cast<long>(i2));
  std::vector<std::string> b_mid;
  if (!antiparallel)
    b_mid.assign(b.crossings.begin() + static_cast<long>(j1) + 1, b.crossings.begin() + static_cast<long>(j2));
  else
    b_mid.assign(b.crossings.begin() + static_cast<long>(j2) + 1, b.crossings.begin() + static_cast<long>(j1));

  std::vector<std::string> new_a, new_b;
  new_a.insert(new_a.end(), a.crossings.begin(), a.crossings.begin() + static_cast<long>(i1));
  std::vector<std::string> b_mid_in_a = b_mid;
  if (antiparallel) std::reverse(b_mid_in_a.begin(), b_mid_in_a.end());
  new_a.insert(new_a.end(), b_mid_in_a.begin(), b_mid_in_a.end());
  new_a.insert(new_a.end(), a.crossings.begin() + static_cast<long>(i2) + 1, a.crossings.end());

  std::vector<std::string> a_mid_in_b = a_mid;
  if (antiparallel) std::reverse(a_mid_in_b.begin(), a_mid_in_b.end());
  if (!antiparallel) {
    new_b.insert(new_b.end(), b.crossings.begin(), b.crossings.begin() + static_cast<long>(j1));
    new_b.insert(new_b.end(), a_mid_in_b.begin(), a_mid_in_b.end());
    new_b.insert(new_b.end(), b.crossings.begin() + static_cast<long>(j2) + 1, b.crossings.end());
  } else {
    new_b.insert(new_b.end(), b.crossings.begin(), b.crossings.begin() + static_cast<long>(j2));
    new_b.insert(new_b.end(), a_mid_in_b.begin(), a_mid_in_b.end());
    new_b.insert(new_b.end(), b.crossings.begin() + static_cast<long>(j1) + 1, b.crossings.end());
  }
  a.crossings = new_a;
  b.crossings = new_b;

  std::set<std::string> to_a(b_mid.begin(), b_mid.end());
  std::set<std::string> to_b(a_mid.begin(), a_mid.end());
  for (CrossingRec& x : s.crossings) {
    bool in_a = to_a.count(x.id) > 0, in_b = to_b.count(x.id) > 0;
    if (!in_a && !in_b) continue;
    for (std::string* field : {&x.first, &x.second}) {
      if (*field == bid && in_a) *field = aid;
      else if (*field == aid && in_b) *field = bid;
    }
    // a strand that reverses direction flips the sign once
    if (antiparallel && (in_a != in_b)) x.orientation = -x.orientation;
  }
  erase_crossing(s, x1);
  erase_crossing(s, x2);
}

inline int violation_count(const DrawingSpec& s) {
  return static_cast<int>(homotopy_violations(planarize(s)).violations.size());
}

}  // namespace rw

// Inserts a crossing-free edge inside face f between two vertex corner
// occurrences that are not already joined by a planar edge along f's
// boundary. Tries eligible pairs in boundary order and keeps the first one
// that does not create a homotopic pair.
inline MoveOutcome fill_face(const Planarization& p, const FaceTable& t, int f) {
  const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
  if (fi.vcount < 2 || fi.size < 4)
    throw Error(ErrorCode::NoEligiblePair,
                "fill needs v(f) >= 2 and |f| >= 4, face is a " + fi.klass);

  std::vector<int> corners;  // boundary positions with vertex origins
  for (size_t k = 0; k < fi.boundary.size(); ++k)
    if (p.map.is_vertex(p.map.origin(fi.boundary[k]))) corners.push_back(static_cast<int>(k));

  // positions joined by one whole planar edge along the boundary
  auto joined = [&](int ka, int kb) {
    int n = fi.size;
    for (auto [x, y] : {std::pair<int, int>{ka, kb}, {kb, ka}}) {
      if ((x + 1) % n != y) continue;
      int d = fi.boundary[static_cast<size_t>(x)];
      const auto& sr = p.dart_seg[static_cast<size_t>(d)];
      if (p.spec.edges[static_cast<size_t>(sr.edge)].crossings.empty()) return true;
    }
    return false;
  };

  int baseline = static_cast<int>(homotopy_violations(p).violations.size());
  bool homotopy_blocked = false;
  for (size_t i = 0; i < corners.size(); ++i) {
    for (size_t j = i + 1; j < corners.size(); ++j) {
      if (joined(corners[i], corners[j])) continue;
      int da = fi.boundary[static_cast<size_t>(corners[i])];
      int db = fi.boundary[static_cast<size_t>(corners[j])];
      DrawingSpec s = p.spec;
      std::string id = rw::fresh_edge_id(s, "q");
      std::string va = p.map.node_name(p.map.origin(da));
      std::string vb = p.map.node_name(p.map.origin(db));
      s.edges.push_back({id, va, vb, {}});
      rw::insert_rotation_before(s, va, edge_end_of_dart(p, da), {id, false});
      rw::insert_rotation_before(s, vb, edge_end_of_dart(p, db), {id, true});
      if (rw::violation_count(s) > baseline) {
        homotopy_blocked = true;
        continue;
      }
      RewriteMove mv{MoveKind::Fill, f, {id}, +1, 0, 0};
      return {std::move(s), mv};
    }
  }
  if (homotopy_blocked)
    throw Error(ErrorCode::HomotopyCreated, "every eligible chord of face " + std::to_string(f) +
                                                " would duplicate an existing edge up to homotopy");
  throw Error(ErrorCode::NoEligiblePair, "no chordable vertex pair on face " + std::to_string(f));
}

// Removes an empty lens: the two segments bounding a 0-2-gon or 1-2-gon are
// exchanged between their edges, dropping two crossings or one.
inline MoveOutcome swap_bigon(const Planarization& p, const FaceTable& t, int f) {
  const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
  if (fi.size != 2 || fi.vcount > 1)
    throw Error(ErrorCode::PreconditionFailed, "bigon swap needs a 0-2-gon or 1-2-gon, face is a " + fi.klass);
  int d0 = fi.boundary[0], d1 = fi.boundary[1];
  int ea = p.map.segment_edge[static_cast<size_t>(d0)];
  int eb = p.map.segment_edge[static_cast<size_t>(d1)];
  if (ea == eb)
    throw Error(ErrorCode::PreconditionFailed, "both sides of the bigon lie on one edge");
  std::string aid = p.spec.edges[static_cast<size_t>(ea)].id;
  std::string bid = p.spec.edges[static_cast<size_t>(eb)].id;

  DrawingSpec s = p.spec;
  RewriteMove mv{MoveKind::SwapBigon, f, {aid, bid}, 0, 0, 0};
  if (fi.vcount == 0) {
    // both corners are crossings of the same two edges
    rw::erase_crossing(s, p.map.node_name(p.map.origin(d0)));
    rw::erase_crossing(s, p.map.node_name(p.map.origin(d1)));
    mv.delta_crossings = -2;
  } else {
    int vd = p.map.is_vertex(p.map.origin(d0)) ? d0 : d1;
    int xd = (vd == d0) ? d1 : d0;
    std::string w = p.map.node_name(p.map.origin(vd));
    std::string xid = p.map.node_name(p.map.origin(xd));
    rw::vertex_crossing_swap(s, aid, bid, w, xid);
    mv.delta_crossings = -1;
  }
  return {std::move(s), mv};
}

namespace rw {

// Shared tail of both reroutes: cut edge `eid` just after crossing `xid`
// and run it across the face to vertex `v_dest`, entering the face corner
// in front of `anchor`. The crossing x is kept (the new edge crosses its
// partner's boundary segment at the same list position); everything past x
// toward the old head is deleted.
inline void reroute_edge(DrawingSpec& s, const std::string& eid, const std::string& xid,
                         const std::string& v_dest, const EdgeEnd& anchor) {
  {
    EdgeRec& e0 = edge_by_id(s, eid);
    if (e0.tail == e0.head)
      throw Error(ErrorCode::PreconditionFailed, "rerouting a loop is not supported");
  }
  // orient so that the kept part is the tail part
  {
    EdgeRec& e = edge_by_id(s, eid);
    auto it = std::find(e.crossings.begin(), e.crossings.end(), xid);
    if (it == e.crossings.end())
      throw Error(ErrorCode::DanglingReference, "crossing " + xid + " not on edge " + eid);
  }
  EdgeRec& e = edge_by_id(s, eid);
  size_t ix = static_cast<size_t>(std::find(e.crossings.begin(), e.crossings.end(), xid) - e.crossings.begin());
  std::vector<std::string> removed(e.crossings.begin() + static_cast<long>(ix) + 1, e.crossings.end());
  std::string old_head = e.head;
  for (const std::string& x : removed) erase_crossing(s, x);
  remove_rotation_entry(s, old_head, {eid, true});
  insert_rotation_before(s, v_dest, anchor, {eid, true});
  edge_by_id(s, eid).head = v_dest;
}

// Fig-4-style repair: if the reroute produced an edge homotopic to e', undo
// nothing but instead resolve in the original drawing by a segment swap.
inline std::optional<DrawingSpec> repair_homotopy(const DrawingSpec& original, const DrawingSpec& moved,
                                                  const std::string& eid) {
  auto rep = homotopy_violations(planarize(moved));
  for (const Diagnostic& d : rep.violations) {
    if (d.rule != "HomotopicPair") continue;
    auto comma = d.where.find(',');
    std::string a = d.where.substr(0, comma), b = d.where.substr(comma + 1);
    if (a != eid && b != eid) continue;
    std::string partner = (a == eid) ? b : a;
    // in the original drawing the two must cross; swap at the crossing
    DrawingSpec s = original;
    const EdgeRec& ee = edge_by_id(s, eid);
    const EdgeRec& pe = edge_by_id(s, partner);
    std::vector<std::string> common;
    for (const std::string& x : ee.crossings)
      if (std::find(pe.crossings.begin(), pe.crossings.end(), x) != pe.crossings.end()) common.push_back(x);
    std::set<std::string> shared_vs;
    for (const std::string& v : {ee.tail, ee.head})
      if (v == pe.tail || v == pe.head) shared_vs.insert(v);
    if (!common.empty() && !shared_vs.empty()) {
      vertex_crossing_swap(s, eid, partner, *shared_vs.begin(), common.front());
      return s;
    }
    if (common.size() >= 2) {
      crossing_crossing_swap(s, eid, partner, common[0], common[1]);
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace rw

// Reroutes the third boundary edge of a 2-vertex face of size >= 4 to v1,
// removing at least two crossings. Requires the planar edge v1v2 on f's
// boundary (fill the face first otherwise).
inline MoveOutcome reroute_v2(const Planarization& p, const FaceTable& t, int f) {
  const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
  if (fi.vcount != 2 || fi.size < 4)
    throw Error(ErrorCode::PreconditionFailed, "reroute needs a 2-vertex face of size >= 4, got " + fi.klass);
  // the planar side: a whole crossing-free edge between the two vertices
  int start = -1;
  for (size_t k = 0; k < fi.boundary.size(); ++k) {
    int d = fi.boundary[k];
    const auto& sr = p.dart_seg[static_cast<size_t>(d)];
    if (side_i(p, d) == 2 && p.spec.edges[static_cast<size_t>(sr.edge)].crossings.empty()) {
      start = static_cast<int>(k);
      break;
    }
  }
  if (start < 0)
    throw Error(ErrorCode::PreconditionFailed,
                "face " + std::to_string(f) + " has no planar edge between its two vertices; fill first");
  auto at = [&](int off) { return fi.boundary[static_cast<size_t>((start + off) % fi.size)]; };
  int d0 = at(0), d2 = at(2);
  // x is the crossing shared by the two boundary sides after the planar
  // edge; the third side's edge is rerouted across f to the planar edge's
  // near endpoint, crossing the second side's last segment (x is kept)
  std::string v1 = p.map.node_name(p.map.origin(d0));
  std::string x = p.map.node_name(p.map.origin(d2));
  int e3 = p.map.segment_edge[static_cast<size_t>(d2)];
  std::string eid = p.spec.edges[static_cast<size_t>(e3)].id;

  DrawingSpec s = p.spec;
  {
    // keep the part of e3 on the far side of x: if y (= the next corner)
    // comes before x in the crossing list, reverse the edge first
    EdgeRec& e = rw::edge_by_id(s, eid);
    std::string y = p.map.node_name(p.map.origin(at(3)));
    auto posof = [&](const std::string& id) {
      return std::find(e.crossings.begin(), e.crossings.end(), id) - e.crossings.begin();
    };
    if (posof(y) < posof(x)) rw::reverse_edge(s, eid);
  }
  int before = static_cast<int>(p.crossing_count());
  int baseline = static_cast<int>(homotopy_violations(p).violations.size());
  rw::reroute_edge(s, eid, x, v1, edge_end_of_dart(p, d0));
  RewriteMove mv{MoveKind::RerouteV2, f, {eid}, 0, 0, static_cast<int>(s.crossings.size()) - before};
  if (mv.delta_crossings >= 0)
    throw Error(ErrorCode::PreconditionFailed, "reroute did not remove a crossing");
  if (rw::violation_count(s) > baseline) {
    auto fixed = rw::repair_homotopy(p.spec, s, eid);
    if (!fixed)
      throw Error(ErrorCode::HomotopyCreated, "reroute of " + eid + " created a homotopic pair");
    mv.delta_crossings = static_cast<int>(fixed->crossings.size()) - before;
    if (mv.delta_crossings >= 0)
      throw Error(ErrorCode::HomotopyCreated, "homotopy repair did not remove a crossing");
    return {std::move(*fixed), mv};
  }
  return {std::move(s), mv};
}

// Reroutes the second boundary edge of a 1-vertex face of size >= 5 to its
// vertex, removing at least two crossings.
inline MoveOutcome reroute_v1(const Planarization& p, const FaceTable& t, int f) {
  const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
  if (fi.vcount != 1 || fi.size < 5)
    throw Error(ErrorCode::PreconditionFailed, "reroute needs a 1-vertex face of size >= 5, got " + fi.klass);
  int start = -1;
  for (size_t k = 0; k < fi.boundary.size(); ++k)
    if (p.map.is_vertex(p.map.origin(fi.boundary[k]))) start = static_cast<int>(k);
  auto at = [&](int off) { return fi.boundary[static_cast<size_t>((start + off) % fi.size)]; };
  int d0 = at(0), d1 = at(1);
  std::string v = p.map.node_name(p.map.origin(d0));
  std::string x = p.map.node_name(p.map.origin(d1));  // crossing of e1 and e2
  int e2 = p.map.segment_edge[static_cast<size_t>(d1)];
  std::string eid = p.spec.edges[static_cast<size_t>(e2)].id;

  DrawingSpec s = p.spec;
  {
    EdgeRec& e = rw::edge_by_id(s, eid);
    std::string y = p.map.node_name(p.map.origin(at(2)));
    auto posof = [&](const std::string& id) {
      return std::find(e.crossings.begin(), e.crossings.end(), id) - e.crossings.begin();
    };
    if (posof(y) < posof(x)) rw::reverse_edge(s, eid);
  }
  int before = static_cast<int>(p.crossing_count());
  int baseline = static_cast<int>(homotopy_violations(p).violations.size());
  rw::reroute_edge(s, eid, x, v, edge_end_of_dart(p, d0));
  RewriteMove mv{MoveKind::RerouteV1, f, {eid}, 0, 0, static_cast<int>(s.crossings.size()) - before};
  if (mv.delta_crossings >= 0)
    throw Error(ErrorCode::PreconditionFailed, "reroute did not remove a crossing");
  if (rw::violation_count(s) > baseline) {
    auto fixed = rw::repair_homotopy(p.spec, s, eid);
    if (!fixed)
      throw Error(ErrorCode::HomotopyCreated, "reroute of " + eid + " created a homotopic pair");
    mv.delta_crossings = static_cast<int>(fixed->crossings.size()) - before;
    if (mv.delta_crossings >= 0)
      throw Error(ErrorCode::HomotopyCreated, "homotopy repair did not remove a crossing");
    return {std::move(*fixed), mv};
  }
  return {std::move(s), mv};
}

// Replaces the neighborhood of a 0-triangle that is in no detected block:
// its three edges and every edge crossing them are deleted, and the
// canonical nine-diagonal pattern is drawn into the resulting hole.
inline MoveOutcome replace_with_hstar(const Planarization& p, const FaceTable& t, const HStarResult& blocks,
                                      int f, uint64_t seed = 0) {
  const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
  if (fi.klass != "0-triangle")
    throw Error(ErrorCode::NotA0Triangle, "replacement target is a " + fi.klass);
  if (blocks.block_of[static_cast<size_t>(f)] != -1)
    throw Error(ErrorCode::AlreadyInBlock, "0-triangle already sits inside a block");

  std::set<std::string> tri;
  for (int d : fi.boundary)
    tri.insert(p.spec.edges[static_cast<size_t>(p.map.segment_edge[static_cast<size_t>(d)])].id);
  if (tri.size() != 3)
    throw Error(ErrorCode::PreconditionFailed, "0-triangle not bounded by three distinct edges");

  // multiset of the six endpoints, with the edge they belong to
  std::vector<std::pair<std::string, std::string>> want;  // (vertex, edge)
  DrawingSpec s = p.spec;
  for (const std::string& eid : tri) {
    const EdgeRec& e = rw::edge_by_id(s, eid);
    want.push_back({e.tail, eid});
    want.push_back({e.head, eid});
  }

  // victims: the triangle edges plus everything crossing them
  std::set<std::string> victims(tri.begin(), tri.end());
  for (const std::string& eid : tri)
    for (const std::string& xid : rw::edge_by_id(s, eid).crossings) {
      const CrossingRec& x = rw::crossing_by_id(s, xid);
      victims.insert(x.first);
      victims.insert(x.second);
    }
  int deleted = static_cast<int>(victims.size());
  for (const std::string& eid : victims) rw::erase_edge(s, eid);

  Planarization hole = planarize(s);  // throws if the rest fell apart
  auto orbits = hole.map.face_orbits();

  // find a face whose vertex corners contain the six endpoints so that
  // opposite slots carry the two endpoints of one deleted edge
  for (const auto& orbit : orbits) {
    std::vector<int> vdarts;
    for (int d : orbit)
      if (hole.map.is_vertex(hole.map.origin(d))) vdarts.push_back(d);
    if (vdarts.size() < 6) continue;
    int m = static_cast<int>(vdarts.size());
    // pick six corner occurrences in orbit order matching the endpoint
    // multiset; opposite-slot pairing is rotation invariant, so scanning
    // linear subsequences suffices
    std::vector<int> pick;
    std::vector<char> used(want.size(), 0);
    std::function<bool(int, int)> search = [&](int from, int depth) -> bool {
      if (depth == 6) {
        // opposite slots must pair up along one deleted edge
        for (int k = 0; k < 3; ++k) {
          std::string va = hole.map.node_name(hole.map.origin(vdarts[static_cast<size_t>(pick[static_cast<size_t>(k)])]));
          std::string vb = hole.map.node_name(hole.map.origin(vdarts[static_cast<size_t>(pick[static_cast<size_t>(k + 3)])]));
          bool ok = false;
          for (const EdgeRec& e : p.spec.edges)
            if (tri.count(e.id) &&
                ((e.tail == va && e.head == vb) || (e.tail == vb && e.head == va)))
              ok = true;
          if (!ok) return false;
        }
        return true;
      }
      for (int k = from; k < m; ++k) {
        std::string v = hole.map.node_name(hole.map.origin(vdarts[static_cast<size_t>(k)]));
        for (size_t w = 0; w < want.size(); ++w) {
          if (used[w] || want[w].first != v) continue;
          used[w] = 1;
          pick.push_back(k);
          if (search(k + 1, depth + 1)) return true;
          pick.pop_back();
          used[w] = 0;
          break;  // endpoints of equal name are interchangeable
        }
      }
      return false;
    };
    if (!search(0, 0)) continue;
    std::array<int, 6> corners{};
    for (int k = 0; k < 6; ++k) corners[static_cast<size_t>(k)] = vdarts[static_cast<size_t>(pick[static_cast<size_t>(k)])];
    HexPattern pat = make_hex_pattern(seed);
    std::string prefix = rw::fresh_edge_id(s, "hx") + "_";
    insert_hexagon_diagonals_into_face(s, hole, corners, pat, prefix);
    RewriteMove mv{MoveKind::HStarReplace, f, std::vector<std::string>(tri.begin(), tri.end()),
                   9 - deleted, +1, 0};
    mv.delta_crossings = static_cast<int>(s.crossings.size()) - p.crossing_count();
    if (mv.delta_edges < 0)
      throw Error(ErrorCode::PreconditionFailed, "replacement would lower the edge count");
    return {std::move(s), mv};
  }
  throw Error(ErrorCode::PreconditionFailed,
              "no face of the stripped drawing exposes the six endpoints in hexagon position");
}

struct NormalizeOptions {
  uint64_t seed = 0;
  int cap = 0;  // 0: use the default 50 * (n + |E| + crossings)
};

struct NormalizeResult {
  DrawingSpec spec;
  std::vector<RewriteMove> log;
};

// Applies the best available move (Fill, then HStarReplace, then
// SwapBigon/Reroutes; smallest face id breaks ties) until the drawing is
// normal: no fillable face, every 0-triangle in a block, no 2-gons, no
// reroutable face.
inline NormalizeResult normalize(const DrawingSpec& input, NormalizeOptions opt = {}) {
  NormalizeResult out;
  out.spec = input;
  Planarization p0 = planarize(input);
  int cap = opt.cap > 0 ? opt.cap : 50 * (p0.n() + p0.edge_count() + p0.crossing_count());

  for (int iter = 0; iter < cap; ++iter) {
    Planarization p = planarize(out.spec);
    FaceTable t = classify(p);
    HStarResult blocks = detect_hstar(p, t);

    std::optional<MoveOutcome> chosen;
    // Fill
    for (int f = 0; f < t.count() && !chosen; ++f) {
      const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
      if (fi.vcount < 2 || fi.size < 4) continue;
      try {
        chosen = fill_face(p, t, f);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoEligiblePair && e.code() != ErrorCode::HomotopyCreated) throw;
      }
    }
    // HStarReplace
    for (int f = 0; f < t.count() && !chosen; ++f) {
      if (!t.is(f, "0-triangle") || blocks.block_of[static_cast<size_t>(f)] != -1) continue;
      try {
        chosen = replace_with_hstar(p, t, blocks, f, opt.seed);
      } catch (const Error&) {
        // stripping may disconnect the drawing or expose no hexagon; skip
      }
    }
    // SwapBigon / Reroutes
    for (int f = 0; f < t.count() && !chosen; ++f) {
      const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
      try {
        if (fi.size == 2 && fi.vcount <= 1)
          chosen = swap_bigon(p, t, f);
        else if (fi.vcount == 2 && fi.size >= 4)
          chosen = reroute_v2(p, t, f);
        else if (fi.vcount == 1 && fi.size >= 5)
          chosen = reroute_v1(p, t, f);
      } catch (const Error&) {
        // not applicable to this face after all; try the next one
      }
    }
    if (!chosen) return out;

    // the move must strictly improve (-|E|, -#blocks, #crossings)
    Planarization q = planarize(chosen->spec);
    FaceTable qt = classify(q);
    HStarResult qb = detect_hstar(q, qt);
    auto pot = [](int e, int b, int c) { return std::tuple<int, int, int>{-e, -b, c}; };
    auto before = pot(p.edge_count(), static_cast<int>(blocks.blocks.size()), p.crossing_count());
    auto after = pot(q.edge_count(), static_cast<int>(qb.blocks.size()), q.crossing_count());
    if (!(after < before))
      throw Error(ErrorCode::PreconditionFailed,
                  std::string("move ") + move_name(chosen->move.kind) + " did not improve the potential");
    chosen->move.delta_edges = q.edge_count() - p.edge_count();
    chosen->move.delta_blocks = static_cast<int>(qb.blocks.size()) - static_cast<int>(blocks.blocks.size());
    chosen->move.delta_crossings = q.crossing_count() - p.crossing_count();
    out.log.push_back(chosen->move);
    out.spec = std::move(chosen->spec);
  }
  throw Error(ErrorCode::IterationCapExceeded,
              "normalization did not settle within " + std::to_string(cap) + " moves");
}

// Re-applies a recorded move sequence. Face ids are resolved against the
// planarization recomputed before each move, so a log produced by
// `normalize` replays to the same drawing when given the same seed.
inline DrawingSpec replay(const DrawingSpec& input, const std::vector<RewriteMove>& log, uint64_t seed = 0) {
  DrawingSpec s = input;
  for (const RewriteMove& m : log) {
    Planarization p = planarize(s);
    FaceTable t = classify(p);
    MoveOutcome out = [&]() -> MoveOutcome {
      switch (m.kind) {
        case MoveKind::Fill: return fill_face(p, t, m.face);
        case MoveKind::SwapBigon: return swap_bigon(p, t, m.face);
        case MoveKind::RerouteV2: return reroute_v2(p, t, m.face);
        case MoveKind::RerouteV1: return reroute_v1(p, t, m.face);
        case MoveKind::HStarReplace: {
          HStarResult blocks = detect_hstar(p, t);
          return replace_with_hstar(p, t, blocks, m.face, seed);
        }
      }
      throw Error(ErrorCode::BadParameter, "unknown move kind in log");
    }();
    s = std::move(out.spec);
  }
  return s;
}

}  // namespace fourplanar
