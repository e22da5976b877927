#include <catch2/catch_amalgamated.hpp>

#include "fourplanar/discharge.hpp"
#include "fourplanar/extremal.hpp"
#include "fourplanar/rewrite.hpp"
#include "fixtures.hpp"
#include "geomspec.hpp"

using namespace fourplanar;

namespace {

int find_face(const FaceTable& t, const std::string& klass) {
  for (const FaceInfo& f : t.faces)
    if (f.klass == klass) return f.id;
  return -1;
}

// Two straight edges crossing twice cannot be drawn with segments, so the
// empty-lens fixtures are written out by hand. Edge a runs u -> v along the
// axis; edge b arcs from x over a and back down to y, crossing at c1, c2.
DrawingSpec empty_lens() {
  DrawingSpec s;
  s.vertices = {"u", "v", "x", "y"};
  s.edges.push_back({"ea", "u", "v", {"c1", "c2"}});
  s.edges.push_back({"eb", "x", "y", {"c1", "c2"}});
  s.edges.push_back({"ux", "u", "x", {}});
  s.edges.push_back({"vy", "v", "y", {}});
  s.crossings.push_back({"c1", "ea", "eb", +1});
  s.crossings.push_back({"c2", "ea", "eb", -1});
  s.rotations["u"] = {{"ea", false}, {"ux", false}};
  s.rotations["v"] = {{"vy", false}, {"ea", true}};
  s.rotations["x"] = {{"ux", true}, {"eb", false}};
  s.rotations["y"] = {{"eb", true}, {"vy", true}};
  return s;
}

// Lens with one corner at a shared endpoint w: a = w -> v straight, b
// leaves w above a, crosses it at c1 and ends at y; v and y are joined.
DrawingSpec vertex_lens() {
  DrawingSpec s;
  s.vertices = {"w", "v", "y"};
  s.edges.push_back({"ea", "w", "v", {"c1"}});
  s.edges.push_back({"eb", "w", "y", {"c1"}});
  s.edges.push_back({"vy", "v", "y", {}});
  s.crossings.push_back({"c1", "ea", "eb", -1});
  s.rotations["w"] = {{"ea", false}, {"eb", false}};
  s.rotations["v"] = {{"ea", true}, {"vy", false}};
  s.rotations["y"] = {{"vy", true}, {"eb", true}};
  return s;
}

// A 2-quadrilateral: planar edge v1 v2, flanked by edges toward a2 and a4
// which are both crossed by the long horizontal edge e3 = u -> w.
DrawingSpec two_vertex_face() {
  using geomspec::GSeg;
  using geomspec::qpt;
  std::vector<GSeg> segs = {
      {"e1", qpt(0, 0), qpt(4, 0)},
      {"e2", qpt(4, 0), qpt(3, 3)},
      {"e4", qpt(0, 0), qpt(1, 3)},
      {"e3", qpt(-2, 2), qpt(6, 2)},
  };
  std::map<std::string, oracle::QPt> names = {
      {"v1", qpt(0, 0)}, {"v2", qpt(4, 0)}, {"a2", qpt(3, 3)},
      {"a4", qpt(1, 3)}, {"u", qpt(-2, 2)}, {"w", qpt(6, 2)},
  };
  return geomspec::spec_from_segments(segs, names);
}

// A 1-pentagon: four pentagram chords plus two chord stubs meeting at the
// vertex v, which replaces one of the five star crossings.
DrawingSpec one_vertex_face() {
  using geomspec::GSeg;
  using geomspec::qpt;
  oracle::QPt p0 = qpt(0, 10), p1 = qpt(10, 3), p2 = qpt(6, -8), p3 = qpt(-6, -8), p4 = qpt(-10, 3);
  // v = intersection of chords p0p2 and p1p3
  oracle::QPt v{Rational(222, 59), Rational(-76, 59)};
  std::vector<GSeg> segs = {
      {"sa", p0, v},  // part of chord p0 -> p2
      {"sb", p3, v},  // part of chord p1 -> p3
      {"c2", p2, p4}, {"c3", p3, p0}, {"c4", p4, p1},
  };
  std::map<std::string, oracle::QPt> names = {
      {"p0", p0}, {"p1", p1}, {"p2", p2}, {"p3", p3}, {"p4", p4}, {"v", v},
  };
  return geomspec::spec_from_segments(segs, names);
}

// Hexagon boundary plus only the three long diagonals: a bare pairwise
// crossing triple whose 0-triangle sits in no block.
DrawingSpec bare_triple() {
  DrawingSpec s = hexagon_with_all_diagonals(5).spec;
  std::vector<std::string> shorts;
  for (const EdgeRec& e : s.edges)
    if (e.id.find("h0_s") == 0) shorts.push_back(e.id);
  REQUIRE(shorts.size() == 6);
  for (const std::string& id : shorts) rw::erase_edge(s, id);
  return s;
}

}  // namespace

TEST_CASE("fill splits a quadrilateral face") {
  Planarization p = planarize(fixtures::crossed_quad());
  FaceTable t = classify(p);
  int f = find_face(t, "4-quadrilateral");
  REQUIRE(f >= 0);
  MoveOutcome out = fill_face(p, t, f);
  CHECK(out.move.kind == MoveKind::Fill);
  CHECK(out.move.delta_edges == 1);
  Planarization q = planarize(out.spec);
  CHECK(q.edge_count() == p.edge_count() + 1);
  CHECK(q.crossing_count() == p.crossing_count());
  FaceTable qt = classify(q);
  CHECK(qt.count() == t.count() + 1);
  // the new edge is a crossing-free chord
  int ne = q.edge_index(out.move.edges[0]);
  REQUIRE(ne >= 0);
  CHECK(q.spec.edges[static_cast<size_t>(ne)].crossings.empty());
  CHECK(homotopy_violations(q).violations.empty());
}

TEST_CASE("fill refuses vertex-poor and small faces") {
  Planarization p = planarize(hexagon_with_all_diagonals(3).spec);
  FaceTable t = classify(p);
  int quad = find_face(t, "0-quadrilateral");
  int tri2 = find_face(t, "2-triangle");
  REQUIRE(quad >= 0);
  REQUIRE(tri2 >= 0);
  CHECK_THROWS_AS(fill_face(p, t, quad), Error);
  CHECK_THROWS_AS(fill_face(p, t, tri2), Error);
  try {
    fill_face(p, t, quad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoEligiblePair);
  }
}

TEST_CASE("bigon swap removes an empty lens") {
  Planarization p = planarize(empty_lens());
  REQUIRE(p.map.euler_characteristic() == 2);
  FaceTable t = classify(p);
  int f = find_face(t, "0-2-gon");
  REQUIRE(f >= 0);
  MoveOutcome out = swap_bigon(p, t, f);
  CHECK(out.move.kind == MoveKind::SwapBigon);
  CHECK(out.move.delta_crossings == -2);
  Planarization q = planarize(out.spec);
  CHECK(q.crossing_count() == 0);
  CHECK(q.edge_count() == p.edge_count());
  FaceTable qt = classify(q);
  for (const FaceInfo& fi : qt.faces) CHECK(fi.size != 2);
  CHECK(homotopy_violations(q).violations.empty());
}

TEST_CASE("bigon swap at a shared endpoint") {
  Planarization p = planarize(vertex_lens());
  REQUIRE(p.map.euler_characteristic() == 2);
  FaceTable t = classify(p);
  int f = find_face(t, "1-2-gon");
  REQUIRE(f >= 0);
  MoveOutcome out = swap_bigon(p, t, f);
  CHECK(out.move.delta_crossings == -1);
  Planarization q = planarize(out.spec);
  CHECK(q.crossing_count() == 0);
  CHECK(q.edge_count() == p.edge_count());
  FaceTable qt = classify(q);
  for (const FaceInfo& fi : qt.faces) CHECK(fi.size != 2);
}

TEST_CASE("reroute around a two-vertex face") {
  Planarization p = planarize(two_vertex_face());
  REQUIRE(p.map.euler_characteristic() == 2);
  FaceTable t = classify(p);
  int f = find_face(t, "2-quadrilateral");
  REQUIRE(f >= 0);
  MoveOutcome out = reroute_v2(p, t, f);
  CHECK(out.move.kind == MoveKind::RerouteV2);
  CHECK(out.move.delta_crossings <= -1);
  Planarization q = planarize(out.spec);
  CHECK(q.crossing_count() == 1);
  CHECK(q.edge_count() == p.edge_count());
  int e3 = q.edge_index("e3");
  REQUIRE(e3 >= 0);
  const EdgeRec& er = q.spec.edges[static_cast<size_t>(e3)];
  CHECK(er.crossings.size() == 1);  // the kept crossing with the flank edge
  CHECK(((er.tail == "u" && er.head == "v2") || (er.tail == "v2" && er.head == "u")));
  CHECK(homotopy_violations(q).violations.empty());
}

TEST_CASE("reroute around a one-vertex face") {
  Planarization p = planarize(one_vertex_face());
  REQUIRE(p.map.euler_characteristic() == 2);
  REQUIRE(p.crossing_count() == 4);
  FaceTable t = classify(p);
  int f = find_face(t, "1-pentagon");
  REQUIRE(f >= 0);
  MoveOutcome out = reroute_v1(p, t, f);
  CHECK(out.move.kind == MoveKind::RerouteV1);
  CHECK(out.move.delta_crossings <= -1);
  Planarization q = planarize(out.spec);
  CHECK(q.crossing_count() == p.crossing_count() + out.move.delta_crossings);
  CHECK(q.edge_count() == p.edge_count());
  CHECK(homotopy_violations(q).violations.empty());
}

TEST_CASE("hstar replacement builds a block") {
  DrawingSpec s = bare_triple();
  Planarization p = planarize(s);
  FaceTable t = classify(p);
  HStarResult blocks = detect_hstar(p, t);
  REQUIRE(blocks.blocks.empty());
  int f = find_face(t, "0-triangle");
  REQUIRE(f >= 0);

  MoveOutcome out = replace_with_hstar(p, t, blocks, f, 11);
  CHECK(out.move.kind == MoveKind::HStarReplace);
  CHECK(out.move.delta_edges == 6);  // three longs deleted, nine inserted
  Planarization q = planarize(out.spec);
  CHECK(q.edge_count() == 15);
  CHECK(q.crossing_count() == 15);
  FaceTable qt = classify(q);
  HStarResult qb = detect_hstar(q, qt);
  CHECK(qb.blocks.size() == 1);
  // same census as the fully filled hexagon
  FaceTable ht = classify(planarize(hexagon_with_all_diagonals(11).spec));
  CHECK(qt.census == ht.census);
}

TEST_CASE("hstar replacement refusals") {
  Planarization p = planarize(hexagon_with_all_diagonals(2).spec);
  FaceTable t = classify(p);
  HStarResult blocks = detect_hstar(p, t);
  REQUIRE(blocks.blocks.size() == 1);
  int center = blocks.blocks[0].center;
  try {
    replace_with_hstar(p, t, blocks, center);
    FAIL("expected AlreadyInBlock");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlreadyInBlock);
  }
  int tri2 = find_face(t, "2-triangle");
  try {
    replace_with_hstar(p, t, blocks, tri2);
    FAIL("expected NotA0Triangle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotA0Triangle);
  }
}

TEST_CASE("normalize: optimal drawings are fixed points") {
  OptimalDrawing d = generate_optimal(4, 13);
  NormalizeResult r = normalize(d.spec);
  CHECK(r.log.empty());
  Planarization q = planarize(r.spec);
  CHECK(q.edge_count() == 48);
  CHECK(certify(q).certified);
}

TEST_CASE("normalize fills the hexagon fixture") {
  DrawingSpec s = hexagon_with_all_diagonals(7).spec;
  NormalizeResult r = normalize(s);
  REQUIRE(r.log.size() == 3);
  for (const RewriteMove& m : r.log) CHECK(m.kind == MoveKind::Fill);
  Planarization q = planarize(r.spec);
  CHECK(q.edge_count() == 18);
  CHECK(q.crossing_count() == 15);
  FaceTable qt = classify(q);
  CHECK(qt.census.at("3-triangle") == 4);  // the outer hexagon, triangulated
  CHECK(certify(q).certified);
}

TEST_CASE("normalize resolves lenses") {
  NormalizeResult r = normalize(empty_lens());
  bool swapped = false;
  for (const RewriteMove& m : r.log) swapped |= (m.kind == MoveKind::SwapBigon);
  CHECK(swapped);
  Planarization q = planarize(r.spec);
  CHECK(q.crossing_count() == 0);
  CHECK(certify(q).certified);
}

TEST_CASE("normalize reroutes crossing-heavy faces") {
  Planarization before = planarize(two_vertex_face());
  NormalizeResult r = normalize(before.spec);
  bool rerouted = false;
  for (const RewriteMove& m : r.log) rerouted |= (m.kind == MoveKind::RerouteV2);
  CHECK(rerouted);
  Planarization q = planarize(r.spec);
  CHECK(q.crossing_count() < before.crossing_count());
  FaceTable qt = classify(q);
  for (const FaceInfo& fi : qt.faces) {
    CHECK(fi.size != 2);
    bool reroutable = (fi.vcount == 2 && fi.size >= 4) || (fi.vcount == 1 && fi.size >= 5);
    CHECK_FALSE(reroutable);
  }
  CHECK(homotopy_violations(q).violations.empty());
  CHECK(certify(q).certified);
}

TEST_CASE("normalize stops cleanly when a reroute would force homotopic edges") {
  // Filling the faces around the pentagram's central one-vertex face can add
  // a chord that makes any later rerouting of that face homotopic to it; the
  // blocked candidate is skipped and the run still ends at a valid fixpoint.
  Planarization before = planarize(one_vertex_face());
  NormalizeResult r = normalize(before.spec);
  CHECK_FALSE(r.log.empty());
  Planarization q = planarize(r.spec);
  CHECK(q.edge_count() > before.edge_count());
  CHECK(q.crossing_count() <= before.crossing_count());
  CHECK(homotopy_violations(q).violations.empty());
  CHECK(certify(q).certified);
}

TEST_CASE("normalize respects the iteration cap") {
  DrawingSpec s = hexagon_with_all_diagonals(7).spec;
  NormalizeOptions opt;
  opt.cap = 1;
  try {
    normalize(s, opt);
    FAIL("expected IterationCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IterationCapExceeded);
  }
}
