#pragma once

#include <array>
#include <string>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/drawing.hpp"
#include "fourplanar/faces.hpp"
#include "fourplanar/rational.hpp"

namespace fourplanar {

// Exact per-face charges, staged ch0..ch5. Faces settled inside H* blocks
// neither give nor receive in steps 1-5; charge never moves through planar
// edges.
struct ChargeState {
  int stage = 0;
  std::vector<Rational> charge;  // by face id
  std::vector<char> in_block;
  std::vector<Diagnostic> diagnostics;

  Rational total() const {
    Rational t = 0;
    for (const Rational& c : charge) t += c;
    return t;
  }
};

inline Rational required_charge(const FaceInfo& f) { return Rational(f.vcount, 3); }

// ch(f) = |f| + v(f) - 4 for every face; the grand total is 4n - 8 on a
// connected sphere planarization.
inline ChargeState initial_charges(const Planarization& p, const FaceTable& t) {
  ChargeState s;
  s.stage = 0;
  s.in_block.assign(static_cast<size_t>(t.count()), 0);
  for (const FaceInfo& f : t.faces) s.charge.push_back(Rational(f.size + f.vcount - 4));
  if (s.total() != Rational(4 * p.n() - 8))
    throw Error(ErrorCode::TotalMismatch,
                "initial charge " + to_frac_string(s.total()) + " != 4n-8; input is not a connected sphere drawing");
  return s;
}

// Settles every detected block: interior faces drop to exactly v(f)/3 and
// the remainder of the block's charge is parked on the central 0-triangle.
// Conservation is exact; a block whose interior holds less charge than
// needed is reported as BlockDeficit and the deficit stays on the center.
inline ChargeState settle_hstar_blocks(const Planarization& p, const FaceTable& t, ChargeState s,
                                       const HStarResult& blocks) {
  (void)p;
  if (s.stage != 0) throw Error(ErrorCode::StageOrder, "blocks must be settled before step 1");
  for (const HStarBlock& b : blocks.blocks) {
    Rational given = 0, needed = 0;
    for (int f : b.interior) {
      given += s.charge[static_cast<size_t>(f)];
      needed += required_charge(t.faces[static_cast<size_t>(f)]);
    }
    if (given < needed)
      s.diagnostics.push_back({"BlockDeficit", "face " + std::to_string(b.center),
                               "block holds " + to_frac_string(given) + " but needs " + to_frac_string(needed)});
    for (int f : b.interior) {
      s.charge[static_cast<size_t>(f)] = required_charge(t.faces[static_cast<size_t>(f)]);
      s.in_block[static_cast<size_t>(f)] = 1;
    }
    s.charge[static_cast<size_t>(b.center)] += given - needed;
  }
  return s;
}

namespace detail {

// The two sides of a 1-triangle shared with its 1-neighbors.
inline std::array<SideNeighbor, 2> one_sides(const Planarization& p, const FaceTable& t, int f) {
  std::array<SideNeighbor, 2> out{};
  size_t k = 0;
  for (const SideNeighbor& nb : i_neighbors(p, t, f))
    if (nb.i == 1 && k < 2) out[k++] = nb;
  if (k != 2) throw Error(ErrorCode::PreconditionFailed, "1-triangle without two 1-sides");
  return out;
}

}  // namespace detail

// One simultaneous discharging round. All transfers are computed from the
// previous stage's snapshot; block faces are excluded as donors and
// recipients.
inline ChargeState apply_step(const Planarization& p, const FaceTable& t, ChargeState s, int k) {
  if (k < 1 || k > 5) throw Error(ErrorCode::BadParameter, "step must be 1..5");
  if (s.stage != k - 1)
    throw Error(ErrorCode::StageOrder, "step " + std::to_string(k) + " applied at stage " + std::to_string(s.stage));
  const std::vector<Rational> snapshot = s.charge;
  std::vector<Rational> delta(static_cast<size_t>(t.count()), Rational(0));
  auto blocked = [&](int f) { return s.in_block[static_cast<size_t>(f)] != 0; };

  if (k == 1) {
    for (int f = 0; f < t.count(); ++f) {
      if (!t.is(f, "1-triangle") || blocked(f)) continue;
      auto sides = detail::one_sides(p, t, f);
      bool tri0 = t.is(sides[0].face, "2-triangle"), quad0 = t.is(sides[0].face, "1-quadrilateral");
      bool tri1 = t.is(sides[1].face, "2-triangle"), quad1 = t.is(sides[1].face, "1-quadrilateral");
      bool mixed = (tri0 && quad1) || (quad0 && tri1);
      for (const SideNeighbor& nb : sides) {
        bool donor = t.is(nb.face, "2-triangle") || (!mixed && t.is(nb.face, "1-quadrilateral"));
        if (!donor || blocked(nb.face)) continue;
        delta[static_cast<size_t>(f)] += Rational(1, 9);
        delta[static_cast<size_t>(nb.face)] -= Rational(1, 9);
      }
    }
  } else if (k == 2) {
    for (int f = 0; f < t.count(); ++f) {
      if (!t.is(f, "1-triangle") || blocked(f)) continue;
      auto sides = detail::one_sides(p, t, f);
      if (!t.is(sides[0].face, "1-triangle") || !t.is(sides[1].face, "1-triangle")) continue;
      for (const SideNeighbor& nb : sides) {
        // The outer 1-neighbor of nb.face: its 1-side that is not the one
        // shared with f.
        auto inner = detail::one_sides(p, t, nb.face);
        int shared = p.map.twin(nb.dart);
        int g = (inner[0].dart == shared) ? inner[1].face : inner[0].face;
        if (!t.is(g, "2-triangle"))
          s.diagnostics.push_back({"Step2Donor", "face " + std::to_string(g),
                                   "donor is a " + t.faces[static_cast<size_t>(g)].klass + ", not a 2-triangle"});
        if (blocked(g)) continue;
        delta[static_cast<size_t>(f)] += Rational(1, 18);
        delta[static_cast<size_t>(g)] -= Rational(1, 18);
      }
    }
  } else if (k == 3) {
    for (int f = 0; f < t.count(); ++f) {
      if (!t.is(f, "1-triangle") || blocked(f)) continue;
      Rational need = Rational(1, 3) - snapshot[static_cast<size_t>(f)];
      if (need <= 0) continue;  // clamp: nothing to pull
      WedgeChain w = wedge(p, t, f);
      const FaceInfo& wf = t.faces[static_cast<size_t>(w.terminal)];
      bool sanctioned = wf.klass == "1-quadrilateral" || (wf.vcount == 0 && wf.size >= 5);
      if (!sanctioned)
        s.diagnostics.push_back({"Step3Donor", "face " + std::to_string(w.terminal),
                                 "wedge-neighbor is a " + wf.klass});
      if (blocked(w.terminal)) continue;
      delta[static_cast<size_t>(f)] += need;
      delta[static_cast<size_t>(w.terminal)] -= need;
    }
  } else {  // k == 4 or 5
    for (int f = 0; f < t.count(); ++f) {
      if (blocked(f)) continue;
      Rational excess = snapshot[static_cast<size_t>(f)] - required_charge(t.faces[static_cast<size_t>(f)]);
      if (excess <= 0) continue;
      std::vector<int> recipients;
      for (const CornerNeighbor& cn : vertex_neighbors(p, t, f)) {
        if (cn.degenerate) {
          s.diagnostics.push_back({"SelfVertexNeighbor", "face " + std::to_string(f),
                                   "face is its own vertex-neighbor; occurrence skipped"});
          continue;
        }
        if (t.is(cn.face, "0-pentagon") && !blocked(cn.face)) recipients.push_back(cn.face);
      }
      if (recipients.empty()) continue;
      Rational share = excess / static_cast<int>(recipients.size());
      for (int g : recipients) delta[static_cast<size_t>(g)] += share;
      delta[static_cast<size_t>(f)] -= excess;
    }
  }

  for (int f = 0; f < t.count(); ++f) s.charge[static_cast<size_t>(f)] += delta[static_cast<size_t>(f)];
  s.stage = k;
  return s;
}

struct CertificateReport {
  bool certified = false;
  int n = 0;
  int edges = 0;
  int crossings = 0;
  Rational expected_total;                       // 4n - 8
  std::array<std::vector<Rational>, 6> stages;   // ch0..ch5 per face
  std::vector<Rational> required;                // v(f)/3 per face
  FaceTable faces;
  HStarResult blocks;
  std::vector<Diagnostic> diagnostics;
  std::vector<int> deficient_faces;
  BigInt bound_lhs;  // 2|E|, recounted as sum of v(f)
  BigInt bound_rhs;  // 3(4n-8)
};

// Whether every face class is among the ones the face census allows:
// 0-faces of size >= 3, 1-triangles, 1-quadrilaterals, 2- and 3-triangles.
inline bool census_allows(const FaceInfo& f) {
  if (f.size < 3) return false;
  if (f.vcount == 0) return true;
  if (f.vcount == 1) return f.size == 3 || f.size == 4;
  if (f.vcount == 2) return f.size == 3;
  if (f.vcount == 3) return f.size == 3;
  return false;
}

// Full certificate pipeline: initial charges, H*-block settlement, steps
// 1-5, verdict, and the independently recounted density bound.
inline CertificateReport certify(const Planarization& p) {
  if (p.n() < 3) throw Error(ErrorCode::BadParameter, "certificate requires n >= 3");
  CertificateReport rep;
  rep.n = p.n();
  rep.edges = p.edge_count();
  rep.crossings = p.crossing_count();
  rep.expected_total = Rational(4 * p.n() - 8);
  rep.faces = classify(p);
  const FaceTable& t = rep.faces;

  auto census = crossing_census(p);
  if (!census.is_4_planar)
    rep.diagnostics.push_back({"KPlanarity", "", "an edge has more than 4 crossings"});

  bool census_silent = true;
  for (const FaceInfo& f : t.faces) {
    if (!census_allows(f) && f.klass != "0-triangle") {
      census_silent = false;
      rep.diagnostics.push_back({"FaceCensus", "face " + std::to_string(f.id),
                                 "class " + f.klass + " cannot occur in a normalized drawing"});
    }
  }

  rep.blocks = detect_hstar(p, t);
  for (const Diagnostic& d : rep.blocks.diagnostics) {
    rep.diagnostics.push_back(d);
    if (d.rule == "PatternIncomplete" || d.rule == "OpenBlock" || d.rule == "OverlappingBlocks")
      census_silent = false;  // a 0-triangle stays outside every block
  }

  ChargeState s = initial_charges(p, t);
  rep.stages[0] = s.charge;
  s = settle_hstar_blocks(p, t, s, rep.blocks);
  for (int k = 1; k <= 5; ++k) {
    s = apply_step(p, t, s, k);
    rep.stages[static_cast<size_t>(k)] = s.charge;
    if (s.total() != rep.expected_total)
      throw Error(ErrorCode::TotalMismatch, "conservation broken after step " + std::to_string(k));
  }
  for (const Diagnostic& d : s.diagnostics) rep.diagnostics.push_back(d);

  rep.certified = true;
  for (const FaceInfo& f : t.faces) {
    rep.required.push_back(required_charge(f));
    if (s.charge[static_cast<size_t>(f.id)] < required_charge(f)) {
      rep.certified = false;
      rep.deficient_faces.push_back(f.id);
    }
  }

  // Conditional proposition checks, asserted only when the census is silent.
  if (census_silent) {
    for (const FaceInfo& f : t.faces) {
      if (s.in_block[static_cast<size_t>(f.id)]) continue;
      if (f.klass == "1-triangle" && rep.stages[2][static_cast<size_t>(f.id)] < Rational(1, 9))
        rep.diagnostics.push_back({"Prop1TriangleFloor", "face " + std::to_string(f.id),
                                   "ch2 = " + to_frac_string(rep.stages[2][static_cast<size_t>(f.id)]) + " < 1/9"});
      if (f.klass != "0-pentagon" && rep.stages[3][static_cast<size_t>(f.id)] < required_charge(f))
        rep.diagnostics.push_back({"PropEasyFaces", "face " + std::to_string(f.id),
                                   "unsatisfied after step 3 although not a 0-pentagon"});
      if (f.vcount == 0 && f.size >= 6 &&
          rep.stages[3][static_cast<size_t>(f.id)] - required_charge(f) < Rational(f.size, 9))
        rep.diagnostics.push_back({"PropLargeFaceExcess", "face " + std::to_string(f.id),
                                   "0-face excess after step 3 below |f|/9"});
    }
    for (const Diagnostic& d : s.diagnostics)
      if (d.rule == "Step2Donor" || d.rule == "Step3Donor")
        rep.diagnostics.push_back({"PropDonorClass", d.where, d.detail});
  }

  // Independent recount of the density chain: 2|E| = sum v(f).
  BigInt vsum = 0;
  for (const FaceInfo& f : t.faces) vsum += f.vcount;
  if (vsum != BigInt(2) * rep.edges)
    throw Error(ErrorCode::TotalMismatch, "sum of v(f) does not equal 2|E|");
  rep.bound_lhs = vsum;
  rep.bound_rhs = BigInt(3) * (BigInt(4) * rep.n - 8);
  if (rep.certified && rep.bound_lhs > rep.bound_rhs)
    throw Error(ErrorCode::TotalMismatch, "certified verdict contradicts the recounted bound");
  return rep;
}

}  // namespace fourplanar
