// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fourplanar/discharge.hpp"
#include "fourplanar/drawing.hpp"
#include "fourplanar/extremal.hpp"
#include "fourplanar/faces.hpp"
#include "fourplanar/io.hpp"
#include "fourplanar/rewrite.hpp"

using namespace fourplanar;

namespace {

int failures = 0;
std::vector<std::string> notes;

void verdict(int idx, const char* title, bool ok) {
  std::printf("%s  %d. %s\n", ok ? "PASS" : "FAIL", idx, title);
  if (!ok) ++failures;
  for (const std::string& n : notes) std::printf("      %s\n", n.c_str());
  notes.clear();
}

void note(const std::string& s) {
  if (notes.size() < 8) notes.push_back(s);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Removes edge `victim` together with all its crossings.
DrawingSpec remove_edge(DrawingSpec s, const std::string& victim) {
  std::vector<std::string> dead;
  for (auto it = s.edges.begin(); it != s.edges.end();) {
    if (it->id == victim) {
      dead = it->crossings;
      it = s.edges.erase(it);
    } else {
      ++it;
    }
  }
  auto gone = [&](const std::string& x) { return std::find(dead.begin(), dead.end(), x) != dead.end(); };
  for (auto& e : s.edges)
    e.crossings.erase(std::remove_if(e.crossings.begin(), e.crossings.end(), gone), e.crossings.end());
  s.crossings.erase(std::remove_if(s.crossings.begin(), s.crossings.end(),
                                   [&](const CrossingRec& x) { return gone(x.id); }),
                    s.crossings.end());
  for (auto& [v, rot] : s.rotations)
    rot.erase(std::remove_if(rot.begin(), rot.end(), [&](const EdgeEnd& ee) { return ee.edge == victim; }),
              rot.end());
  return s;
}

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
  s.rotations["v"] = {{"ea", true}, {"vy", false}};
  s.rotations["x"] = {{"eb", false}, {"ux", true}};
  s.rotations["y"] = {{"eb", true}, {"vy", true}};
  return s;
}

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

}  // namespace

int main() {
  // ---------------------------------------------------------------- 1
  {
    bool ok = true;
    for (int t : {2, 4, 6, 8, 10}) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        OptimalDrawing d = generate_optimal(t, 1);
        Planarization p = planarize(d.spec);
        if (p.n() != 2 * t + 2) ok = false, note("t=" + std::to_string(t) + ": wrong n");
        if (p.edge_count() != 12 * t) ok = false, note("t=" + std::to_string(t) + ": wrong |E|");
        if (p.edge_count() - 6 * (p.n() - 2) != 0) ok = false, note("t=" + std::to_string(t) + ": slack");
        if (!crossing_census(p).is_4_planar) ok = false, note("t=" + std::to_string(t) + ": not 4-planar");
        if (!homotopy_violations(p).violations.empty())
          ok = false, note("t=" + std::to_string(t) + ": homotopy violation");
        if (!cut_crossings(p).empty()) ok = false, note("t=" + std::to_string(t) + ": cut crossing");
      } catch (const Error& e) {
        ok = false;
        note(std::string("t=") + std::to_string(t) + ": " + e.what());
      }
      double dt = seconds_since(t0);
      if (dt >= 1.0) ok = false, note("t=" + std::to_string(t) + ": took " + std::to_string(dt) + " s");
    }
    verdict(1, "extremal family exact (t = 2,4,6,8,10; n = 2t+2, |E| = 12t, < 1 s each)", ok);
  }

  // ---------------------------------------------------------------- 2
  {
    bool ok = true;
    for (int t : {2, 4, 6, 8, 10}) {
      try {
        Planarization p = planarize(generate_optimal(t, 1).spec);
        CertificateReport rep = certify(p);
        if (!rep.certified) ok = false, note("t=" + std::to_string(t) + ": not certified");
        if (static_cast<int>(rep.blocks.blocks.size()) != t)
          ok = false, note("t=" + std::to_string(t) + ": block count != t");
        Rational ch5 = 0, req = 0;
        for (const Rational& c : rep.stages[5]) ch5 += c;
        for (const Rational& r : rep.required) req += r;
        if (ch5 != rep.expected_total || req != rep.expected_total || ch5 != req)
          ok = false, note("t=" + std::to_string(t) + ": zero-slack equality broken");
        for (const FaceInfo& f : rep.faces.faces)
          if (rep.stages[5][static_cast<size_t>(f.id)] != rep.required[static_cast<size_t>(f.id)]) {
            ok = false;
            note("t=" + std::to_string(t) + ": face " + std::to_string(f.id) + " has slack");
            break;
          }
      } catch (const Error& e) {
        ok = false;
        note(e.what());
      }
    }
    verdict(2, "certificate on the family (zero slack, exactly t blocks)", ok);
  }

  // ---------------------------------------------------------------- 3
  {
    bool ok = true;
    int blocks_seen = 0;
    std::vector<DrawingSpec> inputs;
    inputs.push_back(hexagon_with_all_diagonals(5).spec);
    for (int t : {2, 4, 6}) inputs.push_back(generate_optimal(t, 1).spec);
    for (const DrawingSpec& s : inputs) {
      try {
        Planarization p = planarize(s);
        FaceTable t = classify(p);
        HStarResult res = detect_hstar(p, t);
        for (const HStarBlock& b : res.blocks) {
          ++blocks_seen;
          if (b.interior.size() != 25) {
            ok = false;
            note("block interior has " + std::to_string(b.interior.size()) + " faces, expected 19 + 6");
          }
          Rational given = 0, needed = 0;
          for (int f : b.interior) {
            const FaceInfo& fi = t.faces[static_cast<size_t>(f)];
            given += Rational(fi.size + fi.vcount - 4);
            needed += required_charge(fi);
          }
          if (given != Rational(8) || needed != Rational(8)) {
            ok = false;
            note("block gives " + to_frac_string(given) + ", needs " + to_frac_string(needed) + ", expected 8 = 8");
          }
        }
      } catch (const Error& e) {
        ok = false;
        note(e.what());
      }
    }
    if (blocks_seen < 13) ok = false, note("only " + std::to_string(blocks_seen) + " blocks checked");
    verdict(3, "H* block accounting (given = needed = 8 on every 19+6-face interior)", ok);
  }

  // ---------------------------------------------------------------- 4 and 5 share a fuzzed corpus
  std::vector<DrawingSpec> fuzzed;
  {
    for (int t : {2, 4}) {
      for (uint64_t seed : {1ull, 2ull, 3ull}) {
        DrawingSpec base = generate_optimal(t, seed).spec;
        fuzzed.push_back(base);
        for (const EdgeRec& e : base.edges) {
          if (fuzzed.size() >= 140) break;
          DrawingSpec m = remove_edge(base, e.id);
          try {
            planarize(m);
          } catch (const Error&) {
            continue;  // mutation broke validity; skip it
          }
          fuzzed.push_back(std::move(m));
        }
      }
    }
  }
  {
    bool ok = fuzzed.size() >= 100;
    if (!ok) note("only " + std::to_string(fuzzed.size()) + " valid fuzzed drawings");
    int checked = 0;
    for (const DrawingSpec& s : fuzzed) {
      try {
        Planarization p = planarize(s);
        CertificateReport rep = certify(p);
        for (int k = 0; k <= 5; ++k) {
          Rational total = 0;
          for (const Rational& c : rep.stages[static_cast<size_t>(k)]) total += c;
          if (total != rep.expected_total) {
            ok = false;
            note("stage " + std::to_string(k) + " total " + to_frac_string(total) + " != 4n-8");
          }
        }
        // soundness side-condition: Certified implies the recounted bound
        if (rep.certified && rep.bound_lhs > rep.bound_rhs) ok = false, note("certified but bound violated");
        ++checked;
      } catch (const Error& e) {
        ok = false;
        note(e.what());
      }
    }
    verdict(4, ("conservation suite (" + std::to_string(checked) + " fuzzed drawings, stages 0-5 exact)").c_str(),
            ok);
  }

  // ---------------------------------------------------------------- 5
  {
    bool ok = true;
    for (const DrawingSpec& s : fuzzed) {
      Planarization p = planarize(s);
      FaceTable t = classify(p);
      int euler_faces = 2 - p.map.node_count() + p.map.segment_count();
      if (t.count() != euler_faces) {
        ok = false;
        note("orbit count " + std::to_string(t.count()) + " != Euler-derived " + std::to_string(euler_faces));
      }
    }
    FaceTable hex = classify(planarize(hexagon_with_all_diagonals(5).spec));
    auto want = [&](const char* k, int c) {
      if (!hex.census.count(k) || hex.census.at(k) != c) {
        ok = false;
        note(std::string("hex census: ") + k + " != " + std::to_string(c));
      }
    };
    want("0-triangle", 1);
    want("0-pentagon", 3);
    want("0-quadrilateral", 3);
    want("1-triangle", 12);
    want("2-triangle", 6);
    want("6-6-gon", 1);
    verdict(5, "census equals Euler-derived counts; hex interior census {1,3,3,12,6} + outer", ok);
  }

  // ---------------------------------------------------------------- 6
  {
    bool ok = true;
    int silent = 0;
    for (const DrawingSpec& s : fuzzed) {
      try {
        CertificateReport rep = certify(planarize(s));
        bool census_silent = true;
        for (const Diagnostic& d : rep.diagnostics)
          if (d.rule == "FaceCensus" || d.rule == "PatternIncomplete" || d.rule == "OpenBlock" ||
              d.rule == "OverlappingBlocks")
            census_silent = false;
        if (!census_silent) continue;
        ++silent;
        for (const Diagnostic& d : rep.diagnostics)
          if (d.rule == "Step2Donor" || d.rule == "Step3Donor" || d.rule == "PropDonorClass" ||
              d.rule == "Prop1TriangleFloor" || d.rule == "PropEasyFaces" || d.rule == "PropLargeFaceExcess") {
            ok = false;
            note(format(d));
          }
      } catch (const Error& e) {
        ok = false;
        note(e.what());
      }
    }
    if (silent == 0) ok = false, note("no census-silent drawing in the corpus");
    verdict(6, ("conditional proposition checks (" + std::to_string(silent) + " census-silent drawings, zero counterexamples)").c_str(),
            ok);
  }

  // ---------------------------------------------------------------- 7
  {
    bool ok = true;
    std::vector<DrawingSpec> corpus;
    corpus.push_back(empty_lens());
    corpus.push_back(vertex_lens());
    // fillable outer faces
    for (uint64_t seed : {1ull, 2ull, 3ull}) corpus.push_back(hexagon_with_all_diagonals(seed).spec);
    // a bare 0-triangle: the filled hexagon with its six short diagonals removed
    {
      DrawingSpec bare = hexagon_with_all_diagonals(5).spec;
      for (int k = 1; k <= 6; ++k) bare = remove_edge(bare, "h0_s" + std::to_string(k % 6 + 1));
      corpus.push_back(bare);
    }
    // single-edge deletions of extremal drawings: fillable holes
    for (int t : {2, 4}) {
      DrawingSpec base = generate_optimal(t, 1).spec;
      for (const EdgeRec& e : base.edges) {
        if (corpus.size() >= 60) break;
        DrawingSpec m = remove_edge(base, e.id);
        try {
          planarize(m);
        } catch (const Error&) {
          continue;
        }
        corpus.push_back(std::move(m));
      }
    }
    if (corpus.size() < 50) ok = false, note("corpus has only " + std::to_string(corpus.size()) + " drawings");

    int moves_checked = 0;
    for (const DrawingSpec& s : corpus) {
      try {
        NormalizeResult r = normalize(s);
        // every logged move must strictly improve the potential when replayed
        DrawingSpec cur = s;
        for (const RewriteMove& m : r.log) {
          Planarization p = planarize(cur);
          FaceTable ft = classify(p);
          HStarResult hb = detect_hstar(p, ft);
          DrawingSpec nxt = replay(cur, {m});
          Planarization q = planarize(nxt);
          FaceTable qt = classify(q);
          HStarResult qb = detect_hstar(q, qt);
          auto pot = [](const Planarization& pl, const HStarResult& bl) {
            return std::tuple<int, int, int>{-pl.edge_count(), -static_cast<int>(bl.blocks.size()),
                                             pl.crossing_count()};
          };
          if (!(pot(q, qb) < pot(p, hb))) {
            ok = false;
            note(std::string(move_name(m.kind)) + " did not improve the potential");
          }
          cur = std::move(nxt);
          ++moves_checked;
        }
        // fixpoint: every 0-triangle sits inside a block
        Planarization p = planarize(r.spec);
        FaceTable ft = classify(p);
        HStarResult hb = detect_hstar(p, ft);
        for (const FaceInfo& f : ft.faces)
          if (f.klass == "0-triangle" && hb.block_of[static_cast<size_t>(f.id)] == -1) {
            ok = false;
            note("0-triangle outside every block after normalize");
          }
        // replaying the full log reproduces the final file byte-identically
        if (serialize_drawing(replay(s, r.log)) != serialize_drawing(r.spec)) {
          ok = false;
          note("move-log replay differs from the normalized drawing");
        }
      } catch (const Error& e) {
        ok = false;
        note(e.what());
      }
    }
    verdict(7, ("rewrite monotonicity (" + std::to_string(moves_checked) + " moves over the corpus, byte-identical replay)").c_str(),
            ok);
  }

  // ---------------------------------------------------------------- 8
  {
    bool ok = true;
    try {
      OptimalDrawing d = generate_optimal(100, 1);
      Planarization p = planarize(d.spec);
      if (p.n() != 202 || p.edge_count() != 1200 || p.crossing_count() != 1500)
        ok = false, note("unexpected OPT(100) size");
      auto t0 = std::chrono::steady_clock::now();
      CertificateReport rep = certify(p);
      double dt = seconds_since(t0);
      if (!rep.certified) ok = false, note("OPT(100) not certified");
      if (dt >= 5.0) ok = false, note("certify took " + std::to_string(dt) + " s");
      note("certify on OPT(100): " + std::to_string(dt) + " s");
    } catch (const Error& e) {
      ok = false;
      note(e.what());
    }
    verdict(8, "desk-scale performance (certify OPT(100) in < 5 s)", ok);
  }

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
