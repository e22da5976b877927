#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/rational.hpp"

namespace fourplanar {

// Exact straight-line geometry for the canonical nine-diagonal hexagon.
// Corners are listed CLOCKWISE in the plane so that they match the order in
// which a face orbit (which keeps its face on the right) visits them.

struct Pt {
  int64_t x = 0, y = 0;
  bool operator==(const Pt&) const = default;
};

inline int64_t cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
inline Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
inline int sign(int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Orientation of the triple (a, b, c): +1 counterclockwise.
inline int orient(Pt a, Pt b, Pt c) { return sign(cross(sub(b, a), sub(c, a))); }

inline bool properly_cross(Pt a1, Pt a2, Pt b1, Pt b2) {
  return orient(a1, a2, b1) * orient(a1, a2, b2) < 0 && orient(b1, b2, a1) * orient(b1, b2, a2) < 0;
}

// Parameter of the intersection point along segment a1->a2.
inline Rational cross_param(Pt a1, Pt a2, Pt b1, Pt b2) {
  int64_t num = cross(sub(b1, a1), sub(b2, b1));
  int64_t den = cross(sub(a2, a1), sub(b2, b1));
  if (den < 0) {  // cpp_rational requires a positive denominator
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Strict counterclockwise before-ness of directions u, v in the sweep that
// starts just after direction `from`.
inline bool ccw_before(Pt from, Pt u, Pt v) {
  auto phase = [&](Pt w) {
    int64_t c = cross(from, w);
    int64_t d = from.x * w.x + from.y * w.y;
    if (c == 0 && d > 0) return 0;
    if (c > 0) return 1;
    if (c == 0) return 2;
    return 3;
  };
  int pu = phase(u), pv = phase(v);
  if (pu != pv) return pu < pv;
  return cross(u, v) > 0;
}

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
  return z ^ (z >> 31);
}

// The combinatorial pattern of one hexagon enhanced by its nine diagonals,
// derived from exact coordinates of a slightly perturbed regular hexagon.
// The perturbation breaks the concurrency of the three long diagonals; its
// chirality is fixed so that the central 0-triangle has the same handedness
// for every seed.
struct HexPattern {
  struct Diag {
    int a = 0, b = 0;  // corner slots 0..5, tail = a, head = b
    std::string tag;
    std::vector<int> crossings;  // indices into xs, ordered tail -> head
  };
  struct X {
    int d1 = -1, d2 = -1;  // diag indices; d1 is the crossing's `first` edge
    int orientation = +1;
  };
  std::vector<Diag> diags;  // 6 shorts then 3 longs
  std::vector<X> xs;        // 15 crossings
  // Per corner slot: indices of the three incident diags, in ccw order
  // within the interior sector (starting at the boundary edge toward the
  // previous corner of the face walk).
  std::array<std::array<int, 3>, 6> corner_order{};
  std::array<Pt, 6> corner_xy{};
  std::vector<std::pair<double, double>> xs_xy;  // for figure export only
};

inline HexPattern make_hex_pattern(uint64_t seed) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    HexPattern pat;
    // Clockwise regular hexagon, radius 4000, plus seeded jitter.
    const std::array<Pt, 6> base{{{4000, 0}, {2000, -3464}, {-2000, -3464}, {-4000, 0}, {-2000, 3464}, {2000, 3464}}};
    uint64_t state = seed * 0x100000001b3ULL + static_cast<uint64_t>(attempt) + 0x243fULL;
    std::array<Pt, 6> jitter{};
    for (int k = 0; k < 6; ++k) {
      jitter[static_cast<size_t>(k)].x = static_cast<int64_t>(splitmix64(state) % 19) - 9;
      jitter[static_cast<size_t>(k)].y = static_cast<int64_t>(splitmix64(state) % 19) - 9;
    }
    auto apply_jitter = [&]() {
      for (int k = 0; k < 6; ++k)
        pat.corner_xy[static_cast<size_t>(k)] = {base[static_cast<size_t>(k)].x + jitter[static_cast<size_t>(k)].x,
                                                 base[static_cast<size_t>(k)].y + jitter[static_cast<size_t>(k)].y};
    };
    apply_jitter();
    // Chirality convention: walking the long diagonals 0->3, 1->4, 2->5, the
    // central triangle must wind the same way for every seed. Flip the
    // jitter by mirroring across the x axis if it came out the other way.
    auto central_winding = [&]() {
      // Signed area sign of the triangle cut out by the three longs is the
      // orientation of (l04 x l15, l15 x l26, l26 x l04); a cheap proxy is
      // the orientation of the three pairwise intersection points, which for
      // nearly-concurrent lines follows the sign of the perturbation. Use
      // the exact orientation of the three intersection parameters instead:
      // compute the three crossing points with rational coordinates.
      std::array<std::pair<Rational, Rational>, 3> pts;
      const std::array<std::pair<int, int>, 3> longs{{{0, 3}, {1, 4}, {2, 5}}};
      for (int i = 0; i < 3; ++i) {
        auto [a, b] = longs[static_cast<size_t>(i)];
        auto [c, d] = longs[static_cast<size_t>((i + 1) % 3)];
        Pt A = pat.corner_xy[static_cast<size_t>(a)], B = pat.corner_xy[static_cast<size_t>(b)];
        Pt C = pat.corner_xy[static_cast<size_t>(c)], D = pat.corner_xy[static_cast<size_t>(d)];
        Rational t = cross_param(A, B, C, D);
        pts[static_cast<size_t>(i)] = {Rational(A.x) + t * (B.x - A.x), Rational(A.y) + t * (B.y - A.y)};
      }
      Rational area2 = (pts[1].first - pts[0].first) * (pts[2].second - pts[0].second) -
                       (pts[1].second - pts[0].second) * (pts[2].first - pts[0].first);
      if (area2 == 0) return 0;
      return area2 > 0 ? 1 : -1;
    };
    int w = central_winding();
    if (w < 0) {
      // Negating the jitter flips the central triangle's winding without
      // disturbing the clockwise corner convention.
      for (auto& j : jitter) { j.x = -j.x; j.y = -j.y; }
      apply_jitter();
      w = central_winding();
    }
    if (w <= 0) continue;  // degenerate jitter, retry

    const std::array<std::pair<int, int>, 9> spans{
        {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}, {5, 1}, {0, 3}, {1, 4}, {2, 5}}};
    for (int d = 0; d < 9; ++d) {
      HexPattern::Diag dg;
      dg.a = spans[static_cast<size_t>(d)].first;
      dg.b = spans[static_cast<size_t>(d)].second;
      dg.tag = (d < 6 ? "s" : "l") + std::to_string(dg.a + 1) + std::to_string(dg.b + 1);
      pat.diags.push_back(dg);
    }
    auto at = [&](int d, bool head) {
      const auto& dg = pat.diags[static_cast<size_t>(d)];
      return pat.corner_xy[static_cast<size_t>(head ? dg.b : dg.a)];
    };

    std::vector<std::vector<std::pair<Rational, int>>> along(9);
    bool degenerate = false;
    for (int i = 0; i < 9 && !degenerate; ++i) {
      for (int j = i + 1; j < 9; ++j) {
        Pt a1 = at(i, false), a2 = at(i, true), b1 = at(j, false), b2 = at(j, true);
        if (!properly_cross(a1, a2, b1, b2)) continue;
        HexPattern::X x;
        x.d1 = i;
        x.d2 = j;
        x.orientation = sign(cross(sub(a2, a1), sub(b2, b1)));
        int xi = static_cast<int>(pat.xs.size());
        pat.xs.push_back(x);
        Rational ti = cross_param(a1, a2, b1, b2);
        Rational tj = cross_param(b1, b2, a1, a2);
        along[static_cast<size_t>(i)].push_back({ti, xi});
        along[static_cast<size_t>(j)].push_back({tj, xi});
        Rational px = Rational(a1.x) + ti * (a2.x - a1.x);
        Rational py = Rational(a1.y) + ti * (a2.y - a1.y);
        pat.xs_xy.push_back({static_cast<double>(px), static_cast<double>(py)});
      }
    }
    if (pat.xs.size() != 15) continue;  // a triple point collapsed two crossings
    for (int d = 0; d < 9; ++d) {
      auto& v = along[static_cast<size_t>(d)];
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (size_t k = 1; k < v.size(); ++k)
        if (v[k - 1].first == v[k].first) degenerate = true;
      for (auto& [t, xi] : v) pat.diags[static_cast<size_t>(d)].crossings.push_back(xi);
    }
    if (degenerate) continue;
    size_t expect_short = 3, expect_long = 4;
    bool counts_ok = true;
    for (int d = 0; d < 9; ++d)
      if (pat.diags[static_cast<size_t>(d)].crossings.size() != (d < 6 ? expect_short : expect_long))
        counts_ok = false;
    if (!counts_ok) continue;

    // Corner insertion order: the three incident diag ends sorted ccw within
    // the interior sector, which starts at the boundary direction toward the
    // previous corner of the face walk (corner k-1).
    for (int k = 0; k < 6; ++k) {
      Pt here = pat.corner_xy[static_cast<size_t>(k)];
      Pt start = sub(pat.corner_xy[static_cast<size_t>((k + 5) % 6)], here);
      std::vector<int> mine;
      for (int d = 0; d < 9; ++d)
        if (pat.diags[static_cast<size_t>(d)].a == k || pat.diags[static_cast<size_t>(d)].b == k) mine.push_back(d);
      std::sort(mine.begin(), mine.end(), [&](int u, int v) {
        const auto& du = pat.diags[static_cast<size_t>(u)];
        const auto& dv = pat.diags[static_cast<size_t>(v)];
        Pt pu = sub(pat.corner_xy[static_cast<size_t>(du.a == k ? du.b : du.a)], here);
        Pt pv = sub(pat.corner_xy[static_cast<size_t>(dv.a == k ? dv.b : dv.a)], here);
        return ccw_before(start, pu, pv);
      });
      for (size_t i = 0; i < 3; ++i) pat.corner_order[static_cast<size_t>(k)][i] = mine[i];
    }
    return pat;
  }
  throw Error(ErrorCode::BadParameter, "could not derive a non-degenerate hexagon pattern from the seed");
}

}  // namespace fourplanar
