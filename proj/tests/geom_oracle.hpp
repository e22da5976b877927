#pragma once

// Test-side oracle: enumerates the faces of a straight-line arrangement
// directly from exact coordinates, with no use of rotation lists, crossing
// records or orientation bits. Input segments may properly cross each
// other; endpoints shared between segments are identified by coordinates.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fourplanar/faces.hpp"
#include "fourplanar/rational.hpp"

namespace oracle {

using fourplanar::Rational;

struct QPt {
  Rational x, y;
  bool operator==(const QPt&) const = default;
  auto operator<=>(const QPt&) const = default;
};

struct Arrangement {
  std::vector<std::pair<QPt, QPt>> segments;
  std::vector<QPt> marked_vertices;  // everything else counts as a crossing
};

namespace detail {

inline Rational qcross(const QPt& a, const QPt& b) { return a.x * b.y - a.y * b.x; }
inline QPt qsub(const QPt& a, const QPt& b) { return {a.x - b.x, a.y - b.y}; }

inline int qsign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Full-circle ccw comparator for nonzero direction vectors.
inline bool angle_less(const QPt& u, const QPt& v) {
  auto half = [](const QPt& w) { return (w.y < 0 || (w.y == 0 && w.x < 0)) ? 1 : 0; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return qsign(qcross(u, v)) > 0;
}

}  // namespace detail

// Census of all faces (bounded and unbounded) of the arrangement, keyed by
// the same class strings the library uses.
inline std::map<std::string, int> face_census(const Arrangement& arr) {
  using detail::qcross;
  using detail::qsub;

  // Collect split points per segment: endpoints plus proper intersections.
  std::vector<QPt> points;
  auto point_id = [&](const QPt& p) {
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return static_cast<int>(i);
    points.push_back(p);
    return static_cast<int>(points.size() - 1);
  };

  const size_t ns = arr.segments.size();
  std::vector<std::vector<std::pair<Rational, int>>> along(ns);
  for (size_t i = 0; i < ns; ++i) {
    along[i].push_back({Rational(0), point_id(arr.segments[i].first)});
    along[i].push_back({Rational(1), point_id(arr.segments[i].second)});
  }
  for (size_t i = 0; i < ns; ++i) {
    QPt a1 = arr.segments[i].first, a2 = arr.segments[i].second;
    for (size_t j = i + 1; j < ns; ++j) {
      QPt b1 = arr.segments[j].first, b2 = arr.segments[j].second;
      Rational den = qcross(qsub(a2, a1), qsub(b2, b1));
      if (den == 0) continue;
      Rational ti = qcross(qsub(b1, a1), qsub(b2, b1)) / den;
      Rational tj = qcross(qsub(b1, a1), qsub(a2, a1)) / den;
      if (ti <= 0 || ti >= 1 || tj <= 0 || tj >= 1) continue;
      QPt p{a1.x + ti * (a2.x - a1.x), a1.y + ti * (a2.y - a1.y)};
      int pid = point_id(p);
      along[i].push_back({ti, pid});
      along[j].push_back({tj, pid});
    }
  }

  // Directed subsegments.
  std::vector<std::pair<int, int>> half;  // (from, to)
  for (size_t i = 0; i < ns; ++i) {
    auto& v = along[i];
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t k = 1; k < v.size(); ++k) {
      if (v[k - 1].second == v[k].second) continue;
      half.push_back({v[k - 1].second, v[k].second});
      half.push_back({v[k].second, v[k - 1].second});
    }
  }

  // ccw order of outgoing half-edges at each point.
  std::vector<std::vector<int>> out(points.size());
  for (size_t h = 0; h < half.size(); ++h) out[static_cast<size_t>(half[h].first)].push_back(static_cast<int>(h));
  for (size_t p = 0; p < points.size(); ++p) {
    std::sort(out[p].begin(), out[p].end(), [&](int a, int b) {
      QPt da = qsub(points[static_cast<size_t>(half[static_cast<size_t>(a)].second)], points[p]);
      QPt db = qsub(points[static_cast<size_t>(half[static_cast<size_t>(b)].second)], points[p]);
      return detail::angle_less(da, db);
    });
  }

  // Face successor: from u->v, continue with the ccw successor of v->u at v.
  auto twin_of = [](int h) { return h ^ 1; };
  auto face_next = [&](int h) {
    int t = twin_of(h);
    const auto& ring = out[static_cast<size_t>(half[static_cast<size_t>(h)].second)];
    auto it = std::find(ring.begin(), ring.end(), t);
    ++it;
    return (it == ring.end()) ? ring.front() : *it;
  };

  std::vector<char> is_vertex(points.size(), 0);
  for (const QPt& mv : arr.marked_vertices)
    for (size_t p = 0; p < points.size(); ++p)
      if (points[p] == mv) is_vertex[p] = 1;

  std::map<std::string, int> census;
  std::vector<char> seen(half.size(), 0);
  for (size_t h0 = 0; h0 < half.size(); ++h0) {
    if (seen[h0]) continue;
    int size = 0, vcount = 0;
    int h = static_cast<int>(h0);
    do {
      seen[static_cast<size_t>(h)] = 1;
      ++size;
      if (is_vertex[static_cast<size_t>(half[static_cast<size_t>(h)].first)]) ++vcount;
      h = face_next(h);
    } while (h != static_cast<int>(h0));
    ++census[fourplanar::face_class(vcount, size)];
  }
  return census;
}

}  // namespace oracle
