#pragma once

#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fourplanar/base.hpp"
#include "fourplanar/discharge.hpp"
#include "fourplanar/drawing.hpp"
#include "fourplanar/extremal.hpp"
#include "fourplanar/rewrite.hpp"

namespace fourplanar {

// One hexagon of generator layout data. Coordinates are kept as the literal
// tokens from the file so that parse/serialize round-trips byte-for-byte.
struct LayoutHex {
  std::string prefix;
  std::array<std::string, 6> corners;
  std::array<std::pair<std::string, std::string>, 6> corner_xy;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> points;
};

// A parsed drawing file: the combinatorial drawing plus, for files written
// by the generator, per-hexagon coordinates usable for figure export.
struct DrawingFile {
  DrawingSpec spec;
  std::vector<LayoutHex> layout;
};

namespace io_detail {

inline void check_id(const std::string& id, const char* what) {
  if (id.empty()) throw Error(ErrorCode::ParseError, std::string(what) + " id is empty");
  for (char c : id)
    if (c == ' ' || c == '\t' || c == '\n' || c == ',')
      throw Error(ErrorCode::ParseError, std::string(what) + " id '" + id + "' contains whitespace or a comma");
}

inline std::vector<std::string> split(const std::string& line, char sep = ' ') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline int parse_count(const std::vector<std::string>& tok, const std::string& section) {
  if (tok.size() != 2 || tok[0] != section)
    throw Error(ErrorCode::ParseError, "expected '" + section + " <count>'");
  try {
    size_t pos = 0;
    int n = std::stoi(tok[1], &pos);
    if (pos != tok[1].size() || n < 0) throw std::invalid_argument("");
    return n;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad count in section '" + section + "'");
  }
}

}  // namespace io_detail

// Canonical text serialization. The drawing is normalized first (sorted
// ids, rotations rotated to their smallest entry), so equal drawings
// produce byte-identical files.
inline std::string serialize_drawing(const DrawingFile& file) {
  using io_detail::check_id;
  DrawingSpec s = normalized(file.spec);
  std::string out = "fourplanar-drawing v1\n";

  out += "vertices " + std::to_string(s.vertices.size()) + "\n";
  for (const std::string& v : s.vertices) {
    check_id(v, "vertex");
    out += v + "\n";
  }

  out += "edges " + std::to_string(s.edges.size()) + "\n";
  for (const EdgeRec& e : s.edges) {
    check_id(e.id, "edge");
    out += e.id + " " + e.tail + " " + e.head + " ";
    if (e.crossings.empty()) {
      out += ".";
    } else {
      for (size_t i = 0; i < e.crossings.size(); ++i) {
        if (i) out += ",";
        out += e.crossings[i];
      }
    }
    out += "\n";
  }

  out += "crossings " + std::to_string(s.crossings.size()) + "\n";
  for (const CrossingRec& x : s.crossings) {
    check_id(x.id, "crossing");
    out += x.id + " " + x.first + " " + x.second + " " + (x.orientation > 0 ? "+1" : "-1") + "\n";
  }

  out += "rotations " + std::to_string(s.vertices.size()) + "\n";
  for (const std::string& v : s.vertices) {
    out += v;
    auto it = s.rotations.find(v);
    if (it != s.rotations.end())
      for (const EdgeEnd& ee : it->second) out += " " + end_name(ee);
    out += "\n";
  }

  if (!file.layout.empty()) {
    out += "layout " + std::to_string(file.layout.size()) + "\n";
    for (const LayoutHex& h : file.layout) {
      out += "hex " + h.prefix;
      for (int k = 0; k < 6; ++k) {
        const auto& c = h.corners[static_cast<size_t>(k)];
        const auto& xy = h.corner_xy[static_cast<size_t>(k)];
        out += " " + c + " " + xy.first + " " + xy.second;
      }
      out += "\n";
      for (const auto& [name, xy] : h.points) out += "point " + name + " " + xy.first + " " + xy.second + "\n";
      out += "endhex\n";
    }
  }

  out += "end\n";
  return out;
}

inline std::string serialize_drawing(const DrawingSpec& spec) { return serialize_drawing(DrawingFile{spec, {}}); }

inline DrawingFile parse_drawing(const std::string& text) {
  using io_detail::parse_count;
  using io_detail::split;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) throw Error(ErrorCode::ParseError, "file does not end with a newline");
  }
  size_t li = 0;
  auto next_line = [&]() -> std::string {
    if (li >= lines.size()) throw Error(ErrorCode::ParseError, "unexpected end of file (truncated?)");
    return lines[li++];
  };

  if (next_line() != "fourplanar-drawing v1")
    throw Error(ErrorCode::ParseError, "missing 'fourplanar-drawing v1' header");

  DrawingFile file;
  DrawingSpec& s = file.spec;

  int nv = parse_count(split(next_line()), "vertices");
  for (int i = 0; i < nv; ++i) {
    std::string v = next_line();
    io_detail::check_id(v, "vertex");
    s.vertices.push_back(v);
  }

  int ne = parse_count(split(next_line()), "edges");
  for (int i = 0; i < ne; ++i) {
    auto tok = split(next_line());
    if (tok.size() != 4) throw Error(ErrorCode::ParseError, "edge line needs 'id tail head crossings'");
    EdgeRec e;
    e.id = tok[0];
    e.tail = tok[1];
    e.head = tok[2];
    if (tok[3] != ".")
      for (const std::string& x : split(tok[3], ',')) {
        io_detail::check_id(x, "crossing");
        e.crossings.push_back(x);
      }
    s.edges.push_back(e);
  }

  int nx = parse_count(split(next_line()), "crossings");
  for (int i = 0; i < nx; ++i) {
    auto tok = split(next_line());
    if (tok.size() != 4) throw Error(ErrorCode::ParseError, "crossing line needs 'id first second orientation'");
    if (tok[3] != "+1" && tok[3] != "-1")
      throw Error(ErrorCode::ParseError, "crossing orientation must be +1 or -1, got '" + tok[3] + "'");
    s.crossings.push_back({tok[0], tok[1], tok[2], tok[3] == "+1" ? +1 : -1});
  }

  int nr = parse_count(split(next_line()), "rotations");
  if (nr != nv) throw Error(ErrorCode::ParseError, "rotation count differs from vertex count");
  for (int i = 0; i < nr; ++i) {
    auto tok = split(next_line());
    const std::string& v = tok[0];
    io_detail::check_id(v, "vertex");
    std::vector<EdgeEnd>& rot = s.rotations[v];
    for (size_t k = 1; k < tok.size(); ++k) {
      const std::string& t = tok[k];
      if (t.size() < 2 || (t.back() != '+' && t.back() != '-'))
        throw Error(ErrorCode::ParseError, "edge end '" + t + "' must be '<edge>+' or '<edge>-'");
      rot.push_back({t.substr(0, t.size() - 1), t.back() == '-'});
    }
    if (rot.empty()) s.rotations.erase(v);
  }

  std::string line = next_line();
  if (line.rfind("layout ", 0) == 0) {
    int nh = parse_count(split(line), "layout");
    for (int i = 0; i < nh; ++i) {
      auto tok = split(next_line());
      if (tok.size() != 20 || tok[0] != "hex")
        throw Error(ErrorCode::ParseError, "hex line needs 'hex <prefix>' plus six corner name/x/y triples");
      LayoutHex h;
      h.prefix = tok[1];
      for (int k = 0; k < 6; ++k) {
        h.corners[static_cast<size_t>(k)] = tok[static_cast<size_t>(2 + 3 * k)];
        h.corner_xy[static_cast<size_t>(k)] = {tok[static_cast<size_t>(3 + 3 * k)], tok[static_cast<size_t>(4 + 3 * k)]};
      }
      for (;;) {
        std::string pl = next_line();
        if (pl == "endhex") break;
        auto pt = split(pl);
        if (pt.size() != 4 || pt[0] != "point")
          throw Error(ErrorCode::ParseError, "expected 'point <name> <x> <y>' or 'endhex'");
        h.points.push_back({pt[1], {pt[2], pt[3]}});
      }
      file.layout.push_back(std::move(h));
    }
    line = next_line();
  }
  if (line != "end") throw Error(ErrorCode::ParseError, "missing 'end' line (truncated?)");
  if (li != lines.size()) throw Error(ErrorCode::ParseError, "trailing data after 'end'");

  file.spec = normalized(file.spec);
  return file;
}

// Layout records for a generator-produced drawing, with coordinates
// rendered once into their canonical text form.
inline std::vector<LayoutHex> layout_from(const OptimalDrawing& d) {
  using io_detail::fmt_double;
  std::vector<LayoutHex> out;
  for (const HexLayout& hl : d.hexes) {
    LayoutHex h;
    h.prefix = hl.prefix;
    for (int k = 0; k < 6; ++k) {
      h.corners[static_cast<size_t>(k)] = hl.corners[static_cast<size_t>(k)];
      const Pt& p = hl.corner_xy[static_cast<size_t>(k)];
      h.corner_xy[static_cast<size_t>(k)] = {std::to_string(p.x), std::to_string(p.y)};
    }
    for (const auto& [name, xy] : hl.crossing_xy) h.points.push_back({name, {fmt_double(xy.first), fmt_double(xy.second)}});
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Move logs
// ---------------------------------------------------------------------------

inline std::string serialize_move_log(const std::vector<RewriteMove>& log) {
  std::string out = "fourplanar-movelog v1\n";
  for (const RewriteMove& m : log) {
    out += std::string(move_name(m.kind)) + " " + std::to_string(m.face) + " " + std::to_string(m.delta_edges) +
           " " + std::to_string(m.delta_blocks) + " " + std::to_string(m.delta_crossings) + " ";
    if (m.edges.empty()) {
      out += ".";
    } else {
      for (size_t i = 0; i < m.edges.size(); ++i) {
        if (i) out += ",";
        out += m.edges[i];
      }
    }
    out += "\n";
  }
  out += "end\n";
  return out;
}

inline std::vector<RewriteMove> parse_move_log(const std::string& text) {
  using io_detail::split;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "fourplanar-movelog v1")
    throw Error(ErrorCode::ParseError, "missing 'fourplanar-movelog v1' header");
  std::vector<RewriteMove> log;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      ended = true;
      break;
    }
    auto tok = split(line);
    if (tok.size() != 6) throw Error(ErrorCode::ParseError, "move line needs 6 fields");
    RewriteMove m;
    bool known = false;
    for (MoveKind k : {MoveKind::Fill, MoveKind::SwapBigon, MoveKind::RerouteV2, MoveKind::RerouteV1, MoveKind::HStarReplace})
      if (tok[0] == move_name(k)) {
        m.kind = k;
        known = true;
      }
    if (!known) throw Error(ErrorCode::ParseError, "unknown move kind '" + tok[0] + "'");
    try {
      m.face = std::stoi(tok[1]);
      m.delta_edges = std::stoi(tok[2]);
      m.delta_blocks = std::stoi(tok[3]);
      m.delta_crossings = std::stoi(tok[4]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer field in move line");
    }
    if (tok[5] != ".")
      for (const std::string& e : split(tok[5], ',')) m.edges.push_back(e);
    log.push_back(std::move(m));
  }
  if (!ended) throw Error(ErrorCode::ParseError, "move log missing 'end' line");
  return log;
}

// ---------------------------------------------------------------------------
// Certificate report
// ---------------------------------------------------------------------------

// Renders the certificate as text. Each stage's conservation line is
// recomputed here from the per-face charges and verified against 4n-8; a
// mismatch throws rather than printing a wrong report.
inline std::string report_text(const CertificateReport& rep, const std::string& command_echo) {
  std::ostringstream out;
  out << "fourplanar-report v1\n";
  out << "command: " << command_echo << "\n";
  out << "n = " << rep.n << "\n";
  out << "|E| = " << rep.edges << "\n";
  out << "crossings = " << rep.crossings << "\n";
  out << "faces = " << rep.faces.count() << "\n";
  out << "blocks = " << rep.blocks.blocks.size() << "\n";
  out << "expected total = " << to_frac_string(rep.expected_total) << "\n";
  for (int k = 0; k <= 5; ++k) {
    Rational total = 0;
    for (const Rational& c : rep.stages[static_cast<size_t>(k)]) total += c;
    if (total != rep.expected_total)
      throw Error(ErrorCode::TotalMismatch, "report: stage " + std::to_string(k) + " total " +
                                                to_frac_string(total) + " != " + to_frac_string(rep.expected_total));
    out << "stage " << k << " total = " << to_frac_string(total) << " ok\n";
  }
  out << "census:\n";
  for (const auto& [klass, count] : rep.faces.census) out << "  " << klass << " " << count << "\n";
  for (size_t b = 0; b < rep.blocks.blocks.size(); ++b)
    out << "block " << b << ": center face " << rep.blocks.blocks[b].center << "\n";
  out << "faces:\n";
  for (const FaceInfo& f : rep.faces.faces) {
    out << "  face " << f.id << ": v=" << f.vcount << " size=" << f.size << " class=" << f.klass;
    out << " required=" << to_frac_string(rep.required[static_cast<size_t>(f.id)]);
    for (int k = 0; k <= 5; ++k)
      out << " ch" << k << "=" << to_frac_string(rep.stages[static_cast<size_t>(k)][static_cast<size_t>(f.id)]);
    out << "\n";
  }
  for (const Diagnostic& d : rep.diagnostics) out << "diagnostic: " << format(d) << "\n";
  if (rep.deficient_faces.empty()) {
    out << "deficient faces: none\n";
  } else {
    out << "deficient faces:";
    for (int f : rep.deficient_faces) out << " " << f;
    out << "\n";
  }
  out << "bound: 2|E| = " << rep.bound_lhs << " <= 3(4n-8) = " << rep.bound_rhs << "\n";
  out << "verdict: " << (rep.certified ? "Certified" : "Failed") << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT export of the planarization
// ---------------------------------------------------------------------------

inline std::string dot_export(const Planarization& p) {
  std::ostringstream out;
  out << "graph planarization {\n";
  for (int n = 0; n < p.map.node_count(); ++n) {
    out << "  \"" << p.map.node_name(n) << "\"";
    if (p.map.is_vertex(n))
      out << " [shape=circle]";
    else
      out << " [shape=point, xlabel=\"" << p.map.node_name(n) << "\"]";
    out << ";\n";
  }
  for (int d = 0; d < p.map.dart_count(); ++d) {
    if (d > p.map.twin(d)) continue;
    out << "  \"" << p.map.node_name(p.map.origin(d)) << "\" -- \""
        << p.map.node_name(p.map.origin(p.map.twin(d))) << "\""
        << " [label=\"" << p.map.edge_names[static_cast<size_t>(p.map.segment_edge[static_cast<size_t>(d)])]
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// SVG export (generator layouts only)
// ---------------------------------------------------------------------------

// Draws one panel per hexagon using the generator's coordinates. Only
// drawings whose file carries a layout section can be exported; anything
// else is refused because no coordinates exist for it.
inline std::string svg_export(const DrawingFile& file) {
  if (file.layout.empty())
    throw Error(ErrorCode::PreconditionFailed,
                "svg export needs generator layout data; this drawing has none (use dot instead)");
  const DrawingSpec spec = normalized(file.spec);
  const double cell = 240.0, pad = 24.0, gap = 20.0;
  int cols = static_cast<int>(file.layout.size()) < 4 ? static_cast<int>(file.layout.size()) : 4;
  int rows = (static_cast<int>(file.layout.size()) + cols - 1) / cols;
  double width = cols * (cell + gap) + gap;
  double height = rows * (cell + gap) + gap;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (size_t hi = 0; hi < file.layout.size(); ++hi) {
    const LayoutHex& h = file.layout[hi];
    std::map<std::string, std::pair<double, double>> at;
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto note = [&](const std::string& name, const std::string& xs, const std::string& ys) {
      double x = std::stod(xs), y = std::stod(ys);
      at[name] = {x, y};
      lo_x = x < lo_x ? x : lo_x;
      hi_x = x > hi_x ? x : hi_x;
      lo_y = y < lo_y ? y : lo_y;
      hi_y = y > hi_y ? y : hi_y;
    };
    for (int k = 0; k < 6; ++k)
      note(h.corners[static_cast<size_t>(k)], h.corner_xy[static_cast<size_t>(k)].first,
           h.corner_xy[static_cast<size_t>(k)].second);
    for (const auto& [name, xy] : h.points) note(name, xy.first, xy.second);

    double span = (hi_x - lo_x) > (hi_y - lo_y) ? (hi_x - lo_x) : (hi_y - lo_y);
    if (span <= 0) span = 1;
    double scale = (cell - 2 * pad) / span;
    double ox = gap + static_cast<double>(hi % static_cast<size_t>(cols)) * (cell + gap);
    double oy = gap + static_cast<double>(hi / static_cast<size_t>(cols)) * (cell + gap);
    auto sx = [&](double x) { return ox + pad + (x - lo_x) * scale; };
    auto sy = [&](double y) { return oy + cell - pad - (y - lo_y) * scale; };

    out << "  <g>\n";
    out << "    <rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
    bool in_hex[6] = {};
    auto corner_slot = [&](const std::string& v) {
      for (int k = 0; k < 6; ++k)
        if (h.corners[static_cast<size_t>(k)] == v) return k;
      return -1;
    };
    (void)in_hex;
    for (const EdgeRec& e : spec.edges) {
      bool prefixed = e.id.rfind(h.prefix, 0) == 0;
      bool boundary = corner_slot(e.tail) >= 0 && corner_slot(e.head) >= 0 && e.crossings.empty();
      if (!prefixed && !boundary) continue;
      if (!at.count(e.tail) || !at.count(e.head)) continue;
      bool all_known = true;
      for (const std::string& x : e.crossings) all_known &= at.count(x) > 0;
      if (!all_known) continue;
      out << "    <polyline fill=\"none\" stroke=\"" << (prefixed ? "#1f77b4" : "#333") << "\" points=\"";
      out << sx(at[e.tail].first) << "," << sy(at[e.tail].second);
      for (const std::string& x : e.crossings) out << " " << sx(at[x].first) << "," << sy(at[x].second);
      out << " " << sx(at[e.head].first) << "," << sy(at[e.head].second) << "\"/>\n";
    }
    for (int k = 0; k < 6; ++k) {
      const std::string& v = h.corners[static_cast<size_t>(k)];
      out << "    <circle cx=\"" << sx(at[v].first) << "\" cy=\"" << sy(at[v].second)
          << "\" r=\"3.5\" fill=\"#d62728\"/>\n";
      out << "    <text x=\"" << sx(at[v].first) + 5 << "\" y=\"" << sy(at[v].second) - 5
          << "\" font-size=\"10\">" << v << "</text>\n";
    }
    out << "    <text x=\"" << ox + 6 << "\" y=\"" << oy + 14 << "\" font-size=\"11\" fill=\"#555\">"
        << h.prefix << "</text>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fourplanar
