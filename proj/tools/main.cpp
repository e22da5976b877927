// Command-line frontend: validate / certify / generate / normalize / faces /
// export over the text drawing format. Exit codes: 0 success, 1 violations
// or refusals, 2 parse and usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fourplanar/discharge.hpp"
#include "fourplanar/drawing.hpp"
#include "fourplanar/extremal.hpp"
#include "fourplanar/faces.hpp"
#include "fourplanar/io.hpp"
#include "fourplanar/rewrite.hpp"

using namespace fourplanar;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + path);
  out << text;
}

DrawingFile load(const std::string& path) { return parse_drawing(read_file(path)); }

// Shared validation pipeline; prints findings, returns the count of
// violations (parse errors are thrown before we get here).
int run_validation(const Planarization& p, bool quiet) {
  int bad = 0;
  auto report = [&](const std::string& line) {
    ++bad;
    if (!quiet) std::cout << line << "\n";
  };
  for (const Diagnostic& d : p.diagnostics) report(format(d));
  CrossingCensus census = crossing_census(p);
  for (const auto& [eid, k] : census.per_edge)
    if (k > 4) report("k-planarity: edge " + eid + " has " + std::to_string(k) + " > 4 crossings");
  HomotopyReport hom = homotopy_violations(p);
  for (const Diagnostic& d : hom.violations) report(format(d));
  for (const Diagnostic& d : hom.not_checked)
    if (!quiet) std::cout << "note: " << format(d) << "\n";
  for (const std::string& x : cut_crossings(p))
    report("connectivity: crossing " + x + " is a cut point of the planarization");
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-planar drawing toolkit: validation, density certificates, "
               "extremal generation, normalization, and figure export"};
  app.require_subcommand(1);

  std::string in_path, out_path, report_path, log_path, format = "dot";
  int hexagons = 2;
  uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a drawing file");
  validate->add_option("file", in_path, "drawing file")->required();

  CLI::App* certify_cmd = app.add_subcommand("certify", "run the density certificate");
  certify_cmd->add_option("file", in_path, "drawing file")->required();
  certify_cmd->add_option("--report", report_path, "write the full report here");

  CLI::App* generate = app.add_subcommand("generate", "emit an extremal drawing");
  generate->add_option("--hexagons", hexagons, "number of hexagons (even, >= 2)")->required();
  generate->add_option("--out", out_path, "output drawing file")->required();
  generate->add_option("--seed", seed, "perturbation seed");

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "drive a drawing to its rewrite fixpoint");
  normalize_cmd->add_option("--in", in_path, "input drawing file")->required();
  normalize_cmd->add_option("--out", out_path, "output drawing file")->required();
  normalize_cmd->add_option("--log", log_path, "write the move log here");
  normalize_cmd->add_option("--seed", seed, "seed for hexagon replacements");

  CLI::App* faces_cmd = app.add_subcommand("faces", "print the face census");
  faces_cmd->add_option("file", in_path, "drawing file")->required();
  bool census_only = false;
  faces_cmd->add_flag("--census", census_only, "census lines only");

  CLI::App* export_cmd = app.add_subcommand("export", "export a figure");
  export_cmd->add_option("file", in_path, "drawing file")->required();
  export_cmd->add_option("--format", format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));
  export_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      Planarization p = planarize(load(in_path).spec);
      int bad = run_validation(p, false);
      if (bad == 0) {
        std::cout << "ok: n=" << p.n() << " |E|=" << p.edge_count() << " crossings=" << p.crossing_count() << "\n";
        return 0;
      }
      std::cout << bad << " violation(s)\n";
      return 1;
    }

    if (certify_cmd->parsed()) {
      Planarization p = planarize(load(in_path).spec);
      if (run_validation(p, false) > 0) {
        std::cout << "validation failed; not certifying\n";
        return 1;
      }
      CertificateReport rep = certify(p);
      std::string text = report_text(rep, "certify " + in_path);
      if (!report_path.empty())
        write_file(report_path, text);
      else
        std::cout << text;
      if (rep.certified) {
        std::cout << "Certified: 2|E| = " << rep.bound_lhs << " <= 3(4n-8) = " << rep.bound_rhs << "\n";
        return 0;
      }
      std::cout << "Failed: " << rep.deficient_faces.size() << " deficient face(s)\n";
      return 1;
    }

    if (generate->parsed()) {
      OptimalDrawing d = generate_optimal(hexagons, seed);
      write_file(out_path, serialize_drawing(DrawingFile{d.spec, layout_from(d)}));
      Planarization p = planarize(d.spec);
      std::cout << "wrote " << out_path << ": n=" << p.n() << " |E|=" << p.edge_count()
                << " crossings=" << p.crossing_count() << "\n";
      return 0;
    }

    if (normalize_cmd->parsed()) {
      DrawingFile f = load(in_path);
      NormalizeOptions opt;
      opt.seed = seed;
      NormalizeResult r = normalize(f.spec, opt);
      write_file(out_path, serialize_drawing(r.spec));
      if (!log_path.empty()) write_file(log_path, serialize_move_log(r.log));
      std::cout << r.log.size() << " move(s) applied\n";
      return 0;
    }

    if (faces_cmd->parsed()) {
      Planarization p = planarize(load(in_path).spec);
      FaceTable t = classify(p);
      for (const auto& [klass, count] : t.census) std::cout << klass << " " << count << "\n";
      if (!census_only) {
        for (const FaceInfo& fi : t.faces)
          std::cout << "face " << fi.id << ": v=" << fi.vcount << " size=" << fi.size << " class=" << fi.klass
                    << "\n";
      }
      return 0;
    }

    if (export_cmd->parsed()) {
      DrawingFile f = load(in_path);
      std::string text;
      if (format == "dot")
        text = dot_export(planarize(f.spec));
      else
        text = svg_export(f);
      if (!out_path.empty())
        write_file(out_path, text);
      else
        std::cout << text;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    // Parse problems are usage-level failures; everything else is a
    // violation or refusal of an otherwise well-formed request.
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
