#include "fls/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fls/errors.hpp"
#include "fls/general.hpp"
#include "fls/oracle.hpp"
#include "fls/over.hpp"
#include "fls/rank.hpp"
#include "fls/square.hpp"
#include "fls/under.hpp"

namespace fls {

namespace {

using njson = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

FuzzyNumber parse_rhs_entry(const njson& e, std::size_t index) {
  const std::string where = "rhs entry " + std::to_string(index);
  try {
    if (e.contains("tri")) {
      const auto& t = e.at("tri");
      if (!t.is_array() || t.size() != 3) {
        throw ValidationError(where + ": \"tri\" must be [l, m, r]");
      }
      return FuzzyNumber::triangular(t[0].get<double>(), t[1].get<double>(),
                                     t[2].get<double>());
    }
    if (e.contains("pl")) {
      const auto& p = e.at("pl");
      return FuzzyNumber::piecewise_linear(p.at("r").get<Vec>(),
                                           p.at("lower").get<Vec>(),
                                           p.at("upper").get<Vec>());
    }
    throw ValidationError(where + ": expected a \"tri\" or \"pl\" object");
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& ex) {
    throw ValidationError(where + ": " + ex.what());
  } catch (const njson::exception& ex) {
    throw ValidationError(where + ": " + ex.what());
  }
}

njson rhs_to_json(const FuzzyNumber& f) {
  if (f.kind() == FuzzyKind::Triangular) {
    return njson{{"tri", {f.tri_l(), f.tri_m(), f.tri_r()}}};
  }
  return njson{{"pl", {{"r", f.grid()},
                       {"lower", f.lower_samples()},
                       {"upper", f.upper_samples()}}}};
}

FuzzySystem load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

Vec parse_number_list(const std::string& text, const char* what) {
  Vec out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(token, &pos));
      while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad number '" + token + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

// Case classification plus the reduced leading-variable system shared by the
// vertex-producing commands. For full column rank the reduced system is the
// input itself.
struct CaseInfo {
  std::string tag;
  GeneralSolution gs;
  bool consistent = true;
};

CaseInfo classify(const FuzzySystem& sys, double tol) {
  CaseInfo info;
  const std::size_t m = sys.A.rows(), n = sys.A.cols();
  std::size_t k = 0;
  try {
    info.gs = solve_general(sys, tol);
    k = info.gs.rank;
  } catch (const Inconsistent&) {
    info.consistent = false;
    k = rank_partition(sys.A, tol).k;
    info.tag = "inconsistent";
    return info;
  }
  if (k == n && k == m) {
    info.tag = "square";
  } else if (k == m && m < n) {
    info.tag = "under";
  } else if (k == n && n < m) {
    info.tag = "over";
  } else {
    info.tag = "general";
  }
  return info;
}

std::vector<Vec> lifted_cut_vertices(const GeneralSolution& gs, double alpha) {
  if (gs.rank == 0) {
    // Zero matrix; the cut is either all of R^n or empty.
    for (const FuzzyNumber& f : gs.reduced.rhs) {
      const auto [lo, hi] = f.alpha_interval(alpha);
      if (lo > 0.0 || hi < 0.0) return {};
    }
    return gs.particular_vertices;
  }
  auto p = polytope_at_alpha(gs.reduced, alpha);
  if (!p) return {};
  std::vector<Vec> out;
  out.reserve(p->vertices.size());
  for (const Vec& v : p->vertices) out.push_back(lift_leading(gs, v));
  return out;
}

void emit_json(std::ostream& out, const njson& doc) { out << doc.dump(2) << "\n"; }

void emit_vertex_csv(std::ostream& out, const std::vector<Vec>& vertices,
                     std::optional<double> alpha = std::nullopt) {
  for (const Vec& v : vertices) {
    std::string line;
    if (alpha) line += fmt(*alpha);
    for (double c : v) {
      if (!line.empty()) line += ",";
      line += fmt(c);
    }
    out << line << "\n";
  }
}

int cmd_solve(const FuzzySystem& sys, const std::vector<double>& alphas,
              double tol, double tol_alpha, const std::string& format,
              std::ostream& out) {
  const CaseInfo info = classify(sys, tol);
  njson doc;
  doc["case"] = info.tag;
  doc["m"] = sys.A.rows();
  doc["n"] = sys.A.cols();
  if (!info.consistent) {
    doc["rank"] = rank_partition(sys.A, tol).k;
    emit_json(out, doc);
    return 2;
  }
  const GeneralSolution& gs = info.gs;
  doc["rank"] = gs.rank;

  if (info.tag == "square") {
    const Parallelepiped box = solve_square(sys);
    doc["center"] = box.center;
    doc["generators"] = box.generators;
    njson bounds = njson::array();
    for (const FuzzyNumber& f : box.coeff_bounds) bounds.push_back(rhs_to_json(f));
    doc["coeff_bounds"] = bounds;
  } else if (info.tag == "under") {
    const UnderdeterminedSolution u = solve_under(sys);
    doc["center"] = u.box.center;
    doc["generators"] = u.box.generators;
    njson bounds = njson::array();
    for (const FuzzyNumber& f : u.box.coeff_bounds) bounds.push_back(rhs_to_json(f));
    doc["coeff_bounds"] = bounds;
    doc["null_basis"] = u.null_basis;
  } else {
    doc["leading_columns"] = gs.leading_cols;
    doc["particular_vertices"] = gs.particular_vertices;
    if (!gs.null_basis.empty()) doc["null_basis"] = gs.null_basis;
  }

  njson cuts = njson::array();
  for (double a : alphas) {
    cuts.push_back({{"alpha", a}, {"vertices", lifted_cut_vertices(gs, a)}});
  }
  doc["cuts"] = cuts;

  if (gs.rank > 0) {
    const MaxMembership mm = max_membership(gs.reduced, tol_alpha);
    doc["max_membership"] = {{"alpha", mm.alpha},
                             {"point", lift_leading(gs, mm.point)}};
  }

  (void)format;
  emit_json(out, doc);
  return 0;
}

int cmd_membership(const FuzzySystem& sys, const Vec& point, std::ostream& out) {
  if (point.size() != sys.unknowns()) {
    throw ValidationError("--point dimension does not match the system");
  }
  const Vec residual = sys.A.apply(point);
  Vec per_row(sys.rhs.size());
  double mu = 1.0;
  for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
    per_row[i] = sys.rhs[i].membership(residual[i]);
    mu = std::min(mu, per_row[i]);
  }
  njson doc;
  doc["point"] = point;
  doc["membership"] = mu;
  doc["per_row"] = per_row;
  doc["not_a_solution"] = (mu == 0.0);
  emit_json(out, doc);
  return 0;
}

int cmd_vertices(const FuzzySystem& sys, double alpha, double tol,
                 const std::string& format, std::ostream& out) {
  const CaseInfo info = classify(sys, tol);
  if (!info.consistent) {
    if (format == "csv") {
      out << "";
    } else {
      emit_json(out, njson{{"case", "inconsistent"}, {"alpha", alpha},
                           {"vertices", njson::array()}});
    }
    return 2;
  }
  const std::vector<Vec> verts = lifted_cut_vertices(info.gs, alpha);
  if (format == "csv") {
    emit_vertex_csv(out, verts);
  } else {
    emit_json(out, njson{{"case", info.tag}, {"alpha", alpha}, {"vertices", verts}});
  }
  return 0;
}

int cmd_max_membership(const FuzzySystem& sys, double tol, double tol_alpha,
                       std::ostream& out) {
  const CaseInfo info = classify(sys, tol);
  if (!info.consistent) {
    emit_json(out, njson{{"case", "inconsistent"}});
    return 2;
  }
  if (info.gs.rank == 0) {
    double mu = 1.0;
    for (const FuzzyNumber& f : sys.rhs) mu = std::min(mu, f.membership(0.0));
    emit_json(out, njson{{"alpha_star", mu},
                         {"x_star", info.gs.particular_vertices.front()}});
    return 0;
  }
  const MaxMembership mm = max_membership(info.gs.reduced, tol_alpha);
  emit_json(out, njson{{"alpha_star", mm.alpha},
                       {"x_star", lift_leading(info.gs, mm.point)}});
  return 0;
}

int cmd_oracle(const FuzzySystem& sys, double alpha, const Vec& bbox_flat,
               std::size_t resolution, double tol, std::ostream& out) {
  if (bbox_flat.size() != 2 * sys.unknowns()) {
    throw ValidationError("--bbox expects lo,hi per variable");
  }
  std::vector<std::pair<double, double>> bbox;
  for (std::size_t i = 0; i < bbox_flat.size(); i += 2) {
    bbox.emplace_back(bbox_flat[i], bbox_flat[i + 1]);
  }
  const CaseInfo info = classify(sys, tol);
  std::function<bool(const Vec&)> region;
  if (info.consistent) {
    region = [&info, alpha](const Vec& x) {
      return general_contains(info.gs, x, alpha);
    };
  } else {
    region = [](const Vec&) { return false; };
  }
  const OracleReport report = grid_compare(sys, region, bbox, resolution, alpha);
  njson doc;
  doc["samples"] = report.samples;
  doc["disagreements"] = report.disagreements;
  doc["max_membership_gap"] = report.max_membership_gap;
  doc["worst_point"] = report.worst_point;
  emit_json(out, doc);
  return report.disagreements > 0 ? 3 : 0;
}

int cmd_plot_data(const FuzzySystem& sys, const std::vector<double>& alphas,
                  double tol, const std::string& format, std::ostream& out) {
  const CaseInfo info = classify(sys, tol);
  if (!info.consistent) {
    emit_json(out, njson{{"case", "inconsistent"}});
    return 2;
  }
  if (format == "csv") {
    for (double a : alphas) {
      emit_vertex_csv(out, lifted_cut_vertices(info.gs, a), a);
    }
    return 0;
  }
  njson cuts = njson::array();
  for (double a : alphas) {
    cuts.push_back({{"alpha", a}, {"vertices", lifted_cut_vertices(info.gs, a)}});
  }
  emit_json(out, njson{{"case", info.tag}, {"cuts", cuts}});
  return 0;
}

}  // namespace

FuzzySystem parse_system(const std::string& text) {
  njson doc;
  try {
    doc = njson::parse(text);
  } catch (const njson::parse_error& ex) {
    throw ParseError(ex.what());
  }
  try {
    if (!doc.contains("A") || !doc.contains("b")) {
      throw ValidationError("system file must contain \"A\" and \"b\"");
    }
    const auto& a = doc.at("A");
    if (!a.is_array() || a.empty() || !a[0].is_array() || a[0].empty()) {
      throw ValidationError("\"A\" must be a nonempty 2-D array");
    }
    const std::size_t m = a.size(), n = a[0].size();
    Matrix A(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (!a[i].is_array() || a[i].size() != n) {
        throw ValidationError("\"A\" rows must have equal length");
      }
      for (std::size_t j = 0; j < n; ++j) {
        A(i, j) = a[i][j].get<double>();
        if (!std::isfinite(A(i, j))) {
          throw ValidationError("\"A\" entries must be finite");
        }
      }
    }
    const auto& b = doc.at("b");
    if (!b.is_array() || b.size() != m) {
      throw ValidationError("\"b\" must list one entry per equation");
    }
    FuzzySystem sys;
    sys.A = std::move(A);
    for (std::size_t i = 0; i < m; ++i) sys.rhs.push_back(parse_rhs_entry(b[i], i));
    return sys;
  } catch (const ValidationError&) {
    throw;
  } catch (const njson::exception& ex) {
    throw ValidationError(ex.what());
  }
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Fuzzy linear system solver: united solution sets for "
               "A x = B with crisp A and fuzzy right-hand sides"};
  app.require_subcommand(1);

  std::string file, format = "json", point_text, bbox_text;
  std::vector<double> alphas{0.0};
  double alpha = 0.0, tol = kDefaultRankTol, tol_alpha = 1e-6;
  std::size_t resolution = 100;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "system file (JSON)")->required();
    sub->add_option("--tol", tol, "rank tolerance (default 1e-10)");
    sub->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "solve and report the full result");
  add_common(solve);
  solve->add_option("--alpha", alphas, "cut levels to report")->delimiter(',');
  solve->add_option("--tol-alpha", tol_alpha, "max-membership bisection tolerance");

  CLI::App* memb = app.add_subcommand("membership", "membership of a point");
  add_common(memb);
  memb->add_option("--point", point_text, "comma-separated coordinates")->required();

  CLI::App* verts = app.add_subcommand("vertices", "alpha-cut vertex list");
  add_common(verts);
  verts->add_option("--alpha", alpha, "cut level (default 0)");

  CLI::App* maxm = app.add_subcommand("max-membership", "highest-membership point");
  add_common(maxm);
  maxm->add_option("--tol-alpha", tol_alpha, "bisection tolerance (default 1e-6)");

  CLI::App* oracle = app.add_subcommand("oracle", "grid comparison against the direct evaluator");
  add_common(oracle);
  oracle->add_option("--alpha", alpha, "cut level");
  oracle->add_option("--bbox", bbox_text, "lo,hi per variable")->required();
  oracle->add_option("--resolution", resolution, "grid points per axis");

  CLI::App* plot = app.add_subcommand("plot-data", "vertex lists for several cut levels");
  add_common(plot);
  plot->add_option("--alphas", alphas, "comma-separated cut levels")
      ->delimiter(',')
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << ex.what() << "\n";
    return 1;
  }

  try {
    const FuzzySystem sys = load_file(file);
    if (solve->parsed()) return cmd_solve(sys, alphas, tol, tol_alpha, format, out);
    if (memb->parsed()) {
      return cmd_membership(sys, parse_number_list(point_text, "--point"), out);
    }
    if (verts->parsed()) return cmd_vertices(sys, alpha, tol, format, out);
    if (maxm->parsed()) return cmd_max_membership(sys, tol, tol_alpha, out);
    if (oracle->parsed()) {
      return cmd_oracle(sys, alpha, parse_number_list(bbox_text, "--bbox"),
                        resolution, tol, out);
    }
    if (plot->parsed()) return cmd_plot_data(sys, alphas, tol, format, out);
    err << "no subcommand given\n";
    return 1;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return 1;
  } catch (const ValidationError& ex) {
    err << "validation error: " << ex.what() << "\n";
    return 1;
  } catch (const Inconsistent& ex) {
    err << "inconsistent system: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace fls
