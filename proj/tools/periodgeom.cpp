// Command-line front end.  Every subcommand maps to one library operation;
// text output on stdout, --json switches to a JSON document for machine
// diffing.  Exit codes: 0 success, 1 check failure, 2 usage or I/O.

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "periodgeom/acceptance.hpp"
#include "periodgeom/asymptotics.hpp"
#include "periodgeom/datasets.hpp"
#include "periodgeom/hodge_locus.hpp"
#include "periodgeom/orbit_io.hpp"
#include "periodgeom/reduction.hpp"

namespace pg = periodgeom;
using nlohmann::json;

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

std::string fmt(std::complex<double> z) {
  std::ostringstream out;
  out << std::setprecision(17) << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return out.str();
}

json json_complex(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

pg::NilpotentOrbitData resolve_orbit(const std::string& arg) {
  const auto names = pg::dataset_names();
  if (std::find(names.begin(), names.end(), arg) != names.end())
    return pg::dataset_by_name(arg);
  return pg::load_orbit(arg);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<pg::RatComplex> parse_point(const std::string& text) {
  std::vector<pg::RatComplex> z;
  for (const auto& part : split_list(text)) z.push_back(pg::parse_rational_complex(part));
  return z;
}

std::vector<std::complex<double>> to_float_point(const std::vector<pg::RatComplex>& z) {
  std::vector<std::complex<double>> out;
  for (const auto& c : z) out.push_back(pg::to_complex(c));
  return out;
}

pg::RatVector parse_vector(const std::string& text, pg::Index rank) {
  if (text.size() >= 2 && text.front() == 'e') {
    bool digits = true;
    for (std::size_t i = 1; i < text.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(text[i]));
    if (digits) {
      const long k = std::stol(text.substr(1));
      if (k < 1 || k > rank) throw pg::FormatError("basis vector index out of range");
      pg::RatVector v = pg::RatVector::Zero(rank);
      v(k - 1) = pg::Rat(1);
      return v;
    }
  }
  const auto parts = split_list(text);
  if (static_cast<pg::Index>(parts.size()) != rank)
    throw pg::FormatError("vector length does not match the orbit rank");
  pg::RatVector v(rank);
  for (pg::Index i = 0; i < rank; ++i) v(i) = pg::parse_rational(parts[static_cast<std::size_t>(i)]);
  return v;
}

std::string exponent_tuple(const std::vector<int>& e) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << ", ";
    out << (e[i] >= 0 ? "+" : "") << e[i];
  }
  out << ")";
  return out.str();
}

json json_rational_matrix(const pg::RatMatrix& m) {
  json rows = json::array();
  for (pg::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (pg::Index j = 0; j < m.cols(); ++j) row.push_back(pg::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json json_complex_matrix(const pg::CRatMatrix& m) {
  json rows = json::array();
  for (pg::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (pg::Index j = 0; j < m.cols(); ++j) row.push_back(pg::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string describe_matrix_row(const pg::RatMatrix& m, pg::Index i) {
  std::ostringstream out;
  out << "[";
  for (pg::Index j = 0; j < m.cols(); ++j) {
    if (j) out << ", ";
    out << pg::to_string(m(i, j));
  }
  out << "]";
  return out.str();
}

template <class S>
std::string describe_basis(const pg::MatrixX<S>& basis) {
  std::ostringstream out;
  for (pg::Index c = 0; c < basis.cols(); ++c) {
    if (c) out << "; ";
    out << "(";
    for (pg::Index i = 0; i < basis.rows(); ++i) {
      if (i) out << ", ";
      out << pg::to_string(basis(i, c));
    }
    out << ")";
  }
  return out.str();
}

std::string multipoly_text(const pg::MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) out << " + ";
    first = false;
    out << "(" << pg::to_string(c) << ")";
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) {
        out << " z" << (j + 1);
        if (e[j] > 1) out << "^" << e[j];
      }
  }
  return out.str();
}

json multipoly_json(const pg::MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms)
    terms.push_back({{"exponents", e}, {"coefficient", pg::to_string(c)}});
  return terms;
}

struct GlobalOpts {
  unsigned seed = 2026;
  int jobs = 1;
  bool json_out = false;
};

int cmd_validate(const std::string& orbit_arg, bool integrality, const GlobalOpts& g) {
  pg::ValidationReport report;
  const auto names = pg::dataset_names();
  if (std::find(names.begin(), names.end(), orbit_arg) != names.end()) {
    report = pg::validate_orbit(pg::dataset_by_name(orbit_arg), integrality);
  } else {
    std::ifstream in(orbit_arg);
    if (!in) throw pg::FormatError("cannot open " + orbit_arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      report = pg::validate_orbit(
          pg::parse_orbit_json(buffer.str(), integrality, /*validate=*/false), integrality);
    } catch (const pg::Error& e) {
      // a file that does not even parse to an orbit is a validation failure,
      // not a usage error
      report.checks.push_back({"schema", false, e.what()});
    }
  }
  if (g.json_out) {
    json doc;
    doc["checks"] = json::array();
    for (const auto& c : report.checks)
      doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["all_passed"] = report.all_passed();
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.passed ? "ok   " : "FAIL ") << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_weight_filtration(const std::string& orbit_arg, const GlobalOpts& g) {
  const pg::NilpotentOrbitData data = resolve_orbit(orbit_arg);
  const auto ws = pg::cone_weight_filtrations(data.cone, 3, g.seed);
  json doc;
  doc["filtrations"] = json::array();
  for (std::size_t j = 0; j < ws.size(); ++j) {
    json levels = json::array();
    if (!g.json_out) std::cout << "W(M_" << (j + 1) << "):\n";
    for (int k = ws[j].lo(); k <= ws[j].hi(); ++k) {
      const auto& piece = ws[j].at(k);
      if (g.json_out) {
        json level;
        level["k"] = k;
        level["dim"] = piece.dim();
        level["basis"] = json_complex_matrix(pg::complexify(piece.basis()));
        levels.push_back(std::move(level));
      } else {
        std::cout << "  W_" << k << "  dim " << piece.dim();
        if (piece.dim() > 0 && !piece.is_full())
          std::cout << "  span " << describe_basis<pg::Rat>(piece.basis());
        std::cout << "\n";
      }
    }
    doc["filtrations"].push_back({{"j", j + 1}, {"levels", std::move(levels)}});
  }
  if (g.json_out) std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_split(const std::string& orbit_arg, bool rational, int center_override,
              bool has_center, const GlobalOpts& g) {
  const pg::NilpotentOrbitData data = resolve_orbit(orbit_arg);
  json doc;
  doc["pieces"] = json::array();
  if (rational) {
    const auto j = pg::rational_splitting(pg::cone_weight_filtrations(data.cone, 3, g.seed));
    for (const auto& [sigma, piece] : j.pieces) {
      if (g.json_out)
        doc["pieces"].push_back({{"degree", sigma},
                                 {"dim", piece.dim()},
                                 {"basis", json_rational_matrix(piece.basis())}});
      else
        std::cout << "J^" << exponent_tuple(sigma) << "  dim " << piece.dim() << "  span "
                  << describe_basis<pg::Rat>(piece.basis()) << "\n";
    }
  } else {
    pg::RatMatrix total = pg::RatMatrix::Zero(data.rank(), data.rank());
    for (const auto& n : data.cone.generators) total += n;
    const int center = has_center ? center_override : data.cone.lattice.weight;
    const auto split = pg::deligne_splitting(data.limit, pg::weight_filtration(total), center);
    for (const auto& [pq, piece] : split.pieces) {
      if (g.json_out)
        doc["pieces"].push_back({{"degree", pq},
                                 {"dim", piece.dim()},
                                 {"basis", json_complex_matrix(piece.basis())}});
      else
        std::cout << "I^{" << pq[0] << "," << pq[1] << "}  dim " << piece.dim() << "  span "
                  << describe_basis<pg::RatComplex>(piece.basis()) << "\n";
    }
  }
  if (g.json_out) std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_hodge_form(const std::string& orbit_arg, const std::string& z_arg,
                   bool force_float, const GlobalOpts& g) {
  const pg::NilpotentOrbitData data = resolve_orbit(orbit_arg);
  const auto z = parse_point(z_arg);
  if (static_cast<pg::Index>(z.size()) != data.variables())
    throw pg::FormatError("point dimension does not match the cone");
  json doc;
  if (!force_float && !data.has_psi()) {
    const pg::CRatMatrix gram = pg::hodge_metric_exact(
        data, z, pg::CRatMatrix(pg::CRatMatrix::Identity(data.rank(), data.rank())));
    doc["backend"] = "exact";
    doc["gram"] = json_complex_matrix(gram);
    if (!g.json_out) {
      std::cout << "exact Gram matrix of h on the standard basis:\n";
      for (pg::Index i = 0; i < gram.rows(); ++i) {
        std::cout << "  [";
        for (pg::Index j = 0; j < gram.cols(); ++j)
          std::cout << (j ? ", " : "") << pg::to_string(gram(i, j));
        std::cout << "]\n";
      }
    }
  } else {
    const pg::AdaptedFlag flag = pg::adapted_flag(data);
    const auto zf = to_float_point(z);
    const Eigen::MatrixXcd gram = pg::hodge_metric(
        data, flag, zf, Eigen::MatrixXcd::Identity(data.rank(), data.rank()));
    doc["backend"] = "float";
    json rows = json::array();
    for (pg::Index i = 0; i < gram.rows(); ++i) {
      json row = json::array();
      for (pg::Index j = 0; j < gram.cols(); ++j) row.push_back(json_complex(gram(i, j)));
      rows.push_back(std::move(row));
    }
    doc["gram"] = std::move(rows);
    if (!g.json_out) {
      std::cout << "Gram matrix of h on the standard basis:\n";
      for (pg::Index i = 0; i < gram.rows(); ++i) {
        std::cout << "  [";
        for (pg::Index j = 0; j < gram.cols(); ++j) std::cout << (j ? ", " : "") << fmt(gram(i, j));
        std::cout << "]\n";
      }
    }
  }
  const pg::AdaptedFlag flag = pg::adapted_flag(data);
  const bool polarized = pg::is_polarized_at(data, flag, to_float_point(z));
  doc["polarized"] = polarized;
  if (g.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << "polarized: " << (polarized ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sweep(const std::string& orbit_arg, int density, const std::string& floor_arg,
              const std::string& ceil_arg, bool wrong_basis, const std::string& csv_path,
              const GlobalOpts& g) {
  const pg::NilpotentOrbitData data = resolve_orbit(orbit_arg);
  pg::SigmaRegion region;
  region.n = data.variables();
  region.y_floor = pg::parse_rational(floor_arg);
  if (!ceil_arg.empty()) region.y_ceil = pg::parse_rational(ceil_arg);
  const pg::SweepResult result =
      pg::reducedness_sweep(data, region, density, g.jobs, wrong_basis);
  if (!csv_path.empty()) {
    if (csv_path == "-") {
      std::cout << pg::sweep_to_csv(result);
    } else {
      std::ofstream out(csv_path);
      if (!out) throw pg::FormatError("cannot open " + csv_path + " for writing");
      out << pg::sweep_to_csv(result);
    }
  }
  if (g.json_out) {
    json doc;
    doc["c_star"] = result.c_star;
    doc["truncated_c_star"] = result.truncated_c_star;
    doc["growth_ratio"] = result.growth_ratio;
    doc["translate_absorption"] = result.translate_absorption_verified;
    doc["basis"] = json_rational_matrix(result.basis);
    doc["rows"] = json::array();
    for (const auto& row : result.rows) {
      json r;
      r["z"] = json::array();
      for (const auto& z : row.z) r["z"].push_back(json_complex(z));
      r["h"] = row.h_diag;
      r["defects"] = {row.defects[0], row.defects[1], row.defects[2]};
      doc["rows"].push_back(std::move(r));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (csv_path != "-") {
    std::cout << "grid points: " << result.rows.size() << "\n";
    std::cout << "C* = " << fmt(result.c_star) << "\n";
    std::cout << "one decade lower: " << fmt(result.truncated_c_star) << "\n";
    std::cout << "growth ratio: " << fmt(result.growth_ratio) << "\n";
    std::cout << "translate absorption: "
              << (result.translate_absorption_verified ? "verified" : "FAILED") << "\n";
  }
  return 0;
}

int cmd_fit(const std::string& orbit_arg, const std::string& vector_arg, double lambda_max,
            int points, const GlobalOpts& g) {
  const pg::NilpotentOrbitData data = resolve_orbit(orbit_arg);
  const pg::RatVector u = parse_vector(vector_arg, data.rank());
  const auto rays = pg::default_rays(data.variables(), lambda_max, points);
  const pg::FitResult fit = pg::fit_exponents(data, u, rays);
  const auto j = pg::rational_splitting(pg::cone_weight_filtrations(data.cone, 3, g.seed));
  std::optional<std::vector<int>> predicted;
  try {
    predicted = pg::predicted_exponents(j, u);
  } catch (const pg::ValidationError&) {
  }
  if (g.json_out) {
    json doc;
    doc["exponents"] = fit.exponents;
    doc["raw"] = fit.raw;
    doc["residual"] = fit.residual;
    if (predicted) doc["predicted"] = *predicted;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "s = " << exponent_tuple(fit.exponents) << "\n";
    std::cout << "raw fit =";
    for (double r : fit.raw) std::cout << " " << fmt(r);
    std::cout << "\nresidual = " << fmt(fit.residual) << "\n";
    if (predicted)
      std::cout << "splitting predicts " << exponent_tuple(*predicted)
                << (fit.exponents == *predicted ? " (match)" : " (MISMATCH)") << "\n";
    else
      std::cout << "splitting predicts nothing: vector mixes pieces\n";
  }
  return 0;
}

int cmd_reduce(const std::string& z_arg, const GlobalOpts& g) {
  const pg::RatComplex z = pg::parse_rational_complex(z_arg);
  const pg::Sl2Reduction red = pg::reduce_sl2(z);
  if (g.json_out) {
    json doc;
    doc["z0"] = pg::to_string(red.z0);
    doc["gamma"] = json_rational_matrix(red.gamma);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "z0 = " << pg::to_string(red.z0) << "\n";
    std::cout << "gamma = [" << describe_matrix_row(red.gamma, 0) << ", "
              << describe_matrix_row(red.gamma, 1) << "]\n";
  }
  return 0;
}

int cmd_hecke(const std::string& z_arg, long long p, const GlobalOpts& g) {
  const pg::RatComplex z = pg::parse_rational_complex(z_arg);
  pg::HeckeElement elem{pg::RatMatrix(2, 2)};
  elem.g << pg::Rat(p), pg::Rat(0), pg::Rat(0), pg::Rat(1);
  const pg::Index degree = pg::hecke_degree(elem);
  const auto points = pg::hecke_points(z, elem);
  std::map<std::string, int> multiset;
  for (const auto& hp : points) ++multiset[pg::to_string(hp.point)];
  if (g.json_out) {
    json doc;
    doc["degree"] = degree;
    doc["points"] = json::array();
    for (const auto& [key, count] : multiset)
      doc["points"].push_back({{"point", key}, {"count", count}});
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "degree = " << degree << "\n";
    std::cout << "points = {";
    bool first = true;
    for (const auto& [key, count] : multiset) {
      std::cout << (first ? "" : ", ") << key << " x " << count;
      first = false;
    }
    std::cout << "}\n";
  }
  return 0;
}

int cmd_intersectors(const std::string& t1, const std::string& u1, const std::string& t2,
                     const std::string& u2, int bound, const GlobalOpts& g) {
  pg::SiegelSetSpec s1, s2;
  s1.t = pg::parse_rational(t1);
  s1.u = pg::parse_rational(u1);
  s2.t = pg::parse_rational(t2);
  s2.u = pg::parse_rational(u2);
  const pg::IntersectorReport report = pg::siegel_intersectors(s1, s2, bound);
  if (g.json_out) {
    json doc;
    doc["members"] = json::array();
    for (const auto& m : report.members) doc["members"].push_back(json_rational_matrix(m));
    doc["indeterminate"] = json::array();
    for (const auto& m : report.indeterminate)
      doc["indeterminate"].push_back(json_rational_matrix(m));
    doc["stable"] = report.stable;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "members: " << report.members.size() << "\n";
    for (const auto& m : report.members)
      std::cout << "  [" << describe_matrix_row(m, 0) << ", " << describe_matrix_row(m, 1)
                << "]\n";
    std::cout << "indeterminate: " << report.indeterminate.size() << "\n";
    std::cout << "stable under doubling the bound: " << (report.stable ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_bs_bb(const std::string& x_arg, const std::string& t_arg, const GlobalOpts& g) {
  const pg::Rat x = pg::parse_rational(x_arg);
  const pg::Rat t = pg::parse_rational(t_arg);
  const std::complex<double> z = pg::bs_to_bb(x, t);
  if (g.json_out) {
    json doc;
    doc["z"] = json_complex(z);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "z = " << fmt(z) << "\n";
  }
  return 0;
}

int cmd_locus(const std::string& orbit_arg, const std::string& vector_arg,
              const std::string& y0_arg, int max_degree, const GlobalOpts& g) {
  const pg::NilpotentOrbitData data = resolve_orbit(orbit_arg);
  const pg::RatVector v = parse_vector(vector_arg, data.rank());
  const pg::LocusSystem system = pg::hodge_vector_condition(data, v);
  const pg::StripRegion strip{pg::parse_rational(y0_arg)};
  const pg::LocusSolution solution = pg::locus_solve(system, strip);
  const pg::AlgebraicityReport report = pg::q_algebraicity_check(solution, max_degree);

  json doc;
  doc["p0"] = system.p0;
  doc["equations"] = json::array();
  for (const auto& eq : system.equations) doc["equations"].push_back(multipoly_json(eq));
  const char* kind = solution.kind == pg::LocusKind::Empty            ? "empty"
                     : solution.kind == pg::LocusKind::Finite         ? "finite"
                     : solution.kind == pg::LocusKind::IdenticallyZero ? "identically-zero"
                                                                       : "curve";
  doc["kind"] = kind;
  doc["points"] = json::array();
  for (const auto& point : solution.points) {
    json p;
    p["exact"] = point.exact;
    p["multiplicity"] = point.multiplicity;
    p["z"] = json::array();
    if (point.exact)
      for (const auto& z : point.z) p["z"].push_back(pg::to_string(z));
    else
      for (const auto& z : point.approx) p["z"].push_back(json_complex(z));
    p["q"] = json::array();
    for (const auto& z : point.approx)
      p["q"].push_back(json_complex(std::exp(std::complex<double>(0, 2 * 3.141592653589793238462643383279502884) * z)));
    doc["points"].push_back(std::move(p));
  }
  doc["curves"] = json::array();
  for (const auto& curve : solution.curves) {
    json c;
    c["defining"] = multipoly_json(curve.defining);
    c["certified"] = curve.certified;
    c["samples"] = json::array();
    for (const auto& s : curve.samples)
      c["samples"].push_back({json_complex(s[0]), json_complex(s[1])});
    doc["curves"].push_back(std::move(c));
  }
  doc["algebraicity"] = {{"algebraic", report.algebraic},
                         {"validation_error", report.validation_error},
                         {"note", report.note}};
  if (!report.relation.empty()) {
    json rel = json::array();
    for (const auto& [mono, coeff] : report.relation)
      rel.push_back({{"exponents", {mono[0], mono[1]}}, {"coefficient", json_complex(coeff)}});
    doc["algebraicity"]["relation"] = std::move(rel);
  }

  if (g.json_out) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "p0 = " << system.p0 << "\n";
  std::cout << "equations:\n";
  for (const auto& eq : system.equations) std::cout << "  " << multipoly_text(eq) << " = 0\n";
  std::cout << "kind: " << kind << "\n";
  for (const auto& point : solution.points) {
    std::cout << "  point ";
    if (point.exact) {
      for (const auto& z : point.z) std::cout << pg::to_string(z) << " ";
      std::cout << "(exact)";
    } else {
      for (const auto& z : point.approx) std::cout << fmt(z) << " ";
      std::cout << "(approximate)";
    }
    std::cout << " multiplicity " << point.multiplicity << "\n";
  }
  for (const auto& curve : solution.curves)
    std::cout << "  curve " << multipoly_text(curve.defining) << " = 0 with "
              << curve.samples.size() << " certified samples"
              << (curve.certified ? "" : " (CERTIFICATION FAILED)") << "\n";
  std::cout << "algebraicity: " << (report.algebraic ? "yes" : "no") << " (" << report.note
            << ")\n";
  return 0;
}

int cmd_report(const GlobalOpts& g) {
  const auto results = pg::run_acceptance();
  if (g.json_out) {
    json doc = json::array();
    for (const auto& r : results)
      doc.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::ostringstream line;
      line << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name
           << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
      if (!r.passed) line << ": " << r.detail;
      std::cout << line.str() << "\n";
    }
  }
  return pg::all_criteria_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and floating computations on nilpotent-orbit period data"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for randomized samplers")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")
      ->envname("PERIODGEOM_JOBS")
      ->capture_default_str();
  app.add_flag("--json", g.json_out, "emit JSON instead of text");

  std::string orbit_arg = "none", z_arg, vector_arg, floor_arg = "1", ceil_arg,
              csv_path, y0_arg = "2", x_arg, t_arg;
  std::string t1 = "1", u1 = "1/2", t2 = "1", u2 = "1/2";
  bool integrality = true, rational = false, force_float = false, wrong_basis = false;
  int density = 4, points = 12, bound = 3, max_degree = 3, center = 0;
  long long prime = 2;
  double lambda_max = 1e3;

  auto* validate = app.add_subcommand("validate", "check every orbit invariant");
  validate->add_option("orbit,--orbit", orbit_arg, "bundled name or JSON path")->required();
  validate->add_flag("!--no-integrality", integrality, "skip exp(N) integrality");

  auto* wf = app.add_subcommand("weight-filtration", "weight filtrations of the partial sums");
  wf->add_option("--orbit", orbit_arg)->required();

  auto* split = app.add_subcommand("split", "Deligne or rational multigraded splitting");
  split->add_option("--orbit", orbit_arg)->required();
  split->add_flag("--rational", rational, "rational splitting instead of Deligne");
  auto* center_opt = split->add_option("--center", center, "center of the Deligne indices");

  auto* hodge = app.add_subcommand("hodge-form", "Gram matrix of the Hodge form at a point");
  hodge->add_option("--orbit", orbit_arg)->required();
  hodge->add_option("--z", z_arg, "comma-separated complex rationals")->required();
  hodge->add_flag("--float", force_float, "force the floating backend");

  auto* sweep = app.add_subcommand("sweep", "reducedness defects over a sample grid");
  sweep->add_option("--orbit", orbit_arg)->required();
  sweep->add_option("--density", density)->capture_default_str();
  sweep->add_option("--floor", floor_arg, "y floor (rational)")->capture_default_str();
  sweep->add_option("--ceil", ceil_arg, "y ceiling (rational); decades when unset");
  sweep->add_flag("--wrong-basis", wrong_basis, "mix the extreme blocks (negative control)");
  sweep->add_option("--csv", csv_path, "CSV output path, - for stdout");

  auto* fit = app.add_subcommand("fit", "least-squares growth exponents of a vector");
  fit->add_option("--orbit", orbit_arg)->required();
  fit->add_option("--vector", vector_arg, "eK or comma-separated rationals")->required();
  fit->add_option("--lambda-max", lambda_max)->capture_default_str();
  fit->add_option("--points", points)->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "reduce a point of H to the fundamental set");
  reduce->add_option("--z", z_arg)->required();

  auto* hecke = app.add_subcommand("hecke", "reduced hecke orbit of a point");
  hecke->add_option("--orbit", orbit_arg, "ignored; accepted for uniformity");
  hecke->add_option("--z", z_arg)->required();
  hecke->add_option("--p", prime, "determinant of the correspondence")->capture_default_str();

  auto* inter = app.add_subcommand("intersectors", "integral strip intersectors");
  inter->add_option("--bound", bound)->capture_default_str();
  inter->add_option("--t1", t1)->capture_default_str();
  inter->add_option("--u1", u1)->capture_default_str();
  inter->add_option("--t2", t2)->capture_default_str();
  inter->add_option("--u2", u2)->capture_default_str();

  auto* bsbb = app.add_subcommand("bs-bb", "boundary chart (x, t) -> disk coordinate");
  bsbb->add_option("--x", x_arg)->required();
  bsbb->add_option("--t", t_arg)->required();

  auto* locus = app.add_subcommand("locus", "hodge-class locus of a rational vector");
  locus->add_option("--orbit", orbit_arg)->required();
  locus->add_option("--vector", vector_arg)->required();
  locus->add_option("--y0", y0_arg, "strip floor (rational)")->capture_default_str();
  locus->add_option("--max-degree", max_degree)->capture_default_str();

  auto* report = app.add_subcommand("report", "run the acceptance suite");
  (void)report;

  // let --json / --seed / --jobs appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(orbit_arg, integrality, g);
    if (wf->parsed()) return cmd_weight_filtration(orbit_arg, g);
    if (split->parsed())
      return cmd_split(orbit_arg, rational, center, center_opt->count() > 0, g);
    if (hodge->parsed()) return cmd_hodge_form(orbit_arg, z_arg, force_float, g);
    if (sweep->parsed())
      return cmd_sweep(orbit_arg, density, floor_arg, ceil_arg, wrong_basis, csv_path, g);
    if (fit->parsed()) return cmd_fit(orbit_arg, vector_arg, lambda_max, points, g);
    if (reduce->parsed()) return cmd_reduce(z_arg, g);
    if (hecke->parsed()) return cmd_hecke(z_arg, prime, g);
    if (inter->parsed()) return cmd_intersectors(t1, u1, t2, u2, bound, g);
    if (bsbb->parsed()) return cmd_bs_bb(x_arg, t_arg, g);
    if (locus->parsed()) return cmd_locus(orbit_arg, vector_arg, y0_arg, max_degree, g);
    if (report->parsed()) return cmd_report(g);
  } catch (const pg::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
