#include "periodgeom/orbit_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace periodgeom {

namespace {

using nlohmann::json;

json rational_matrix(const RatMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json complex_matrix(const CRatMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix parse_rational_matrix(const json& rows, Index expected) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != expected)
    throw FormatError("matrix row count does not match the rank");
  RatMatrix m(expected, expected);
  for (Index i = 0; i < expected; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != expected)
      throw FormatError("matrix column count does not match the rank");
    for (Index j = 0; j < expected; ++j)
      m(i, j) = parse_rational(row[static_cast<std::size_t>(j)].get<std::string>());
  }
  return m;
}

CRatMatrix parse_complex_matrix(const json& rows, Index expected) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != expected)
    throw FormatError("matrix row count does not match the rank");
  CRatMatrix m(expected, expected);
  for (Index i = 0; i < expected; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != expected)
      throw FormatError("matrix column count does not match the rank");
    for (Index j = 0; j < expected; ++j)
      m(i, j) = parse_rational_complex(row[static_cast<std::size_t>(j)].get<std::string>());
  }
  return m;
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field: ") + key);
  return *it;
}

}  // namespace

std::string orbit_to_json(const NilpotentOrbitData& data, const std::string& name,
                          const std::string& provenance) {
  json doc;
  doc["schema"] = 1;
  doc["metadata"] = {{"name", name}, {"provenance", provenance}};
  doc["rank"] = data.rank();
  doc["weight"] = data.cone.lattice.weight;
  doc["Q"] = rational_matrix(data.cone.lattice.form);
  json hodge = json::object();
  for (const auto& [p, h] : data.cone.lattice.hodge_numbers)
    hodge[std::to_string(p)] = h;
  doc["hodge_numbers"] = std::move(hodge);
  json gens = json::array();
  for (const auto& n : data.cone.generators) gens.push_back(rational_matrix(n));
  doc["N"] = std::move(gens);
  json levels = json::array();
  for (int p = data.limit.lo(); p <= data.limit.hi(); ++p) {
    json level;
    level["p"] = p;
    json vectors = json::array();
    const CRatMatrix& basis = data.limit.at(p).basis();
    for (Index c = 0; c < basis.cols(); ++c) {
      json vec = json::array();
      for (Index i = 0; i < basis.rows(); ++i) vec.push_back(to_string(basis(i, c)));
      vectors.push_back(std::move(vec));
    }
    level["vectors"] = std::move(vectors);
    levels.push_back(std::move(level));
  }
  doc["F"] = std::move(levels);
  if (data.has_psi()) {
    json psi = json::array();
    for (const auto& m : data.psi) psi.push_back(complex_matrix(m));
    doc["psi"] = std::move(psi);
  }
  return doc.dump(2) + "\n";
}

NilpotentOrbitData parse_orbit_json(const std::string& text, bool check_integrality,
                                    bool validate) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (require(doc, "schema").get<int>() != 1)
      throw FormatError("unsupported schema version");
    const Index rank = require(doc, "rank").get<Index>();
    if (rank < 1) throw FormatError("rank must be positive");

    NilpotentCone cone;
    cone.lattice.rank = rank;
    cone.lattice.weight = require(doc, "weight").get<int>();
    cone.lattice.form = parse_rational_matrix(require(doc, "Q"), rank);
    for (const auto& [key, value] : require(doc, "hodge_numbers").items()) {
      int p = 0;
      try {
        p = std::stoi(key);
      } catch (const std::exception&) {
        throw FormatError("hodge_numbers keys must be integers");
      }
      cone.lattice.hodge_numbers[p] = value.get<Index>();
    }
    const json& gens = require(doc, "N");
    if (!gens.is_array() || gens.empty())
      throw FormatError("N must be a non-empty list of matrices");
    for (const auto& g : gens)
      cone.generators.push_back(parse_rational_matrix(g, rank));

    const json& levels = require(doc, "F");
    if (!levels.is_array() || levels.empty())
      throw FormatError("F must be a non-empty list of levels");
    std::map<int, Subspace<RatComplex>> steps;
    for (const auto& level : levels) {
      const int p = require(level, "p").get<int>();
      const json& vectors = require(level, "vectors");
      if (!vectors.is_array()) throw FormatError("level vectors must be a list");
      CRatMatrix gen(rank, static_cast<Index>(vectors.size()));
      Index c = 0;
      for (const auto& vec : vectors) {
        if (!vec.is_array() || static_cast<Index>(vec.size()) != rank)
          throw FormatError("filtration vector length does not match the rank");
        for (Index i = 0; i < rank; ++i)
          gen(i, c) = parse_rational_complex(vec[static_cast<std::size_t>(i)].get<std::string>());
        ++c;
      }
      if (!steps.emplace(p, Subspace<RatComplex>::span_of(gen)).second)
        throw FormatError("duplicate filtration level");
    }

    std::vector<CRatMatrix> psi;
    if (auto it = doc.find("psi"); it != doc.end()) {
      if (!it->is_array()) throw FormatError("psi must be a list of matrices");
      for (const auto& m : *it) psi.push_back(parse_complex_matrix(m, rank));
      if (psi.size() != cone.generators.size())
        throw FormatError("psi must have one matrix per generator");
    }

    NilpotentOrbitData data{
        std::move(cone),
        Filtration<RatComplex>::from_map(FiltrationKind::Decreasing, rank, steps),
        std::move(psi)};

    if (!validate) return data;

    const ValidationReport report = validate_orbit(data, check_integrality);
    if (!report.all_passed()) {
      std::ostringstream msg;
      msg << "orbit fails validation:";
      for (const auto& check : report.checks)
        if (!check.passed) msg << "\n  " << check.name << ": " << check.detail;
      throw ValidationError(msg.str());
    }
    return data;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed orbit document: ") + e.what());
  }
}

NilpotentOrbitData load_orbit(const std::string& path, bool check_integrality) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_orbit_json(buffer.str(), check_integrality);
}

void save_orbit(const std::string& path, const NilpotentOrbitData& data,
                const std::string& name, const std::string& provenance) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << orbit_to_json(data, name, provenance);
}

}  // namespace periodgeom
