#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "periodgeom/datasets.hpp"
#include "periodgeom/orbit_io.hpp"

using namespace periodgeom;
using nlohmann::json;

TEST_SUITE("orbit_io") {

TEST_CASE("serialization is a fixed point after one round trip") {
  for (const auto& name : dataset_names()) {
    INFO(name);
    const auto data = dataset_by_name(name);
    const auto text = orbit_to_json(data, name, "bundled");
    const auto parsed = parse_orbit_json(text);
    CHECK(orbit_to_json(parsed, name, "bundled") == text);
    CHECK(parsed.rank() == data.rank());
    CHECK(parsed.cone.lattice.weight == data.cone.lattice.weight);
    CHECK(parsed.cone.lattice.form == data.cone.lattice.form);
    CHECK(parsed.cone.lattice.hodge_numbers == data.cone.lattice.hodge_numbers);
    REQUIRE(parsed.cone.generators.size() == data.cone.generators.size());
    for (std::size_t j = 0; j < data.cone.generators.size(); ++j)
      CHECK(parsed.cone.generators[j] == data.cone.generators[j]);
    CHECK(parsed.limit == data.limit);
    CHECK(parsed.has_psi() == data.has_psi());
  }
}

TEST_CASE("parsed orbits validate and entries stay rational strings") {
  const auto text = orbit_to_json(make_e2(), "e2", "bundled");
  const json doc = json::parse(text);
  CHECK(doc.at("schema").get<int>() == 1);
  CHECK(doc.at("rank").get<int>() == 4);
  CHECK(doc.at("metadata").at("name").get<std::string>() == "e2");
  CHECK(doc.at("Q").at(0).at(1).is_string());
  CHECK(doc.at("N").at(0).at(0).at(0).is_string());
  for (const auto& level : doc.at("F")) {
    CHECK(level.contains("p"));
    CHECK(level.contains("vectors"));
  }
}

TEST_CASE("rejects malformed documents with a format error") {
  CHECK_THROWS_AS(parse_orbit_json("not json at all"), FormatError);
  CHECK_THROWS_AS(parse_orbit_json("{}"), FormatError);

  json doc = json::parse(orbit_to_json(make_e1(), "e1", "t"));
  json bad = doc;
  bad["schema"] = 2;
  CHECK_THROWS_AS(parse_orbit_json(bad.dump()), FormatError);

  bad = doc;
  bad.erase("N");
  CHECK_THROWS_AS(parse_orbit_json(bad.dump()), FormatError);

  bad = doc;
  bad["Q"][0][1] = "not-a-number";
  CHECK_THROWS_AS(parse_orbit_json(bad.dump()), FormatError);

  bad = doc;
  bad["hodge_numbers"]["x"] = 1;
  CHECK_THROWS_AS(parse_orbit_json(bad.dump()), FormatError);

  bad = doc;
  bad["F"][0]["p"] = bad["F"][1]["p"];  // duplicate level key
  CHECK_THROWS_AS(parse_orbit_json(bad.dump()), FormatError);

  bad = doc;
  bad["psi"] = json::array();
  bad["psi"].push_back(bad["N"][0]);
  bad["psi"].push_back(bad["N"][0]);  // two psi blocks for one generator
  CHECK_THROWS_AS(parse_orbit_json(bad.dump()), FormatError);
}

TEST_CASE("semantic breakage surfaces as a validation error naming the check") {
  json doc = json::parse(orbit_to_json(make_e1(), "e1", "t"));
  doc["N"][0][0][0] = "1";  // diagonal entry: no longer nilpotent
  try {
    parse_orbit_json(doc.dump());
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("nilpotent") != std::string::npos);
  }
}

TEST_CASE("integrality is enforced only when requested") {
  auto data = make_e1();
  data.cone.generators[0] *= Rat(1, 3);
  const auto text = orbit_to_json(data, "scaled", "t");
  CHECK_THROWS_AS(parse_orbit_json(text), ValidationError);
  CHECK_NOTHROW(parse_orbit_json(text, false));
}

TEST_CASE("file round trip preserves the document") {
  const std::string path = "orbit_io_roundtrip_tmp.json";
  const auto data = make_sym2e1();
  save_orbit(path, data, "sym2e1", "test");
  const auto loaded = load_orbit(path);
  CHECK(orbit_to_json(loaded, "sym2e1", "test") == orbit_to_json(data, "sym2e1", "test"));
  std::ifstream in(path);
  REQUIRE(in.good());
  in.close();
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_orbit(path), FormatError);
}

TEST_CASE("psi blocks survive the round trip") {
  const auto data = make_e1psi();
  const auto parsed = parse_orbit_json(orbit_to_json(data, "e1psi", "t"));
  CHECK(parsed.has_psi());
  REQUIRE(parsed.psi.size() == 1);
  CHECK(parsed.psi[0] == data.psi[0]);
}

}  // TEST_SUITE
