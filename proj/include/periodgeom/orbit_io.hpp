#pragma once

// JSON serialization of nilpotent-orbit datasets.  Inputs carry only exact
// rational strings; schema version 1.

#include <string>

#include "periodgeom/period.hpp"

namespace periodgeom {

/// Serializes an orbit with its name into the versioned JSON document.
std::string orbit_to_json(const NilpotentOrbitData& data, const std::string& name,
                          const std::string& provenance = "curated");

/// Parses the JSON document; throws FormatError on schema violations and,
/// when validate is set, ValidationError listing every violated orbit
/// invariant.  Pass validate = false to inspect a questionable file.
NilpotentOrbitData parse_orbit_json(const std::string& text,
                                    bool check_integrality = true,
                                    bool validate = true);

NilpotentOrbitData load_orbit(const std::string& path, bool check_integrality = true);

void save_orbit(const std::string& path, const NilpotentOrbitData& data,
                const std::string& name, const std::string& provenance = "curated");

}  // namespace periodgeom
