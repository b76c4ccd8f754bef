// Writes every bundled orbit to <outdir>/<name>.json so the CLI and the
// format round-trip tests have on-disk fixtures.

#include <filesystem>
#include <iostream>

#include "periodgeom/datasets.hpp"
#include "periodgeom/orbit_io.hpp"

int main(int argc, char** argv) {
  const std::string outdir = argc > 1 ? argv[1] : "data";
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) {
    std::cerr << "cannot create " << outdir << ": " << ec.message() << "\n";
    return 2;
  }
  for (const auto& name : periodgeom::dataset_names()) {
    const auto path = outdir + "/" + name + ".json";
    periodgeom::save_orbit(path, periodgeom::dataset_by_name(name), name, "bundled");
    std::cout << path << "\n";
  }
  return 0;
}
