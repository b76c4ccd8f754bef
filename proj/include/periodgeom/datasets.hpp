#pragma once

// Curated nilpotent orbits used by the test harness and CLI, plus the
// functorial constructions (direct sum, tensor, symmetric and exterior
// square) they are assembled from.

#include <string>
#include <vector>

#include "periodgeom/period.hpp"

namespace periodgeom {

NilpotentOrbitData direct_sum(const NilpotentOrbitData& a, const NilpotentOrbitData& b);
NilpotentOrbitData tensor_product(const NilpotentOrbitData& a, const NilpotentOrbitData& b);
NilpotentOrbitData sym_square(const NilpotentOrbitData& a);
NilpotentOrbitData lambda_square(const NilpotentOrbitData& a);

/// Weight-1 rank-2 orbit, one variable: N e1 = e2, F^1 = span(e1).
NilpotentOrbitData make_e1();
/// E1 with the holomorphic correction g(t) = 1 + t N.
NilpotentOrbitData make_e1psi();
/// Weight-1 rank-4 orbit, two variables: direct sum of two rank-2 factors
/// with moduli z1 + z2 and z2.
NilpotentOrbitData make_e2();
/// Symmetric square of E1 (weight 2, rank 3).
NilpotentOrbitData make_sym2e1();
/// Tensor product of the two E2 factors (weight 2, rank 4).
NilpotentOrbitData make_e2tensor();
/// Exterior square of E2 (weight 2, rank 6).
NilpotentOrbitData make_lambda2e2();

std::vector<std::string> dataset_names();
NilpotentOrbitData dataset_by_name(const std::string& name);

}  // namespace periodgeom
