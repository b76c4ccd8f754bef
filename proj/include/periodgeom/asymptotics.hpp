#pragma once

// Growth-region sampling, Hodge-norm exponent fitting against the multigraded
// predictions, roughly-monomial classification, curve restrictions, and the
// reducedness sweep over sampled grids.

#include <array>
#include <complex>
#include <functional>
#include <utility>

#include "periodgeom/datasets.hpp"
#include "periodgeom/reduction.hpp"

namespace periodgeom {

/// Sampling region: 0 < x_i < 1, y_1 >= ... >= y_n > y_floor.  When y_ceil is
/// set the y grid is log-uniform between 2 y_floor and y_ceil; otherwise it
/// walks whole decades starting at 2 y_floor.
struct SigmaRegion {
  Index n = 1;
  Rat y_floor = Rat(1);
  Rat y_ceil = Rat(0);  // 0 = unset
};

using SamplePoint = std::vector<std::complex<double>>;

/// Deterministic grid: x = (2k+1)/(2 density) shared across coordinates,
/// crossed with all non-increasing y tuples from the y grid.
std::vector<SamplePoint> sample_sigma(const SigmaRegion& region, int density);

struct RaySpec {
  SamplePoint base;             // z0 in the region
  std::vector<double> weights;  // positive, non-increasing
  std::vector<double> lambdas;  // increasing scale grid
};

/// n rays suited for joint exponent fitting: ray r doubles the first r leading
/// weights, so the log-ratio coordinates separate across rays.
std::vector<RaySpec> default_rays(Index n, double lambda_max = 1e3, int points = 12);

struct FitResult {
  std::vector<int> exponents;
  std::vector<double> raw;  // least-squares values before rounding
  double residual;          // max relative deviation at the largest scale per ray
};

/// Joint least-squares fit of log h(u) against log(y_1/y_2), ..., log y_n
/// over all ray points.  Throws UnpolarizedError on an unpolarized sample and
/// IllConditionedError when the rays do not span enough directions.
FitResult fit_exponents(const NilpotentOrbitData& data, const RatVector& u,
                        const std::vector<RaySpec>& rays);

/// The multidegree of the unique splitting piece containing u.
std::vector<int> predicted_exponents(const GradedSplitting<Rat>& j, const RatVector& u);

/// Sum over pieces of dim * multidegree vanishes in every coordinate.
bool det_consistency(const GradedSplitting<Rat>& j);

struct MonomialCheck {
  bool bounded;
  double c;
};

/// Ratio test of |value| against the sigma-monomial: bounded when the max of
/// max(r, 1/r) over the full sample set exceeds the max over the samples one
/// decade lower by a factor below 1.05.
MonomialCheck roughly_monomial_check(
    const std::vector<std::pair<SamplePoint, double>>& samples,
    const std::vector<int>& sigma);

/// Pullback of f along the affine curve alpha_i z_i + beta_i = w (i <= n0),
/// remaining coordinates frozen at zeta.
std::function<double(std::complex<double>)> curve_restriction(
    std::function<double(const SamplePoint&)> f, const std::vector<Rat>& alpha,
    const std::vector<double>& beta, const SamplePoint& zeta);

struct SweepRow {
  SamplePoint z;
  std::vector<double> h_diag;
  std::array<double, 3> defects;
};

struct SweepResult {
  RatMatrix basis;           // integral adapted basis, in the chosen order
  std::vector<Index> order;  // positions of the columns in the unordered basis
  std::vector<SweepRow> rows;
  double c_star;
  double truncated_c_star;   // grid truncated one decade lower in y_1
  double growth_ratio;       // c_star / truncated_c_star
  bool translate_absorption_verified;
};

/// Integral basis adapted to the rational splitting of the cone: a primitive
/// integer basis of each piece, concatenated.  Returns the basis and the
/// multidegree of each column.
std::pair<RatMatrix, std::vector<std::vector<int>>> adapted_integral_basis(
    const NilpotentOrbitData& data);

/// Grid sweep of the reducedness defects of the Hodge metric on an adapted
/// basis.  The column ordering is chosen by the diagonal metric values at the
/// deepest grid point.  When wrong_basis is set, the first and last columns
/// are replaced by their sum and difference, deliberately mixing the extreme
/// weight blocks; the growth ratio then detects the broken adaptation.
SweepResult reducedness_sweep(const NilpotentOrbitData& data, const SigmaRegion& region,
                              int density, int jobs = 1, bool wrong_basis = false);

/// CSV rows: x1..xn, y1..yn, h_1..h_d, defect1..defect3.
std::string sweep_to_csv(const SweepResult& result);

}  // namespace periodgeom
