#pragma once

// Polynomial equations cutting out the locus where a rational vector becomes
// a Hodge class along a nilpotent orbit, with exact solvers for one variable,
// curve detection for two, monodromy-shift compatibility, and q-coordinate
// algebraicity reports.

#include <array>
#include <complex>
#include <map>

#include "periodgeom/period.hpp"

namespace periodgeom {

/// Sparse polynomial with complex-rational coefficients in n variables.
struct MultiPoly {
  Index nvars = 1;
  std::map<std::vector<int>, RatComplex> terms;

  static MultiPoly constant(Index nvars, const RatComplex& c);
  static MultiPoly variable(Index nvars, Index j);

  bool is_zero() const { return terms.empty(); }
  int degree_in(Index j) const;
  MultiPoly& prune();

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }

  RatComplex eval_exact(const std::vector<RatComplex>& z) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& z) const;

  /// Substitutes z_j -> z_j + shift.
  MultiPoly shifted(Index j, const Rat& shift) const;
  /// Substitutes a value for z_j; the variable slot stays (with degree 0).
  MultiPoly substituted(Index j, const RatComplex& value) const;
};

/// Dense univariate polynomial, ascending coefficients.
struct Poly {
  std::vector<RatComplex> coeffs;

  Poly() = default;
  explicit Poly(std::vector<RatComplex> c) : coeffs(std::move(c)) { normalize(); }

  void normalize();
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  RatComplex leading() const;
  Poly monic() const;
  Poly derivative() const;
  RatComplex eval_exact(const RatComplex& z) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
};

/// Euclidean division: f = q g + r with deg r < deg g.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);
/// Squarefree decomposition f = prod s_m^m (Yun); returns pairs (s_m, m).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);
/// Roots of a squarefree polynomial via companion-matrix eigenvalues.
std::vector<std::complex<double>> poly_roots(const Poly& f);
/// Collapses a polynomial carried in n variables to its only active one.
Poly to_univariate(const MultiPoly& p, Index j);
/// Resultant of f and g with respect to z_j, by exact interpolation in the
/// other variable of the Sylvester determinant.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Index j);

struct LocusSystem {
  Index n = 0;                      // number of variables
  std::vector<MultiPoly> equations; // vanish exactly on the locus
  RatVector v;
  int p0 = 0;                       // Hodge-class filtration level
};

/// Coordinates of exp(-z.N) v in the fixed complement of F^{p0} picked out by
/// the non-pivot rows of the reduced echelon basis, p0 = weight/2.  Exactly
/// polynomial; throws UnsupportedError for odd weight or when psi is present,
/// ValidationError for a zero vector.
LocusSystem hodge_vector_condition(const NilpotentOrbitData& data, const RatVector& v);

struct StripRegion {
  Rat y0 = Rat(2);  // solutions need Im z > y0, 0 <= Re z < 1
};

enum class LocusKind { Empty, Finite, IdenticallyZero, Curve };

struct LocusRoot {
  std::vector<RatComplex> z;                // meaningful when exact
  std::vector<std::complex<double>> approx;
  bool exact = false;
  int multiplicity = 1;
};

struct CurveComponent {
  MultiPoly defining;
  std::vector<std::array<std::complex<double>, 2>> samples;
  bool certified = false;  // equations vanish on the sample grid
};

struct LocusSolution {
  LocusKind kind = LocusKind::Empty;
  std::vector<LocusRoot> points;
  std::vector<CurveComponent> curves;
};

/// n=1: roots of the gcd of the system inside the strip, with exact values
/// whenever a bounded-height rational certifies the root, and gcd-based
/// multiplicities.  n=2: zero equations give the whole polydisk, one gives a
/// sampled curve component, two or more are reduced by resultant elimination
/// to isolated points.  A root on Im z = y0 throws IndeterminateError.
LocusSolution locus_solve(const LocusSystem& system, const StripRegion& region);

/// Exact check that z solves the system for v iff z + e_j solves it for
/// exp(N_j) v, as a polynomial identity, plus revalidation of the exact
/// solution points.
bool monodromy_shift_check(const NilpotentOrbitData& data, const RatVector& v,
                           const LocusSolution& solution);

struct AlgebraicityReport {
  bool algebraic = false;
  std::vector<std::complex<double>> q_points;   // finite case
  std::vector<std::pair<std::array<int, 2>, std::complex<double>>> relation;
  double validation_error = 0.0;
  std::string note;
};

/// q_j = exp(2 pi i z_j).  Finite sets are algebraic outright; a curve is
/// tested for a bounded-degree monomial relation in (q1, q2), fitted on half
/// the samples and validated on the rest to 1e-8.
AlgebraicityReport q_algebraicity_check(const LocusSolution& solution, int max_degree = 3);

}  // namespace periodgeom
