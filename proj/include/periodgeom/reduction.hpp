#pragma once

// Reduction theory: Iwasawa coordinates, Siegel sets for SL_m and for the
// upper half-plane, (e,C)-reducedness of positive forms, the SL2(Z)
// fundamental domain, Hecke correspondences, Siegel-set intersectors, and
// the boundary chart map to the projective line.

#include <array>
#include <complex>
#include <vector>

#include "periodgeom/linalg.hpp"

namespace periodgeom {

/// Strip / Borel Siegel set: unipotent coordinates bounded by u, every simple
/// root value above t.  The bounded M K part is trivial in the cases housed
/// here.  For the upper half-plane (rank 2) this is { |Re z| <= u, Im z > t }.
struct SiegelSetSpec {
  Index rank = 2;
  Rat t = Rat(1);
  Rat u = Rat(1, 2);
};

inline SiegelSetSpec standard_strip() { return SiegelSetSpec{2, Rat(1), Rat(1, 2)}; }

struct IwasawaNAK {
  Eigen::MatrixXd n;  // unipotent upper triangular
  Eigen::MatrixXd a;  // positive diagonal
  Eigen::MatrixXd k;  // orthogonal
};

/// g = n a k.  Throws SingularError when g is not invertible.
IwasawaNAK iwasawa(const Eigen::MatrixXd& g);

/// Simple-root corner coordinates (a_{i+1}/a_i) of a positive diagonal
/// matrix; they tend to 0 deep in the Siegel direction.
std::vector<double> corner_coords(const Eigen::MatrixXd& a);

bool siegel_contains(const SiegelSetSpec& spec, const Eigen::MatrixXd& g);
bool siegel_contains(const SiegelSetSpec& spec, std::complex<double> z);
bool siegel_contains(const SiegelSetSpec& spec, const RatComplex& z);

template <class S>
struct Reducedness {
  bool reduced;
  std::array<S, 3> defects;
};

/// (e,C)-reducedness of a positive symmetric form b on the ordered basis e
/// (columns).  Defects: max |b(e_i,e_j)| / b(e_i); max_{i<=j} b(e_i)/b(e_j);
/// prod b(e_i) / det b.  Reduced exactly when all three are below c.
template <class S>
Reducedness<S> is_reduced(const MatrixX<S>& b, const MatrixX<S>& basis, const S& c) {
  using std::abs;
  const Index m = basis.cols();
  MatrixX<S> gram = basis.transpose() * b * basis;
  for (Index i = 1; i <= m; ++i) {
    if (!(det_exact<S>(MatrixX<S>(gram.topLeftCorner(i, i))) > S(0)))
      throw ValidationError("form is not positive definite on the basis");
  }
  Reducedness<S> out;
  out.defects = {S(0), S(0), S(0)};
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      S d1 = abs(gram(i, j)) / gram(i, i);
      if (d1 > out.defects[0]) out.defects[0] = d1;
    }
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j) {
      S d2 = gram(i, i) / gram(j, j);
      if (d2 > out.defects[1]) out.defects[1] = d2;
    }
  S prod(1);
  for (Index i = 0; i < m; ++i) prod *= gram(i, i);
  out.defects[2] = prod / det_exact<S>(gram);
  out.reduced = out.defects[0] < c && out.defects[1] < c && out.defects[2] < c;
  return out;
}

/// Moebius action of an invertible real 2x2 matrix on H.
RatComplex mobius(const RatMatrix& g, const RatComplex& z);

struct Sl2Reduction {
  RatComplex z0;     // in the standard fundamental set
  RatMatrix gamma;   // integral, det 1, gamma z = z0
};

/// Reduces z (Im z > 0) to the fundamental set { x^2+y^2 >= 1, -1/2 <= x <= 1/2 }
/// by alternating translations and inversions; exact rational arithmetic.
/// Deterministic tie-breaking: x lands in (-1/2, 1/2] and on the unit arc the
/// representative with x >= 0 is chosen.
Sl2Reduction reduce_sl2(const RatComplex& z);

struct HeckeElement {
  RatMatrix g;  // 2x2 rational, det > 0
};

struct HeckePoint {
  RatComplex point;  // reduced image
  RatMatrix rep;     // integral coset representative applied (before reduction)
};

/// Degree of the correspondence = number of coset representatives.
Index hecke_degree(const HeckeElement& g);

/// Images of z under the coset representatives of the correspondence of g,
/// each reduced to the fundamental set.  Only the multiset of reduced points
/// is contract; the representative order is the enumeration order (a, then b).
std::vector<HeckePoint> hecke_points(const RatComplex& z, const HeckeElement& g);

struct IntersectorReport {
  std::vector<RatMatrix> members;
  std::vector<RatMatrix> indeterminate;  // undecided at the subdivision depth cap
  bool stable;                           // member count unchanged at twice the bound
};

/// All gamma in SL2(Z) with entries bounded by search_bound such that
/// gamma S1 meets S2, for strips in H.  Decisions are exact: closed-form
/// tests for c = 0 and the horoball bound, rational interval subdivision with
/// exact center-point certificates otherwise.
IntersectorReport siegel_intersectors(const SiegelSetSpec& s1, const SiegelSetSpec& s2,
                                      int search_bound);

/// Boundary chart (x, t) -> [1 : exp(2 pi i x) exp(-2 pi / t)]; t = 0 is the
/// cusp [1 : 0].  x is reduced mod 1 exactly before evaluation.
std::complex<double> bs_to_bb(const Rat& x, const Rat& t);
std::complex<double> bs_to_bb(double x, double t);

}  // namespace periodgeom
