#pragma once

// Weight filtrations of nilpotent endomorphisms and of cones, Deligne
// splittings of mixed Hodge structures, and the rational multigraded
// splitting compatible with a family of weight filtrations.

#include <cstdint>
#include <map>
#include <vector>

#include "periodgeom/filtration.hpp"

namespace periodgeom {

struct PolarizedLattice {
  Index rank = 0;
  int weight = 0;
  RatMatrix form;                      // the polarization Q
  std::map<int, Index> hodge_numbers;  // p -> h^{p, weight-p}
};

/// Checks rank/weight consistency, (-1)^weight symmetry and nondegeneracy of
/// the form, and Hodge symmetry of the numbers.  Throws ValidationError.
void validate_lattice(const PolarizedLattice& lattice);

struct NilpotentCone {
  PolarizedLattice lattice;
  std::vector<RatMatrix> generators;
};

/// Checks each generator is nilpotent, an infinitesimal isometry of the form,
/// and that generators pairwise commute.  Throws ValidationError.
void validate_cone(const NilpotentCone& cone);

/// Splitting of the ambient space indexed by integer multidegrees.
template <class S>
struct GradedSplitting {
  Index ambient = 0;
  std::map<std::vector<int>, Subspace<S>> pieces;

  Index total_dim() const {
    Index d = 0;
    for (const auto& [deg, sub] : pieces) d += sub.dim();
    return d;
  }

  bool is_direct_sum() const {
    if (total_dim() != ambient) return false;
    Subspace<S> acc = Subspace<S>::zero(ambient);
    for (const auto& [deg, sub] : pieces) acc = acc + sub;
    return acc.is_full();
  }

  const Subspace<S>& at(const std::vector<int>& deg) const {
    static const Subspace<S> empty;
    auto it = pieces.find(deg);
    if (it == pieces.end()) {
      static thread_local std::map<Index, Subspace<S>> zeros;
      auto z = zeros.find(ambient);
      if (z == zeros.end()) z = zeros.emplace(ambient, Subspace<S>::zero(ambient)).first;
      return z->second;
    }
    return it->second;
  }
};

/// Increasing filtration centered at 0 attached to a nilpotent N: the unique
/// one with N W_k <= W_{k-2} and N^l inducing isomorphisms gr_l -> gr_{-l}.
/// Both properties are re-verified on the output before returning.
Filtration<Rat> weight_filtration(const RatMatrix& n);

/// Weight filtrations of the partial sums M_j = N_1 + ... + N_j.  For each j
/// a few random positive rational combinations of N_1..N_j are sampled and
/// must give the same filtration; a mismatch throws ConeError.
std::vector<Filtration<Rat>> cone_weight_filtrations(const NilpotentCone& cone,
                                                     int samples = 3,
                                                     std::uint32_t seed = 2026);

/// Deligne splitting I^{p,q} of the mixed Hodge structure (F, W), with the
/// indices (p, q) read relative to `center` while W stays centered at 0.
/// Verifies F^s = sum_{p>=s} I^{p,q} and W_m = sum_{p+q-center<=m} I^{p,q};
/// throws NotMixedHodgeError when reconstruction fails.
GradedSplitting<RatComplex> deligne_splitting(const Filtration<RatComplex>& f,
                                              const Filtration<Rat>& w, int center);

/// Rational multigraded splitting J^sigma with W_j(s) = sum_{sigma_j<=s} J^sigma
/// for every input filtration.  Multidegrees are visited in lexicographic
/// order and each piece is the lexicographically-least pivot completion of the
/// lower terms inside the intersection of the filtration levels.  Throws
/// IncompatibleFiltrationsError when the greedy construction cannot finish.
GradedSplitting<Rat> rational_splitting(const std::vector<Filtration<Rat>>& ws);

/// Componentwise filtration multidegree of a nonzero vector:
/// sigma_j = min { s : v in W_j(s) }.
std::vector<int> multidegree(const std::vector<Filtration<Rat>>& ws, const RatVector& v);

}  // namespace periodgeom
