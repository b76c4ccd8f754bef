#pragma once

// Nilpotent-orbit period evaluation: transported Hodge filtrations, the Hodge
// decomposition with its Weil operator, the Hodge form and metric in exact
// and floating backends, and the wedge-minor Gram-Schmidt chain.

#include <complex>
#include <string>
#include <vector>

#include "periodgeom/mixed_hodge.hpp"

namespace periodgeom {

struct NilpotentOrbitData {
  NilpotentCone cone;
  Filtration<RatComplex> limit;    // the limit Hodge filtration
  std::vector<CRatMatrix> psi;     // g(t) = 1 + sum_j t_j psi[j], t_j = exp(2 pi i z_j)

  Index rank() const { return cone.lattice.rank; }
  Index variables() const { return static_cast<Index>(cone.generators.size()); }
  bool has_psi() const;
};

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Report-style validation: cone invariants, limit filtration dimensions
/// against the Hodge numbers, Griffiths compatibility N_i F^p <= F^{p-1},
/// integrality of exp(N_i) when requested, and the one-step shift of the
/// holomorphic part when present.
ValidationReport validate_orbit(const NilpotentOrbitData& data,
                                bool check_integrality = true);

/// exp(sum_j z_j N_j), exact.
CRatMatrix orbit_gamma_exact(const NilpotentOrbitData& data,
                             const std::vector<RatComplex>& z);

/// gamma(z) = exp(sum_j z_j N_j) (1 + sum_j t_j psi_j), floating backend.
Eigen::MatrixXcd orbit_gamma(const NilpotentOrbitData& data,
                             const std::vector<std::complex<double>>& z);

/// F(z) = gamma(z) F, exact backend.  Requires psi absent (the factor
/// exp(2 pi i z) is transcendental); throws BackendError otherwise.
Filtration<RatComplex> orbit_filtration(const NilpotentOrbitData& data,
                                        const std::vector<RatComplex>& z);

struct HodgePoint {
  std::vector<RatComplex> z;
  Filtration<RatComplex> filtration;
  GradedSplitting<RatComplex> pieces;  // keys (p, q), p + q = weight
  CRatMatrix weil;                     // multiplication by i^{p-q} on H^{p,q}
  bool polarized;
};

/// Splits a transported filtration into H^{p,k-p} = F^p cap conj(F^{k-p}).
/// Throws NotMixedHodgeError when the pieces fail to decompose the space;
/// positivity of the form on each piece only sets the polarized flag.
HodgePoint hodge_decomposition(const Filtration<RatComplex>& fz,
                               const PolarizedLattice& lattice);

/// h(u, v) = Q(C u, conj v) at a polarized point; UnpolarizedError otherwise.
RatComplex hodge_form(const HodgePoint& point, const PolarizedLattice& lattice,
                      const CRatVector& u, const CRatVector& v);

/// Gram matrix of h on the columns of `basis`, exact backend.
CRatMatrix hodge_metric_exact(const NilpotentOrbitData& data,
                              const std::vector<RatComplex>& z,
                              const CRatMatrix& basis);

/// Basis adapted to the Deligne splitting of the limit mixed Hodge structure
/// (relative to the full cone's weight filtration), ordered with the Hodge
/// level p non-increasing.  levels[i] is the p of column i.
struct AdaptedFlag {
  CRatMatrix columns;
  std::vector<int> levels;
};

AdaptedFlag adapted_flag(const NilpotentOrbitData& data);

/// Gram matrix of h on the columns of `basis` via B-orthogonalization of the
/// transported adapted flag, floating backend (psi supported).
Eigen::MatrixXcd hodge_metric(const NilpotentOrbitData& data, const AdaptedFlag& flag,
                              const std::vector<std::complex<double>>& z,
                              const Eigen::MatrixXcd& basis);

/// True when the Hodge form at z is positive definite on the whole space.
bool is_polarized_at(const NilpotentOrbitData& data, const AdaptedFlag& flag,
                     const std::vector<std::complex<double>>& z);

template <class S>
struct WedgeChainValue {
  S b_norm;  // B(w~_i)
  S b_u;     // B(u, w~_i)
  S h_uv;    // h(u~_i, v~_i)
};

template <class S>
S unit_i_power(int n) {
  if constexpr (is_exact_scalar<S>::value) {
    return S(i_pow(n));
  } else {
    switch (((n % 4) + 4) % 4) {
      case 0: return S(1, 0);
      case 1: return S(0, 1);
      case 2: return S(-1, 0);
      default: return S(0, -1);
    }
  }
}

/// Gram-Schmidt data of the i-th flag vector (i is 1-based) computed purely
/// from wedge minors of the B-Gram of the transported flag columns:
///   B(w~_i)    = D_i / D_{i-1}          (leading principal minors D)
///   B(u, w~_i) = det(rows 1..i-1, u; cols 1..i) / D_{i-1}
///   h(u~_i,v~_i) = i^{2 p_i - k} B(u,w~_i) B(w~_i,v) / B(w~_i).
template <class S>
WedgeChainValue<S> wedge_chain_core(const MatrixX<S>& q, const MatrixX<S>& gflag,
                                    const std::vector<int>& levels, int weight,
                                    Index i, const VectorX<S>& u, const VectorX<S>& v) {
  if (i < 1 || i > gflag.cols()) throw DimensionError("wedge chain index out of range");
  MatrixX<S> gram(i, i);
  for (Index a = 0; a < i; ++a)
    for (Index b = 0; b < i; ++b)
      gram(a, b) = form_value<S>(q, gflag.col(a), gflag.col(b));
  const S d_i = det_exact<S>(gram);
  const S d_prev = i == 1 ? S(1) : det_exact<S>(MatrixX<S>(gram.topLeftCorner(i - 1, i - 1)));
  if (scalar_is_zero(d_prev) || scalar_is_zero(d_i))
    throw DegenerateFlagError(static_cast<std::size_t>(i),
                              "degenerate partial flag in wedge chain");
  MatrixX<S> replaced = gram;
  for (Index b = 0; b < i; ++b) replaced(i - 1, b) = form_value<S>(q, u, gflag.col(b));
  const S b_u = det_exact<S>(replaced) / d_prev;
  for (Index b = 0; b < i; ++b) replaced(i - 1, b) = form_value<S>(q, v, gflag.col(b));
  const S b_v = det_exact<S>(replaced) / d_prev;
  const S sign = weight % 2 == 0 ? S(1) : S(-1);
  const S b_wv = sign * scalar_conj(b_v);  // B(w~_i, v) = (-1)^k conj(B(v, w~_i))
  WedgeChainValue<S> out;
  out.b_norm = d_i / d_prev;
  out.b_u = b_u;
  out.h_uv = unit_i_power<S>(2 * levels[static_cast<std::size_t>(i - 1)] - weight) * b_u *
             b_wv / out.b_norm;
  return out;
}

WedgeChainValue<RatComplex> wedge_norm_chain_exact(const NilpotentOrbitData& data,
                                                   const AdaptedFlag& flag,
                                                   const std::vector<RatComplex>& z,
                                                   Index i, const CRatVector& u,
                                                   const CRatVector& v);

WedgeChainValue<std::complex<double>> wedge_norm_chain(
    const NilpotentOrbitData& data, const AdaptedFlag& flag,
    const std::vector<std::complex<double>>& z, Index i, const Eigen::VectorXcd& u,
    const Eigen::VectorXcd& v);

}  // namespace periodgeom
