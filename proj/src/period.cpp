#include "periodgeom/period.hpp"

#include <cmath>
#include <numbers>

namespace periodgeom {

bool NilpotentOrbitData::has_psi() const {
  for (const auto& g : psi)
    if (!is_zero_matrix(g)) return true;
  return false;
}

namespace {

bool is_integral(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).denominator() != BigInt(1)) return false;
  return true;
}

void push(ValidationReport& report, std::string name, bool ok, std::string detail = "") {
  report.checks.push_back({std::move(name), ok, std::move(detail)});
}

}  // namespace

ValidationReport validate_orbit(const NilpotentOrbitData& data, bool check_integrality) {
  ValidationReport report;
  const Index d = data.rank();
  const PolarizedLattice& lat = data.cone.lattice;

  bool lattice_ok = true;
  try {
    validate_lattice(lat);
  } catch (const ValidationError& e) {
    lattice_ok = false;
    push(report, "lattice", false, e.what());
  }
  if (lattice_ok) push(report, "lattice", true);
  const bool form_usable = lat.form.rows() == d && lat.form.cols() == d;

  for (std::size_t i = 0; i < data.cone.generators.size(); ++i) {
    const RatMatrix& n = data.cone.generators[i];
    const std::string tag = "generator " + std::to_string(i + 1);
    if (n.rows() != d || n.cols() != d) {
      push(report, tag + " shape", false, "wrong dimensions");
      continue;
    }
    bool nilp = true;
    try {
      nilpotency_index<Rat>(n);
    } catch (const NotNilpotentError&) {
      nilp = false;
    }
    push(report, tag + " nilpotent", nilp);
    if (form_usable)
      push(report, tag + " infinitesimal isometry",
           is_zero_matrix((n.transpose() * lat.form + lat.form * n).eval()));
    for (std::size_t j = 0; j < i; ++j) {
      if (data.cone.generators[j].rows() != d || data.cone.generators[j].cols() != d)
        continue;
      push(report, tag + " commutes with generator " + std::to_string(j + 1),
           is_zero_matrix((n * data.cone.generators[j] - data.cone.generators[j] * n).eval()));
    }
    if (check_integrality && nilp)
      push(report, tag + " integral monodromy", is_integral(nilpotent_exp<Rat>(n)),
           "entries of exp(N) must be integers");
  }

  const bool limit_usable = data.limit.ambient_dim() == d;
  bool dims_ok = limit_usable;
  for (int p = data.limit.lo(); p <= data.limit.hi() && dims_ok; ++p) {
    Index expect = 0;
    for (const auto& [pp, h] : lat.hodge_numbers)
      if (pp >= p) expect += h;
    if (data.limit.at(p).dim() != expect) dims_ok = false;
  }
  push(report, "limit filtration dimensions", dims_ok,
       "dim F^p must equal the sum of Hodge numbers at levels >= p");

  if (limit_usable) {
    bool griffiths = true;
    for (const auto& n : data.cone.generators) {
      if (n.rows() != d || n.cols() != d) continue;
      CRatMatrix nc = complexify(n);
      for (int p = data.limit.lo(); p <= data.limit.hi(); ++p)
        if (!data.limit.at(p - 1).contains(data.limit.at(p).map_image(nc)))
          griffiths = false;
    }
    push(report, "Griffiths compatibility", griffiths, "N F^p <= F^{p-1}");
  }

  if (!data.psi.empty()) {
    push(report, "holomorphic part arity",
         data.psi.size() == data.cone.generators.size(),
         "one coefficient matrix per variable");
    bool shift = true;
    for (const auto& g : data.psi) {
      if (g.rows() != d || g.cols() != d || !limit_usable) {
        shift = false;
        continue;
      }
      for (int p = data.limit.lo(); p <= data.limit.hi(); ++p)
        if (!data.limit.at(p - 1).contains(data.limit.at(p).map_image(g))) shift = false;
    }
    push(report, "holomorphic part shifts F by at most one step", shift);
  }
  return report;
}

CRatMatrix orbit_gamma_exact(const NilpotentOrbitData& data,
                             const std::vector<RatComplex>& z) {
  if (z.size() != data.cone.generators.size())
    throw DimensionError("point dimension does not match the number of generators");
  const Index d = data.rank();
  CRatMatrix a = CRatMatrix::Zero(d, d);
  for (std::size_t j = 0; j < z.size(); ++j)
    a += z[j] * complexify(data.cone.generators[j]);
  return nilpotent_exp<RatComplex>(a);
}

Eigen::MatrixXcd orbit_gamma(const NilpotentOrbitData& data,
                             const std::vector<std::complex<double>>& z) {
  if (z.size() != data.cone.generators.size())
    throw DimensionError("point dimension does not match the number of generators");
  const Index d = data.rank();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t j = 0; j < z.size(); ++j)
    a += z[j] * to_complex(complexify(data.cone.generators[j]));
  // sum of commuting nilpotents: the series below terminates mathematically
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
  for (Index k = 1; k < d; ++k) {
    term = term * a / static_cast<double>(k);
    out += term;
  }
  if (!data.psi.empty()) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(d, d);
    for (std::size_t j = 0; j < data.psi.size(); ++j) {
      const std::complex<double> t =
          std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * z[j]);
      g += t * to_complex(data.psi[j]);
    }
    out = out * g;
  }
  return out;
}

Filtration<RatComplex> orbit_filtration(const NilpotentOrbitData& data,
                                        const std::vector<RatComplex>& z) {
  if (data.has_psi())
    throw BackendError("holomorphic part requires the floating backend");
  return data.limit.transported(orbit_gamma_exact(data, z));
}

namespace {

/// Exact positivity of a hermitian Gram matrix via leading principal minors.
bool is_positive_definite(const CRatMatrix& gram) {
  for (Index i = 1; i <= gram.rows(); ++i) {
    RatComplex minor = det_exact<RatComplex>(CRatMatrix(gram.topLeftCorner(i, i)));
    if (!minor.is_real() || minor.real().sign() <= 0) return false;
  }
  return true;
}

}  // namespace

HodgePoint hodge_decomposition(const Filtration<RatComplex>& fz,
                               const PolarizedLattice& lattice) {
  const Index d = fz.ambient_dim();
  if (d != lattice.rank) throw DimensionError("filtration does not match lattice rank");
  const int k = lattice.weight;
  const Filtration<RatComplex> fbar = fz.conjugated();
  const CRatMatrix qc = complexify(lattice.form);

  GradedSplitting<RatComplex> pieces;
  pieces.ambient = d;
  bool polarized = true;
  for (int p = fz.lo(); p <= fz.hi(); ++p) {
    Subspace<RatComplex> piece = intersect(fz.at(p), fbar.at(k - p));
    if (piece.is_zero()) continue;
    CRatMatrix gram(piece.dim(), piece.dim());
    for (Index a = 0; a < piece.dim(); ++a)
      for (Index b = 0; b < piece.dim(); ++b)
        gram(a, b) = i_pow(2 * p - k) *
                     form_value<RatComplex>(qc, piece.basis().col(a), piece.basis().col(b));
    if (!is_positive_definite(gram)) polarized = false;
    pieces.pieces[{p, k - p}] = std::move(piece);
  }
  if (!pieces.is_direct_sum())
    throw NotMixedHodgeError("filtration is not a Hodge structure at this point");

  CRatMatrix basis(d, d);
  CRatMatrix diag = CRatMatrix::Zero(d, d);
  Index col = 0;
  for (const auto& [deg, sub] : pieces.pieces) {
    for (Index j = 0; j < sub.dim(); ++j, ++col) {
      basis.col(col) = sub.basis().col(j);
      diag(col, col) = i_pow(deg[0] - deg[1]);
    }
  }
  CRatMatrix weil = basis * diag * invert<RatComplex>(basis);

  return HodgePoint{{}, fz, std::move(pieces), std::move(weil), polarized};
}

RatComplex hodge_form(const HodgePoint& point, const PolarizedLattice& lattice,
                      const CRatVector& u, const CRatVector& v) {
  if (!point.polarized) throw UnpolarizedError("hodge form at an unpolarized point");
  return form_value<RatComplex>(complexify(lattice.form), (point.weil * u).eval(), v);
}

CRatMatrix hodge_metric_exact(const NilpotentOrbitData& data,
                              const std::vector<RatComplex>& z, const CRatMatrix& basis) {
  HodgePoint point = hodge_decomposition(orbit_filtration(data, z), data.cone.lattice);
  if (!point.polarized) throw UnpolarizedError("hodge metric at an unpolarized point");
  const CRatMatrix qc = complexify(data.cone.lattice.form);
  CRatMatrix gram(basis.cols(), basis.cols());
  for (Index a = 0; a < basis.cols(); ++a)
    for (Index b = 0; b < basis.cols(); ++b)
      gram(a, b) =
          form_value<RatComplex>(qc, (point.weil * basis.col(a)).eval(), basis.col(b));
  return gram;
}

AdaptedFlag adapted_flag(const NilpotentOrbitData& data) {
  const Index d = data.rank();
  RatMatrix total = RatMatrix::Zero(d, d);
  for (const auto& n : data.cone.generators) total += n;
  Filtration<Rat> w = weight_filtration(total);
  GradedSplitting<RatComplex> splitting =
      deligne_splitting(data.limit, w, data.cone.lattice.weight);

  AdaptedFlag flag;
  flag.columns.resize(d, d);
  Index col = 0;
  // map keys are (p, q) in increasing lexicographic order; walk backwards for
  // non-increasing p
  for (auto it = splitting.pieces.rbegin(); it != splitting.pieces.rend(); ++it) {
    for (Index j = 0; j < it->second.dim(); ++j, ++col) {
      flag.columns.col(col) = it->second.basis().col(j);
      flag.levels.push_back(it->first[0]);
    }
  }
  return flag;
}

namespace {

Eigen::MatrixXcd metric_from_flag(const Eigen::MatrixXcd& q, const Eigen::MatrixXcd& gflag,
                                  const std::vector<int>& levels, int weight,
                                  const Eigen::MatrixXcd& basis) {
  GramSchmidt<std::complex<double>> gs = gram_schmidt<std::complex<double>>(q, gflag);
  const Index d = gflag.cols();
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(basis.cols(), basis.cols());
  for (Index i = 0; i < d; ++i) {
    const std::complex<double> factor =
        unit_i_power<std::complex<double>>(2 * levels[static_cast<std::size_t>(i)] - weight) /
        gs.norms[static_cast<std::size_t>(i)];
    Eigen::VectorXcd bu(basis.cols()), bwv(basis.cols());
    const double sign = weight % 2 == 0 ? 1.0 : -1.0;
    for (Index a = 0; a < basis.cols(); ++a) {
      bu(a) = form_value<std::complex<double>>(q, basis.col(a), gs.basis.col(i));
      bwv(a) = sign * std::conj(bu(a));
    }
    for (Index a = 0; a < basis.cols(); ++a)
      for (Index b = 0; b < basis.cols(); ++b) gram(a, b) += factor * bu(a) * bwv(b);
  }
  return gram;
}

}  // namespace

Eigen::MatrixXcd hodge_metric(const NilpotentOrbitData& data, const AdaptedFlag& flag,
                              const std::vector<std::complex<double>>& z,
                              const Eigen::MatrixXcd& basis) {
  const Eigen::MatrixXcd q = to_double(data.cone.lattice.form).cast<std::complex<double>>();
  const Eigen::MatrixXcd gflag = orbit_gamma(data, z) * to_complex(flag.columns);
  return metric_from_flag(q, gflag, flag.levels, data.cone.lattice.weight, basis);
}

bool is_polarized_at(const NilpotentOrbitData& data, const AdaptedFlag& flag,
                     const std::vector<std::complex<double>>& z) {
  const Index d = data.rank();
  Eigen::MatrixXcd gram;
  try {
    gram = hodge_metric(data, flag, z, Eigen::MatrixXcd::Identity(d, d));
  } catch (const DegenerateFlagError&) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((gram + gram.adjoint()) / 2.0);
  return solver.info() == Eigen::Success && solver.eigenvalues().minCoeff() > 0.0;
}

WedgeChainValue<RatComplex> wedge_norm_chain_exact(const NilpotentOrbitData& data,
                                                   const AdaptedFlag& flag,
                                                   const std::vector<RatComplex>& z,
                                                   Index i, const CRatVector& u,
                                                   const CRatVector& v) {
  const CRatMatrix gflag = orbit_gamma_exact(data, z) * flag.columns;
  if (data.has_psi()) throw BackendError("holomorphic part requires the floating backend");
  return wedge_chain_core<RatComplex>(complexify(data.cone.lattice.form), gflag,
                                      flag.levels, data.cone.lattice.weight, i, u, v);
}

WedgeChainValue<std::complex<double>> wedge_norm_chain(
    const NilpotentOrbitData& data, const AdaptedFlag& flag,
    const std::vector<std::complex<double>>& z, Index i, const Eigen::VectorXcd& u,
    const Eigen::VectorXcd& v) {
  const Eigen::MatrixXcd q = to_double(data.cone.lattice.form).cast<std::complex<double>>();
  const Eigen::MatrixXcd gflag = orbit_gamma(data, z) * to_complex(flag.columns);
  return wedge_chain_core<std::complex<double>>(q, gflag, flag.levels,
                                                data.cone.lattice.weight, i, u, v);
}

}  // namespace periodgeom
