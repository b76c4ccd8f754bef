#include <doctest.h>

#include <complex>

#include "periodgeom/datasets.hpp"
#include "periodgeom/period.hpp"
#include "periodgeom/rng.hpp"

using namespace periodgeom;

namespace {

bool check_failed(const ValidationReport& report, const std::string& needle) {
  for (const auto& c : report.checks)
    if (!c.passed && c.name.find(needle) != std::string::npos) return true;
  return false;
}

RatComplex form_on(const PolarizedLattice& lattice, const CRatVector& u,
                   const CRatVector& v) {
  return form_value<RatComplex>(complexify(lattice.form), u, v);
}

}  // namespace

TEST_SUITE("period") {

TEST_CASE("every bundled orbit validates cleanly") {
  for (const auto& name : dataset_names()) {
    const auto data = dataset_by_name(name);
    const auto report = validate_orbit(data);
    INFO(name);
    for (const auto& c : report.checks) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("validation flags non integral monodromy without throwing") {
  auto data = make_e1();
  data.cone.generators[0] *= Rat(1, 3);
  const auto report = validate_orbit(data);
  CHECK(!report.all_passed());
  CHECK(check_failed(report, "integral monodromy"));
  // the same orbit is clean when integrality is not requested
  CHECK(validate_orbit(data, false).all_passed());
}

TEST_CASE("validation flags wrong limit dimensions") {
  auto data = make_e1();
  data.cone.lattice.hodge_numbers = {{0, 2}, {1, 0}};
  const auto report = validate_orbit(data);
  CHECK(check_failed(report, "limit filtration dimensions"));
}

TEST_CASE("exact orbit exponential matches the truncated series") {
  const auto data = make_e1();
  const RatComplex z(Rat(1, 2), Rat(3));
  const auto g = orbit_gamma_exact(data, {z});
  // oracle: N^2 = 0, so exp(zN) = 1 + zN
  CRatMatrix expected = CRatMatrix::Identity(2, 2) + z * complexify(data.cone.generators[0]);
  CHECK(g == expected);

  const auto e2 = make_e2();
  const RatComplex z1(Rat(1), Rat(1)), z2(Rat(0), Rat(2));
  const auto g2 = orbit_gamma_exact(e2, {z1, z2});
  CRatMatrix sum = z1 * complexify(e2.cone.generators[0]) +
                   z2 * complexify(e2.cone.generators[1]);
  CRatMatrix expected2 = CRatMatrix::Identity(4, 4) + sum + (sum * sum).eval() / RatComplex(Rat(2));
  CHECK(g2 == expected2);
}

TEST_CASE("floating exponential includes the holomorphic correction") {
  const auto data = make_e1psi();
  const std::vector<std::complex<double>> z{{0.25, 1.5}};
  const auto g = orbit_gamma(data, z);
  // oracle: exp(zN)(1 + t psi), t = exp(2 pi i z)
  const std::complex<double> t =
      std::exp(std::complex<double>(0, 2 * 3.141592653589793238462643383279502884) * z[0]);
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(2, 2);
  n(1, 0) = 1.0;
  Eigen::MatrixXcd expected =
      (Eigen::MatrixXcd::Identity(2, 2) + z[0] * n) * (Eigen::MatrixXcd::Identity(2, 2) + t * n);
  CHECK((g - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("orbit filtration transports the limit and rejects psi") {
  const auto data = make_e1();
  const RatComplex i(Rat(0), Rat(1));
  const auto fz = orbit_filtration(data, {i});
  CRatVector v(2);
  v << RatComplex(Rat(1)), i;  // exp(iN) e1 = e1 + i e2
  CHECK(fz.at(1).contains(v));
  CHECK(fz.at(1).dim() == 1);
  CHECK_THROWS_AS(orbit_filtration(make_e1psi(), {i}), BackendError);
}

TEST_CASE("hodge decomposition splits conjugate lines at i") {
  const auto data = make_e1();
  const RatComplex i(Rat(0), Rat(1));
  const auto point = hodge_decomposition(orbit_filtration(data, {i}), data.cone.lattice);
  CHECK(point.polarized);
  CHECK(point.pieces.is_direct_sum());
  CRatVector hol(2), antihol(2);
  hol << RatComplex(Rat(1)), i;
  antihol << RatComplex(Rat(1)), -i;
  CHECK(point.pieces.at({1, 0}).contains(hol));
  CHECK(point.pieces.at({0, 1}).contains(antihol));
  // Weil operator: i^{1-0} on H^{1,0}, i^{0-1} on H^{0,1}
  CHECK((point.weil * hol).eval() == (i * hol).eval());
  CHECK((point.weil * antihol).eval() == (-i * antihol).eval());
}

TEST_CASE("hodge form values match the direct Weil pairing") {
  const auto data = make_e1();
  const RatComplex z(Rat(0), Rat(3));
  const auto point = hodge_decomposition(orbit_filtration(data, {z}), data.cone.lattice);
  Rng rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    CRatVector u(2), v(2);
    for (Index k = 0; k < 2; ++k) {
      u(k) = RatComplex(rng.rational(4, 3), rng.rational(4, 3));
      v(k) = RatComplex(rng.rational(4, 3), rng.rational(4, 3));
    }
    // oracle: h(u, v) = Q(C u, conj v) with C the Weil operator
    const RatComplex direct =
        form_on(data.cone.lattice, (point.weil * u).eval(), v);
    CHECK(hodge_form(point, data.cone.lattice, u, v) == direct);
  }
}

TEST_CASE("exact metric on the standard basis of e1 is diagonal in y") {
  for (int y : {2, 5, 10}) {
    const std::vector<RatComplex> z{RatComplex(Rat(0), Rat(y))};
    const auto gram = hodge_metric_exact(make_e1(), z,
                                         CRatMatrix(CRatMatrix::Identity(2, 2)));
    CHECK(gram(0, 0) == RatComplex(Rat(y)));
    CHECK(gram(1, 1) == RatComplex(Rat(1, y)));
    CHECK(gram(0, 1) == RatComplex());
    CHECK(gram(1, 0) == RatComplex());
  }
}

TEST_CASE("exact metric is hermitian and moves off the imaginary axis") {
  const std::vector<RatComplex> z{RatComplex(Rat(1, 3), Rat(2))};
  const auto gram = hodge_metric_exact(make_e1(), z,
                                       CRatMatrix(CRatMatrix::Identity(2, 2)));
  CHECK(gram(0, 1) == scalar_conj(gram(1, 0)));
  CHECK(gram(0, 0).imag().is_zero());
  CHECK(gram(1, 1) == RatComplex(Rat(1, 2)));  // only Im z enters h(e2, e2)
  CHECK(!gram(0, 1).is_zero());
}

TEST_CASE("floating metric agrees with the exact backend on e1") {
  const auto data = make_e1();
  const auto flag = adapted_flag(data);
  const std::vector<RatComplex> zq{RatComplex(Rat(1, 4), Rat(5, 2))};
  const std::vector<std::complex<double>> zf{{0.25, 2.5}};
  const auto exact = hodge_metric_exact(data, zq, CRatMatrix(CRatMatrix::Identity(2, 2)));
  const auto fl = hodge_metric(data, flag, zf, Eigen::MatrixXcd::Identity(2, 2));
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      CHECK(std::abs(fl(i, j) - to_complex(exact(i, j))) < 1e-12);
}

TEST_CASE("adapted flag levels are non increasing and span the space") {
  for (const auto& name : dataset_names()) {
    const auto data = dataset_by_name(name);
    const auto flag = adapted_flag(data);
    INFO(name);
    CHECK(flag.columns.cols() == data.rank());
    CHECK(!det_exact<RatComplex>(flag.columns).is_zero());
    for (std::size_t i = 1; i < flag.levels.size(); ++i)
      CHECK(flag.levels[i - 1] >= flag.levels[i]);
  }
}

TEST_CASE("polarization detection separates the half planes") {
  const auto data = make_e1();
  const auto flag = adapted_flag(data);
  CHECK(is_polarized_at(data, flag, {{0.0, 2.0}}));
  CHECK(is_polarized_at(data, flag, {{0.4, 0.8}}));
  CHECK(!is_polarized_at(data, flag, {{0.0, -2.0}}));
}

TEST_CASE("wedge chain reproduces direct orthogonalization exactly") {
  const auto data = make_e1();
  const auto flag = adapted_flag(data);
  const std::vector<RatComplex> z{RatComplex(Rat(1, 2), Rat(2))};
  CRatVector u(2), v(2);
  u << RatComplex(Rat(1), Rat(1)), RatComplex(Rat(0), Rat(2));
  v << RatComplex(Rat(2)), RatComplex(Rat(1), Rat(-1));

  // oracle route: orthogonalize the transported flag against B = Q(., conj .);
  // the unit power i^{2p-k} enters only in the final metric value
  const CRatMatrix gamma = orbit_gamma_exact(data, z);
  const CRatMatrix gflag = gamma * flag.columns;
  const CRatMatrix b = complexify(data.cone.lattice.form);
  for (Index idx = 1; idx <= 2; ++idx) {
    const auto chain = wedge_norm_chain_exact(data, flag, z, idx, u, v);
    const auto gs = gram_schmidt<RatComplex>(b, CRatMatrix(gflag.leftCols(idx)));
    const CRatVector w = gs.basis.col(idx - 1);
    CHECK(chain.b_norm == gs.norms[static_cast<std::size_t>(idx - 1)]);
    CHECK(chain.b_u == form_value<RatComplex>(b, u, w));
    const RatComplex h = unit_i_power<RatComplex>(
                             2 * flag.levels[static_cast<std::size_t>(idx - 1)] -
                             data.cone.lattice.weight) *
                         chain.b_u * form_value<RatComplex>(b, w, v) / chain.b_norm;
    CHECK(chain.h_uv == h);
  }
}

TEST_CASE("float wedge chain tracks the exact one") {
  const auto data = make_e2();
  const auto flag = adapted_flag(data);
  const std::vector<RatComplex> zq{RatComplex(Rat(1, 3), Rat(3)),
                                   RatComplex(Rat(1, 7), Rat(2))};
  const std::vector<std::complex<double>> zf{to_complex(zq[0]), to_complex(zq[1])};
  CRatVector uq(4), vq(4);
  Rng rng(52);
  for (Index k = 0; k < 4; ++k) {
    uq(k) = RatComplex(rng.rational(3, 2), rng.rational(3, 2));
    vq(k) = RatComplex(rng.rational(3, 2), rng.rational(3, 2));
  }
  Eigen::VectorXcd uf(4), vf(4);
  for (Index k = 0; k < 4; ++k) {
    uf(k) = to_complex(uq(k));
    vf(k) = to_complex(vq(k));
  }
  for (Index idx = 1; idx <= 4; ++idx) {
    const auto exact = wedge_norm_chain_exact(data, flag, zq, idx, uq, vq);
    const auto fl = wedge_norm_chain(data, flag, zf, idx, uf, vf);
    CHECK(std::abs(fl.b_norm - to_complex(exact.b_norm)) <
          1e-10 * (1.0 + std::abs(to_complex(exact.b_norm))));
    CHECK(std::abs(fl.h_uv - to_complex(exact.h_uv)) <
          1e-10 * (1.0 + std::abs(to_complex(exact.h_uv))));
  }
}

TEST_CASE("tensor constructions keep validity and multiply ranks") {
  const auto a = make_e1();
  const auto sum = direct_sum(a, a);
  CHECK(sum.rank() == 4);
  CHECK(sum.cone.lattice.weight == 1);
  CHECK(validate_orbit(sum).all_passed());

  const auto prod = tensor_product(a, a);
  CHECK(prod.rank() == 4);
  CHECK(prod.cone.lattice.weight == 2);
  CHECK(validate_orbit(prod).all_passed());

  const auto sym = sym_square(a);
  CHECK(sym.rank() == 3);
  CHECK(validate_orbit(sym).all_passed());

  const auto lam = lambda_square(make_e2());
  CHECK(lam.rank() == 6);
  CHECK(validate_orbit(lam).all_passed());
}

}  // TEST_SUITE
