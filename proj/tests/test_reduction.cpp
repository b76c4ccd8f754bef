#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>
#include <sstream>

#include "periodgeom/reduction.hpp"
#include "periodgeom/rng.hpp"

using namespace periodgeom;

namespace {

bool in_fundamental_set(const RatComplex& z) {
  const Rat x = z.real();
  const Rat half(1, 2);
  if (!(x > -half) || x > half) return false;
  const Rat norm = abs2(z);
  if (norm < Rat(1)) return false;
  if (norm == Rat(1) && x < Rat(0)) return false;
  return true;
}

bool is_integral_unimodular(const RatMatrix& g) {
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      if (g(i, j).denominator() != BigInt(1)) return false;
  return det_exact<Rat>(g) == Rat(1);
}

std::string key_of(const RatMatrix& g) {
  std::ostringstream out;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) out << to_string(g(i, j)) << ";";
  return out.str();
}

RatMatrix mat2(int a, int b, int c, int d) {
  RatMatrix m(2, 2);
  m << Rat(a), Rat(b), Rat(c), Rat(d);
  return m;
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("moebius action against the defining fraction") {
  const RatMatrix g = mat2(2, 1, 1, 1);
  const RatComplex z(Rat(1, 2), Rat(3));
  // oracle: (2z + 1) / (z + 1) computed with scalar field operations
  const RatComplex expected =
      (RatComplex(Rat(2)) * z + RatComplex(Rat(1))) / (z + RatComplex(Rat(1)));
  CHECK(mobius(g, z) == expected);
  // group action: (gh) z = g (h z)
  const RatMatrix h = mat2(1, -1, 0, 1);
  CHECK(mobius((g * h).eval(), z) == mobius(g, mobius(h, z)));
}

TEST_CASE("iwasawa factors multiply back and k is orthogonal") {
  Eigen::MatrixXd g(3, 3);
  g << 2, 1, 0,
       1, 3, 1,
       0, 1, 1;
  const auto nak = iwasawa(g);
  CHECK((nak.n * nak.a * nak.k - g).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((nak.k * nak.k.transpose() - Eigen::MatrixXd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  for (Index i = 0; i < 3; ++i) {
    CHECK(nak.a(i, i) > 0);
    CHECK(nak.n(i, i) == doctest::Approx(1.0));
    for (Index j = 0; j < i; ++j) CHECK(nak.n(i, j) == doctest::Approx(0.0));
  }
}

TEST_CASE("reducedness defects on hand built forms") {
  const RatMatrix identity_basis = RatMatrix::Identity(2, 2);
  RatMatrix b(2, 2);
  b << Rat(2), Rat(1, 2),
       Rat(1, 2), Rat(1);
  const auto r = is_reduced<Rat>(b, identity_basis, Rat(3));
  // oracles: d1 = max |b_ij|/b_ii over all pairs, so the diagonal contributes 1,
  // d2 = max_{i<=j} b_ii/b_jj = 2, d3 = (2*1)/det = 2/(7/4)
  CHECK(r.defects[0] == Rat(1));
  CHECK(r.defects[1] == Rat(2));
  CHECK(r.defects[2] == Rat(8, 7));
  CHECK(r.reduced);
  CHECK(!is_reduced<Rat>(b, identity_basis, Rat(2)).reduced);

  RatMatrix indefinite(2, 2);
  indefinite << Rat(1), Rat(0), Rat(0), Rat(-1);
  CHECK_THROWS_AS(is_reduced<Rat>(indefinite, identity_basis, Rat(3)), ValidationError);
}

TEST_CASE("strip membership for rational points") {
  const auto spec = standard_strip();
  CHECK(siegel_contains(spec, RatComplex(Rat(0), Rat(2))));
  CHECK(siegel_contains(spec, RatComplex(Rat(1, 2), Rat(3, 2))));
  CHECK(!siegel_contains(spec, RatComplex(Rat(0), Rat(1))));  // the floor is strict
  CHECK(!siegel_contains(spec, RatComplex(Rat(2), Rat(2))));
  CHECK(!siegel_contains(spec, RatComplex(Rat(0), Rat(1, 2))));
}

TEST_CASE("reduction fixes points already in the fundamental set") {
  for (const RatComplex z : {RatComplex(Rat(0), Rat(2)), RatComplex(Rat(1, 4), Rat(3)),
                             RatComplex(Rat(1, 2), Rat(1)), RatComplex(Rat(5, 13), Rat(12, 13))}) {
    const auto red = reduce_sl2(z);
    CHECK(red.z0 == z);
    CHECK(red.gamma == RatMatrix::Identity(2, 2).eval());
  }
}

TEST_CASE("reduction lands on hand reduced values") {
  // translation only
  CHECK(reduce_sl2(RatComplex(Rat(7, 2), Rat(2))).z0 == RatComplex(Rat(1, 2), Rat(2)));
  // pure inversion: -1/(i/2) = 2i
  const auto inv = reduce_sl2(RatComplex(Rat(0), Rat(1, 2)));
  CHECK(inv.z0 == RatComplex(Rat(0), Rat(2)));
  // boundary tie: x = -1/2 moves to x = 1/2
  const auto tie = reduce_sl2(RatComplex(Rat(-1, 2), Rat(3)));
  CHECK(tie.z0 == RatComplex(Rat(1, 2), Rat(3)));
  // unit arc tie: |z| = 1 picks the representative with x >= 0
  const auto arc = reduce_sl2(RatComplex(Rat(-3, 5), Rat(4, 5)));
  CHECK(abs2(arc.z0) >= Rat(1));
  CHECK(arc.z0.real() >= Rat(0));
}

TEST_CASE("reduction certificates hold on random points") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const RatComplex z(rng.rational(20, 12), rng.positive_rational(15, 7));
    const auto red = reduce_sl2(z);
    CHECK(is_integral_unimodular(red.gamma));
    CHECK(mobius(red.gamma, z) == red.z0);
    CHECK(in_fundamental_set(red.z0));
  }
}

TEST_CASE("hecke degree counts cosets for determinant p") {
  for (int p : {2, 3, 5, 7}) {
    RatMatrix g(2, 2);
    g << Rat(p), Rat(0), Rat(0), Rat(1);
    CHECK(hecke_degree(HeckeElement{g}) == p + 1);
  }
}

TEST_CASE("hecke images of i under the determinant two correspondence") {
  RatMatrix g(2, 2);
  g << Rat(2), Rat(0), Rat(0), Rat(1);
  const auto points = hecke_points(RatComplex(Rat(0), Rat(1)), HeckeElement{g});
  REQUIRE(points.size() == 3);
  // oracle: cosets diag(1,2), [[1,1],[0,2]], diag(2,1) send i to i/2, (i+1)/2, 2i;
  // the first and last reduce to 2i, the middle one to i
  std::multiset<std::string> got;
  for (const auto& hp : points) got.insert(to_string(hp.point));
  const std::string two_i = to_string(RatComplex(Rat(0), Rat(2)));
  const std::string just_i = to_string(RatComplex(Rat(0), Rat(1)));
  CHECK(got.count(two_i) == 2);
  CHECK(got.count(just_i) == 1);
  // each claimed representative actually maps z to the reduced point
  for (const auto& hp : points)
    CHECK(reduce_sl2(mobius(hp.rep, RatComplex(Rat(0), Rat(1)))).z0 == hp.point);
}

TEST_CASE("intersectors of the standard strip are the expected six") {
  const auto spec = standard_strip();
  const auto report = siegel_intersectors(spec, spec, 3);
  CHECK(report.indeterminate.empty());
  CHECK(report.stable);
  std::set<std::string> got;
  for (const auto& m : report.members) got.insert(key_of(m));
  std::set<std::string> expected;
  expected.insert(key_of(mat2(1, 0, 0, 1)));
  expected.insert(key_of(mat2(-1, 0, 0, -1)));
  expected.insert(key_of(mat2(1, 1, 0, 1)));
  expected.insert(key_of(mat2(-1, -1, 0, -1)));
  expected.insert(key_of(mat2(1, -1, 0, 1)));
  expected.insert(key_of(mat2(-1, 1, 0, -1)));
  CHECK(got == expected);
}

TEST_CASE("a lower strip admits the inversion") {
  SiegelSetSpec wide{2, Rat(1, 2), Rat(1, 2)};  // heights down past the unit circle
  const auto report = siegel_intersectors(wide, wide, 2);
  std::set<std::string> got;
  for (const auto& m : report.members) got.insert(key_of(m));
  CHECK(got.count(key_of(mat2(0, -1, 1, 0))) == 1);
  CHECK(got.size() > 6);
}

TEST_CASE("boundary chart is one periodic and sends t zero to the cusp") {
  for (const Rat& x : {Rat(0), Rat(1, 3), Rat(7, 5), Rat(-2, 7)}) {
    const Rat t(1, 2);
    const auto a = bs_to_bb(x, t);
    const auto b = bs_to_bb(x + Rat(1), t);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
    CHECK(bs_to_bb(x, Rat(0)) == std::complex<double>(0, 0));
  }
  // pinned value: x = 1/4, t = 1 gives i e^{-2 pi}
  const auto z = bs_to_bb(Rat(1, 4), Rat(1));
  const std::complex<double> expected(0, std::exp(-2 * 3.141592653589793238462643383279502884));
  CHECK(std::abs(z - expected) <= 1e-12);
  // the image shrinks toward the cusp as t decreases
  CHECK(std::abs(bs_to_bb(Rat(1, 3), Rat(1, 4))) < std::abs(bs_to_bb(Rat(1, 3), Rat(1, 2))));
}

}  // TEST_SUITE
