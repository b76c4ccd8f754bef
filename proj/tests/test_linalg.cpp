#include <doctest.h>

#include "periodgeom/linalg.hpp"
#include "periodgeom/rng.hpp"

using namespace periodgeom;

namespace {

// independent determinant oracle: Laplace expansion along the first row
template <class S>
S det_cofactor(const MatrixX<S>& m) {
  const Index n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  S acc(0);
  for (Index j = 0; j < n; ++j) {
    MatrixX<S> sub(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    const S term = m(0, j) * det_cofactor<S>(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

RatMatrix random_int_matrix(Rng& rng, Index n) {
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform_int(-4, 4));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("elimination determinant equals cofactor expansion") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + trial % 5;
    const RatMatrix m = random_int_matrix(rng, n);
    CHECK(det_exact<Rat>(m) == det_cofactor<Rat>(m));
  }
}

TEST_CASE("complex determinant equals cofactor expansion") {
  Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 2 + trial % 3;
    CRatMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        m(i, j) = RatComplex(rng.rational(3, 2), rng.rational(3, 2));
    CHECK(det_exact<RatComplex>(m) == det_cofactor<RatComplex>(m));
  }
}

TEST_CASE("column echelon form is a normal form of the span") {
  RatMatrix a(3, 3);
  a << Rat(2), Rat(4), Rat(0),
       Rat(1), Rat(2), Rat(1),
       Rat(0), Rat(0), Rat(3);
  const auto ech = reduced_column_echelon<Rat>(a);
  CHECK(ech.columns.cols() == 2);
  REQUIRE(ech.pivot_rows.size() == 2);
  CHECK(ech.pivot_rows[0] == 0);
  CHECK(ech.pivot_rows[1] == 1);
  // pivots are 1 and pivot rows vanish in the other columns
  CHECK(ech.columns(0, 0) == Rat(1));
  CHECK(ech.columns(1, 1) == Rat(1));
  CHECK(ech.columns(0, 1) == Rat(0));
  CHECK(ech.columns(1, 0) == Rat(0));
  CHECK(ech.columns(2, 0) == Rat(-3, 2));
  CHECK(ech.columns(2, 1) == Rat(3));

  // a column-scrambled generating set of the same span gives identical output
  RatMatrix b(3, 4);
  b.col(0) = a.col(1) * Rat(5);
  b.col(1) = a.col(0) + a.col(2);
  b.col(2) = a.col(2) * Rat(-1, 3);
  b.col(3) = a.col(0);
  const auto ech2 = reduced_column_echelon<Rat>(b);
  CHECK(ech2.columns == ech.columns);
}

TEST_CASE("kernel columns span the exact null space") {
  RatMatrix m(2, 4);
  m << Rat(1), Rat(2), Rat(0), Rat(1),
       Rat(0), Rat(0), Rat(1), Rat(-1);
  const RatMatrix k = kernel<Rat>(m);
  CHECK(k.cols() == 2);
  CHECK(is_zero_matrix((m * k).eval()));
  CHECK(rank_of<Rat>(k) == 2);
  CHECK(rank_of<Rat>(m) + k.cols() == m.cols());
}

TEST_CASE("solver returns the witness or reports inconsistency") {
  RatMatrix a(2, 2);
  a << Rat(1), Rat(2), Rat(3), Rat(4);
  RatVector b(2);
  b << Rat(5), Rat(6);
  const auto x = solve_linear<Rat>(a, b);
  REQUIRE(x.has_value());
  CHECK((a * *x - b).isZero(0));

  RatMatrix sing(2, 2);
  sing << Rat(1), Rat(2), Rat(2), Rat(4);
  RatVector c(2);
  c << Rat(0), Rat(1);
  CHECK(!solve_linear<Rat>(sing, c).has_value());
}

TEST_CASE("inverse multiplies back to the identity") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix m = random_int_matrix(rng, 3);
    m += RatMatrix::Identity(3, 3) * Rat(7);  // push away from singularity
    if (det_exact<Rat>(m).is_zero()) continue;
    const RatMatrix inv = invert<Rat>(m);
    CHECK((m * inv).eval() == RatMatrix::Identity(3, 3).eval());
  }
  RatMatrix sing(2, 2);
  sing << Rat(1), Rat(2), Rat(2), Rat(4);
  CHECK_THROWS_AS(invert<Rat>(sing), SingularError);
}

TEST_CASE("nilpotency index counts the vanishing power") {
  RatMatrix n = RatMatrix::Zero(3, 3);
  n(1, 0) = Rat(1);
  n(2, 1) = Rat(2);
  CHECK(nilpotency_index<Rat>(n) == 3);
  CHECK(nilpotency_index<Rat>(RatMatrix(RatMatrix::Zero(2, 2))) == 1);
  CHECK_THROWS_AS(nilpotency_index<Rat>(RatMatrix(RatMatrix::Identity(2, 2))),
                  NotNilpotentError);
}

TEST_CASE("nilpotent exponential matches the summed series") {
  RatMatrix n = RatMatrix::Zero(3, 3);
  n(1, 0) = Rat(3);
  n(2, 1) = Rat(1);
  const Rat z(5, 2);
  // oracle: I + zN + z^2 N^2 / 2
  RatMatrix expected = RatMatrix::Identity(3, 3) + z * n + (z * z / Rat(2)) * (n * n).eval();
  CHECK(nilpotent_exp<Rat>(n, z) == expected);
  // group law along the flow
  const RatMatrix one_step = nilpotent_exp<Rat>(n, Rat(1));
  CHECK((nilpotent_exp<Rat>(n, Rat(2)) == (one_step * one_step).eval()));
  CHECK((nilpotent_exp<Rat>(n, z) * nilpotent_exp<Rat>(n, -z)).eval() ==
        RatMatrix::Identity(3, 3).eval());
}

TEST_CASE("subset enumeration is lexicographic and complete") {
  const auto s = index_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == std::vector<Index>{0, 1});
  CHECK(s[1] == std::vector<Index>{0, 2});
  CHECK(s[2] == std::vector<Index>{0, 3});
  CHECK(s[3] == std::vector<Index>{1, 2});
  CHECK(s[4] == std::vector<Index>{1, 3});
  CHECK(s[5] == std::vector<Index>{2, 3});
  CHECK(index_subsets(5, 0).size() == 1);
  CHECK(index_subsets(5, 5).size() == 1);
}

TEST_CASE("wedge power is functorial and tops out at the determinant") {
  Rng rng(24);
  const RatMatrix a = random_int_matrix(rng, 4);
  const RatMatrix b = random_int_matrix(rng, 4);
  CHECK(wedge_power<Rat>((a * b).eval(), 2) ==
        (wedge_power<Rat>(a, 2) * wedge_power<Rat>(b, 2)).eval());
  const RatMatrix top = wedge_power<Rat>(a, 4);
  REQUIRE(top.rows() == 1);
  CHECK(top(0, 0) == det_exact<Rat>(a));
}

TEST_CASE("wedge vector is alternating and matches the induced map") {
  RatMatrix u(3, 2);
  u << Rat(1), Rat(0), Rat(2), Rat(1), Rat(0), Rat(3);
  RatMatrix swapped(3, 2);
  swapped.col(0) = u.col(1);
  swapped.col(1) = u.col(0);
  CHECK(wedge_vector<Rat>(u) == (-wedge_vector<Rat>(swapped)).eval());

  Rng rng(25);
  const RatMatrix g = random_int_matrix(rng, 3);
  CHECK(wedge_vector<Rat>((g * u).eval()) ==
        (wedge_power<Rat>(g, 2) * wedge_vector<Rat>(u)).eval());
}

TEST_CASE("wedge form evaluates as the Gram minor determinant") {
  Rng rng(26);
  const RatMatrix q = random_int_matrix(rng, 3);
  RatMatrix u(3, 2), v(3, 2);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 2; ++j) {
      u(i, j) = Rat(rng.uniform_int(-3, 3));
      v(i, j) = Rat(rng.uniform_int(-3, 3));
    }
  // oracle: det of the 2x2 pairing matrix
  MatrixX<Rat> pair(2, 2);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      pair(a, b) = form_value<Rat>(q, u.col(a), v.col(b));
  const Rat direct = det_exact<Rat>(pair);
  const Rat induced = form_value<Rat>(wedge_form<Rat>(q, 2), wedge_vector<Rat>(u),
                                      wedge_vector<Rat>(v));
  CHECK(direct == induced);
}

TEST_CASE("form value is sesquilinear") {
  CRatMatrix q(2, 2);
  q << RatComplex(Rat(1)), RatComplex(Rat(0), Rat(1)),
       RatComplex(Rat(0), Rat(-1)), RatComplex(Rat(2));
  CRatVector u(2), v(2);
  u << RatComplex(Rat(1), Rat(1)), RatComplex(Rat(0), Rat(2));
  v << RatComplex(Rat(3)), RatComplex(Rat(1), Rat(-1));
  const RatComplex lam(Rat(2), Rat(5));
  CHECK(form_value<RatComplex>(q, (lam * u).eval(), v) ==
        lam * form_value<RatComplex>(q, u, v));
  CHECK(form_value<RatComplex>(q, u, (lam * v).eval()) ==
        scalar_conj(lam) * form_value<RatComplex>(q, u, v));
}

TEST_CASE("orthogonalization reproduces the flag and kills cross terms") {
  RatMatrix q(3, 3);
  q << Rat(2), Rat(1), Rat(0),
       Rat(1), Rat(3), Rat(1),
       Rat(0), Rat(1), Rat(4);
  RatMatrix basis(3, 3);
  basis << Rat(1), Rat(1), Rat(0),
           Rat(0), Rat(1), Rat(1),
           Rat(0), Rat(0), Rat(1);
  const auto gs = gram_schmidt<Rat>(q, basis);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(form_value<Rat>(q, gs.basis.col(i), gs.basis.col(j)).is_zero());
    }
  CHECK((gs.basis * gs.coeffs).eval() == basis);
  for (Index i = 0; i < 3; ++i)
    CHECK(gs.norms[static_cast<std::size_t>(i)] ==
          form_value<Rat>(q, gs.basis.col(i), gs.basis.col(i)));
}

TEST_CASE("degenerate partial flag is reported with its column") {
  RatMatrix q(2, 2);
  q << Rat(0), Rat(1), Rat(1), Rat(0);
  RatMatrix basis(2, 1);
  basis << Rat(1), Rat(0);  // isotropic vector
  CHECK_THROWS_AS(gram_schmidt<Rat>(q, basis), DegenerateFlagError);
  try {
    gram_schmidt<Rat>(q, basis);
  } catch (const DegenerateFlagError& e) {
    CHECK(e.index == 0);
  }
}

}  // TEST_SUITE
