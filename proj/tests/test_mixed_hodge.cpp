#include <doctest.h>

#include "periodgeom/datasets.hpp"
#include "periodgeom/mixed_hodge.hpp"
#include "periodgeom/rng.hpp"

using namespace periodgeom;

namespace {

// oracle: verify the two defining axioms of the centered weight filtration
bool satisfies_weight_axioms(const RatMatrix& n, const Filtration<Rat>& w) {
  const Index d = n.rows();
  for (int k = w.lo() - 1; k <= w.hi() + 1; ++k)
    if (!w.at(k - 2).contains(w.at(k).map_image(n))) return false;
  RatMatrix power = RatMatrix::Identity(d, d);
  for (int l = 1; l <= w.hi() + 1; ++l) {
    power = power * n;
    // N^l : gr_l -> gr_{-l} iso  <=>  W_l = ker + lift, checked via dimensions
    // of N^l W_l + W_{-l-1} = W_{-l} together with the graded symmetry
    if (w.graded_dim(l) != w.graded_dim(-l)) return false;
    if ((w.at(l).map_image(power) + w.at(-l - 1)) != w.at(-l)) return false;
  }
  return true;
}

RatMatrix jordan_block_sum(const std::vector<Index>& sizes) {
  Index d = 0;
  for (Index s : sizes) d += s;
  RatMatrix n = RatMatrix::Zero(d, d);
  Index base = 0;
  for (Index s : sizes) {
    for (Index i = 1; i < s; ++i) n(base + i, base + i - 1) = Rat(1);
    base += s;
  }
  return n;
}

}  // namespace

TEST_SUITE("mixed_hodge") {

TEST_CASE("weight filtration of a two step block") {
  RatMatrix n = RatMatrix::Zero(2, 2);
  n(1, 0) = Rat(1);
  const auto w = weight_filtration(n);
  // hand values: W_{-1} = im N = span(e2), W_0 = ker N = span(e2), W_1 = all
  RatVector e2(2);
  e2 << Rat(0), Rat(1);
  CHECK(w.at(-2).is_zero());
  CHECK(w.at(-1).dim() == 1);
  CHECK(w.at(-1).contains(e2));
  CHECK(w.at(0) == w.at(-1));
  CHECK(w.at(1).is_full());
  CHECK(satisfies_weight_axioms(n, w));
}

TEST_CASE("weight filtration of a three step block") {
  RatMatrix n = RatMatrix::Zero(3, 3);
  n(1, 0) = Rat(2);
  n(2, 1) = Rat(1);
  const auto w = weight_filtration(n);
  RatVector e3(3), e2(3);
  e3 << Rat(0), Rat(0), Rat(1);
  e2 << Rat(0), Rat(1), Rat(0);
  CHECK(w.at(-2).dim() == 1);       // im N^2
  CHECK(w.at(-2).contains(e3));
  CHECK(w.at(-1) == w.at(-2));
  CHECK(w.at(0).dim() == 2);        // ker N^2
  CHECK(w.at(0).contains(e2));
  CHECK(w.at(1) == w.at(0));
  CHECK(w.at(2).is_full());
  CHECK(satisfies_weight_axioms(n, w));
}

TEST_CASE("weight filtration of mixed block sizes") {
  const RatMatrix n = jordan_block_sum({3, 2, 1});
  const auto w = weight_filtration(n);
  CHECK(w.graded_dim(2) == 1);
  CHECK(w.graded_dim(1) == 1);
  CHECK(w.graded_dim(0) == 2);
  CHECK(w.graded_dim(-1) == 1);
  CHECK(w.graded_dim(-2) == 1);
  CHECK(satisfies_weight_axioms(n, w));
}

TEST_CASE("weight filtration axioms hold for random conjugated nilpotents") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const Index d = 2 + trial % 5;
    const RatMatrix n = random_nilpotent(rng, d);
    CHECK(satisfies_weight_axioms(n, weight_filtration(n)));
  }
  CHECK_THROWS_AS(weight_filtration(RatMatrix(RatMatrix::Identity(2, 2))),
                  NotNilpotentError);
}

TEST_CASE("cone filtrations are independent of the interior sample") {
  const auto e2 = make_e2();
  const auto a = cone_weight_filtrations(e2.cone, 3, 2026);
  const auto b = cone_weight_filtrations(e2.cone, 5, 999);
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
  // the last partial sum is the filtration of the total generator
  RatMatrix total = RatMatrix::Zero(4, 4);
  for (const auto& n : e2.cone.generators) total += n;
  CHECK(a[1] == weight_filtration(total));
}

TEST_CASE("deligne splitting reconstructs both filtrations for e1 at i") {
  const auto data = make_e1();
  RatMatrix n = data.cone.generators[0];
  const auto w = weight_filtration(n);
  const auto split = deligne_splitting(data.limit, w, data.cone.lattice.weight);
  CHECK(split.is_direct_sum());
  // oracle: rebuild F^s and W_m from the pieces and compare
  for (int s = data.limit.lo() - 1; s <= data.limit.hi() + 1; ++s) {
    Subspace<RatComplex> rebuilt = Subspace<RatComplex>::zero(2);
    for (const auto& [pq, piece] : split.pieces)
      if (pq[0] >= s) rebuilt = rebuilt + piece;
    CHECK(rebuilt == data.limit.at(s));
  }
  const auto wc = w.cast<RatComplex>();
  for (int m = w.lo() - 1; m <= w.hi() + 1; ++m) {
    Subspace<RatComplex> rebuilt = Subspace<RatComplex>::zero(2);
    for (const auto& [pq, piece] : split.pieces)
      if (pq[0] + pq[1] - data.cone.lattice.weight <= m) rebuilt = rebuilt + piece;
    CHECK(rebuilt == wc.at(m));
  }
}

TEST_CASE("deligne splitting rejects incompatible pairs") {
  // F puts everything in level 1 but W says the space is split across weights
  const Index d = 2;
  CRatMatrix f1 = CRatMatrix::Zero(d, 1);
  f1(0, 0) = RatComplex(Rat(1));
  std::vector<Subspace<RatComplex>> fp{Subspace<RatComplex>::full(d),
                                       Subspace<RatComplex>::span_of(f1),
                                       Subspace<RatComplex>::zero(d)};
  const auto f = Filtration<RatComplex>::decreasing(d, 1, std::move(fp));
  RatMatrix gen = RatMatrix::Zero(d, 1);
  gen(0, 0) = Rat(1);
  std::vector<Subspace<Rat>> wp{Subspace<Rat>::zero(d), Subspace<Rat>::span_of(gen),
                                Subspace<Rat>::full(d)};
  const auto w = Filtration<Rat>::increasing(d, -3, std::move(wp));
  CHECK_THROWS_AS(deligne_splitting(f, w, 1), NotMixedHodgeError);
}

TEST_CASE("rational splitting reproduces every filtration level for e2") {
  const auto e2 = make_e2();
  const auto ws = cone_weight_filtrations(e2.cone);
  const auto j = rational_splitting(ws);
  CHECK(j.is_direct_sum());
  for (std::size_t idx = 0; idx < ws.size(); ++idx) {
    for (int s = ws[idx].lo() - 1; s <= ws[idx].hi() + 1; ++s) {
      Subspace<Rat> rebuilt = Subspace<Rat>::zero(4);
      for (const auto& [sigma, piece] : j.pieces)
        if (sigma[idx] <= s) rebuilt = rebuilt + piece;
      CHECK(rebuilt == ws[idx].at(s));
    }
  }
}

TEST_CASE("multidegrees of the e2 standard basis") {
  const auto e2 = make_e2();
  const auto ws = cone_weight_filtrations(e2.cone);
  const std::vector<std::vector<int>> expected{{-1, -1}, {1, 1}, {0, -1}, {0, 1}};
  for (Index k = 0; k < 4; ++k) {
    RatVector v = RatVector::Zero(4);
    v(k) = Rat(1);
    CHECK(multidegree(ws, v) == expected[static_cast<std::size_t>(k)]);
  }
  const auto j = rational_splitting(ws);
  for (Index k = 0; k < 4; ++k) {
    RatVector v = RatVector::Zero(4);
    v(k) = Rat(1);
    CHECK(j.at(expected[static_cast<std::size_t>(k)]).contains(v));
  }
}

TEST_CASE("lattice and cone validation reject broken inputs") {
  auto data = make_e1();
  CHECK_NOTHROW(validate_lattice(data.cone.lattice));
  CHECK_NOTHROW(validate_cone(data.cone));

  auto bad_form = data.cone.lattice;
  bad_form.form(0, 1) = Rat(2);  // no longer antisymmetric
  CHECK_THROWS_AS(validate_lattice(bad_form), ValidationError);

  auto bad_cone = data.cone;
  bad_cone.generators[0](0, 0) = Rat(1);  // not nilpotent
  CHECK_THROWS_AS(validate_cone(bad_cone), ValidationError);

  auto e2 = make_e2().cone;
  // raising operator on the second block: nilpotent and an isometry, but it
  // no longer commutes with the second generator
  e2.generators[0](3, 2) = Rat(1);
  CHECK_THROWS_AS(validate_cone(e2), ValidationError);
}

}  // TEST_SUITE
