#include <doctest.h>

#include "periodgeom/filtration.hpp"
#include "periodgeom/rng.hpp"
#include "periodgeom/subspace.hpp"

using namespace periodgeom;

namespace {

RatMatrix cols(std::initializer_list<std::initializer_list<int>> data) {
  const Index rows = static_cast<Index>(data.begin()->size());
  RatMatrix m(rows, static_cast<Index>(data.size()));
  Index c = 0;
  for (const auto& col : data) {
    Index r = 0;
    for (int x : col) m(r++, c) = Rat(x);
    ++c;
  }
  return m;
}

}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("span normal form ignores the generating set") {
  const auto v = Subspace<Rat>::span_of(cols({{1, 2, 0}, {0, 0, 1}}));
  const auto w = Subspace<Rat>::span_of(cols({{2, 4, 3}, {1, 2, 0}, {0, 0, -5}}));
  CHECK(v == w);
  CHECK(v.dim() == 2);
  CHECK(v.ambient_dim() == 3);
}

TEST_CASE("membership agrees with explicit combinations") {
  const auto v = Subspace<Rat>::span_of(cols({{1, 0, 2}, {0, 1, -1}}));
  RatVector in(3), out(3);
  in << Rat(3), Rat(2), Rat(4);   // 3*(1,0,2) + 2*(0,1,-1)
  out << Rat(0), Rat(0), Rat(1);
  CHECK(v.contains(in));
  CHECK(!v.contains(out));
  CHECK(Subspace<Rat>::full(3).contains(v));
  CHECK(v.contains(Subspace<Rat>::zero(3)));
  CHECK(!v.contains(Subspace<Rat>::full(3)));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    RatMatrix a(4, 2), b(4, 2);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 2; ++j) {
        a(i, j) = Rat(rng.uniform_int(-3, 3));
        b(i, j) = Rat(rng.uniform_int(-3, 3));
      }
    const auto va = Subspace<Rat>::span_of(a);
    const auto vb = Subspace<Rat>::span_of(b);
    const auto sum = va + vb;
    const auto meet = intersect(va, vb);
    CHECK(sum.dim() + meet.dim() == va.dim() + vb.dim());
    CHECK(sum.contains(va));
    CHECK(sum.contains(vb));
    CHECK(va.contains(meet));
    CHECK(vb.contains(meet));
  }
}

TEST_CASE("image and preimage are adjoint along inclusion") {
  RatMatrix m(3, 3);
  m << Rat(1), Rat(1), Rat(0),
       Rat(0), Rat(0), Rat(1),
       Rat(0), Rat(0), Rat(0);
  const auto v = Subspace<Rat>::span_of(cols({{1, 0, 0}, {0, 1, 0}}));
  const auto image = v.map_image(m);
  CHECK(image == Subspace<Rat>::span_of(cols({{1, 0, 0}})));
  const auto back = image.preimage(m);
  CHECK(back.contains(v));
  CHECK(back.map_image(m) == image);
}

TEST_CASE("complement pieces recombine to the outer space") {
  const auto outer = Subspace<Rat>::full(3);
  const auto inner = Subspace<Rat>::span_of(cols({{1, 2, 3}}));
  const auto comp = complement_in(inner, outer);
  CHECK(comp.dim() == 2);
  CHECK((inner + comp) == outer);
  CHECK(intersect(inner, comp).is_zero());
  CHECK_THROWS_AS(complement_in(outer, inner), DimensionError);
}

TEST_CASE("conjugation is an involution matching entrywise conjugates") {
  CRatMatrix g(2, 1);
  g << RatComplex(Rat(1), Rat(2)), RatComplex(Rat(0), Rat(-1));
  const auto v = Subspace<RatComplex>::span_of(g);
  CHECK(v.conjugated().conjugated() == v);
  CRatVector conj_gen(2);
  conj_gen << RatComplex(Rat(1), Rat(-2)), RatComplex(Rat(0), Rat(1));
  CHECK(v.conjugated().contains(conj_gen));
}

TEST_CASE("filtration construction checks nesting and the ends") {
  const Index d = 3;
  std::vector<Subspace<Rat>> good{
      Subspace<Rat>::zero(d),
      Subspace<Rat>::span_of(cols({{1, 0, 0}})),
      Subspace<Rat>::span_of(cols({{1, 0, 0}, {0, 1, 0}})),
      Subspace<Rat>::full(d)};
  const auto w = Filtration<Rat>::increasing(d, -2, std::vector<Subspace<Rat>>(good));
  CHECK(w.lo() == -2);
  CHECK(w.hi() == 1);
  CHECK(w.at(-5).is_zero());   // clamped below
  CHECK(w.at(10).is_full());   // clamped above
  CHECK(w.graded_dim(-1) == 1);

  auto bad = good;
  std::swap(bad[1], bad[2]);  // breaks nesting
  CHECK_THROWS_AS(Filtration<Rat>::increasing(d, -2, std::move(bad)), DimensionError);

  std::vector<Subspace<Rat>> no_zero_end{good[1], good[2], good[3]};
  CHECK_THROWS_AS(Filtration<Rat>::increasing(d, -2, std::move(no_zero_end)),
                  DimensionError);
}

TEST_CASE("decreasing filtrations run from full to zero") {
  const Index d = 2;
  std::vector<Subspace<Rat>> pieces{
      Subspace<Rat>::full(d),
      Subspace<Rat>::span_of(cols({{1, 0}})),
      Subspace<Rat>::zero(d)};
  const auto f = Filtration<Rat>::decreasing(d, 0, std::vector<Subspace<Rat>>(pieces));
  CHECK(f.at(-3).is_full());
  CHECK(f.at(0).is_full());
  CHECK(f.at(1).dim() == 1);
  CHECK(f.at(2).is_zero());
  CHECK(f.at(7).is_zero());
  CHECK(f.graded_dim(1) == 1);
}

TEST_CASE("filtration transport preserves the level dimensions") {
  const Index d = 2;
  std::vector<Subspace<Rat>> pieces{
      Subspace<Rat>::full(d),
      Subspace<Rat>::span_of(cols({{1, 1}})),
      Subspace<Rat>::zero(d)};
  const auto f = Filtration<Rat>::decreasing(d, 0, std::move(pieces));
  RatMatrix g(2, 2);
  g << Rat(1), Rat(1), Rat(0), Rat(1);
  const auto moved = f.transported(g);
  CHECK(moved.graded_dim(1) == f.graded_dim(1));
  RatVector v(2);
  v << Rat(2), Rat(1);  // g * (1,1)
  CHECK(moved.at(1).contains(v));
}

}  // TEST_SUITE
