#include "periodgeom/datasets.hpp"

namespace periodgeom {

namespace {

/// Decreasing filtration from possibly redundant pieces; trims constant
/// full / zero steps at the ends, keeping one of each.
Filtration<RatComplex> make_decreasing(Index ambient, int lo,
                                       std::vector<Subspace<RatComplex>> pieces) {
  int new_lo = lo;
  while (pieces.size() > 2 && pieces[1].is_full()) {
    pieces.erase(pieces.begin());
    ++new_lo;
  }
  while (pieces.size() > 2 && pieces[pieces.size() - 2].is_zero()) pieces.pop_back();
  return Filtration<RatComplex>::decreasing(ambient, new_lo, std::move(pieces));
}

std::map<int, Index> hodge_numbers_from(const Filtration<RatComplex>& f) {
  std::map<int, Index> out;
  for (int p = f.lo(); p <= f.hi(); ++p) {
    Index h = f.graded_dim(p);
    if (h > 0) out[p] = h;
  }
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

CRatMatrix kron_c(const CRatMatrix& a, const CRatMatrix& b) {
  CRatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

NilpotentOrbitData direct_sum(const NilpotentOrbitData& a, const NilpotentOrbitData& b) {
  if (a.cone.lattice.weight != b.cone.lattice.weight)
    throw DimensionError("direct sum requires equal weights");
  if (a.variables() != b.variables())
    throw DimensionError("direct sum requires the same number of variables");
  const Index da = a.rank(), db = b.rank(), d = da + db;

  PolarizedLattice lattice;
  lattice.rank = d;
  lattice.weight = a.cone.lattice.weight;
  lattice.form = RatMatrix::Zero(d, d);
  lattice.form.topLeftCorner(da, da) = a.cone.lattice.form;
  lattice.form.bottomRightCorner(db, db) = b.cone.lattice.form;
  for (const auto& [p, h] : a.cone.lattice.hodge_numbers) lattice.hodge_numbers[p] += h;
  for (const auto& [p, h] : b.cone.lattice.hodge_numbers) lattice.hodge_numbers[p] += h;

  NilpotentCone cone{std::move(lattice), {}};
  for (Index j = 0; j < a.variables(); ++j) {
    RatMatrix n = RatMatrix::Zero(d, d);
    n.topLeftCorner(da, da) = a.cone.generators[j];
    n.bottomRightCorner(db, db) = b.cone.generators[j];
    cone.generators.push_back(std::move(n));
  }

  const int lo = std::min(a.limit.lo(), b.limit.lo());
  const int hi = std::max(a.limit.hi(), b.limit.hi());
  std::vector<Subspace<RatComplex>> pieces;
  for (int p = lo; p <= hi; ++p) {
    CRatMatrix gens = CRatMatrix::Zero(d, a.limit.at(p).dim() + b.limit.at(p).dim());
    gens.block(0, 0, da, a.limit.at(p).dim()) = a.limit.at(p).basis();
    gens.block(da, a.limit.at(p).dim(), db, b.limit.at(p).dim()) = b.limit.at(p).basis();
    pieces.push_back(Subspace<RatComplex>::span_of(gens));
  }

  std::vector<CRatMatrix> psi;
  if (!a.psi.empty() || !b.psi.empty()) {
    for (Index j = 0; j < a.variables(); ++j) {
      CRatMatrix g = CRatMatrix::Zero(d, d);
      if (!a.psi.empty()) g.topLeftCorner(da, da) = a.psi[j];
      if (!b.psi.empty()) g.bottomRightCorner(db, db) = b.psi[j];
      psi.push_back(std::move(g));
    }
  }

  return NilpotentOrbitData{std::move(cone), make_decreasing(d, lo, std::move(pieces)),
                            std::move(psi)};
}

NilpotentOrbitData tensor_product(const NilpotentOrbitData& a, const NilpotentOrbitData& b) {
  if (a.variables() != b.variables())
    throw DimensionError("tensor product requires the same number of variables");
  const Index da = a.rank(), db = b.rank(), d = da * db;

  PolarizedLattice lattice;
  lattice.rank = d;
  lattice.weight = a.cone.lattice.weight + b.cone.lattice.weight;
  lattice.form = kron(a.cone.lattice.form, b.cone.lattice.form);

  NilpotentCone cone{std::move(lattice), {}};
  const RatMatrix ia = RatMatrix::Identity(da, da), ib = RatMatrix::Identity(db, db);
  for (Index j = 0; j < a.variables(); ++j)
    cone.generators.push_back(kron(a.cone.generators[j], ib) +
                              kron(ia, b.cone.generators[j]));

  const int lo = a.limit.lo() + b.limit.lo();
  const int hi = a.limit.hi() + b.limit.hi();
  std::vector<Subspace<RatComplex>> pieces;
  for (int p = lo; p <= hi; ++p) {
    Subspace<RatComplex> sum = Subspace<RatComplex>::zero(d);
    for (int pa = a.limit.lo(); pa <= a.limit.hi(); ++pa) {
      const Subspace<RatComplex>& fa = a.limit.at(pa);
      const Subspace<RatComplex>& fb = b.limit.at(p - pa);
      if (fa.is_zero() || fb.is_zero()) continue;
      sum = sum + Subspace<RatComplex>::span_of(kron_c(fa.basis(), fb.basis()));
    }
    pieces.push_back(std::move(sum));
  }

  std::vector<CRatMatrix> psi;
  if (!a.psi.empty() || !b.psi.empty()) {
    const CRatMatrix ica = complexify(ia), icb = complexify(ib);
    for (Index j = 0; j < a.variables(); ++j) {
      CRatMatrix g = CRatMatrix::Zero(d, d);
      if (!a.psi.empty()) g += kron_c(a.psi[j], icb);
      if (!b.psi.empty()) g += kron_c(ica, b.psi[j]);
      psi.push_back(std::move(g));
    }
  }

  NilpotentOrbitData out{std::move(cone), make_decreasing(d, lo, std::move(pieces)),
                         std::move(psi)};
  out.cone.lattice.hodge_numbers = hodge_numbers_from(out.limit);
  return out;
}

namespace {

// index of e_i e_j (i <= j) in the lexicographic symmetric-square basis
Index sym_index(Index d, Index i, Index j) {
  if (i > j) std::swap(i, j);
  return i * d - i * (i - 1) / 2 + (j - i);
}

CRatVector sym_product(Index d, const CRatVector& u, const CRatVector& v) {
  CRatVector out = CRatVector::Zero(d * (d + 1) / 2);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out(sym_index(d, i, j)) += u(i) * v(j);
  return out;
}

}  // namespace

NilpotentOrbitData sym_square(const NilpotentOrbitData& a) {
  const Index da = a.rank(), d = da * (da + 1) / 2;

  PolarizedLattice lattice;
  lattice.rank = d;
  lattice.weight = 2 * a.cone.lattice.weight;
  lattice.form = RatMatrix::Zero(d, d);
  const RatMatrix& q = a.cone.lattice.form;
  for (Index i = 0; i < da; ++i)
    for (Index j = i; j < da; ++j)
      for (Index k = 0; k < da; ++k)
        for (Index l = k; l < da; ++l)
          lattice.form(sym_index(da, i, j), sym_index(da, k, l)) =
              (q(i, k) * q(j, l) + q(i, l) * q(j, k)) / Rat(2);

  NilpotentCone cone{std::move(lattice), {}};
  for (const auto& n : a.cone.generators) {
    RatMatrix ns = RatMatrix::Zero(d, d);
    for (Index i = 0; i < da; ++i)
      for (Index j = i; j < da; ++j)
        for (Index r = 0; r < da; ++r) {
          ns(sym_index(da, r, j), sym_index(da, i, j)) += n(r, i);
          ns(sym_index(da, i, r), sym_index(da, i, j)) += n(r, j);
        }
    cone.generators.push_back(std::move(ns));
  }

  const int lo = 2 * a.limit.lo(), hi = 2 * a.limit.hi();
  std::vector<Subspace<RatComplex>> pieces;
  for (int p = lo; p <= hi; ++p) {
    Subspace<RatComplex> sum = Subspace<RatComplex>::zero(d);
    for (int pa = a.limit.lo(); pa <= a.limit.hi(); ++pa) {
      const Subspace<RatComplex>& fa = a.limit.at(pa);
      const Subspace<RatComplex>& fb = a.limit.at(p - pa);
      if (fa.is_zero() || fb.is_zero()) continue;
      CRatMatrix gens(d, fa.dim() * fb.dim());
      Index col = 0;
      for (Index x = 0; x < fa.dim(); ++x)
        for (Index y = 0; y < fb.dim(); ++y, ++col)
          gens.col(col) = sym_product(da, fa.basis().col(x), fb.basis().col(y));
      sum = sum + Subspace<RatComplex>::span_of(gens);
    }
    pieces.push_back(std::move(sum));
  }

  if (a.has_psi()) throw UnsupportedError("sym_square does not compose holomorphic parts");
  NilpotentOrbitData out{std::move(cone), make_decreasing(d, lo, std::move(pieces)), {}};
  out.cone.lattice.hodge_numbers = hodge_numbers_from(out.limit);
  return out;
}

NilpotentOrbitData lambda_square(const NilpotentOrbitData& a) {
  const Index da = a.rank(), d = da * (da - 1) / 2;
  const auto subsets = index_subsets(da, 2);

  auto wedge_index = [&](Index i, Index j) -> std::pair<Index, Rat> {
    if (i == j) return {0, Rat(0)};
    const Rat sign = i < j ? Rat(1) : Rat(-1);
    if (i > j) std::swap(i, j);
    // lexicographic position of {i, j} among 2-subsets
    Index pos = i * da - i * (i + 1) / 2 + (j - i - 1);
    return {pos, sign};
  };

  PolarizedLattice lattice;
  lattice.rank = d;
  lattice.weight = 2 * a.cone.lattice.weight;
  lattice.form = wedge_form<Rat>(a.cone.lattice.form, 2);

  NilpotentCone cone{std::move(lattice), {}};
  for (const auto& n : a.cone.generators) {
    RatMatrix nl = RatMatrix::Zero(d, d);
    for (Index c = 0; c < d; ++c) {
      const Index i = subsets[static_cast<std::size_t>(c)][0];
      const Index j = subsets[static_cast<std::size_t>(c)][1];
      for (Index r = 0; r < da; ++r) {
        auto [pos1, s1] = wedge_index(r, j);
        if (!s1.is_zero()) nl(pos1, c) += s1 * n(r, i);
        auto [pos2, s2] = wedge_index(i, r);
        if (!s2.is_zero()) nl(pos2, c) += s2 * n(r, j);
      }
    }
    cone.generators.push_back(std::move(nl));
  }

  const int lo = 2 * a.limit.lo(), hi = 2 * a.limit.hi();
  std::vector<Subspace<RatComplex>> pieces;
  for (int p = lo; p <= hi; ++p) {
    Subspace<RatComplex> sum = Subspace<RatComplex>::zero(d);
    for (int pa = a.limit.lo(); pa <= a.limit.hi(); ++pa) {
      const Subspace<RatComplex>& fa = a.limit.at(pa);
      const Subspace<RatComplex>& fb = a.limit.at(p - pa);
      if (fa.is_zero() || fb.is_zero()) continue;
      CRatMatrix gens(d, fa.dim() * fb.dim());
      Index col = 0;
      for (Index x = 0; x < fa.dim(); ++x)
        for (Index y = 0; y < fb.dim(); ++y, ++col) {
          CRatMatrix pair(da, 2);
          pair.col(0) = fa.basis().col(x);
          pair.col(1) = fb.basis().col(y);
          gens.col(col) = wedge_vector<RatComplex>(pair);
        }
      sum = sum + Subspace<RatComplex>::span_of(gens);
    }
    pieces.push_back(std::move(sum));
  }

  if (a.has_psi()) throw UnsupportedError("lambda_square does not compose holomorphic parts");
  NilpotentOrbitData out{std::move(cone), make_decreasing(d, lo, std::move(pieces)), {}};
  out.cone.lattice.hodge_numbers = hodge_numbers_from(out.limit);
  return out;
}

namespace {

NilpotentOrbitData rank2_orbit(const RatMatrix& q, const std::vector<RatMatrix>& gens,
                               Index f1_vector) {
  PolarizedLattice lattice;
  lattice.rank = 2;
  lattice.weight = 1;
  lattice.form = q;
  lattice.hodge_numbers = {{0, 1}, {1, 1}};
  CRatMatrix f1 = CRatMatrix::Zero(2, 1);
  f1(f1_vector, 0) = RatComplex(1);
  std::vector<Subspace<RatComplex>> pieces{Subspace<RatComplex>::full(2),
                                           Subspace<RatComplex>::span_of(f1),
                                           Subspace<RatComplex>::zero(2)};
  return NilpotentOrbitData{NilpotentCone{std::move(lattice), gens},
                            Filtration<RatComplex>::decreasing(2, 0, std::move(pieces)),
                            {}};
}

RatMatrix lowering(Index from, Index to) {
  RatMatrix n = RatMatrix::Zero(2, 2);
  n(to, from) = Rat(1);
  return n;
}

}  // namespace

NilpotentOrbitData make_e1() {
  RatMatrix q(2, 2);
  q << Rat(0), Rat(1), Rat(-1), Rat(0);
  return rank2_orbit(q, {lowering(0, 1)}, 0);  // N e1 = e2, F^1 = span(e1)
}

NilpotentOrbitData make_e1psi() {
  NilpotentOrbitData data = make_e1();
  data.psi = {complexify(data.cone.generators[0])};
  return data;
}

namespace {

NilpotentOrbitData e2_factor_a() {
  RatMatrix q(2, 2);
  q << Rat(0), Rat(-1), Rat(1), Rat(0);
  RatMatrix n = lowering(1, 0);  // N e2 = e1
  return rank2_orbit(q, {n, n}, 1);
}

NilpotentOrbitData e2_factor_b() {
  RatMatrix q(2, 2);
  q << Rat(0), Rat(-1), Rat(1), Rat(0);
  return rank2_orbit(q, {RatMatrix::Zero(2, 2), lowering(1, 0)}, 1);
}

}  // namespace

NilpotentOrbitData make_e2() { return direct_sum(e2_factor_a(), e2_factor_b()); }

NilpotentOrbitData make_sym2e1() { return sym_square(make_e1()); }

NilpotentOrbitData make_e2tensor() { return tensor_product(e2_factor_a(), e2_factor_b()); }

NilpotentOrbitData make_lambda2e2() { return lambda_square(make_e2()); }

std::vector<std::string> dataset_names() {
  return {"e1", "e1psi", "e2", "sym2e1", "e2tensor", "lambda2e2"};
}

NilpotentOrbitData dataset_by_name(const std::string& name) {
  if (name == "e1") return make_e1();
  if (name == "e1psi") return make_e1psi();
  if (name == "e2") return make_e2();
  if (name == "sym2e1") return make_sym2e1();
  if (name == "e2tensor") return make_e2tensor();
  if (name == "lambda2e2") return make_lambda2e2();
  throw FormatError("unknown dataset: " + name);
}

}  // namespace periodgeom
