#include "periodgeom/mixed_hodge.hpp"

#include <string>

#include "periodgeom/rng.hpp"

namespace periodgeom {

void validate_lattice(const PolarizedLattice& lattice) {
  if (lattice.rank < 0) throw ValidationError("negative rank");
  if (lattice.form.rows() != lattice.rank || lattice.form.cols() != lattice.rank)
    throw ValidationError("polarization form shape does not match rank");
  const Rat sign = (lattice.weight % 2 == 0) ? Rat(1) : Rat(-1);
  if (!is_zero_matrix((lattice.form - sign * lattice.form.transpose()).eval()))
    throw ValidationError("polarization form has wrong symmetry for the weight");
  if (lattice.rank > 0 && det_exact<Rat>(lattice.form).is_zero())
    throw ValidationError("polarization form is degenerate");
  Index total = 0;
  for (const auto& [p, h] : lattice.hodge_numbers) {
    if (h < 0) throw ValidationError("negative hodge number");
    total += h;
    auto mirror = lattice.hodge_numbers.find(lattice.weight - p);
    Index hm = mirror == lattice.hodge_numbers.end() ? 0 : mirror->second;
    if (hm != h)
      throw ValidationError("hodge numbers are not symmetric at p=" + std::to_string(p));
  }
  if (total != lattice.rank) throw ValidationError("hodge numbers do not sum to rank");
}

void validate_cone(const NilpotentCone& cone) {
  validate_lattice(cone.lattice);
  const Index d = cone.lattice.rank;
  const RatMatrix& q = cone.lattice.form;
  for (std::size_t i = 0; i < cone.generators.size(); ++i) {
    const RatMatrix& n = cone.generators[i];
    if (n.rows() != d || n.cols() != d)
      throw ValidationError("generator " + std::to_string(i) + " has wrong shape");
    try {
      nilpotency_index<Rat>(n);
    } catch (const NotNilpotentError&) {
      throw ValidationError("generator " + std::to_string(i) + " is not nilpotent");
    }
    if (!is_zero_matrix((n.transpose() * q + q * n).eval()))
      throw ValidationError("generator " + std::to_string(i) +
                            " is not an infinitesimal isometry of the form");
    for (std::size_t j = 0; j < i; ++j) {
      const RatMatrix& m = cone.generators[j];
      if (!is_zero_matrix((n * m - m * n).eval()))
        throw ValidationError("generators " + std::to_string(j) + " and " +
                              std::to_string(i) + " do not commute");
    }
  }
}

namespace {

Filtration<Rat> weight_filtration_unchecked(const RatMatrix& n) {
  const Index d = n.rows();
  const int m = nilpotency_index<Rat>(n);
  std::vector<RatMatrix> powers(m + 1);
  powers[0] = RatMatrix::Identity(d, d);
  for (int j = 1; j <= m; ++j) powers[j] = powers[j - 1] * n;
  std::vector<Subspace<Rat>> kernels(m), images(m);
  for (int j = 0; j < m; ++j) {
    kernels[j] = Subspace<Rat>::span_of(kernel<Rat>(powers[j + 1]));
    images[j] = Subspace<Rat>::span_of(powers[j]);
  }
  std::vector<Subspace<Rat>> pieces;
  for (int k = -m; k <= m - 1; ++k) {
    Subspace<Rat> w = Subspace<Rat>::zero(d);
    for (int j = std::max(k, 0); j <= m - 1; ++j) {
      if (j - k >= m) continue;  // im N^{j-k} = 0
      w = w + intersect(kernels[j], images[j - k]);
    }
    pieces.push_back(w);
  }
  return Filtration<Rat>::increasing(d, -m, std::move(pieces));
}

void check_weight_axioms(const RatMatrix& n, const Filtration<Rat>& w) {
  const int m = nilpotency_index<Rat>(n);
  for (int k = w.lo(); k <= w.hi(); ++k) {
    if (!w.at(k - 2).contains(w.at(k).map_image(n)))
      throw ValidationError("weight filtration axiom N W_k <= W_{k-2} fails at k=" +
                            std::to_string(k));
  }
  RatMatrix power = RatMatrix::Identity(n.rows(), n.cols());
  for (int l = 1; l <= m - 1; ++l) {
    power = power * n;
    if (w.graded_dim(l) != w.graded_dim(-l))
      throw ValidationError("graded dimensions differ at level " + std::to_string(l));
    Subspace<Rat> image = w.at(l).map_image(power) + w.at(-l - 1);
    if (image != w.at(-l))
      throw ValidationError("N^l does not induce an isomorphism gr_" + std::to_string(l) +
                            " -> gr_" + std::to_string(-l));
  }
}

}  // namespace

Filtration<Rat> weight_filtration(const RatMatrix& n) {
  if (n.rows() != n.cols()) throw DimensionError("weight filtration of non-square matrix");
  Filtration<Rat> w = weight_filtration_unchecked(n);
  check_weight_axioms(n, w);
  return w;
}

std::vector<Filtration<Rat>> cone_weight_filtrations(const NilpotentCone& cone,
                                                     int samples, std::uint32_t seed) {
  validate_cone(cone);
  const Index d = cone.lattice.rank;
  Rng rng(seed);
  std::vector<Filtration<Rat>> out;
  RatMatrix partial = RatMatrix::Zero(d, d);
  for (std::size_t j = 0; j < cone.generators.size(); ++j) {
    partial += cone.generators[j];
    Filtration<Rat> w = weight_filtration(partial);
    for (int s = 0; s < samples; ++s) {
      RatMatrix combo = RatMatrix::Zero(d, d);
      for (std::size_t i = 0; i <= j; ++i)
        combo += rng.positive_rational() * cone.generators[i];
      if (weight_filtration(combo) != w)
        throw ConeError("weight filtration varies inside partial cone " +
                        std::to_string(j + 1));
    }
    out.push_back(std::move(w));
  }
  return out;
}

GradedSplitting<RatComplex> deligne_splitting(const Filtration<RatComplex>& f,
                                              const Filtration<Rat>& w, int center) {
  if (f.kind() != FiltrationKind::Decreasing || w.kind() != FiltrationKind::Increasing)
    throw DimensionError("deligne_splitting expects decreasing F and increasing W");
  if (f.ambient_dim() != w.ambient_dim())
    throw DimensionError("deligne_splitting ambient mismatch");
  const Index d = f.ambient_dim();
  const Filtration<RatComplex> wc = w.cast<RatComplex>();
  const Filtration<RatComplex> fbar = f.conjugated();

  GradedSplitting<RatComplex> out;
  out.ambient = d;
  for (int p = f.lo(); p <= f.hi(); ++p) {
    for (int wl = w.lo(); wl <= w.hi(); ++wl) {
      const int q = wl + center - p;
      Subspace<RatComplex> head = intersect(f.at(p), wc.at(wl));
      if (head.is_zero()) continue;
      Subspace<RatComplex> tail = intersect(fbar.at(q), wc.at(wl));
      for (int j = 1; wl - j - 1 >= w.lo(); ++j)
        tail = tail + intersect(fbar.at(q - j), wc.at(wl - j - 1));
      Subspace<RatComplex> piece = intersect(head, tail);
      if (!piece.is_zero()) out.pieces[{p, q}] = std::move(piece);
    }
  }

  if (!out.is_direct_sum())
    throw NotMixedHodgeError("splitting pieces do not decompose the ambient space");
  for (int s = f.lo(); s <= f.hi(); ++s) {
    Subspace<RatComplex> acc = Subspace<RatComplex>::zero(d);
    for (const auto& [deg, sub] : out.pieces)
      if (deg[0] >= s) acc = acc + sub;
    if (acc != f.at(s))
      throw NotMixedHodgeError("F^" + std::to_string(s) + " is not recovered");
  }
  for (int l = w.lo(); l <= w.hi(); ++l) {
    Subspace<RatComplex> acc = Subspace<RatComplex>::zero(d);
    for (const auto& [deg, sub] : out.pieces)
      if (deg[0] + deg[1] - center <= l) acc = acc + sub;
    if (acc != wc.at(l))
      throw NotMixedHodgeError("W_" + std::to_string(l) + " is not recovered");
  }
  return out;
}

GradedSplitting<Rat> rational_splitting(const std::vector<Filtration<Rat>>& ws) {
  if (ws.empty()) throw DimensionError("rational_splitting needs at least one filtration");
  const Index d = ws[0].ambient_dim();
  for (const auto& w : ws) {
    if (w.kind() != FiltrationKind::Increasing)
      throw DimensionError("rational_splitting expects increasing filtrations");
    if (w.ambient_dim() != d) throw DimensionError("rational_splitting ambient mismatch");
  }
  const std::size_t n = ws.size();

  GradedSplitting<Rat> out;
  out.ambient = d;
  Subspace<Rat> acc = Subspace<Rat>::zero(d);
  std::vector<int> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = ws[j].lo();
  while (true) {
    Subspace<Rat> level = Subspace<Rat>::full(d);
    for (std::size_t j = 0; j < n; ++j) level = intersect(level, ws[j].at(sigma[j]));
    Subspace<Rat> piece = complement_in(intersect(acc, level), level);
    if (!piece.is_zero()) {
      acc = acc + piece;
      out.pieces[sigma] = std::move(piece);
    }
    bool advanced = false;
    for (std::size_t j = n; j-- > 0;) {
      if (sigma[j] < ws[j].hi()) {
        ++sigma[j];
        for (std::size_t i = j + 1; i < n; ++i) sigma[i] = ws[i].lo();
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  if (!out.is_direct_sum())
    throw IncompatibleFiltrationsError("graded pieces do not span the ambient space");
  for (std::size_t j = 0; j < n; ++j) {
    for (int s = ws[j].lo(); s <= ws[j].hi(); ++s) {
      Subspace<Rat> sum = Subspace<Rat>::zero(d);
      for (const auto& [deg, sub] : out.pieces)
        if (deg[j] <= s) sum = sum + sub;
      if (sum != ws[j].at(s))
        throw IncompatibleFiltrationsError("filtration " + std::to_string(j) +
                                           " level " + std::to_string(s) +
                                           " is not recovered from the pieces");
    }
  }
  return out;
}

std::vector<int> multidegree(const std::vector<Filtration<Rat>>& ws, const RatVector& v) {
  if (is_zero_matrix(v)) throw ValidationError("multidegree of the zero vector");
  std::vector<int> out;
  out.reserve(ws.size());
  for (const auto& w : ws) {
    int s = w.lo();
    while (s <= w.hi() && !w.at(s).contains(v)) ++s;
    if (s > w.hi()) throw ValidationError("vector escapes the filtration");
    out.push_back(s);
  }
  return out;
}

}  // namespace periodgeom
