#include "periodgeom/hodge_locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace periodgeom {

namespace {

Rat binomial(int n, int k) {
  Rat b(1);
  for (int i = 0; i < k; ++i) b = b * Rat(n - i) / Rat(i + 1);
  return b;
}

std::optional<Rat> rationalize(double x, long long max_den = 1000000,
                               double tol = 1e-7) {
  if (!std::isfinite(x)) return std::nullopt;
  long long p0 = 1, q0 = 0;
  long long p1 = static_cast<long long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 48; ++it) {
    const double approx = double(p1) / double(q1);
    if (std::abs(x - approx) <= tol * std::max(1.0, std::abs(x)))
      return Rat(p1, q1);
    if (frac == 0.0) break;
    const double inv = 1.0 / frac;
    const double af = std::floor(inv);
    if (af > 9e17) break;
    const long long a = static_cast<long long>(af);
    const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    frac = inv - af;
  }
  if (std::abs(x - double(p1) / double(q1)) <= tol * std::max(1.0, std::abs(x)))
    return Rat(p1, q1);
  return std::nullopt;
}

std::optional<RatComplex> rationalize_complex(std::complex<double> z) {
  const auto re = rationalize(z.real());
  const auto im = rationalize(z.imag());
  if (!re || !im) return std::nullopt;
  return RatComplex(*re, *im);
}

}  // namespace

MultiPoly MultiPoly::constant(Index nvars, const RatComplex& c) {
  MultiPoly p;
  p.nvars = nvars;
  if (!scalar_is_zero(c)) p.terms.emplace(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Index nvars, Index j) {
  MultiPoly p;
  p.nvars = nvars;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  p.terms.emplace(std::move(e), RatComplex(1));
  return p;
}

int MultiPoly::degree_in(Index j) const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, e[static_cast<std::size_t>(j)]);
  return d;
}

MultiPoly& MultiPoly::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = scalar_is_zero(it->second) ? terms.erase(it) : std::next(it);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars != o.nvars) throw DimensionError("polynomial variable counts differ");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms) {
    auto [it, fresh] = out.terms.emplace(e, c);
    if (!fresh) it->second += c;
  }
  return out.prune();
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars != o.nvars) throw DimensionError("polynomial variable counts differ");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms) {
    auto [it, fresh] = out.terms.emplace(e, -c);
    if (!fresh) it->second -= c;
  }
  return out.prune();
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars != o.nvars) throw DimensionError("polynomial variable counts differ");
  MultiPoly out;
  out.nvars = nvars;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::vector<int> e(e1);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      const RatComplex c = c1 * c2;
      auto [it, fresh] = out.terms.emplace(std::move(e), c);
      if (!fresh) it->second += c;
    }
  return out.prune();
}

RatComplex MultiPoly::eval_exact(const std::vector<RatComplex>& z) const {
  if (static_cast<Index>(z.size()) != nvars) throw DimensionError("evaluation point size");
  RatComplex acc(0);
  for (const auto& [e, c] : terms) {
    RatComplex t = c;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (int m = 0; m < e[i]; ++m) t *= z[i];
    acc += t;
  }
  return acc;
}

std::complex<double> MultiPoly::eval(const std::vector<std::complex<double>>& z) const {
  if (static_cast<Index>(z.size()) != nvars) throw DimensionError("evaluation point size");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms) {
    std::complex<double> t = to_complex(c);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (int m = 0; m < e[i]; ++m) t *= z[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::shifted(Index j, const Rat& shift) const {
  MultiPoly out;
  out.nvars = nvars;
  const std::size_t slot = static_cast<std::size_t>(j);
  for (const auto& [e, c] : terms) {
    const int d = e[slot];
    Rat power(1);
    // (z + s)^d expanded from the top term down
    for (int m = d; m >= 0; --m) {
      std::vector<int> e2(e);
      e2[slot] = m;
      const RatComplex coeff = c * RatComplex(binomial(d, m) * power, Rat(0));
      auto [it, fresh] = out.terms.emplace(std::move(e2), coeff);
      if (!fresh) it->second += coeff;
      power *= shift;
    }
  }
  return out.prune();
}

MultiPoly MultiPoly::substituted(Index j, const RatComplex& value) const {
  MultiPoly out;
  out.nvars = nvars;
  const std::size_t slot = static_cast<std::size_t>(j);
  for (const auto& [e, c] : terms) {
    RatComplex t = c;
    for (int m = 0; m < e[slot]; ++m) t *= value;
    std::vector<int> e2(e);
    e2[slot] = 0;
    auto [it, fresh] = out.terms.emplace(std::move(e2), t);
    if (!fresh) it->second += t;
  }
  return out.prune();
}

void Poly::normalize() {
  while (!coeffs.empty() && scalar_is_zero(coeffs.back())) coeffs.pop_back();
}

RatComplex Poly::leading() const {
  if (coeffs.empty()) return RatComplex(0);
  return coeffs.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const RatComplex l = leading();
  for (auto& c : out.coeffs) c = c / l;
  return out;
}

Poly Poly::derivative() const {
  Poly out;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    out.coeffs.push_back(coeffs[i] * RatComplex(Rat(static_cast<long long>(i)), Rat(0)));
  out.normalize();
  return out;
}

RatComplex Poly::eval_exact(const RatComplex& z) const {
  RatComplex acc(0);
  for (std::size_t i = coeffs.size(); i > 0; --i) acc = acc * z + coeffs[i - 1];
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), RatComplex(0));
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
  out.normalize();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), RatComplex(0));
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
  out.normalize();
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly out;
  out.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, RatComplex(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j)
      out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  out.normalize();
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw SingularError("polynomial division by zero");
  Poly r = f, q;
  q.coeffs.assign(f.coeffs.size(), RatComplex(0));
  const RatComplex lg = g.leading();
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int shift = r.degree() - g.degree();
    const RatComplex factor = r.leading() / lg;
    q.coeffs[static_cast<std::size_t>(shift)] += factor;
    for (int i = 0; i <= g.degree(); ++i)
      r.coeffs[static_cast<std::size_t>(i + shift)] -=
          factor * g.coeffs[static_cast<std::size_t>(i)];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  Poly a = f.monic();
  Poly d = a.derivative();
  Poly g = poly_gcd(a, d);
  Poly b = poly_divmod(a, g).first;
  Poly c = poly_divmod(d, g).first;
  Poly w = c - b.derivative();
  int m = 1;
  while (b.degree() > 0) {
    Poly s = poly_gcd(b, w);
    if (s.degree() > 0) out.emplace_back(s, m);
    b = poly_divmod(b, s).first;
    w = poly_divmod(w, s).first - b.derivative();
    ++m;
  }
  return out;
}

std::vector<std::complex<double>> poly_roots(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return {};
  const Poly m = f.monic();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i)
    companion(i, d - 1) = -to_complex(m.coeffs[static_cast<std::size_t>(i)]);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw BackendError("companion eigensolver failed");
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

Poly to_univariate(const MultiPoly& p, Index j) {
  std::vector<RatComplex> coeffs(static_cast<std::size_t>(std::max(p.degree_in(j) + 1, 0)),
                                 RatComplex(0));
  for (const auto& [e, c] : p.terms) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<Index>(i) != j && e[i] != 0)
        throw DimensionError("polynomial is not univariate in the requested variable");
    coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(j)])] += c;
  }
  return Poly(std::move(coeffs));
}

namespace {

MultiPoly poly_power(const MultiPoly& p, int e) {
  MultiPoly acc = MultiPoly::constant(p.nvars, RatComplex(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Coefficients of p as a polynomial in variable j, each a polynomial in the
// remaining variables.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Index j) {
  const int d = std::max(p.degree_in(j), 0);
  std::vector<MultiPoly> out(static_cast<std::size_t>(d + 1));
  for (auto& q : out) q.nvars = p.nvars;
  for (const auto& [e, c] : p.terms) {
    std::vector<int> e2(e);
    const int k = e2[static_cast<std::size_t>(j)];
    e2[static_cast<std::size_t>(j)] = 0;
    auto [it, fresh] = out[static_cast<std::size_t>(k)].terms.emplace(std::move(e2), c);
    if (!fresh) it->second += c;
  }
  for (auto& q : out) q.prune();
  return out;
}

RatComplex sylvester_resultant(const Poly& f, const Poly& g) {
  const int df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) return RatComplex(0);
  if (df == 0 && dg == 0) return RatComplex(1);
  const Index n = df + dg;
  MatrixX<RatComplex> s(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) s(i, j) = RatComplex(0);
  for (int r = 0; r < dg; ++r)
    for (int t = 0; t <= df; ++t)
      s(r, r + t) = f.coeffs[static_cast<std::size_t>(df - t)];
  for (int r = 0; r < df; ++r)
    for (int t = 0; t <= dg; ++t)
      s(dg + r, r + t) = g.coeffs[static_cast<std::size_t>(dg - t)];
  return det_exact<RatComplex>(s);
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Index j) {
  if (f.nvars != g.nvars) throw DimensionError("polynomial variable counts differ");
  if (f.nvars != 2) throw UnsupportedError("resultant elimination needs two variables");
  const Index other = 1 - j;
  MultiPoly zero;
  zero.nvars = f.nvars;
  if (f.is_zero() || g.is_zero()) return zero;
  const int df = f.degree_in(j), dg = g.degree_in(j);
  if (df == 0) return poly_power(f, dg);
  if (dg == 0) return poly_power(g, df);

  const std::vector<MultiPoly> fc = coefficients_in(f, j);
  const std::vector<MultiPoly> gc = coefficients_in(g, j);
  const MultiPoly lead = fc.back() * gc.back();
  const int bound = f.degree_in(other) * dg + g.degree_in(other) * df;

  std::vector<RatComplex> nodes, values;
  long long t = 0;
  while (static_cast<int>(nodes.size()) <= bound) {
    const RatComplex node((Rat(t)), Rat(0));
    ++t;
    if (scalar_is_zero(lead.substituted(other, node).eval_exact({node, node}))) continue;
    const Poly fu = to_univariate(f.substituted(other, node), j);
    const Poly gu = to_univariate(g.substituted(other, node), j);
    nodes.push_back(node);
    values.push_back(sylvester_resultant(fu, gu));
  }

  // exact Lagrange interpolation in the remaining variable
  MultiPoly acc = zero;
  const MultiPoly x = MultiPoly::variable(f.nvars, other);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    MultiPoly basis = MultiPoly::constant(f.nvars, RatComplex(1));
    RatComplex denom(1);
    for (std::size_t l = 0; l < nodes.size(); ++l) {
      if (l == k) continue;
      basis = basis * (x - MultiPoly::constant(f.nvars, nodes[l]));
      denom *= nodes[k] - nodes[l];
    }
    acc = acc + basis * MultiPoly::constant(f.nvars, values[k] / denom);
  }
  return acc;
}

LocusSystem hodge_vector_condition(const NilpotentOrbitData& data, const RatVector& v) {
  if (data.cone.lattice.weight % 2 != 0)
    throw UnsupportedError("odd weight carries no Hodge classes; pass a tensor construction");
  if (data.has_psi())
    throw UnsupportedError("holomorphic corrections make the condition non-polynomial");
  if (v.size() != data.rank()) throw DimensionError("vector size does not match the lattice");
  if (is_zero_matrix(v)) throw ValidationError("the zero vector is rejected");

  const Index n = data.variables();
  const Index d = data.rank();
  const int p0 = data.cone.lattice.weight / 2;

  // w(z) = exp(-sum z_j N_j) v, expanded symbolically per generator
  std::vector<MultiPoly> w(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i)
    w[static_cast<std::size_t>(i)] = MultiPoly::constant(n, RatComplex(v(i), Rat(0)));
  for (Index j = 0; j < n; ++j) {
    const RatMatrix& nj = data.cone.generators[static_cast<std::size_t>(j)];
    std::vector<MultiPoly> acc = w, power = w;
    Rat factorial(1);
    for (Index m = 1; m <= d; ++m) {
      std::vector<MultiPoly> next(static_cast<std::size_t>(d));
      bool any = false;
      for (Index i = 0; i < d; ++i) {
        MultiPoly row;
        row.nvars = n;
        for (Index c = 0; c < d; ++c) {
          if (nj(i, c).is_zero()) continue;
          row = row + power[static_cast<std::size_t>(c)] *
                          MultiPoly::constant(n, RatComplex(nj(i, c), Rat(0)));
        }
        any = any || !row.is_zero();
        next[static_cast<std::size_t>(i)] = std::move(row);
      }
      if (!any) break;
      power = std::move(next);
      factorial *= Rat(m);
      const Rat coeff = (m % 2 == 0 ? Rat(1) : Rat(-1)) / factorial;
      const MultiPoly monomial =
          poly_power(MultiPoly::variable(n, j), static_cast<int>(m)) *
          MultiPoly::constant(n, RatComplex(coeff, Rat(0)));
      for (Index i = 0; i < d; ++i)
        acc[static_cast<std::size_t>(i)] =
            acc[static_cast<std::size_t>(i)] + power[static_cast<std::size_t>(i)] * monomial;
    }
    w = std::move(acc);
  }

  const Subspace<RatComplex>& fp = data.limit.at(p0);
  const CRatMatrix& basis = fp.basis();
  std::vector<Index> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
  for (Index c = 0; c < basis.cols(); ++c) {
    Index r = 0;
    while (r < d && scalar_is_zero(basis(r, c))) ++r;
    pivots.push_back(r);
    is_pivot[static_cast<std::size_t>(r)] = true;
  }

  LocusSystem system;
  system.n = n;
  system.v = v;
  system.p0 = p0;
  for (Index r = 0; r < d; ++r) {
    if (is_pivot[static_cast<std::size_t>(r)]) continue;
    MultiPoly eq = w[static_cast<std::size_t>(r)];
    for (Index c = 0; c < basis.cols(); ++c) {
      if (scalar_is_zero(basis(r, c))) continue;
      eq = eq - w[static_cast<std::size_t>(pivots[static_cast<std::size_t>(c)])] *
                    MultiPoly::constant(n, basis(r, c));
    }
    system.equations.push_back(eq.prune());
  }
  return system;
}

namespace {

struct StripFilter {
  Rat y0;
  double y0d;

  // returns true to keep; throws on the boundary
  bool keep_exact(const RatComplex& z) const {
    if (z.imag() == y0) throw IndeterminateError("root on the strip boundary Im z = y0");
    if (!(z.imag() > y0)) return false;
    return !(z.real() < Rat(0)) && z.real() < Rat(1);
  }

  bool keep_approx(std::complex<double> z) const {
    const double tol = 1e-9 * std::max(1.0, std::abs(z));
    if (std::abs(z.imag() - y0d) <= tol)
      throw IndeterminateError("root within tolerance of the strip boundary Im z = y0");
    if (z.imag() < y0d) return false;
    return z.real() >= -tol && z.real() < 1.0 - tol;
  }
};

std::vector<LocusRoot> solve_univariate(const std::vector<Poly>& polys,
                                        const StripFilter& strip, bool& identically_zero) {
  Poly g;
  for (const auto& p : polys) g = poly_gcd(g, p);
  identically_zero = g.is_zero();
  std::vector<LocusRoot> roots;
  if (identically_zero || g.degree() == 0) return roots;

  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    if (factor.degree() == 1) {
      const RatComplex z0 = -factor.coeffs[0] / factor.coeffs[1];
      if (!strip.keep_exact(z0)) continue;
      LocusRoot root;
      root.z = {z0};
      root.approx = {to_complex(z0)};
      root.exact = true;
      root.multiplicity = mult;
      roots.push_back(std::move(root));
      continue;
    }
    for (const auto& zf : poly_roots(factor)) {
      LocusRoot root;
      root.approx = {zf};
      root.multiplicity = mult;
      if (const auto z0 = rationalize_complex(zf);
          z0 && scalar_is_zero(factor.eval_exact(*z0))) {
        root.exact = true;
        root.z = {*z0};
        if (!strip.keep_exact(*z0)) continue;
      } else {
        if (!strip.keep_approx(zf)) continue;
      }
      roots.push_back(std::move(root));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const LocusRoot& a, const LocusRoot& b) {
    const auto za = a.approx[0], zb = b.approx[0];
    return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
  });
  return roots;
}

std::vector<RatComplex> curve_base_points(const Rat& y0) {
  std::vector<RatComplex> out;
  for (int xi = 0; xi < 4; ++xi)
    for (int yi = 2; yi <= 7; ++yi) out.emplace_back(Rat(xi, 4), y0 * Rat(yi));
  return out;
}

}  // namespace

LocusSolution locus_solve(const LocusSystem& system, const StripRegion& region) {
  if (system.n < 1 || system.n > 2)
    throw UnsupportedError("locus solving supports one or two variables");
  if (!(region.y0 > Rat(0))) throw ValidationError("strip floor must be positive");
  const StripFilter strip{region.y0, region.y0.to_double()};

  std::vector<MultiPoly> eqs;
  for (const auto& e : system.equations)
    if (!e.is_zero()) eqs.push_back(e);

  LocusSolution out;
  if (eqs.empty()) {
    out.kind = LocusKind::IdenticallyZero;
    return out;
  }

  if (system.n == 1) {
    std::vector<Poly> polys;
    for (const auto& e : eqs) polys.push_back(to_univariate(e, 0));
    bool zero = false;
    out.points = solve_univariate(polys, strip, zero);
    out.kind = zero ? LocusKind::IdenticallyZero
                    : (out.points.empty() ? LocusKind::Empty : LocusKind::Finite);
    return out;
  }

  if (eqs.size() == 1) {
    const MultiPoly& f = eqs.front();
    if (f.degree_in(0) <= 0 && f.degree_in(1) <= 0) {
      out.kind = LocusKind::Empty;  // nonzero constant
      return out;
    }
    CurveComponent curve;
    curve.defining = f;
    curve.certified = true;
    for (const RatComplex& z1 : curve_base_points(region.y0)) {
      const Poly fiber = to_univariate(f.substituted(0, z1), 1);
      if (fiber.is_zero() || fiber.degree() < 1) continue;
      if (fiber.degree() == 1) {
        const RatComplex z2 = -fiber.coeffs[0] / fiber.coeffs[1];
        if (!(z2.imag() > region.y0)) continue;
        bool ok = true;
        for (const auto& e : eqs) ok = ok && scalar_is_zero(e.eval_exact({z1, z2}));
        curve.certified = curve.certified && ok;
        curve.samples.push_back({to_complex(z1), to_complex(z2)});
      } else {
        for (const auto& z2 : poly_roots(fiber)) {
          if (!(z2.imag() > strip.y0d)) continue;
          const double residual = std::abs(f.eval({to_complex(z1), z2}));
          curve.certified = curve.certified && residual <= 1e-10 * std::max(1.0, std::abs(z2));
          curve.samples.push_back({to_complex(z1), z2});
        }
      }
    }
    if (curve.samples.empty()) {
      out.kind = LocusKind::Empty;
      return out;
    }
    out.kind = LocusKind::Curve;
    out.curves.push_back(std::move(curve));
    return out;
  }

  MultiPoly res = resultant(eqs[0], eqs[1], 1);
  std::vector<Poly> projections{to_univariate(res, 0)};
  for (std::size_t i = 2; i < eqs.size(); ++i)
    projections.push_back(to_univariate(resultant(eqs[0], eqs[i], 1), 0));
  Poly proj_gcd;
  for (const auto& p : projections) proj_gcd = poly_gcd(proj_gcd, p);
  if (proj_gcd.is_zero())
    throw UnsupportedError("equations share a curve component; cannot isolate points");

  bool zero1 = false;
  const std::vector<LocusRoot> z1_roots = solve_univariate({proj_gcd}, strip, zero1);
  for (const auto& r1 : z1_roots) {
    if (!r1.exact)
      throw UnsupportedError("isolated point with a non-rational first coordinate");
    const RatComplex z1 = r1.z[0];
    Poly fiber;
    for (const auto& e : eqs) fiber = poly_gcd(fiber, to_univariate(e.substituted(0, z1), 1));
    bool fiber_zero = false;
    for (const auto& r2 : solve_univariate({fiber}, strip, fiber_zero)) {
      LocusRoot point;
      point.exact = r2.exact;
      point.multiplicity = std::min(r1.multiplicity, r2.multiplicity);
      point.approx = {to_complex(z1), r2.approx[0]};
      if (r2.exact) {
        point.z = {z1, r2.z[0]};
        bool ok = true;
        for (const auto& e : eqs) ok = ok && scalar_is_zero(e.eval_exact(point.z));
        if (!ok) continue;
      }
      out.points.push_back(std::move(point));
    }
  }
  out.kind = out.points.empty() ? LocusKind::Empty : LocusKind::Finite;
  return out;
}

bool monodromy_shift_check(const NilpotentOrbitData& data, const RatVector& v,
                           const LocusSolution& solution) {
  const LocusSystem base = hodge_vector_condition(data, v);
  for (Index j = 0; j < data.variables(); ++j) {
    const RatMatrix t = nilpotent_exp<Rat>(data.cone.generators[static_cast<std::size_t>(j)]);
    const RatVector shifted_v = t * v;
    const LocusSystem shifted = hodge_vector_condition(data, shifted_v);
    if (shifted.equations.size() != base.equations.size()) return false;
    for (std::size_t e = 0; e < base.equations.size(); ++e) {
      if (!(shifted.equations[e].shifted(j, Rat(1)) == base.equations[e])) return false;
    }
    for (const auto& point : solution.points) {
      if (!point.exact) continue;
      std::vector<RatComplex> z = point.z;
      z[static_cast<std::size_t>(j)] += RatComplex(Rat(1), Rat(0));
      for (const auto& eq : shifted.equations)
        if (!scalar_is_zero(eq.eval_exact(z))) return false;
    }
  }
  return true;
}

AlgebraicityReport q_algebraicity_check(const LocusSolution& solution, int max_degree) {
  AlgebraicityReport report;
  const double two_pi = 2.0 * std::numbers::pi_v<double>;
  const std::complex<double> scale(0.0, two_pi);

  switch (solution.kind) {
    case LocusKind::IdenticallyZero:
      report.algebraic = true;
      report.note = "identically zero: the whole polydisk, trivially algebraic";
      return report;
    case LocusKind::Empty:
      report.algebraic = true;
      report.note = "empty locus";
      return report;
    case LocusKind::Finite: {
      report.algebraic = true;
      bool inside = true;
      for (const auto& point : solution.points)
        for (const auto& z : point.approx) {
          const std::complex<double> q = std::exp(scale * z);
          inside = inside && std::abs(q) > 0.0 && std::abs(q) < 1.0;
          report.q_points.push_back(q);
        }
      report.note = inside ? "finite set; q-coordinates inside the punctured disk"
                           : "finite set; a q-coordinate left the punctured disk";
      report.algebraic = inside;
      return report;
    }
    case LocusKind::Curve:
      break;
  }

  const auto& samples = solution.curves.front().samples;
  std::size_t full_cols = 0;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b) ++full_cols;
  if (max_degree < 1 || samples.size() < 2 * full_cols) {
    report.note = "not enough curve samples for a relation test";
    return report;
  }

  const std::size_t train = samples.size() / 2;
  std::vector<std::complex<double>> q1s(samples.size()), q2s(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) {
    q1s[s] = std::exp(scale * samples[s][0]);
    q2s[s] = std::exp(scale * samples[s][1]);
  }

  // Scan by total degree and keep the first relation that survives held-out
  // validation, so a curve with a low-degree relation reports that relation
  // rather than an arbitrary vector of the larger numerical null space.
  double best_err = std::numeric_limits<double>::infinity();
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<std::array<int, 2>> monomials;
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b) monomials.push_back({a, b});
    const std::size_t cols = monomials.size();
    Eigen::MatrixXcd m(static_cast<Index>(train), static_cast<Index>(cols));
    for (std::size_t s = 0; s < train; ++s)
      for (std::size_t c = 0; c < cols; ++c)
        m(static_cast<Index>(s), static_cast<Index>(c)) =
            std::pow(q1s[s], monomials[c][0]) * std::pow(q2s[s], monomials[c][1]);
    Eigen::VectorXd col_scale(static_cast<Index>(cols));
    for (Index c = 0; c < m.cols(); ++c) {
      col_scale(c) = std::max(m.col(c).norm(), 1e-300);
      m.col(c) /= col_scale(c);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const Eigen::VectorXcd c = svd.matrixV().col(static_cast<Index>(cols) - 1);

    std::vector<std::pair<std::array<int, 2>, std::complex<double>>> kept;
    double coeff_max = 0.0;
    for (std::size_t k = 0; k < cols; ++k)
      coeff_max = std::max(coeff_max,
                           std::abs(c(static_cast<Index>(k))) / col_scale(static_cast<Index>(k)));
    for (std::size_t k = 0; k < cols; ++k) {
      const std::complex<double> coeff =
          c(static_cast<Index>(k)) / col_scale(static_cast<Index>(k));
      if (std::abs(coeff) > 1e-10 * coeff_max) kept.emplace_back(monomials[k], coeff);
    }

    // validate against the largest kept term per row, so a candidate cannot
    // hide a non-vanishing part behind monomials of a different magnitude
    double err = 0.0;
    for (std::size_t s = train; s < samples.size(); ++s) {
      std::complex<double> acc = 0.0;
      double row_scale = 0.0;
      for (const auto& [mono, coeff] : kept) {
        const std::complex<double> term =
            coeff * std::pow(q1s[s], mono[0]) * std::pow(q2s[s], mono[1]);
        acc += term;
        row_scale = std::max(row_scale, std::abs(term));
      }
      if (row_scale > 0.0) err = std::max(err, std::abs(acc) / row_scale);
    }
    if (err < best_err) {
      best_err = err;
      report.relation = std::move(kept);
    }
    if (best_err <= 1e-8) break;
  }

  report.validation_error = best_err;
  report.algebraic = best_err <= 1e-8;
  report.note = report.algebraic ? "bounded-degree monomial relation validated on held-out samples"
                                 : "no bounded-degree monomial relation found";
  return report;
}

}  // namespace periodgeom
