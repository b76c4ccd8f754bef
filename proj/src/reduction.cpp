#include "periodgeom/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace periodgeom {

IwasawaNAK iwasawa(const Eigen::MatrixXd& g) {
  const Index m = g.rows();
  if (g.cols() != m) throw DimensionError("iwasawa of non-square matrix");
  if (std::abs(g.determinant()) < 1e-13) throw SingularError("iwasawa of singular matrix");

  Eigen::MatrixXd flip = Eigen::MatrixXd::Zero(m, m);
  for (Index i = 0; i < m; ++i) flip(i, m - 1 - i) = 1.0;

  // g^T flip = Q R  =>  g = (flip R^T flip) (flip Q^T) = upper-triangular * orthogonal
  Eigen::HouseholderQR<Eigen::MatrixXd> qr((g.transpose() * flip).eval());
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd upper = flip * r.transpose() * flip;
  Eigen::MatrixXd k = flip * q.transpose();
  for (Index i = 0; i < m; ++i) {
    if (upper(i, i) < 0) {
      upper.col(i) = -upper.col(i);
      k.row(i) = -k.row(i);
    }
  }
  IwasawaNAK out;
  out.a = Eigen::MatrixXd::Zero(m, m);
  for (Index i = 0; i < m; ++i) out.a(i, i) = upper(i, i);
  out.n = upper * out.a.inverse();
  out.k = std::move(k);
  return out;
}

std::vector<double> corner_coords(const Eigen::MatrixXd& a) {
  const Index m = a.rows();
  std::vector<double> out;
  for (Index i = 0; i < m; ++i)
    if (!(a(i, i) > 0)) throw ValidationError("corner coordinates need positive entries");
  for (Index i = 0; i + 1 < m; ++i) out.push_back(a(i + 1, i + 1) / a(i, i));
  return out;
}

bool siegel_contains(const SiegelSetSpec& spec, const Eigen::MatrixXd& g) {
  if (g.rows() != spec.rank) throw DimensionError("group element has wrong rank");
  IwasawaNAK nak = iwasawa(g);
  const double u = spec.u.to_double(), t = spec.t.to_double();
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = i + 1; j < g.cols(); ++j)
      if (std::abs(nak.n(i, j)) > u) return false;
  for (double c : corner_coords(nak.a))
    if (!(1.0 / c > t)) return false;  // simple root a_i / a_{i+1}
  return true;
}

bool siegel_contains(const SiegelSetSpec& spec, std::complex<double> z) {
  return std::abs(z.real()) <= spec.u.to_double() && z.imag() > spec.t.to_double();
}

bool siegel_contains(const SiegelSetSpec& spec, const RatComplex& z) {
  return abs(z.real()) <= spec.u && z.imag() > spec.t;
}

RatComplex mobius(const RatMatrix& g, const RatComplex& z) {
  const RatComplex num = RatComplex(g(0, 0)) * z + RatComplex(g(0, 1));
  const RatComplex den = RatComplex(g(1, 0)) * z + RatComplex(g(1, 1));
  return num / den;
}

Sl2Reduction reduce_sl2(const RatComplex& z) {
  if (z.imag().sign() <= 0) throw ValidationError("reduce_sl2 needs Im z > 0");
  RatComplex w = z;
  RatMatrix gamma = RatMatrix::Identity(2, 2);
  while (true) {
    // translation: x into (-1/2, 1/2]
    const BigInt m = (w.real() - Rat(1, 2)).ceil_int();
    if (m != 0) {
      RatMatrix t = RatMatrix::Identity(2, 2);
      t(0, 1) = Rat(-m, BigInt(1));
      w = w - RatComplex(Rat(m, BigInt(1)));
      gamma = t * gamma;
    }
    const Rat norm = abs2(w);
    if (norm > Rat(1)) break;
    if (norm == Rat(1) && w.real().sign() >= 0) break;
    RatMatrix s(2, 2);
    s << Rat(0), Rat(-1), Rat(1), Rat(0);
    w = -(RatComplex(1) / w);
    gamma = s * gamma;
  }
  if (mobius(gamma, z) != w) throw ValidationError("reduction certificate failed");
  return Sl2Reduction{w, std::move(gamma)};
}

namespace {

struct CosetReps {
  std::vector<RatMatrix> reps;
};

long long to_ll(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<long long>::max()) ||
      v < BigInt(std::numeric_limits<long long>::min()))
    throw UnsupportedError("determinant too large for coset enumeration");
  return v.convert_to<long long>();
}

/// Scales a rational 2x2 matrix to a primitive integral one (same action on H)
/// and returns the standard upper-triangular coset representatives for its
/// determinant class: [[a, b], [0, d]], a d = n, 0 <= b < d, gcd(a, b, d) = 1.
CosetReps coset_representatives(const HeckeElement& g) {
  if (g.g.rows() != 2 || g.g.cols() != 2) throw DimensionError("Hecke element must be 2x2");
  BigInt denom_lcm(1);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      denom_lcm = boost::multiprecision::lcm(denom_lcm, g.g(i, j).denominator());
  BigInt content(0);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      BigInt e = boost::multiprecision::numerator(
          (g.g(i, j) * Rat(denom_lcm, BigInt(1))).value());
      content = boost::multiprecision::gcd(content, e);
    }
  if (content == 0) throw ValidationError("Hecke element must be nonzero");
  const Rat scale = Rat(denom_lcm, content);
  RatMatrix prim = g.g;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) prim(i, j) *= scale;
  const Rat det = det_exact<Rat>(prim);
  if (det.sign() <= 0) throw ValidationError("Hecke element needs positive determinant");
  const long long n = to_ll(det.numerator());

  CosetReps out;
  for (long long a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const long long d = n / a;
    for (long long b = 0; b < d; ++b) {
      if (std::gcd(std::gcd(a, b), d) != 1) continue;
      RatMatrix rep(2, 2);
      rep << Rat(a), Rat(b), Rat(0), Rat(d);
      out.reps.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace

Index hecke_degree(const HeckeElement& g) {
  return static_cast<Index>(coset_representatives(g).reps.size());
}

std::vector<HeckePoint> hecke_points(const RatComplex& z, const HeckeElement& g) {
  std::vector<HeckePoint> out;
  for (const RatMatrix& rep : coset_representatives(g).reps) {
    Sl2Reduction red = reduce_sl2(mobius(rep, z));
    out.push_back(HeckePoint{red.z0, rep});
  }
  return out;
}

namespace {

struct RatInterval {
  Rat lo, hi;
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval iv_scale(const Rat& c, const RatInterval& a) {
  return c.sign() >= 0 ? RatInterval{c * a.lo, c * a.hi} : RatInterval{c * a.hi, c * a.lo};
}

RatInterval iv_shift(const RatInterval& a, const Rat& c) { return {a.lo + c, a.hi + c}; }

RatInterval iv_square(const RatInterval& a) {
  const Rat l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (a.lo.sign() <= 0 && a.hi.sign() >= 0) return {Rat(0), std::max(l2, h2)};
  return {std::min(l2, h2), std::max(l2, h2)};
}

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  const Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

struct StripConditions {
  RatMatrix gamma;
  Rat t1, u1, t2, u2;

  /// Exact membership test of a rational point of the cell.
  bool point_feasible(const Rat& x, const Rat& y) const {
    if (!(y > t1) || abs(x) > u1) return false;
    const RatComplex w = mobius(gamma, RatComplex(x, y));
    return w.imag() > t2 && abs(w.real()) <= u2;
  }

  /// True when the cell certainly contains no feasible point.
  bool cell_infeasible(const RatInterval& x, const RatInterval& y) const {
    if (!(y.hi > t1)) return true;
    if (x.lo > u1 || x.hi < -u1) return true;
    const Rat a = gamma(0, 0), b = gamma(0, 1), c = gamma(1, 0), d = gamma(1, 1);
    const RatInterval den =
        iv_add(iv_square(iv_shift(iv_scale(c, x), d)), iv_square(iv_scale(c, y)));
    if (den.lo.sign() <= 0) return false;  // interval too coarse to reject
    // Im(gamma z) = y / den
    if (!(y.hi / den.lo > t2)) return true;
    // Re(gamma z) = (a c (x^2+y^2) + (a d + b c) x + b d) / den
    const RatInterval norm = iv_add(iv_square(x), iv_square(y));
    const RatInterval num = iv_add(
        iv_add(iv_scale(a * c, norm), iv_scale(a * d + b * c, x)), {b * d, b * d});
    const Rat re_lo = std::min(num.lo / den.lo, num.lo / den.hi);
    const Rat re_hi = std::max(num.hi / den.lo, num.hi / den.hi);
    return re_lo > u2 || re_hi < -u2;
  }
};

enum class Tri { No, Yes, Maybe };

Tri cell_search(const StripConditions& cond, const RatInterval& x, const RatInterval& y,
                int depth) {
  if (cond.cell_infeasible(x, y)) return Tri::No;
  const Rat xm = (x.lo + x.hi) / Rat(2), ym = (y.lo + y.hi) / Rat(2);
  if (cond.point_feasible(xm, ym)) return Tri::Yes;
  if (depth == 0) return Tri::Maybe;
  bool maybe = false;
  for (const RatInterval& xs : {RatInterval{x.lo, xm}, RatInterval{xm, x.hi}})
    for (const RatInterval& ys : {RatInterval{y.lo, ym}, RatInterval{ym, y.hi}}) {
      Tri sub = cell_search(cond, xs, ys, depth - 1);
      if (sub == Tri::Yes) return Tri::Yes;
      if (sub == Tri::Maybe) maybe = true;
    }
  return maybe ? Tri::Maybe : Tri::No;
}

/// Decides gamma S1 cap S2 != {} for strips; exact except for Maybe.
Tri strip_intersects(const RatMatrix& gamma, const SiegelSetSpec& s1,
                     const SiegelSetSpec& s2) {
  const Rat a = gamma(0, 0), b = gamma(0, 1), c = gamma(1, 0), d = gamma(1, 1);
  if (c.is_zero()) {
    // gamma z = z + b/d with a = d = +-1; shift feasible iff ranges overlap
    const Rat shift = b / d;
    return abs(shift) <= s1.u + s2.u ? Tri::Yes : Tri::No;
  }
  // Im(gamma z) = y / |c z + d|^2 <= 1 / (c^2 y) < 1 / (c^2 t1)
  const Rat ymax = Rat(1) / (c * c * s2.t);
  if (!(ymax > s1.t)) return Tri::No;
  StripConditions cond{gamma, s1.t, s1.u, s2.t, s2.u};
  return cell_search(cond, {-s1.u, s1.u}, {s1.t, ymax}, 7);
}

std::pair<std::vector<RatMatrix>, std::vector<RatMatrix>> enumerate_intersectors(
    const SiegelSetSpec& s1, const SiegelSetSpec& s2, int bound) {
  std::vector<RatMatrix> members, indeterminate;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          RatMatrix gamma(2, 2);
          gamma << Rat(a), Rat(b), Rat(c), Rat(d);
          switch (strip_intersects(gamma, s1, s2)) {
            case Tri::Yes: members.push_back(std::move(gamma)); break;
            case Tri::Maybe: indeterminate.push_back(std::move(gamma)); break;
            case Tri::No: break;
          }
        }
  return {std::move(members), std::move(indeterminate)};
}

}  // namespace

IntersectorReport siegel_intersectors(const SiegelSetSpec& s1, const SiegelSetSpec& s2,
                                      int search_bound) {
  if (s1.rank != 2 || s2.rank != 2)
    throw UnsupportedError("intersector enumeration is implemented for strips in H");
  auto [members, indeterminate] = enumerate_intersectors(s1, s2, search_bound);
  auto doubled = enumerate_intersectors(s1, s2, 2 * search_bound);
  IntersectorReport out;
  out.stable = members.size() == doubled.first.size() && indeterminate.empty() &&
               doubled.second.empty();
  out.members = std::move(members);
  out.indeterminate = std::move(indeterminate);
  return out;
}

std::complex<double> bs_to_bb(const Rat& x, const Rat& t) {
  if (t.sign() < 0) throw ValidationError("chart parameter t must be nonnegative");
  if (t.is_zero()) return {0.0, 0.0};
  const Rat xr = x - Rat(x.floor_int(), BigInt(1));  // exact reduction mod 1
  const double angle = 2.0 * std::numbers::pi * xr.to_double();
  const double radius = std::exp(-2.0 * std::numbers::pi / t.to_double());
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::complex<double> bs_to_bb(double x, double t) {
  if (t < 0) throw ValidationError("chart parameter t must be nonnegative");
  if (t == 0) return {0.0, 0.0};
  const double xr = x - std::floor(x);
  const double angle = 2.0 * std::numbers::pi * xr;
  const double radius = std::exp(-2.0 * std::numbers::pi / t);
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace periodgeom
