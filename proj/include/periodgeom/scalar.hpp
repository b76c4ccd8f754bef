#pragma once

// Scalar types for the two numeric backends.
//
// Exact backend: Rat (arbitrary-precision rational) and RatComplex (Gaussian
// rational a + bi).  Both are Eigen-ready scalars; all structural
// computations (filtrations, splittings, echelon forms) run on them.
//
// Floating backend: plain double / std::complex<double>, used for sweeps,
// fits and root finding.  There are no implicit conversions between the two
// backends; crossing over goes through to_double / to_complex explicitly.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "periodgeom/errors.hpp"

namespace periodgeom {

using BigInt = boost::multiprecision::cpp_int;
using BoostRat = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational.  Thin value wrapper so that the type has a
/// closed constructor set and behaves as a well-mannered Eigen scalar.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long long n) : v_(static_cast<std::int64_t>(n)) {}
  Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}
  Rat(BigInt num, BigInt den) {
    if (den.is_zero()) throw FormatError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = BoostRat(std::move(num), std::move(den));
  }
  explicit Rat(BoostRat v) : v_(std::move(v)) {}

  const BoostRat& value() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  double to_double() const { return v_.convert_to<double>(); }

  /// Largest integer <= *this.
  BigInt floor_int() const {
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den, r = num % den;
    if (r != 0 && num < 0) --q;
    return q;
  }
  /// Smallest integer >= *this.
  BigInt ceil_int() const {
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den, r = num % den;
    if (r != 0 && num > 0) ++q;
    return q;
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw SingularError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(Rat a) { a.v_ = -a.v_; return a; }
  friend Rat operator+(Rat a) { return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.v_;
  }

private:
  BoostRat v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat pow(Rat base, int e) {
  if (e < 0) return Rat(1) / pow(std::move(base), -e);
  Rat out(1);
  while (e-- > 0) out *= base;
  return out;
}

/// Gaussian rational a + bi.  Field operations are exact.
class RatComplex {
public:
  RatComplex() = default;
  RatComplex(int n) : re_(n) {}
  RatComplex(Rat re) : re_(std::move(re)) {}
  RatComplex(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rat& real() const { return re_; }
  const Rat& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  static RatComplex i() { return RatComplex(Rat(0), Rat(1)); }

  RatComplex& operator+=(const RatComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  RatComplex& operator-=(const RatComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  RatComplex& operator*=(const RatComplex& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  RatComplex& operator/=(const RatComplex& o) {
    Rat n = o.re_ * o.re_ + o.im_ * o.im_;
    if (n.is_zero()) throw SingularError("complex rational division by zero");
    Rat r = (re_ * o.re_ + im_ * o.im_) / n;
    Rat i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend RatComplex operator+(RatComplex a, const RatComplex& b) { a += b; return a; }
  friend RatComplex operator-(RatComplex a, const RatComplex& b) { a -= b; return a; }
  friend RatComplex operator*(RatComplex a, const RatComplex& b) { a *= b; return a; }
  friend RatComplex operator/(RatComplex a, const RatComplex& b) { a /= b; return a; }
  friend RatComplex operator-(RatComplex a) { a.re_ = -a.re_; a.im_ = -a.im_; return a; }
  friend RatComplex operator+(RatComplex a) { return a; }

  friend bool operator==(const RatComplex& a, const RatComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const RatComplex& a, const RatComplex& b) { return !(a == b); }

private:
  Rat re_{0};
  Rat im_{0};
};

inline Rat real(const RatComplex& z) { return z.real(); }
inline Rat imag(const RatComplex& z) { return z.imag(); }
inline RatComplex conj(const RatComplex& z) { return {z.real(), -z.imag()}; }
inline Rat abs2(const RatComplex& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

/// i^e with e of any sign, exact.
inline RatComplex i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return RatComplex(1);
    case 1: return RatComplex(Rat(0), Rat(1));
    case 2: return RatComplex(-1);
    default: return RatComplex(Rat(0), Rat(-1));
  }
}

inline std::complex<double> to_complex(const RatComplex& z) {
  return {z.real().to_double(), z.imag().to_double()};
}

// ---------------------------------------------------------------------------
// String encodings.  Rationals print as "n" or "p/q"; Gaussian rationals as
// "a", "bi", or "a+bi" / "a-bi" with b itself rational ("3/4i" means (3/4)i).

std::string to_string(const Rat& r);
std::string to_string(const RatComplex& z);
Rat parse_rational(const std::string& text);
RatComplex parse_rational_complex(const std::string& text);

// ---------------------------------------------------------------------------
// Backend-generic helpers used by the templated linear algebra.

inline Rat scalar_conj(const Rat& x) { return x; }
inline double scalar_conj(double x) { return x; }
inline RatComplex scalar_conj(const RatComplex& x) { return conj(x); }
inline std::complex<double> scalar_conj(const std::complex<double>& x) {
  return std::conj(x);
}

inline bool scalar_is_zero(const Rat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const RatComplex& x) { return x.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const std::complex<double>& x) {
  return x == std::complex<double>(0.0, 0.0);
}

template <class S>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<Rat> : std::true_type {};
template <>
struct is_exact_scalar<RatComplex> : std::true_type {};

inline std::ostream& operator<<(std::ostream& os, const RatComplex& z) {
  return os << to_string(z);
}

}  // namespace periodgeom

namespace Eigen {

template <>
struct NumTraits<periodgeom::Rat> : GenericNumTraits<periodgeom::Rat> {
  typedef periodgeom::Rat Real;
  typedef periodgeom::Rat NonInteger;
  typedef periodgeom::Rat Nested;
  typedef periodgeom::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<periodgeom::RatComplex>
    : GenericNumTraits<periodgeom::RatComplex> {
  typedef periodgeom::Rat Real;
  typedef periodgeom::RatComplex NonInteger;
  typedef periodgeom::RatComplex Nested;
  typedef periodgeom::Rat Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 12,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
