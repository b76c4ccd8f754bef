#pragma once

// Linear subspaces of a fixed coordinate space, stored as the reduced column
// echelon basis.  That basis is a normal form, so equality of subspaces is
// equality of the stored matrices.  Operations are exact; use Rat or
// RatComplex scalars.

#include <string>

#include "periodgeom/linalg.hpp"

namespace periodgeom {

template <class S>
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(Index ambient) { return Subspace(MatrixX<S>(ambient, 0), ambient); }

  static Subspace full(Index ambient) {
    return Subspace(MatrixX<S>::Identity(ambient, ambient), ambient);
  }

  /// Span of the columns; redundant generators are fine.
  static Subspace span_of(const MatrixX<S>& generators) {
    return Subspace(reduced_column_echelon<S>(generators).columns, generators.rows());
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const MatrixX<S>& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const VectorX<S>& v) const {
    check_ambient(v.size());
    return solve_linear<S>(basis_, v).has_value();
  }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_);
    if (other.dim() > dim()) return false;
    return (*this + other).dim() == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           a.basis_.cols() == b.basis_.cols() && is_zero_matrix((a.basis_ - b.basis_).eval());
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_);
    MatrixX<S> joined(a.ambient_, a.dim() + b.dim());
    joined.leftCols(a.dim()) = a.basis_;
    joined.rightCols(b.dim()) = b.basis_;
    return span_of(joined);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_);
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    MatrixX<S> joined(a.ambient_, a.dim() + b.dim());
    joined.leftCols(a.dim()) = a.basis_;
    joined.rightCols(b.dim()) = b.basis_;
    MatrixX<S> ker = kernel<S>(joined);
    return span_of(a.basis_ * ker.topRows(a.dim()));
  }

  /// Image under a linear map (rows of `m` index the target space).
  Subspace map_image(const MatrixX<S>& m) const {
    if (m.cols() != ambient_) throw DimensionError("map domain mismatch");
    return span_of(m * basis_);
  }

  /// Preimage under a linear map from this ambient space's side: { v : m v in *this }.
  Subspace preimage(const MatrixX<S>& m) const {
    if (m.rows() != ambient_) throw DimensionError("map codomain mismatch");
    if (is_full()) return full(m.cols());
    // m v in span(basis)  <=>  [m | basis] (v, -c) = 0.
    MatrixX<S> joined(ambient_, m.cols() + dim());
    joined.leftCols(m.cols()) = m;
    joined.rightCols(dim()) = basis_;
    MatrixX<S> ker = kernel<S>(joined);
    return span_of(ker.topRows(m.cols()));
  }

  Subspace conjugated() const {
    return Subspace(periodgeom::conjugated<S>(basis_), ambient_);
  }

  template <class T>
  Subspace<T> cast() const {
    MatrixX<T> m(basis_.rows(), basis_.cols());
    for (Index i = 0; i < basis_.rows(); ++i)
      for (Index j = 0; j < basis_.cols(); ++j) m(i, j) = T(basis_(i, j));
    return Subspace<T>::span_of_echelon(m, ambient_);
  }

  /// For cast(): adopts an already-echelon basis without re-reducing.
  static Subspace span_of_echelon(const MatrixX<S>& echelon_basis, Index ambient) {
    return Subspace(echelon_basis, ambient);
  }

 private:
  Subspace(MatrixX<S> basis, Index ambient) : basis_(std::move(basis)), ambient_(ambient) {}

  void check_ambient(Index other) const {
    if (other != ambient_) throw DimensionError("subspace ambient dimension mismatch");
  }

  MatrixX<S> basis_;
  Index ambient_;
};

/// Extends a basis of `inner` to one of `outer` by greedily appending columns
/// of `outer`'s basis; returns the span of the appended columns.  Both
/// arguments must satisfy inner <= outer.
template <class S>
Subspace<S> complement_in(const Subspace<S>& inner, const Subspace<S>& outer) {
  if (!outer.contains(inner)) throw DimensionError("complement_in requires inner <= outer");
  MatrixX<S> acc(inner.ambient_dim(), outer.dim());
  Index used = inner.dim();
  acc.leftCols(used) = inner.basis();
  MatrixX<S> picked(inner.ambient_dim(), outer.dim() - inner.dim());
  Index npicked = 0;
  for (Index j = 0; j < outer.dim() && used < outer.dim(); ++j) {
    acc.col(used) = outer.basis().col(j);
    if (rank_of<S>(MatrixX<S>(acc.leftCols(used + 1))) == used + 1) {
      picked.col(npicked++) = outer.basis().col(j);
      ++used;
    }
  }
  if (used != outer.dim()) throw DimensionError("complement_in failed to complete basis");
  return Subspace<S>::span_of(picked);
}

/// conj(V) together with cast helpers for the two exact scalar types.
inline Subspace<RatComplex> complexify(const Subspace<Rat>& v) {
  return v.template cast<RatComplex>();
}

template <class S>
std::string describe(const Subspace<S>& v) {
  return "subspace dim " + std::to_string(v.dim()) + " of " +
         std::to_string(v.ambient_dim());
}

}  // namespace periodgeom
