#pragma once

// Scalar-generic dense linear algebra used by both backends: echelon forms,
// kernels, exact solving, nilpotent exponentials, wedge powers and
// form-orthogonalization.  The elimination routines assume a field scalar
// with exact zero tests, so they are meant for Rat / RatComplex; the wedge
// and Gram-Schmidt routines are used on the floating backend as well.

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "periodgeom/errors.hpp"
#include "periodgeom/scalar.hpp"

namespace periodgeom {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RatMatrix = MatrixX<Rat>;
using RatVector = VectorX<Rat>;
using CRatMatrix = MatrixX<RatComplex>;
using CRatVector = VectorX<RatComplex>;

using Index = Eigen::Index;

template <class S>
MatrixX<S> conjugated(const MatrixX<S>& m) {
  return m.unaryExpr([](const S& x) { return scalar_conj(x); });
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!scalar_is_zero(m(i, j))) return false;
  return true;
}

inline CRatMatrix complexify(const RatMatrix& m) {
  return m.template cast<RatComplex>();
}

inline Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

inline Eigen::MatrixXcd to_complex(const CRatMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Echelon forms.

/// Reduced column echelon form: pivot rows strictly increasing, pivots 1,
/// pivot rows zero in every other column.  The column span is unchanged and
/// the result is the unique such basis of it, so it doubles as a normal form.
template <class S>
struct ColumnEchelon {
  MatrixX<S> columns;               // d x rank
  std::vector<Index> pivot_rows;    // one per column, increasing
};

template <class S>
ColumnEchelon<S> reduced_column_echelon(MatrixX<S> m) {
  const Index rows = m.rows();
  Index next = 0;
  std::vector<Index> pivots;
  for (Index r = 0; r < rows && next < m.cols(); ++r) {
    Index found = -1;
    for (Index c = next; c < m.cols(); ++c) {
      if (!scalar_is_zero(m(r, c))) {
        found = c;
        break;
      }
    }
    if (found < 0) continue;
    m.col(next).swap(m.col(found));
    m.col(next) /= m(r, next);
    for (Index c = 0; c < m.cols(); ++c) {
      if (c != next && !scalar_is_zero(m(r, c))) m.col(c) -= m(r, c) * m.col(next);
    }
    pivots.push_back(r);
    ++next;
  }
  ColumnEchelon<S> out;
  out.columns = m.leftCols(next);
  out.pivot_rows = std::move(pivots);
  return out;
}

/// Reduced row echelon form; returns pivot columns.
template <class S>
struct RowEchelon {
  MatrixX<S> rows;
  std::vector<Index> pivot_cols;
};

template <class S>
RowEchelon<S> reduced_row_echelon(MatrixX<S> m) {
  const Index cols = m.cols();
  Index next = 0;
  std::vector<Index> pivots;
  for (Index c = 0; c < cols && next < m.rows(); ++c) {
    Index found = -1;
    for (Index r = next; r < m.rows(); ++r) {
      if (!scalar_is_zero(m(r, c))) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    m.row(next).swap(m.row(found));
    m.row(next) /= m(next, c);
    for (Index r = 0; r < m.rows(); ++r) {
      if (r != next && !scalar_is_zero(m(r, c))) m.row(r) -= m(r, c) * m.row(next);
    }
    pivots.push_back(c);
    ++next;
  }
  RowEchelon<S> out;
  out.rows = m.topRows(next);
  out.pivot_cols = std::move(pivots);
  return out;
}

template <class S>
Index rank_of(const MatrixX<S>& m) {
  return reduced_column_echelon<S>(m).columns.cols();
}

/// Right null space, columns form a basis.
template <class S>
MatrixX<S> kernel(const MatrixX<S>& m) {
  auto rref = reduced_row_echelon<S>(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index c : rref.pivot_cols) is_pivot[c] = true;
  MatrixX<S> out = MatrixX<S>::Zero(n, n - rref.pivot_cols.size());
  Index k = 0;
  for (Index c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    out(c, k) = S(1);
    for (Index r = 0; r < static_cast<Index>(rref.pivot_cols.size()); ++r)
      out(rref.pivot_cols[r], k) = -rref.rows(r, c);
    ++k;
  }
  return out;
}

/// Solves A x = b exactly; empty when inconsistent.
template <class S>
std::optional<VectorX<S>> solve_linear(const MatrixX<S>& a, const VectorX<S>& b) {
  if (a.rows() != b.size()) throw DimensionError("solve_linear shape mismatch");
  MatrixX<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto rref = reduced_row_echelon<S>(aug);
  VectorX<S> x = VectorX<S>::Zero(a.cols());
  for (Index r = 0; r < static_cast<Index>(rref.pivot_cols.size()); ++r) {
    Index c = rref.pivot_cols[r];
    if (c == a.cols()) return std::nullopt;  // pivot in the constant column
    x(c) = rref.rows(r, a.cols());
  }
  if (!is_zero_matrix((a * x - b).eval())) return std::nullopt;
  return x;
}

template <class S>
S det_exact(MatrixX<S> m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  S det(1);
  for (Index c = 0; c < m.cols(); ++c) {
    Index found = -1;
    for (Index r = c; r < m.rows(); ++r) {
      if (!scalar_is_zero(m(r, c))) {
        found = r;
        break;
      }
    }
    if (found < 0) return S(0);
    if (found != c) {
      m.row(found).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Index r = c + 1; r < m.rows(); ++r) {
      if (scalar_is_zero(m(r, c))) continue;
      m.row(r) -= (m(r, c) / m(c, c)) * m.row(c);
    }
  }
  return det;
}

template <class S>
MatrixX<S> invert(const MatrixX<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  MatrixX<S> aug(m.rows(), 2 * m.cols());
  aug.leftCols(m.cols()) = m;
  aug.rightCols(m.cols()) = MatrixX<S>::Identity(m.rows(), m.cols());
  auto rref = reduced_row_echelon<S>(aug);
  if (static_cast<Index>(rref.pivot_cols.size()) != m.rows() ||
      rref.pivot_cols.back() >= m.cols())
    throw SingularError("matrix is singular");
  return rref.rows.rightCols(m.cols());
}

// ---------------------------------------------------------------------------
// Nilpotent exponentials.

/// Smallest m >= 1 with N^m = 0; throws if N is not nilpotent.
template <class S>
int nilpotency_index(const MatrixX<S>& n) {
  if (n.rows() != n.cols()) throw DimensionError("nilpotency of non-square matrix");
  if (n.rows() == 0) return 1;
  MatrixX<S> power = n;
  for (int m = 1; m <= n.rows(); ++m) {
    if (is_zero_matrix(power)) return m;
    power = power * n;
  }
  throw NotNilpotentError("matrix is not nilpotent");
}

/// exp(z N) for nilpotent N, as the terminating series.
template <class S>
MatrixX<S> nilpotent_exp(const MatrixX<S>& n, const S& z = S(1)) {
  int m = nilpotency_index(n);
  MatrixX<S> out = MatrixX<S>::Identity(n.rows(), n.cols());
  MatrixX<S> term = MatrixX<S>::Identity(n.rows(), n.cols());
  for (int k = 1; k < m; ++k) {
    term = term * n;
    term *= z / S(k);
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wedge powers.

/// All k-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<Index>> index_subsets(Index d, Index k);

template <class S>
S minor_det(const MatrixX<S>& m, const std::vector<Index>& rows,
            const std::vector<Index>& cols) {
  MatrixX<S> sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  return det_exact<S>(sub);
}

/// Induced map on the k-th wedge power, lexicographic subset basis.
/// Functorial: wedge_power(A*B, k) = wedge_power(A, k) * wedge_power(B, k).
template <class S>
MatrixX<S> wedge_power(const MatrixX<S>& m, Index k) {
  if (m.rows() != m.cols()) throw DimensionError("wedge power of non-square matrix");
  auto subsets = index_subsets(m.rows(), k);
  const auto n = static_cast<Index>(subsets.size());
  MatrixX<S> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = minor_det<S>(m, subsets[i], subsets[j]);
  return out;
}

/// Coordinates of u_1 ^ ... ^ u_k (the columns of u) in the subset basis.
template <class S>
VectorX<S> wedge_vector(const MatrixX<S>& u) {
  auto subsets = index_subsets(u.rows(), u.cols());
  std::vector<Index> all_cols(u.cols());
  for (Index j = 0; j < u.cols(); ++j) all_cols[j] = j;
  VectorX<S> out(static_cast<Index>(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    out(i) = minor_det<S>(u, subsets[i], all_cols);
  return out;
}

/// Matrix of the form induced on the k-th wedge power by a form with matrix q:
/// entry (I, J) is the minor det q[I, J].  For a sesquilinear form b this
/// realizes b(u_1^..^u_k, v_1^..^v_k) = det [b(u_a, v_b)].
template <class S>
MatrixX<S> wedge_form(const MatrixX<S>& q, Index k) {
  return wedge_power<S>(q, k);
}

// ---------------------------------------------------------------------------
// Sesquilinear forms and Gram-Schmidt.

/// form(u, v) = u^T q conj(v); linear in u, conjugate-linear in v.
template <class S>
S form_value(const MatrixX<S>& q, const VectorX<S>& u, const VectorX<S>& v) {
  VectorX<S> vc = v.unaryExpr([](const S& x) { return scalar_conj(x); });
  return (u.transpose() * q * vc)(0, 0);
}

template <class S>
struct GramSchmidt {
  MatrixX<S> basis;      // columns w~_i, form-orthogonal, triangular in input
  MatrixX<S> coeffs;     // upper triangular: input_j = sum_{i<=j} coeffs(i,j) w~_i
  std::vector<S> norms;  // form(w~_i, w~_i)
};

/// Orthogonalizes the columns of `basis` against the (possibly indefinite)
/// form q.  Requires every partial flag to be nondegenerate for the form;
/// the first failing column index is reported otherwise.
template <class S>
GramSchmidt<S> gram_schmidt(const MatrixX<S>& q, const MatrixX<S>& basis) {
  const Index r = basis.cols();
  GramSchmidt<S> out;
  out.basis = basis;
  out.coeffs = MatrixX<S>::Identity(r, r);
  out.norms.resize(r);
  for (Index j = 0; j < r; ++j) {
    VectorX<S> w = basis.col(j);
    for (Index i = 0; i < j; ++i) {
      S c = form_value<S>(q, w, out.basis.col(i)) / out.norms[i];
      w -= c * out.basis.col(i);
      out.coeffs(i, j) = c;
    }
    out.basis.col(j) = w;
    out.norms[j] = form_value<S>(q, w, w);
    if (scalar_is_zero(out.norms[j]))
      throw DegenerateFlagError(static_cast<std::size_t>(j),
                                "flag degenerate for the form at column " +
                                    std::to_string(j));
  }
  return out;
}

}  // namespace periodgeom
