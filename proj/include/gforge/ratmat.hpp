#pragma once

// Exact dense linear algebra over a field.
//
// Every routine is templated on the scalar so the same kernel runs over the
// rationals (the engine's ground field) or any other exact field type that
// Eigen accepts as a scalar. Elimination is Gauss-Jordan with deterministic
// leftmost-column / topmost-row pivoting, so every basis produced downstream
// is reproducible bit for bit.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gforge {

using Index = Eigen::Index;
using Rational = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

template <typename Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

using RowMajorQ =
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using RowMajor =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// In-place Gauss-Jordan on a row-major matrix. Only the first `ncols`
// columns are eligible as pivots; the rest are carried along (augmented).
template <typename Scalar>
std::vector<Index> gauss_jordan(RowMajor<Scalar>& a, Index ncols) {
  std::vector<Index> pivots;
  const Index rows = a.rows();
  const Index cols = a.cols();
  std::vector<Index> nz;
  nz.reserve(static_cast<std::size_t>(cols));
  Index r = 0;
  for (Index c = 0; c < ncols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    if (a(r, c) != Scalar(1)) {
      const Scalar inv = Scalar(1) / a(r, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(r, j) *= inv;
    }
    nz.clear();
    for (Index j = c; j < cols; ++j)
      if (!is_zero(a(r, j))) nz.push_back(j);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index j : nz) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Reduced row-echelon form with pivot columns.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  detail::RowMajor<Scalar> work = a;
  RrefResult<Scalar> out;
  out.pivots = detail::gauss_jordan<Scalar>(work, work.cols());
  out.reduced = work;
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  detail::RowMajor<Scalar> work = a;
  return static_cast<Index>(detail::gauss_jordan<Scalar>(work, work.cols()).size());
}

/// A linear subspace of Scalar^n, stored canonically as the nonzero rows of
/// an RREF matrix. Two subspaces are equal iff their stored bases are equal.
template <typename Scalar>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `rows`.
  template <typename Derived>
  static Subspace from_rows(const Eigen::MatrixBase<Derived>& rows) {
    Subspace s(rows.cols());
    if (rows.rows() == 0) return s;
    detail::RowMajor<Scalar> work = rows;
    s.pivots_ = detail::gauss_jordan<Scalar>(work, work.cols());
    s.basis_ = work.topRows(static_cast<Index>(s.pivots_.size()));
    return s;
  }

  /// Span of the columns of `cols`.
  template <typename Derived>
  static Subspace from_columns(const Eigen::MatrixBase<Derived>& cols) {
    return from_rows(cols.transpose());
  }

  static Subspace full(Index n) {
    return from_rows(MatrixX<Scalar>::Identity(n, n));
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Basis vectors as rows, in reduced row-echelon form.
  const MatrixX<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  VectorX<Scalar> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  /// Basis vectors as columns.
  MatrixX<Scalar> basis_columns() const { return basis_.transpose(); }

  /// Normal form of `v` modulo this subspace: zero exactly when v lies in it,
  /// and zero at every pivot coordinate otherwise.
  template <typename Derived>
  VectorX<Scalar> reduce(const Eigen::MatrixBase<Derived>& v) const {
    check_ambient(v.size());
    VectorX<Scalar> w = v;
    for (Index i = 0; i < dim(); ++i) {
      const Index p = pivots_[static_cast<std::size_t>(i)];
      if (gforge::is_zero(w(p))) continue;
      const Scalar f = w(p);
      for (Index j = p; j < ambient_; ++j)
        if (!gforge::is_zero(basis_(i, j))) w(j) -= f * basis_(i, j);
    }
    return w;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return is_zero_matrix(reduce(v));
  }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_);
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i).transpose())) return false;
    return true;
  }

  /// Coordinates of `v` in the stored basis; `v` must lie in the subspace.
  template <typename Derived>
  VectorX<Scalar> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    check_ambient(v.size());
    VectorX<Scalar> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }

  /// Vector with the given coordinates.
  template <typename Derived>
  VectorX<Scalar> element(const Eigen::MatrixBase<Derived>& coords) const {
    if (coords.size() != dim()) throw DimensionError("subspace: coordinate size mismatch");
    VectorX<Scalar> v = VectorX<Scalar>::Zero(ambient_);
    for (Index i = 0; i < dim(); ++i) {
      if (gforge::is_zero(coords(i))) continue;
      v += coords(i) * basis_.row(i).transpose();
    }
    return v;
  }

  /// Columns not carrying a pivot; the corresponding unit vectors span a
  /// complement.
  std::vector<Index> complement_columns() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index j = 0; j < ambient_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_.rows() == o.basis_.rows() &&
           basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void check_ambient(Index n) const {
    if (n != ambient_)
      throw DimensionError("subspace: ambient dimension " + std::to_string(ambient_) +
                           " vs " + std::to_string(n));
  }

  Index ambient_ = 0;
  MatrixX<Scalar> basis_;
  std::vector<Index> pivots_;
};

using SubspaceQ = Subspace<Rational>;

template <typename Scalar>
Subspace<Scalar> span_sum(const Subspace<Scalar>& u, const Subspace<Scalar>& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("subspace sum: ambient dimension mismatch");
  MatrixX<Scalar> stacked(u.dim() + v.dim(), u.ambient_dim());
  stacked << u.basis(), v.basis();
  return Subspace<Scalar>::from_rows(stacked);
}

/// {x : a x = 0}.
template <typename Derived>
Subspace<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.cols();
  if (a.rows() == 0) return Subspace<Scalar>::full(n);
  detail::RowMajor<Scalar> work = a;
  const auto pivots = detail::gauss_jordan<Scalar>(work, n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  MatrixX<Scalar> rows = MatrixX<Scalar>::Zero(static_cast<Index>(free_cols.size()), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    rows(static_cast<Index>(k), f) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Scalar& e = work(static_cast<Index>(i), f);
      if (!is_zero(e)) rows(static_cast<Index>(k), pivots[i]) = -e;
    }
  }
  return Subspace<Scalar>::from_rows(rows);
}

template <typename Scalar>
Subspace<Scalar> intersection(const Subspace<Scalar>& u, const Subspace<Scalar>& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("subspace intersection: ambient dimension mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace<Scalar>(u.ambient_dim());
  // Left kernel of [U; V]: pairs (a, b) with aU + bV = 0, so aU lies in both.
  MatrixX<Scalar> stacked(u.dim() + v.dim(), u.ambient_dim());
  stacked << u.basis(), v.basis();
  const auto left = nullspace(stacked.transpose());
  if (left.is_zero()) return Subspace<Scalar>(u.ambient_dim());
  const MatrixX<Scalar> gens = left.basis().leftCols(u.dim()) * u.basis();
  return Subspace<Scalar>::from_rows(gens);
}

template <typename Scalar>
struct SolveResult {
  std::optional<VectorX<Scalar>> particular;
  Subspace<Scalar> nullspace;
};

/// Solves a x = b. The particular solution sets every free variable to zero.
template <typename DerivedA, typename DerivedB>
SolveResult<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != b.rows() || b.cols() != 1)
    throw DimensionError("solve: right-hand side shape mismatch");
  const Index n = a.cols();
  detail::RowMajor<Scalar> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = detail::gauss_jordan<Scalar>(aug, n);
  SolveResult<Scalar> out;
  out.nullspace = nullspace(a);
  for (Index i = static_cast<Index>(pivots.size()); i < aug.rows(); ++i)
    if (!is_zero(aug(i, n))) return out;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Index>(i), n);
  out.particular = std::move(x);
  return out;
}

/// Inverse of a square matrix, or nothing when singular.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  const Index n = a.rows();
  detail::RowMajor<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  const auto pivots = detail::gauss_jordan<Scalar>(aug, n);
  if (static_cast<Index>(pivots.size()) != n) return std::nullopt;
  return MatrixX<Scalar>(aug.rightCols(n));
}

/// Matrix product that skips zero entries; structure-constant and
/// intertwiner matrices are mostly zero.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> sparse_product(const Eigen::MatrixBase<DerivedA>& a,
                                                  const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw DimensionError("product: inner dimensions differ");
  std::vector<std::vector<Index>> row_nz(static_cast<std::size_t>(b.rows()));
  for (Index k = 0; k < b.rows(); ++k)
    for (Index j = 0; j < b.cols(); ++j)
      if (!is_zero(b(k, j))) row_nz[static_cast<std::size_t>(k)].push_back(j);
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    const auto& nz = row_nz[static_cast<std::size_t>(k)];
    if (nz.empty()) continue;
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar& x = a(i, k);
      if (is_zero(x)) continue;
      for (Index j : nz) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gforge
