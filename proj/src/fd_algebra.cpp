#include "gforge/fd_algebra.hpp"

#include "gforge/errors.hpp"

namespace gforge {

namespace {

SubspaceQ trace_form_radical(const std::vector<MatrixQ>& left) {
  const Index m = static_cast<Index>(left.size());
  if (m == 0) return SubspaceQ(0);
  VectorQ t(m);
  for (Index k = 0; k < m; ++k) t(k) = left[static_cast<std::size_t>(k)].trace();
  // gram(a, b) = tr(L_{e_a e_b}) = t . (column b of L_a)
  MatrixQ gram(m, m);
  for (Index a = 0; a < m; ++a) gram.row(a) = sparse_product(t.transpose(), left[static_cast<std::size_t>(a)]);
  return nullspace(gram);
}

}  // namespace

FdAlgebra::FdAlgebra(std::string name, std::vector<MatrixQ> left_mult, VectorQ unit,
                     std::vector<VectorQ> idempotents)
    : name_(std::move(name)),
      left_(std::move(left_mult)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
  const Index m = dim();
  for (const auto& l : left_)
    if (l.rows() != m || l.cols() != m) throw DimensionError("fd algebra: bad structure constants");
  if (unit_.size() != m) throw DimensionError("fd algebra: bad unit");
  for (const auto& e : idempotents_)
    if (e.size() != m) throw DimensionError("fd algebra: bad idempotent");
  radical_ = trace_form_radical(left_);
}

VectorQ FdAlgebra::basis_element(int a) const {
  VectorQ e = VectorQ::Zero(dim());
  e(a) = 1;
  return e;
}

MatrixQ FdAlgebra::left_multiplication(const VectorQ& x) const {
  MatrixQ out = MatrixQ::Zero(dim(), dim());
  for (Index a = 0; a < x.size(); ++a) {
    if (is_zero(x(a))) continue;
    const MatrixQ& m = left_[static_cast<std::size_t>(a)];
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i)
        if (!is_zero(m(i, j))) out(i, j) += x(a) * m(i, j);
  }
  return out;
}

VectorQ FdAlgebra::multiply(const VectorQ& x, const VectorQ& y) const {
  return sparse_product(left_multiplication(x), y);
}

bool FdAlgebra::is_associative() const {
  // L_{e_a e_b} = L_a L_b for all a, b.
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      const VectorQ ab = left_[static_cast<std::size_t>(a)].col(b);
      if (!(left_multiplication(ab) == sparse_product(left_[static_cast<std::size_t>(a)], left_[static_cast<std::size_t>(b)])))
        return false;
    }
  return true;
}

bool FdAlgebra::has_unit() const {
  const MatrixQ id = MatrixQ::Identity(dim(), dim());
  if (!(left_multiplication(unit_) == id)) return false;
  for (int a = 0; a < dim(); ++a)
    if (!(multiply(basis_element(a), unit_) == basis_element(a))) return false;
  return true;
}

bool FdAlgebra::idempotents_complete() const {
  VectorQ sum = VectorQ::Zero(dim());
  for (std::size_t i = 0; i < idempotents_.size(); ++i) {
    sum += idempotents_[i];
    for (std::size_t j = 0; j < idempotents_.size(); ++j) {
      const VectorQ p = multiply(idempotents_[i], idempotents_[j]);
      if (i == j ? !(p == idempotents_[i]) : !is_zero_matrix(p)) return false;
    }
  }
  return sum == unit_;
}

FdAlgebra FdAlgebra::opposite() const {
  const int m = dim();
  std::vector<MatrixQ> op(static_cast<std::size_t>(m), MatrixQ::Zero(m, m));
  // L^op_a column b = e_b * e_a = column a of L_b.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) op[static_cast<std::size_t>(a)].col(b) = left_[static_cast<std::size_t>(b)].col(a);
  return FdAlgebra(name_ + "^op", std::move(op), unit_, idempotents_);
}

FdAlgebra path_algebra(const BoundQuiverAlgebra& alg) {
  const int m = alg.total_dim();
  std::vector<MatrixQ> left(static_cast<std::size_t>(m), MatrixQ::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) left[static_cast<std::size_t>(a)].col(b) = alg.concatenate(b, a);
  VectorQ unit = VectorQ::Zero(m);
  std::vector<VectorQ> idem;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    VectorQ e = VectorQ::Zero(m);
    e(alg.trivial_path(v)) = 1;
    unit += e;
    idem.push_back(std::move(e));
  }
  return FdAlgebra(alg.name(), std::move(left), std::move(unit), std::move(idem));
}

}  // namespace gforge
