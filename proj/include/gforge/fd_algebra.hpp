#pragma once

#include "gforge/bqa.hpp"
#include "gforge/ratmat.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gforge {

/// A finite-dimensional algebra given by structure constants.
///
/// `left(a)` is the matrix of left multiplication by basis element a: its
/// column b holds the coordinates of e_a * e_b. The idempotents form a
/// complete orthogonal set; the simple modules are indexed by them.
class FdAlgebra {
 public:
  FdAlgebra(std::string name, std::vector<MatrixQ> left_mult, VectorQ unit,
            std::vector<VectorQ> idempotents);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(left_.size()); }
  const MatrixQ& left(int a) const { return left_.at(static_cast<std::size_t>(a)); }
  const std::vector<MatrixQ>& left_matrices() const { return left_; }
  const VectorQ& unit() const { return unit_; }
  const std::vector<VectorQ>& idempotents() const { return idempotents_; }
  const VectorQ& idempotent(int j) const { return idempotents_.at(static_cast<std::size_t>(j)); }
  int num_simples() const { return static_cast<int>(idempotents_.size()); }

  VectorQ basis_element(int a) const;
  MatrixQ left_multiplication(const VectorQ& x) const;
  VectorQ multiply(const VectorQ& x, const VectorQ& y) const;

  /// Jacobson radical from the trace form of the regular representation:
  /// rad = {x : tr(L_{xy}) = 0 for all y}, valid in characteristic zero.
  const SubspaceQ& radical() const { return radical_; }

  bool is_associative() const;
  bool has_unit() const;
  /// Idempotent, pairwise orthogonal, summing to the unit.
  bool idempotents_complete() const;

  /// Structure constants transposed: e_a *op e_b = e_b * e_a.
  FdAlgebra opposite() const;

 private:
  std::string name_;
  std::vector<MatrixQ> left_;
  VectorQ unit_;
  std::vector<VectorQ> idempotents_;
  SubspaceQ radical_;
};

using FdAlgebraPtr = std::shared_ptr<const FdAlgebra>;

/// The bound quiver algebra as an abstract algebra whose left modules are its
/// representations: p * q means "q, then p", trivial paths are the
/// idempotents, and the projective at e_v has the shape of P(v).
FdAlgebra path_algebra(const BoundQuiverAlgebra& alg);

}  // namespace gforge
