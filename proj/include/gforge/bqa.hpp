#pragma once

// Bound quiver algebras kQ/I with I generated by homogeneous relations, and
// their finite-dimensional representations.
//
// Paths are written in diagrammatic order: the first arrow applied comes
// first. A representation assigns a column-vector space to each vertex and,
// to an arrow u -> v, a matrix of shape dim(v) x dim(u).

#include "gforge/ratmat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gforge {

inline constexpr int kDefaultMaxPathLen = 30;

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<int> find_vertex(const std::string& label) const;
  std::optional<int> find_arrow(const std::string& label) const;

  /// Same vertices, every arrow reversed, labels kept.
  Quiver opposite() const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path: a start vertex followed by composable arrows (possibly none).
struct Path {
  int start = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  int end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }
  bool operator==(const Path& o) const = default;
};

std::string path_to_string(const Quiver& q, const Path& p);

struct RelationTerm {
  Rational coeff;
  std::vector<int> arrows;
};

/// A k-linear combination of parallel paths of one common length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

std::string relation_to_string(const Quiver& q, const Relation& r);

/// Throws MalformedRelation (message prefixed by `where`) unless the terms are
/// composable, parallel, of one length >= 2 and not all zero.
void check_relation(const Quiver& q, const Relation& r, const std::string& where);

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

class BoundQuiverAlgebra {
 public:
  /// Computes the path basis degree by degree. Throws MalformedRelation for
  /// non-parallel or inhomogeneous relations and NonAdmissible when degree
  /// `max_path_len` still carries basis elements.
  static AlgebraPtr build(std::string name, Quiver quiver, std::vector<Relation> relations,
                          int max_path_len = kDefaultMaxPathLen);

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int max_path_len() const { return max_path_len_; }
  int num_vertices() const { return quiver_.num_vertices(); }

  int total_dim() const { return static_cast<int>(basis_.size()); }
  /// Smallest L such that every path of length L lies in the ideal.
  int nilpotency_degree() const { return nilpotency_degree_; }

  /// Basis paths, ordered by degree, then by prefix, then by arrow.
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  int basis_source(int i) const { return basis_path(i).start; }
  int basis_target(int i) const { return basis_path(i).end(quiver_); }
  /// Global indices of the basis paths u -> v, in basis order.
  const std::vector<int>& basis_between(int u, int v) const;
  int trivial_path(int v) const { return v; }

  /// Coordinates of the residue class of `p` in the path basis.
  VectorQ normal_form(const Path& p) const;

  /// Normal form of basis path `first` followed by basis path `second`
  /// (zero if not composable).
  VectorQ concatenate(int first, int second) const;

  /// Opposite algebra: arrows and relation paths reversed.
  std::shared_ptr<const BoundQuiverAlgebra> opposite() const;

  /// Same quiver, same relations, same max_path_len.
  bool same_presentation(const BoundQuiverAlgebra& o) const;

 private:
  BoundQuiverAlgebra() = default;

  struct Degree {
    std::vector<int> basis;  // global indices
    std::map<std::pair<int, int>, Index> candidate;  // (local index one degree down, arrow)
    SubspaceQ ideal;                                 // in candidate coordinates
    std::vector<int> local_of_candidate;             // -1 on pivot candidates
  };

  VectorQ local_normal_form(const Path& p) const;
  VectorQ candidates_to_local(int degree, const VectorQ& cand) const;

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  int max_path_len_ = kDefaultMaxPathLen;
  int nilpotency_degree_ = 0;
  std::vector<Path> basis_;
  std::vector<int> local_index_;  // global -> index inside its degree
  std::vector<Degree> degrees_;
  std::vector<std::vector<std::vector<int>>> between_;
};

class Representation {
 public:
  Representation() = default;
  /// Validates matrix shapes and that every relation acts as zero.
  Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<MatrixQ> maps);

  static Representation zero(AlgebraPtr algebra);

  const BoundQuiverAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_.at(static_cast<std::size_t>(v)); }
  const MatrixQ& map(int arrow) const { return maps_.at(static_cast<std::size_t>(arrow)); }
  const std::vector<MatrixQ>& maps() const { return maps_; }
  /// Total length |X| (sum of vertex dimensions; the algebra is basic and split).
  int length() const;
  bool is_zero() const { return length() == 0; }

  /// Linear map induced by a path, dim(end) x dim(start).
  MatrixQ path_map(const std::vector<int>& arrows, int start) const;
  MatrixQ relation_map(const Relation& r) const;

  bool operator==(const Representation& o) const;

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<MatrixQ> maps_;
};

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

/// Indecomposable projective P(v): vertex w spanned by basis paths v -> w.
Representation projective(const AlgebraPtr& alg, int v);
/// Indecomposable injective I(v): dual of the opposite algebra's P(v).
Representation injective(const AlgebraPtr& alg, int v);
/// Direct sum of all P(v).
Representation regular_module(const AlgebraPtr& alg);
/// Direct sum of all I(v), i.e. the k-dual of the regular right module.
Representation dual_regular_module(const AlgebraPtr& alg);
/// Simple module S(v).
Representation simple(const AlgebraPtr& alg, int v);

/// k-dual of a representation over the opposite algebra; `target` must
/// present the opposite of y's algebra.
Representation dualize(const Representation& y, const AlgebraPtr& target);
Representation dualize(const Representation& y);

/// Block-diagonal direct sum; all parts over the same algebra.
Representation block_sum(const AlgebraPtr& alg, std::span<const Representation> parts);

}  // namespace gforge
