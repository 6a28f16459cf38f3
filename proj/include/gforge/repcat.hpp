#pragma once

// The category mod Λ: homomorphism spaces, the radical rad(-,-), the
// γ-operation, factoring subspaces, direct sums and Krull-Schmidt
// decomposition.
//
// Composition follows the "apply the left argument first" convention:
// compose(f, g) is f followed by g.

#include "gforge/bqa.hpp"
#include "gforge/fd_algebra.hpp"
#include "gforge/ratmat.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace gforge {

/// A family of vertex maps; blocks[v] has shape dim(Y_v) x dim(X_v).
struct Morphism {
  std::vector<MatrixQ> blocks;

  bool operator==(const Morphism& o) const;
};

Morphism compose(const Morphism& f, const Morphism& g);
Morphism identity_morphism(const Representation& x);
Morphism zero_morphism(const Representation& x, const Representation& y);
Morphism operator+(const Morphism& f, const Morphism& g);
Morphism operator*(const Rational& c, const Morphism& f);

bool is_homomorphism(const Morphism& f, const Representation& x, const Representation& y);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_isomorphism(const Morphism& f);
bool is_zero(const Morphism& f);

/// Hom(X, Y) with a canonical basis: the RREF basis of the solution space of
/// the intertwining equations, in vectorized coordinates.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(std::vector<int> source_dims, std::vector<int> target_dims, SubspaceQ space);

  int dim() const { return static_cast<int>(space_.dim()); }
  const std::vector<int>& source_dims() const { return source_dims_; }
  const std::vector<int>& target_dims() const { return target_dims_; }
  const SubspaceQ& space() const { return space_; }
  Index vector_size() const { return space_.ambient_dim(); }

  Morphism basis_element(int i) const;
  Morphism element(const VectorQ& coords) const;
  VectorQ coordinates(const Morphism& f) const;
  bool contains(const Morphism& f) const;

  VectorQ vectorize(const Morphism& f) const;
  Morphism unvectorize(const VectorQ& v) const;

 private:
  std::vector<int> source_dims_;
  std::vector<int> target_dims_;
  std::vector<Index> offsets_;
  SubspaceQ space_;
};

/// A subspace of a Hom space, in coordinates of the ambient basis.
struct HomSubspace {
  HomSpace ambient;
  SubspaceQ coords;

  int dim() const { return static_cast<int>(coords.dim()); }
  Morphism element(int i) const { return ambient.element(coords.basis_vector(i)); }
  bool contains(const Morphism& f) const;
};

HomSpace hom_basis(const Representation& x, const Representation& y);

/// rad(X, Y) = {f : tr_X(f then g) = 0 for every g in Hom(Y, X)}, the X->Y
/// block of the trace-form radical of End(X ⊕ Y) computed on the faithful
/// module X ⊕ Y.
HomSubspace radical_hom(const Representation& x, const Representation& y);
HomSubspace radical_hom(const HomSpace& xy, const HomSpace& yx);

/// A submodule together with its inclusion. Vertex subspaces are kept in
/// RREF so the submodule basis is canonical.
struct Subrep {
  Representation sub;
  Morphism inclusion;
  std::vector<SubspaceQ> spaces;

  int length() const { return sub.length(); }
};

/// The submodule with the given vertex subspaces; throws if they are not
/// closed under the arrows.
Subrep subrepresentation(const Representation& x, std::vector<SubspaceQ> spaces);
/// Smallest submodule containing the given vertex subspaces.
Subrep generated_subrep(const Representation& x, std::vector<SubspaceQ> generators);
Subrep image(const Morphism& f, const Representation& y);
Subrep kernel(const Morphism& f, const Representation& x);
/// Span of the images of the given maps into y.
Subrep image_span(std::span<const Morphism> maps, const Representation& y);

struct QuotientRep {
  Representation rep;
  Morphism projection;
};
QuotientRep quotient(const Representation& x, const Subrep& u);

/// γX = X·rad(X, X): the sum of the images of a basis of rad(X, X).
Subrep gamma(const Representation& x);

/// Maps X -> Y that factor through add M'.
HomSubspace factoring_subspace(const Representation& mprime, const Representation& x,
                               const Representation& y);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Representation> parts);

/// One isomorphism class of indecomposable summands.
struct SummandClass {
  Representation rep;
  int multiplicity = 0;
  std::vector<Morphism> injections;   // rep -> X, one per copy
  std::vector<Morphism> projections;  // X -> rep, one per copy
  // certificate: dim End(rep) - dim rad End(rep) == 1
  int end_dim = 0;
  int rad_dim = 0;
};

struct DecompositionResult {
  std::vector<SummandClass> classes;

  int num_parts() const;
};

/// Fitting decomposition X = ker f^m ⊕ im f^m, f drawn from End(X) basis
/// elements, pairwise products and `random_budget` seeded random
/// combinations. Throws NonSplitIndecomposable when a part can be neither
/// split nor certified (dim End/rad > 1).
DecompositionResult decompose(const Representation& x, std::uint64_t seed = 0,
                              int random_budget = 64);

/// True iff some map X -> Y is invertible at every vertex; searched over the
/// Hom basis and seeded random combinations, certified by exact rank.
bool is_isomorphic(const Representation& x, const Representation& y, std::uint64_t seed = 0);
std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y,
                                         std::uint64_t seed = 0, int random_budget = 64);

/// Certified comparison of two indecomposables with split local
/// endomorphism rings: isomorphic iff rad(X, Y) != Hom(X, Y).
bool indecomposables_isomorphic(const Representation& x, const Representation& y);

/// Some injective homomorphism X -> Y, if the search finds one.
std::optional<Morphism> find_injection(const Representation& x, const Representation& y,
                                       std::uint64_t seed = 0, int random_budget = 64);

/// End(X) with product a * b = compose(a, b). The idempotent set defaults to
/// the identity alone.
FdAlgebra end_algebra(const Representation& x, std::span<const Morphism> idempotents = {});

/// Seeded source of small random rationals used by every randomized search.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rational small_rational();
  std::uint64_t next() { return engine_(); }
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gforge
