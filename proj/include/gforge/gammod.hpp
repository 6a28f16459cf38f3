#pragma once

// Left modules over a structure-constant algebra Γ: submodules, quotients,
// radicals, projective covers, syzygies, projective and global dimension.
// Γ = End(M) for an assembled M acts on Hom(M, X) by a·f = "a, then f".

#include "gforge/fd_algebra.hpp"
#include "gforge/layers.hpp"

#include <memory>
#include <vector>

namespace gforge {

/// A left module given by the action of every basis element of Γ.
struct FdModule {
  FdAlgebraPtr algebra;
  int dim = 0;
  std::vector<MatrixQ> action;  // action[b] is dim x dim

  MatrixQ act(const VectorQ& x) const;
  bool is_zero() const { return dim == 0; }
};

/// Associativity and unit of the action against the structure constants.
bool check_module_laws(const FdModule& v);

struct FdSubmodule {
  FdModule sub;
  MatrixQ inclusion;  // ambient dim x sub dim, columns = RREF basis
  SubspaceQ space;
};

struct FdQuotient {
  FdModule quotient;
  MatrixQ projection;  // quotient dim x ambient dim
};

FdModule zero_module(const FdAlgebraPtr& alg);
FdModule regular_module(const FdAlgebraPtr& alg);
/// Γε_j as a submodule of the regular module.
FdSubmodule projective_submodule(const FdAlgebraPtr& alg, int j);
FdModule simple_module(const FdAlgebraPtr& alg, int j);
FdModule direct_sum(const FdAlgebraPtr& alg, const std::vector<FdModule>& parts);

/// The submodule with the given underlying space; throws if not closed.
FdSubmodule submodule(const FdModule& v, const SubspaceQ& space);
/// Smallest submodule containing the given vectors.
FdSubmodule generated_submodule(const FdModule& v, const SubspaceQ& generators);
FdQuotient quotient(const FdModule& v, const SubspaceQ& space);

/// ε_j V, as a subspace of V.
SubspaceQ idempotent_part(const FdModule& v, int j);
/// Multiplicity of S(j) in V = dim ε_j V.
std::vector<int> composition_vector(const FdModule& v);

struct TopAndRadical {
  std::vector<int> top;
  FdSubmodule radical;
};
/// rad V = (rad Γ)·V.
TopAndRadical top_and_radical(const FdModule& v);

struct ProjectiveCover {
  /// Simple index of each indecomposable summand of P, in order.
  std::vector<int> tops;
  FdModule cover;
  MatrixQ map;  // V dim x P dim, surjective
  FdSubmodule kernel;
};
ProjectiveCover projective_cover(const FdModule& v);

/// Number of syzygy steps until a projective appears; BoundExceeded past
/// `bound` steps.
int proj_dim(const FdModule& v, int bound);
int global_dimension(const FdAlgebraPtr& alg, int bound);
inline int default_bound(const FdAlgebra& alg) { return alg.num_simples() + 2; }

/// Γ = End(⊕ N_j) with ε_j the identity of the j-th block.
struct GammaAlgebra {
  FdAlgebraPtr algebra;
  DirectSum basic;  // ⊕ N_j with block maps
  HomSpace end_space;
  std::vector<int> layers;  // layer of N_j
};

GammaAlgebra gamma_algebra(const AssembledM& a);

/// Hom(M_basic, X) with φ·f = compose(φ, f).
struct HomModule {
  FdModule module;
  HomSpace space;
};
HomModule hom_module(const GammaAlgebra& g, const Representation& x);

}  // namespace gforge
