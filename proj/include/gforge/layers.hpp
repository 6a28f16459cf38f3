#pragma once

// The filtration M_1 = X, M_{t+1} = γM_t, the layers of its indecomposable
// summands and the approximations αN -> N.

#include "gforge/repcat.hpp"

#include <cstdint>
#include <vector>

namespace gforge {

struct LayerFiltration {
  Representation x;
  /// chain[t] is M_{t+1}, with its inclusion into X.
  std::vector<Subrep> chain;

  int d() const { return static_cast<int>(chain.size()); }
  const Representation& term(int t) const { return chain.at(static_cast<std::size_t>(t - 1)).sub; }
  std::vector<int> lengths() const;
};

struct LayeredSummand {
  Representation n;
  int layer = 0;
  int lo = 0;
  int hi = 0;
  /// multiplicities[t - 1] = multiplicity of N in M_t.
  std::vector<int> multiplicities;
  Subrep alpha;
};

struct AssembledM {
  LayerFiltration filtration;
  /// One entry per isomorphism class, ordered by first occurrence.
  std::vector<LayeredSummand> basic;

  int d() const { return filtration.d(); }
  /// ⊕_{t=1}^{d} M_t.
  Representation m() const;
  /// M_{>t} = ⊕_{i>t} M_i (zero for t >= d).
  Representation greater_than(int t) const;
  /// ⊕ of one copy of each basic summand, with block injections/projections.
  DirectSum basic_sum() const;
  int num_summands() const { return static_cast<int>(basic.size()); }
};

LayerFiltration iyama_filtration(const Representation& x);

/// Decomposes every M_t, groups isomorphism classes, checks the interval
/// property (IntervalViolation otherwise), assigns layer = last occurrence
/// and computes αN.
AssembledM layered_summands(const LayerFiltration& f, std::uint64_t seed = 0);

/// αN = sum of the images of rad(M_i, N), i the layer of N.
Subrep approximation(const LayerFiltration& f, const Representation& n, int layer);

/// Hom(M_{>i}, N) == u ∘ Hom(M_{>i}, αN), with u: αN -> N the given inclusion.
bool verify_approximation(const AssembledM& a, int summand, const Subrep& alpha);

}  // namespace gforge
