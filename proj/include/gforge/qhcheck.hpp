#pragma once

// Left strongly quasi-hereditary verification, standard modules, Δ-filtrations,
// the search for a right layer function, and the certificate for the
// Γ = End(M) produced by the layer filtration.

#include "gforge/gammod.hpp"
#include "gforge/layers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gforge {

/// l: simples -> {1..n}; ties allowed. Values are compacted to 1..n.
class LayerFunction {
 public:
  LayerFunction() = default;
  explicit LayerFunction(std::vector<int> values);

  int operator()(int j) const { return values_.at(static_cast<std::size_t>(j)); }
  const std::vector<int>& values() const { return values_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<int> values_;
  int n_ = 0;
};

struct StandardModule {
  FdSubmodule projective;  // P(S) = Γε_j inside Γ
  FdSubmodule r;           // R(S) inside P(S)
  FdQuotient delta;        // Δ(S) = P(S)/R(S)
};

StandardModule standard_module(const FdAlgebraPtr& alg, const LayerFunction& l, int j);
std::vector<StandardModule> standard_modules(const FdAlgebraPtr& alg, const LayerFunction& l);

struct SimpleVerdict {
  int simple = 0;
  int layer = 0;
  int dim_p = 0;
  int dim_r = 0;
  int dim_delta = 0;
  /// Tops of R(S), i.e. the summands P(S'') of R(S) when (a) holds.
  std::vector<int> r_tops;
  std::vector<int> rad_delta_composition;
  bool condition_a = false;
  bool condition_b = false;
  std::optional<int> pd_delta;
};

struct QHReport {
  LayerFunction layers;
  std::vector<SimpleVerdict> simples;
  bool lsqh = false;
  bool delta_filtered = false;
  /// Ordered Δ-factors of each P(S), top first.
  std::vector<std::vector<int>> filtrations;
  std::optional<int> gldim;  // absent when the syzygy bound was exceeded
  int bound = 0;
};

/// Conditions (a), (b) for each simple, projective dimension of each Δ,
/// global dimension (up to `bound`, default #simples + 2) and the
/// Δ-filtration of each projective.
QHReport lsqh_check(const FdAlgebraPtr& alg, const LayerFunction& l, std::optional<int> bound = {});

/// Builds the filtration of every P(S) by decreasing layer: Δ(S) on top of
/// the already filtered summands of R(S). Fills report.filtrations.
bool delta_filtration_check(const FdAlgebraPtr& alg, QHReport& report);

/// Verdict of (a) and (b) only, with per-simple results cached across calls.
class LsqhEvaluator {
 public:
  explicit LsqhEvaluator(FdAlgebraPtr alg);
  bool passes(const LayerFunction& l);
  const FdAlgebraPtr& algebra() const { return alg_; }

 private:
  bool simple_passes(int j, std::uint64_t higher, std::uint64_t lower);

  FdAlgebraPtr alg_;
  std::vector<FdSubmodule> projectives_;
  std::map<std::tuple<int, std::uint64_t, std::uint64_t>, bool> cache_;
};

inline constexpr int kDefaultMaxSimples = 6;

struct RsqhSearchResult {
  std::optional<LayerFunction> found;
  long long candidates = 0;  // s^s layer functions enumerated
  long long evaluated = 0;   // distinct compacted functions actually checked
};

/// Every function {simples} -> {1..s} on the opposite algebra; first pass
/// in lexicographic order, if any. TooManySimples beyond `max_simples`.
RsqhSearchResult rsqh_search(const FdAlgebra& alg, int max_simples = kDefaultMaxSimples);

struct SummandCheck {
  int summand = 0;
  int layer = 0;
  int dim_hom_alpha = 0;  // dim Hom(M, αN)
  int dim_delta = 0;
  int dim_hom_n = 0;      // dim Hom(M, N)
  bool sequence_exact = false;
  bool kernel_is_factoring = false;
  bool r_matches_alpha = false;
  bool alpha_layers_higher = false;
  bool approximation = false;
  std::optional<bool> embeds;  // layer >= 2 only
};

struct IyamaCertificate {
  AssembledM assembled;
  GammaAlgebra gamma;
  QHReport report;
  std::vector<SummandCheck> summands;
  int length_x = 0;
  bool d_at_most_length = false;
  bool layers_match_d = false;
  bool gldim_at_most_d = false;
  bool ok = false;

  int d() const { return assembled.d(); }
};

IyamaCertificate iyama_certificate(const Representation& x, std::uint64_t seed = 0,
                                   std::optional<int> bound = {});

struct RepDimBound {
  IyamaCertificate certificate;
  int bound = 0;   // gldim Γ
  bool ok = false; // certificate ok and gldim <= d <= 2|Λ|
};

/// Certificate for X = Λ ⊕ DΛ; the global dimension of Γ bounds the
/// representation dimension of Λ.
RepDimBound rep_dim_upper_bound(const AlgebraPtr& alg, std::uint64_t seed = 0,
                                std::optional<int> bound = {});

}  // namespace gforge
