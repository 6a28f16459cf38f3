#include "gforge/qhcheck.hpp"

#include "gforge/errors.hpp"

#include <algorithm>
#include <set>

namespace gforge {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

SubspaceQ span_of_idempotent_parts(const FdModule& p, const std::vector<int>& simples) {
  SubspaceQ out(p.dim);
  for (int j : simples)
    if (p.dim > 0) out = span_sum(out, idempotent_part(p, j));
  return out;
}

bool supported_on(const std::vector<int>& vec, const std::vector<int>& allowed) {
  for (std::size_t j = 0; j < vec.size(); ++j)
    if (vec[j] != 0 && std::find(allowed.begin(), allowed.end(), static_cast<int>(j)) == allowed.end())
      return false;
  return true;
}

}  // namespace

LayerFunction::LayerFunction(std::vector<int> values) {
  for (int v : values)
    if (v < 1) throw InputError("layer function: layers must be positive");
  std::vector<int> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int& v : values)
    v = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()) + 1;
  values_ = std::move(values);
  n_ = static_cast<int>(distinct.size());
}

StandardModule standard_module(const FdAlgebraPtr& alg, const LayerFunction& l, int j) {
  StandardModule out;
  out.projective = projective_submodule(alg, j);
  std::vector<int> higher;
  for (int k = 0; k < alg->num_simples(); ++k)
    if (l(k) > l(j)) higher.push_back(k);
  out.r = generated_submodule(out.projective.sub, span_of_idempotent_parts(out.projective.sub, higher));
  out.delta = quotient(out.projective.sub, out.r.space);
  return out;
}

std::vector<StandardModule> standard_modules(const FdAlgebraPtr& alg, const LayerFunction& l) {
  std::vector<StandardModule> out;
  for (int j = 0; j < alg->num_simples(); ++j) out.push_back(standard_module(alg, l, j));
  return out;
}

QHReport lsqh_check(const FdAlgebraPtr& alg, const LayerFunction& l, std::optional<int> bound) {
  const int s = alg->num_simples();
  if (l.size() != s) throw InputError("layer function has " + std::to_string(l.size()) +
                                      " values for " + std::to_string(s) + " simples");
  QHReport report;
  report.layers = l;
  report.bound = bound.value_or(default_bound(*alg));
  report.lsqh = true;
  for (int j = 0; j < s; ++j) {
    const StandardModule sm = standard_module(alg, l, j);
    SimpleVerdict v;
    v.simple = j;
    v.layer = l(j);
    v.dim_p = sm.projective.sub.dim;
    v.dim_r = sm.r.sub.dim;
    v.dim_delta = sm.delta.quotient.dim;

    std::vector<int> higher, lower;
    for (int k = 0; k < s; ++k) {
      if (l(k) > l(j)) higher.push_back(k);
      if (l(k) < l(j)) lower.push_back(k);
    }
    const ProjectiveCover cover = projective_cover(sm.r.sub);
    v.r_tops = cover.tops;
    v.condition_a = cover.cover.dim == sm.r.sub.dim &&
                    std::all_of(cover.tops.begin(), cover.tops.end(), [&](int t) { return l(t) > l(j); });
    v.rad_delta_composition = composition_vector(top_and_radical(sm.delta.quotient).radical.sub);
    v.condition_b = supported_on(v.rad_delta_composition, lower);
    try {
      v.pd_delta = proj_dim(sm.delta.quotient, report.bound);
    } catch (const BoundExceeded&) {
    }
    report.lsqh = report.lsqh && v.condition_a && v.condition_b;
    report.simples.push_back(std::move(v));
  }
  try {
    report.gldim = global_dimension(alg, report.bound);
  } catch (const BoundExceeded&) {
  }
  report.delta_filtered = delta_filtration_check(alg, report);
  return report;
}

bool delta_filtration_check(const FdAlgebraPtr& alg, QHReport& report) {
  const int s = alg->num_simples();
  report.filtrations.assign(sz(s), {});
  if (!report.lsqh) return false;
  std::vector<int> order(sz(s));
  for (int j = 0; j < s; ++j) order[sz(j)] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return report.layers(a) > report.layers(b); });
  std::vector<bool> done(sz(s), false);
  for (int j : order) {
    const SimpleVerdict& v = report.simples[sz(j)];
    std::vector<int> factors{j};
    for (int t : v.r_tops) {
      if (!done[sz(t)]) return false;
      const auto& sub = report.filtrations[sz(t)];
      factors.insert(factors.end(), sub.begin(), sub.end());
    }
    int total = 0;
    for (int f : factors) total += report.simples[sz(f)].dim_delta;
    if (total != v.dim_p) return false;
    report.filtrations[sz(j)] = std::move(factors);
    done[sz(j)] = true;
  }
  return true;
}

LsqhEvaluator::LsqhEvaluator(FdAlgebraPtr alg) : alg_(std::move(alg)) {
  if (alg_->num_simples() > 63) throw TooManySimples("layer search: more than 63 simples");
  for (int j = 0; j < alg_->num_simples(); ++j) projectives_.push_back(projective_submodule(alg_, j));
}

bool LsqhEvaluator::simple_passes(int j, std::uint64_t higher, std::uint64_t lower) {
  const auto key = std::make_tuple(j, higher, lower);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const int s = alg_->num_simples();
  std::vector<int> hi, lo;
  for (int k = 0; k < s; ++k) {
    if (higher >> k & 1) hi.push_back(k);
    if (lower >> k & 1) lo.push_back(k);
  }
  const FdModule& p = projectives_[sz(j)].sub;
  const FdSubmodule r = generated_submodule(p, span_of_idempotent_parts(p, hi));
  const ProjectiveCover cover = projective_cover(r.sub);
  bool ok = cover.cover.dim == r.sub.dim;
  for (int t : cover.tops) ok = ok && (higher >> t & 1);
  if (ok) {
    const FdModule delta = quotient(p, r.space).quotient;
    ok = supported_on(composition_vector(top_and_radical(delta).radical.sub), lo);
  }
  cache_.emplace(key, ok);
  return ok;
}

bool LsqhEvaluator::passes(const LayerFunction& l) {
  const int s = alg_->num_simples();
  for (int j = 0; j < s; ++j) {
    std::uint64_t higher = 0, lower = 0;
    for (int k = 0; k < s; ++k) {
      if (l(k) > l(j)) higher |= std::uint64_t{1} << k;
      if (l(k) < l(j)) lower |= std::uint64_t{1} << k;
    }
    if (!simple_passes(j, higher, lower)) return false;
  }
  return true;
}

RsqhSearchResult rsqh_search(const FdAlgebra& alg, int max_simples) {
  const int s = alg.num_simples();
  if (s > max_simples)
    throw TooManySimples(std::to_string(s) + " simples exceed the search limit " + std::to_string(max_simples));
  LsqhEvaluator eval(std::make_shared<const FdAlgebra>(alg.opposite()));
  RsqhSearchResult out;
  out.candidates = 1;
  for (int i = 0; i < s; ++i) out.candidates *= s;
  std::set<std::vector<int>> seen;
  std::vector<int> values(sz(s), 1);
  for (long long c = 0; c < out.candidates; ++c) {
    const LayerFunction l(values);
    if (seen.insert(l.values()).second) {
      ++out.evaluated;
      if (eval.passes(l)) {
        out.found = l;
        return out;
      }
    }
    for (int i = s - 1; i >= 0; --i) {
      if (++values[sz(i)] <= s) break;
      values[sz(i)] = 1;
    }
  }
  return out;
}

IyamaCertificate iyama_certificate(const Representation& x, std::uint64_t seed, std::optional<int> bound) {
  IyamaCertificate cert;
  cert.assembled = layered_summands(iyama_filtration(x), seed);
  const AssembledM& a = cert.assembled;
  cert.gamma = gamma_algebra(a);
  const GammaAlgebra& g = cert.gamma;
  const LayerFunction l(g.layers);
  cert.report = lsqh_check(g.algebra, l, bound);

  cert.length_x = x.length();
  cert.d_at_most_length = a.d() <= cert.length_x;
  cert.layers_match_d = l.values() == g.layers && l.n() == a.d();
  cert.gldim_at_most_d = cert.report.gldim && *cert.report.gldim <= a.d();

  const Representation& mb = g.basic.sum;
  const DecompositionResult x_parts = decompose(x, seed);
  bool all = true;
  for (int j = 0; j < a.num_summands(); ++j) {
    const LayeredSummand& s = a.basic[sz(j)];
    SummandCheck c;
    c.summand = j;
    c.layer = s.layer;
    const HomSpace hom_alpha = hom_basis(mb, s.alpha.sub);
    const HomSpace hom_n = hom_basis(mb, s.n);
    c.dim_hom_alpha = hom_alpha.dim();
    c.dim_hom_n = hom_n.dim();
    c.dim_delta = cert.report.simples[sz(j)].dim_delta;
    c.sequence_exact = c.dim_hom_alpha + c.dim_delta == c.dim_hom_n;

    MatrixQ in_n(c.dim_hom_alpha, c.dim_hom_n);
    MatrixQ in_gamma(c.dim_hom_alpha, g.algebra->dim());
    for (int k = 0; k < c.dim_hom_alpha; ++k) {
      const Morphism f = compose(hom_alpha.basis_element(k), s.alpha.inclusion);
      in_n.row(k) = hom_n.coordinates(f).transpose();
      in_gamma.row(k) = g.end_space.coordinates(compose(f, g.basic.injections[sz(j)])).transpose();
    }
    const SubspaceQ image = in_n.rows() == 0 ? SubspaceQ(c.dim_hom_n) : SubspaceQ::from_rows(in_n);
    c.kernel_is_factoring = image == factoring_subspace(a.greater_than(s.layer), mb, s.n).coords;

    const StandardModule sm = standard_module(g.algebra, l, j);
    const MatrixQ r_cols = sparse_product(sm.projective.inclusion, sm.r.inclusion);
    const SubspaceQ r_space =
        r_cols.cols() == 0 ? SubspaceQ(g.algebra->dim()) : SubspaceQ::from_columns(r_cols);
    const SubspaceQ alpha_space =
        in_gamma.rows() == 0 ? SubspaceQ(g.algebra->dim()) : SubspaceQ::from_rows(in_gamma);
    c.r_matches_alpha = r_space == alpha_space;

    c.alpha_layers_higher = true;
    for (const auto& part : decompose(s.alpha.sub, seed).classes) {
      bool matched = false;
      for (const auto& other : a.basic)
        if (indecomposables_isomorphic(other.n, part.rep)) {
          matched = other.layer > s.layer;
          break;
        }
      c.alpha_layers_higher = c.alpha_layers_higher && matched;
    }
    c.approximation = verify_approximation(a, j, s.alpha);
    if (s.layer >= 2) {
      bool found = false;
      for (const auto& part : x_parts.classes)
        if (find_injection(s.n, part.rep, seed)) {
          found = true;
          break;
        }
      c.embeds = found;
    }
    all = all && c.sequence_exact && c.kernel_is_factoring && c.r_matches_alpha && c.alpha_layers_higher &&
          c.approximation && c.embeds.value_or(true);
    cert.summands.push_back(std::move(c));
  }
  cert.ok = all && cert.report.lsqh && cert.report.delta_filtered && cert.d_at_most_length &&
            cert.layers_match_d && cert.gldim_at_most_d;
  return cert;
}

RepDimBound rep_dim_upper_bound(const AlgebraPtr& alg, std::uint64_t seed, std::optional<int> bound) {
  const Representation parts[] = {regular_module(alg), dual_regular_module(alg)};
  RepDimBound out;
  out.certificate = iyama_certificate(block_sum(alg, parts), seed, bound);
  const auto& cert = out.certificate;
  out.bound = cert.report.gldim.value_or(-1);
  out.ok = cert.ok && cert.report.gldim && out.bound <= cert.d() && cert.d() <= 2 * alg->total_dim();
  return out;
}

}  // namespace gforge
