#include "gforge/cli.hpp"

#include "gforge/errors.hpp"

namespace gforge::cli {

namespace {

std::optional<AlgebraPtr> random_algebra(Rng& rng, const std::string& name, const CorpusLimits& lim) {
  const int nv = 1 + rng.below(lim.max_vertices);
  const int na = 1 + rng.below(lim.max_arrows);
  std::vector<std::string> vertices;
  for (int v = 1; v <= nv; ++v) vertices.push_back(std::to_string(v));
  std::vector<Arrow> arrows;
  for (int a = 0; a < na; ++a)
    arrows.push_back({"a" + std::to_string(a + 1), rng.below(nv), rng.below(nv)});
  const Quiver q(vertices, arrows);

  std::vector<Relation> rels;
  std::vector<std::vector<bool>> allowed(static_cast<std::size_t>(na), std::vector<bool>(static_cast<std::size_t>(na), false));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      if (arrows[static_cast<std::size_t>(a)].target != arrows[static_cast<std::size_t>(b)].source) continue;
      if (rng.below(10) < 6)
        rels.push_back(Relation{{RelationTerm{Rational(1), {a, b}}}});
      else
        allowed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
  // Quadratic monomial relations: count surviving paths by their last arrow
  // before paying for the basis computation.
  std::vector<long long> ending(static_cast<std::size_t>(na), 1);
  long long total = nv + na;
  for (int len = 2; len <= lim.max_path_len && total <= lim.max_total_dim; ++len) {
    std::vector<long long> next(static_cast<std::size_t>(na), 0);
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b)
        if (allowed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          next[static_cast<std::size_t>(b)] += ending[static_cast<std::size_t>(a)];
    ending = std::move(next);
    for (long long c : ending) total += c;
    if (len == lim.max_path_len)
      for (long long c : ending)
        if (c > 0) return std::nullopt;
  }
  if (total > lim.max_total_dim) return std::nullopt;
  try {
    auto alg = BoundQuiverAlgebra::build(name, q, rels, lim.max_path_len);
    if (alg->total_dim() > lim.max_total_dim) return std::nullopt;
    return alg;
  } catch (const NonAdmissible&) {
    return std::nullopt;
  }
}

Representation random_piece(Rng& rng, const AlgebraPtr& alg) {
  const int v = rng.below(alg->num_vertices());
  switch (rng.below(5)) {
    case 0:
      return projective(alg, v);
    case 1:
      return injective(alg, v);
    case 2:
      return simple(alg, v);
    case 3: {
      // P(v) modulo the submodule generated by a random radical element.
      const Representation p = projective(alg, v);
      std::vector<SubspaceQ> gens;
      for (int w = 0; w < alg->num_vertices(); ++w) {
        const Index start = w == v ? 1 : 0;  // skip the top
        if (p.dim(w) - start <= 0) {
          gens.push_back(SubspaceQ(p.dim(w)));
          continue;
        }
        VectorQ x = VectorQ::Zero(p.dim(w));
        for (Index k = start; k < p.dim(w); ++k) x(k) = rng.below(3) == 0 ? rng.small_rational() : Rational(0);
        gens.push_back(SubspaceQ::from_columns(MatrixQ(x)));
      }
      return quotient(p, generated_subrep(p, gens)).rep;
    }
    default: {
      // Submodule of I(v) generated by one random vector at one vertex.
      const Representation in = injective(alg, v);
      const int w = rng.below(alg->num_vertices());
      std::vector<SubspaceQ> gens;
      for (int u = 0; u < alg->num_vertices(); ++u) gens.push_back(SubspaceQ(in.dim(u)));
      if (in.dim(w) > 0) {
        VectorQ x(in.dim(w));
        for (Index k = 0; k < in.dim(w); ++k) x(k) = rng.small_rational();
        gens[static_cast<std::size_t>(w)] = SubspaceQ::from_columns(MatrixQ(x));
      }
      return generated_subrep(in, gens).sub;
    }
  }
}

}  // namespace

Corpus random_corpus(std::uint64_t seed, int count, const CorpusLimits& limits) {
  Corpus out;
  Rng rng(seed);
  const int max_attempts = 50 * count + 50;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.fixtures.size()) < count; ++attempt) {
    const std::string name = "rand" + std::to_string(seed) + "-" + std::to_string(attempt);
    const auto alg = random_algebra(rng, name, limits);
    if (!alg) {
      ++out.rejected_algebras;
      continue;
    }
    std::vector<Representation> parts;
    int length = 0;
    const int want = 1 + rng.below(4);
    for (int k = 0; k < want; ++k) {
      Representation piece = random_piece(rng, *alg);
      if (piece.is_zero() || length + piece.length() > limits.max_module_length) continue;
      length += piece.length();
      parts.push_back(std::move(piece));
    }
    if (parts.empty()) parts.push_back(simple(*alg, 0));
    Representation x = block_sum(*alg, parts);
    try {
      (void)decompose(x, seed);
    } catch (const NonSplitIndecomposable&) {
      ++out.skipped_non_split;
      continue;
    }
    out.fixtures.push_back({name, *alg, std::move(x)});
  }
  return out;
}

}  // namespace gforge::cli
