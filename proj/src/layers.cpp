#include "gforge/layers.hpp"

#include "gforge/errors.hpp"

namespace gforge {

std::vector<int> LayerFiltration::lengths() const {
  std::vector<int> out;
  for (const auto& s : chain) out.push_back(s.length());
  return out;
}

Representation AssembledM::m() const { return greater_than(0); }

Representation AssembledM::greater_than(int t) const {
  const auto& alg = filtration.x.algebra_ptr();
  std::vector<Representation> parts;
  for (int i = t + 1; i <= d(); ++i) parts.push_back(filtration.term(i));
  if (parts.empty()) return Representation::zero(alg);
  return block_sum(alg, parts);
}

DirectSum AssembledM::basic_sum() const {
  std::vector<Representation> parts;
  for (const auto& s : basic) parts.push_back(s.n);
  return direct_sum(filtration.x.algebra_ptr(), parts);
}

LayerFiltration iyama_filtration(const Representation& x) {
  if (x.is_zero()) throw InputError("filtration: zero module");
  LayerFiltration f;
  f.x = x;
  f.chain.push_back({x, identity_morphism(x), {}});
  for (int v = 0; v < static_cast<int>(x.dims().size()); ++v)
    f.chain.back().spaces.push_back(SubspaceQ::full(x.dim(v)));
  while (true) {
    const Subrep& last = f.chain.back();
    Subrep next = gamma(last.sub);
    if (next.sub.is_zero()) break;
    if (next.length() >= last.length()) throw Error("filtration: γ did not shrink the module");
    next.inclusion = compose(next.inclusion, last.inclusion);
    std::vector<SubspaceQ> spaces;
    for (const auto& b : next.inclusion.blocks) spaces.push_back(SubspaceQ::from_columns(b));
    next.spaces = std::move(spaces);
    f.chain.push_back(std::move(next));
  }
  return f;
}

Subrep approximation(const LayerFiltration& f, const Representation& n, int layer) {
  const HomSubspace rad = radical_hom(f.term(layer), n);
  std::vector<Morphism> maps;
  for (int i = 0; i < rad.dim(); ++i) maps.push_back(rad.element(i));
  return image_span(maps, n);
}

AssembledM layered_summands(const LayerFiltration& f, std::uint64_t seed) {
  AssembledM a;
  a.filtration = f;
  const int d = f.d();
  for (int t = 1; t <= d; ++t) {
    const DecompositionResult dec = decompose(f.term(t), seed);
    for (const auto& c : dec.classes) {
      LayeredSummand* match = nullptr;
      for (auto& s : a.basic)
        if (indecomposables_isomorphic(s.n, c.rep)) {
          match = &s;
          break;
        }
      if (!match) {
        LayeredSummand s;
        s.n = c.rep;
        s.multiplicities.assign(static_cast<std::size_t>(d), 0);
        a.basic.push_back(std::move(s));
        match = &a.basic.back();
      }
      match->multiplicities[static_cast<std::size_t>(t - 1)] += c.multiplicity;
    }
  }
  for (auto& s : a.basic) {
    s.lo = 0;
    s.hi = 0;
    for (int t = 1; t <= d; ++t) {
      if (s.multiplicities[static_cast<std::size_t>(t - 1)] == 0) continue;
      if (s.lo == 0) s.lo = t;
      if (s.hi != 0 && s.hi != t - 1)
        throw IntervalViolation("summand of length " + std::to_string(s.n.length()) +
                                " occurs in M_" + std::to_string(s.hi) + " and M_" + std::to_string(t) +
                                " but not in between");
      s.hi = t;
    }
    s.layer = s.hi;
    s.alpha = approximation(f, s.n, s.layer);
  }
  return a;
}

bool verify_approximation(const AssembledM& a, int summand, const Subrep& alpha) {
  const LayeredSummand& s = a.basic.at(static_cast<std::size_t>(summand));
  const Representation higher = a.greater_than(s.layer);
  const HomSpace target = hom_basis(higher, s.n);
  if (target.dim() == 0) return true;
  const HomSpace through = hom_basis(higher, alpha.sub);
  MatrixQ rows(through.dim(), target.dim());
  for (int k = 0; k < through.dim(); ++k)
    rows.row(k) = target.coordinates(compose(through.basis_element(k), alpha.inclusion)).transpose();
  return rank(rows) == target.dim();
}

}  // namespace gforge
