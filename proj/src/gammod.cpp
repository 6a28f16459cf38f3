#include "gforge/gammod.hpp"

#include "gforge/errors.hpp"

#include <map>
#include <mutex>

namespace gforge {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Columns b of the result hold A_b g.
MatrixQ orbit_matrix(const FdModule& v, const VectorQ& g) {
  MatrixQ out(v.dim, static_cast<Index>(v.action.size()));
  for (std::size_t b = 0; b < v.action.size(); ++b) out.col(static_cast<Index>(b)) = sparse_product(v.action[b], g);
  return out;
}

}  // namespace

MatrixQ FdModule::act(const VectorQ& x) const {
  MatrixQ out = MatrixQ::Zero(dim, dim);
  for (Index b = 0; b < x.size(); ++b) {
    if (gforge::is_zero(x(b))) continue;
    const MatrixQ& m = action[static_cast<std::size_t>(b)];
    for (Index j = 0; j < dim; ++j)
      for (Index i = 0; i < dim; ++i)
        if (!gforge::is_zero(m(i, j))) out(i, j) += x(b) * m(i, j);
  }
  return out;
}

bool check_module_laws(const FdModule& v) {
  const FdAlgebra& alg = *v.algebra;
  if (static_cast<int>(v.action.size()) != alg.dim()) return false;
  for (const auto& m : v.action)
    if (m.rows() != v.dim || m.cols() != v.dim) return false;
  if (!(v.act(alg.unit()) == MatrixQ::Identity(v.dim, v.dim))) return false;
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b) {
      const VectorQ ab = alg.left(a).col(b);
      if (!(v.act(ab) == sparse_product(v.action[sz(a)], v.action[sz(b)]))) return false;
    }
  return true;
}

FdModule zero_module(const FdAlgebraPtr& alg) {
  return {alg, 0, std::vector<MatrixQ>(sz(alg->dim()), MatrixQ(0, 0))};
}

FdModule regular_module(const FdAlgebraPtr& alg) {
  return {alg, alg->dim(), alg->left_matrices()};
}

FdSubmodule submodule(const FdModule& v, const SubspaceQ& space) {
  if (space.ambient_dim() != v.dim) throw DimensionError("submodule: ambient dimension mismatch");
  FdSubmodule out;
  out.space = space;
  out.inclusion = space.basis_columns();
  const int k = static_cast<int>(space.dim());
  out.sub = {v.algebra, k, {}};
  for (const auto& a : v.action) {
    const MatrixQ img = sparse_product(a, out.inclusion);
    MatrixQ m(k, k);
    for (Index c = 0; c < k; ++c) {
      const VectorQ col = img.col(c);
      if (!space.contains(col)) throw Error("submodule: subspace is not closed under the action");
      m.col(c) = space.coordinates(col);
    }
    out.sub.action.push_back(std::move(m));
  }
  return out;
}

FdSubmodule generated_submodule(const FdModule& v, const SubspaceQ& generators) {
  const Index nb = static_cast<Index>(v.action.size());
  MatrixQ all(v.dim, nb * generators.dim());
  for (Index i = 0; i < generators.dim(); ++i)
    all.middleCols(i * nb, nb) = orbit_matrix(v, generators.basis_vector(i));
  if (all.cols() == 0) return submodule(v, SubspaceQ(v.dim));
  return submodule(v, SubspaceQ::from_columns(all));
}

FdQuotient quotient(const FdModule& v, const SubspaceQ& space) {
  const auto comp = space.complement_columns();
  const Index k = static_cast<Index>(comp.size());
  FdQuotient out;
  out.projection = MatrixQ(k, v.dim);
  for (Index j = 0; j < v.dim; ++j) {
    VectorQ e = VectorQ::Zero(v.dim);
    e(j) = 1;
    const VectorQ r = space.reduce(e);
    for (Index i = 0; i < k; ++i) out.projection(i, j) = r(comp[static_cast<std::size_t>(i)]);
  }
  MatrixQ lift = MatrixQ::Zero(v.dim, k);
  for (Index i = 0; i < k; ++i) lift(comp[static_cast<std::size_t>(i)], i) = 1;
  out.quotient = {v.algebra, static_cast<int>(k), {}};
  for (const auto& a : v.action) out.quotient.action.push_back(sparse_product(sparse_product(out.projection, a), lift));
  return out;
}

namespace {

// Γε_j is needed by every projective cover; building it costs a full pass over
// the structure constants, so it is kept per live algebra.
struct ProjectiveCache {
  std::mutex mutex;
  std::map<const FdAlgebra*, std::pair<std::weak_ptr<const FdAlgebra>, std::vector<FdSubmodule>>> entries;
};

ProjectiveCache& projective_cache() {
  static ProjectiveCache cache;
  return cache;
}

std::vector<FdSubmodule> build_projectives(const FdAlgebraPtr& alg) {
  const FdModule reg = regular_module(alg);
  std::vector<FdSubmodule> out;
  for (int j = 0; j < alg->num_simples(); ++j)
    out.push_back(submodule(reg, SubspaceQ::from_columns(orbit_matrix(reg, alg->idempotent(j)))));
  return out;
}

}  // namespace

FdSubmodule projective_submodule(const FdAlgebraPtr& alg, int j) {
  ProjectiveCache& cache = projective_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(alg.get());
    if (it != cache.entries.end() && it->second.first.lock() == alg) return it->second.second.at(static_cast<std::size_t>(j));
  }
  std::vector<FdSubmodule> built = build_projectives(alg);
  FdSubmodule out = built.at(static_cast<std::size_t>(j));
  std::lock_guard<std::mutex> lock(cache.mutex);
  for (auto it = cache.entries.begin(); it != cache.entries.end();)
    it = it->second.first.expired() ? cache.entries.erase(it) : std::next(it);
  cache.entries[alg.get()] = {alg, std::move(built)};
  return out;
}

FdModule simple_module(const FdAlgebraPtr& alg, int j) {
  const FdModule p = projective_submodule(alg, j).sub;
  return quotient(p, top_and_radical(p).radical.space).quotient;
}

FdModule direct_sum(const FdAlgebraPtr& alg, const std::vector<FdModule>& parts) {
  FdModule out{alg, 0, {}};
  for (const auto& p : parts) out.dim += p.dim;
  for (int b = 0; b < alg->dim(); ++b) {
    MatrixQ m = MatrixQ::Zero(out.dim, out.dim);
    Index off = 0;
    for (const auto& p : parts) {
      m.block(off, off, p.dim, p.dim) = p.action[sz(b)];
      off += p.dim;
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

SubspaceQ idempotent_part(const FdModule& v, int j) {
  if (v.dim == 0) return SubspaceQ(0);
  return SubspaceQ::from_columns(v.act(v.algebra->idempotent(j)));
}

std::vector<int> composition_vector(const FdModule& v) {
  std::vector<int> out;
  for (int j = 0; j < v.algebra->num_simples(); ++j)
    out.push_back(v.dim == 0 ? 0 : static_cast<int>(rank(v.act(v.algebra->idempotent(j)))));
  return out;
}

TopAndRadical top_and_radical(const FdModule& v) {
  const SubspaceQ& rad = v.algebra->radical();
  TopAndRadical out;
  if (v.dim == 0 || rad.dim() == 0) {
    out.radical = submodule(v, SubspaceQ(v.dim));
  } else {
    MatrixQ all(v.dim, v.dim * rad.dim());
    for (Index r = 0; r < rad.dim(); ++r) all.middleCols(r * v.dim, v.dim) = v.act(rad.basis_vector(r));
    out.radical = submodule(v, SubspaceQ::from_columns(all));
  }
  const auto whole = composition_vector(v);
  const auto lower = composition_vector(out.radical.sub);
  for (std::size_t j = 0; j < whole.size(); ++j) out.top.push_back(whole[j] - lower[j]);
  return out;
}

ProjectiveCover projective_cover(const FdModule& v) {
  const FdAlgebraPtr& alg = v.algebra;
  const TopAndRadical tr = top_and_radical(v);
  SubspaceQ chosen = tr.radical.space;
  ProjectiveCover out;
  std::vector<VectorQ> gens;
  for (int j = 0; j < alg->num_simples(); ++j) {
    if (tr.top[sz(j)] == 0) continue;
    const SubspaceQ part = idempotent_part(v, j);
    int found = 0;
    for (Index i = 0; i < part.dim() && found < tr.top[sz(j)]; ++i) {
      const VectorQ g = part.basis_vector(i);
      if (chosen.contains(g)) continue;
      chosen = span_sum(chosen, SubspaceQ::from_columns(MatrixQ(g)));
      gens.push_back(g);
      out.tops.push_back(j);
      ++found;
    }
    if (found != tr.top[sz(j)]) throw Error("projective cover: top generators not found");
  }
  std::vector<FdModule> parts;
  std::vector<MatrixQ> blocks;
  Index total = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const FdSubmodule p = projective_submodule(alg, out.tops[k]);
    blocks.push_back(sparse_product(orbit_matrix(v, gens[k]), p.inclusion));
    total += p.sub.dim;
    parts.push_back(p.sub);
  }
  out.cover = direct_sum(alg, parts);
  out.map = MatrixQ(v.dim, total);
  Index off = 0;
  for (const auto& b : blocks) {
    out.map.middleCols(off, b.cols()) = b;
    off += b.cols();
  }
  out.kernel = submodule(out.cover, total == 0 ? SubspaceQ(0) : nullspace(out.map));
  return out;
}

int proj_dim(const FdModule& v, int bound) {
  FdModule cur = v;
  for (int k = 0;; ++k) {
    if (cur.dim == 0) return k == 0 ? 0 : k - 1;
    if (k > bound)
      throw BoundExceeded("projective dimension exceeds the bound " + std::to_string(bound));
    cur = projective_cover(cur).kernel.sub;
  }
}

int global_dimension(const FdAlgebraPtr& alg, int bound) {
  int g = 0;
  for (int j = 0; j < alg->num_simples(); ++j) g = std::max(g, proj_dim(simple_module(alg, j), bound));
  return g;
}

GammaAlgebra gamma_algebra(const AssembledM& a) {
  if (a.basic.empty()) throw InputError("gamma algebra: no summands");
  GammaAlgebra g;
  g.basic = a.basic_sum();
  std::vector<Morphism> idem;
  for (std::size_t j = 0; j < a.basic.size(); ++j) {
    idem.push_back(compose(g.basic.projections[j], g.basic.injections[j]));
    g.layers.push_back(a.basic[j].layer);
  }
  g.algebra = std::make_shared<const FdAlgebra>(end_algebra(g.basic.sum, idem));
  g.end_space = hom_basis(g.basic.sum, g.basic.sum);
  return g;
}

HomModule hom_module(const GammaAlgebra& g, const Representation& x) {
  HomModule out;
  out.space = hom_basis(g.basic.sum, x);
  const int k = out.space.dim();
  std::vector<Morphism> fs;
  for (int i = 0; i < k; ++i) fs.push_back(out.space.basis_element(i));
  out.module = {g.algebra, k, {}};
  for (int b = 0; b < g.algebra->dim(); ++b) {
    const Morphism e = g.end_space.basis_element(b);
    MatrixQ m(k, k);
    for (int i = 0; i < k; ++i) m.col(i) = out.space.coordinates(compose(e, fs[sz(i)]));
    out.module.action.push_back(std::move(m));
  }
  return out;
}

}  // namespace gforge
