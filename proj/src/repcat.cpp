#include "gforge/repcat.hpp"

#include "gforge/errors.hpp"

#include <algorithm>

namespace gforge {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Rational Rng::small_rational() {
  // Nonzero integers in [-3, 3] keep entries small while avoiding the
  // degenerate all-zero combination most of the time.
  static constexpr int kValues[] = {-3, -2, -1, 1, 2, 3, 1, -1};
  return Rational(kValues[engine_() % 8]);
}

// ---------------------------------------------------------------------------

bool Morphism::operator==(const Morphism& o) const {
  if (blocks.size() != o.blocks.size()) return false;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (blocks[v].rows() != o.blocks[v].rows() || blocks[v].cols() != o.blocks[v].cols()) return false;
    if (!(blocks[v] == o.blocks[v])) return false;
  }
  return true;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.blocks.size() != g.blocks.size()) throw DimensionError("compose: vertex count mismatch");
  Morphism h;
  h.blocks.reserve(f.blocks.size());
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (g.blocks[v].cols() != f.blocks[v].rows())
      throw DimensionError("compose: target of f is not the source of g");
    h.blocks.push_back(sparse_product(g.blocks[v], f.blocks[v]));
  }
  return h;
}

Morphism identity_morphism(const Representation& x) {
  Morphism f;
  for (int d : x.dims()) f.blocks.push_back(MatrixQ::Identity(d, d));
  return f;
}

Morphism zero_morphism(const Representation& x, const Representation& y) {
  Morphism f;
  for (int v = 0; v < static_cast<int>(x.dims().size()); ++v)
    f.blocks.push_back(MatrixQ::Zero(y.dim(v), x.dim(v)));
  return f;
}

Morphism operator+(const Morphism& f, const Morphism& g) {
  Morphism h = f;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] += g.blocks[v];
  return h;
}

Morphism operator*(const Rational& c, const Morphism& f) {
  Morphism h = f;
  for (auto& b : h.blocks) b *= c;
  return h;
}

bool is_homomorphism(const Morphism& f, const Representation& x, const Representation& y) {
  const Quiver& q = x.algebra().quiver();
  if (static_cast<int>(f.blocks.size()) != q.num_vertices()) return false;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (f.blocks[sz(v)].rows() != y.dim(v) || f.blocks[sz(v)].cols() != x.dim(v)) return false;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source;
    const int t = q.arrow(a).target;
    if (!(sparse_product(f.blocks[sz(t)], x.map(a)) == sparse_product(y.map(a), f.blocks[sz(s)]))) return false;
  }
  return true;
}

bool is_injective(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.cols()) return false;
  return true;
}

bool is_surjective(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

bool is_isomorphism(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

bool is_zero(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (!is_zero_matrix(b)) return false;
  return true;
}

// ---------------------------------------------------------------------------

HomSpace::HomSpace(std::vector<int> source_dims, std::vector<int> target_dims, SubspaceQ space)
    : source_dims_(std::move(source_dims)), target_dims_(std::move(target_dims)), space_(std::move(space)) {
  Index off = 0;
  for (std::size_t v = 0; v < source_dims_.size(); ++v) {
    offsets_.push_back(off);
    off += static_cast<Index>(source_dims_[v]) * target_dims_[v];
  }
  offsets_.push_back(off);
  if (space_.ambient_dim() != off) throw DimensionError("hom space: layout mismatch");
}

VectorQ HomSpace::vectorize(const Morphism& f) const {
  if (f.blocks.size() != source_dims_.size()) throw DimensionError("hom space: vertex count mismatch");
  VectorQ out(offsets_.back());
  for (std::size_t v = 0; v < source_dims_.size(); ++v) {
    const auto& b = f.blocks[v];
    if (b.rows() != target_dims_[v] || b.cols() != source_dims_[v])
      throw DimensionError("hom space: block shape mismatch");
    Index k = offsets_[v];
    for (Index r = 0; r < b.rows(); ++r)
      for (Index c = 0; c < b.cols(); ++c) out(k++) = b(r, c);
  }
  return out;
}

Morphism HomSpace::unvectorize(const VectorQ& vec) const {
  Morphism f;
  for (std::size_t v = 0; v < source_dims_.size(); ++v) {
    MatrixQ b(target_dims_[v], source_dims_[v]);
    Index k = offsets_[v];
    for (Index r = 0; r < b.rows(); ++r)
      for (Index c = 0; c < b.cols(); ++c) b(r, c) = vec(k++);
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Morphism HomSpace::basis_element(int i) const { return unvectorize(space_.basis_vector(i)); }

Morphism HomSpace::element(const VectorQ& coords) const { return unvectorize(space_.element(coords)); }

VectorQ HomSpace::coordinates(const Morphism& f) const { return space_.coordinates(vectorize(f)); }

bool HomSpace::contains(const Morphism& f) const { return space_.contains(vectorize(f)); }

bool HomSubspace::contains(const Morphism& f) const {
  if (!ambient.contains(f)) return false;
  return coords.contains(ambient.coordinates(f));
}

HomSpace hom_basis(const Representation& x, const Representation& y) {
  if (!same_algebra(x.algebra(), y.algebra())) throw InputError("hom: modules over different algebras");
  const Quiver& q = x.algebra().quiver();
  const int nv = q.num_vertices();
  std::vector<Index> off(sz(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) off[sz(v) + 1] = off[sz(v)] + static_cast<Index>(x.dim(v)) * y.dim(v);
  const Index n = off[sz(nv)];
  auto var = [&](int v, Index r, Index c) { return off[sz(v)] + r * x.dim(v) + c; };

  Index neq = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    neq += static_cast<Index>(y.dim(q.arrow(a).target)) * x.dim(q.arrow(a).source);
  MatrixQ eqs = MatrixQ::Zero(neq, n);
  Index row = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source;
    const int t = q.arrow(a).target;
    const MatrixQ& xa = x.map(a);  // dim X_t x dim X_s
    const MatrixQ& ya = y.map(a);  // dim Y_t x dim Y_s
    // (f_t X_a - Y_a f_s)(r, c) = 0
    for (Index r = 0; r < y.dim(t); ++r)
      for (Index c = 0; c < x.dim(s); ++c, ++row) {
        for (Index k = 0; k < x.dim(t); ++k)
          if (!is_zero(xa(k, c))) eqs(row, var(t, r, k)) += xa(k, c);
        for (Index k = 0; k < y.dim(s); ++k)
          if (!is_zero(ya(r, k))) eqs(row, var(s, k, c)) -= ya(r, k);
      }
  }
  return HomSpace(x.dims(), y.dims(), nullspace(eqs));
}

HomSubspace radical_hom(const HomSpace& xy, const HomSpace& yx) {
  const int m1 = xy.dim();
  const int m2 = yx.dim();
  if (m2 == 0 || m1 == 0) return {xy, SubspaceQ::full(m1)};
  // gram(i, j) = tr_X(f_i then g_j) = sum_v tr(g_j,v f_i,v)
  MatrixQ f_rows(m1, xy.vector_size());
  for (int i = 0; i < m1; ++i) f_rows.row(i) = xy.space().basis().row(i);
  MatrixQ g_perm = MatrixQ::Zero(m2, xy.vector_size());
  const auto& xd = xy.source_dims();
  const auto& yd = xy.target_dims();
  for (int j = 0; j < m2; ++j) {
    const Morphism g = yx.basis_element(j);
    Index off = 0;
    for (std::size_t v = 0; v < xd.size(); ++v) {
      // f_v is yd x xd row-major; g_v is xd x yd. tr(g f) = sum g(r,c) f(c,r).
      for (Index r = 0; r < xd[v]; ++r)
        for (Index c = 0; c < yd[v]; ++c) g_perm(j, off + c * xd[v] + r) = g.blocks[v](r, c);
      off += static_cast<Index>(xd[v]) * yd[v];
    }
  }
  const MatrixQ gram = sparse_product(f_rows, g_perm.transpose());
  return {xy, nullspace(gram.transpose())};
}

HomSubspace radical_hom(const Representation& x, const Representation& y) {
  return radical_hom(hom_basis(x, y), hom_basis(y, x));
}

// ---------------------------------------------------------------------------

Subrep subrepresentation(const Representation& x, std::vector<SubspaceQ> spaces) {
  const Quiver& q = x.algebra().quiver();
  const int nv = q.num_vertices();
  if (static_cast<int>(spaces.size()) != nv) throw DimensionError("subrepresentation: vertex count");
  Subrep out;
  std::vector<int> dims(sz(nv));
  for (int v = 0; v < nv; ++v) {
    if (spaces[sz(v)].ambient_dim() != x.dim(v)) throw DimensionError("subrepresentation: ambient");
    dims[sz(v)] = static_cast<int>(spaces[sz(v)].dim());
    out.inclusion.blocks.push_back(spaces[sz(v)].basis_columns());
  }
  std::vector<MatrixQ> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source;
    const int t = q.arrow(a).target;
    const MatrixQ img = sparse_product(x.map(a), out.inclusion.blocks[sz(s)]);
    MatrixQ c(dims[sz(t)], dims[sz(s)]);
    for (Index j = 0; j < img.cols(); ++j) {
      const VectorQ col = img.col(j);
      if (!spaces[sz(t)].contains(col))
        throw Error("subrepresentation: vertex spaces are not closed under arrow '" +
                    q.arrow(a).label + "'");
      c.col(j) = spaces[sz(t)].coordinates(col);
    }
    maps.push_back(std::move(c));
  }
  out.sub = Representation(x.algebra_ptr(), std::move(dims), std::move(maps));
  out.spaces = std::move(spaces);
  return out;
}

Subrep generated_subrep(const Representation& x, std::vector<SubspaceQ> gens) {
  const Quiver& q = x.algebra().quiver();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const int s = q.arrow(a).source;
      const int t = q.arrow(a).target;
      if (gens[sz(s)].is_zero()) continue;
      const MatrixQ img = sparse_product(x.map(a), gens[sz(s)].basis_columns());
      SubspaceQ grown = span_sum(gens[sz(t)], SubspaceQ::from_columns(img));
      if (grown.dim() != gens[sz(t)].dim()) {
        gens[sz(t)] = std::move(grown);
        changed = true;
      }
    }
  }
  return subrepresentation(x, std::move(gens));
}

Subrep image_span(std::span<const Morphism> maps, const Representation& y) {
  const int nv = static_cast<int>(y.dims().size());
  std::vector<SubspaceQ> spaces;
  for (int v = 0; v < nv; ++v) {
    Index cols = 0;
    for (const auto& f : maps) cols += f.blocks[sz(v)].cols();
    MatrixQ all(y.dim(v), cols);
    Index c0 = 0;
    for (const auto& f : maps) {
      all.middleCols(c0, f.blocks[sz(v)].cols()) = f.blocks[sz(v)];
      c0 += f.blocks[sz(v)].cols();
    }
    spaces.push_back(cols == 0 ? SubspaceQ(y.dim(v)) : SubspaceQ::from_columns(all));
  }
  return subrepresentation(y, std::move(spaces));
}

Subrep image(const Morphism& f, const Representation& y) {
  return image_span(std::span<const Morphism>(&f, 1), y);
}

Subrep kernel(const Morphism& f, const Representation& x) {
  std::vector<SubspaceQ> spaces;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    const auto& b = f.blocks[v];
    spaces.push_back(b.rows() == 0 ? SubspaceQ::full(b.cols()) : nullspace(b));
  }
  return subrepresentation(x, std::move(spaces));
}

QuotientRep quotient(const Representation& x, const Subrep& u) {
  const Quiver& q = x.algebra().quiver();
  const int nv = q.num_vertices();
  QuotientRep out;
  std::vector<std::vector<Index>> comp(sz(nv));
  std::vector<int> dims(sz(nv));
  for (int v = 0; v < nv; ++v) {
    comp[sz(v)] = u.spaces[sz(v)].complement_columns();
    dims[sz(v)] = static_cast<int>(comp[sz(v)].size());
    MatrixQ pi(dims[sz(v)], x.dim(v));
    for (Index j = 0; j < x.dim(v); ++j) {
      VectorQ e = VectorQ::Zero(x.dim(v));
      e(j) = 1;
      const VectorQ r = u.spaces[sz(v)].reduce(e);
      for (std::size_t i = 0; i < comp[sz(v)].size(); ++i) pi(static_cast<Index>(i), j) = r(comp[sz(v)][i]);
    }
    out.projection.blocks.push_back(std::move(pi));
  }
  std::vector<MatrixQ> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source;
    const int t = q.arrow(a).target;
    MatrixQ lift = MatrixQ::Zero(x.dim(s), dims[sz(s)]);
    for (std::size_t i = 0; i < comp[sz(s)].size(); ++i) lift(comp[sz(s)][i], static_cast<Index>(i)) = 1;
    maps.push_back(sparse_product(sparse_product(out.projection.blocks[sz(t)], x.map(a)), lift));
  }
  out.rep = Representation(x.algebra_ptr(), std::move(dims), std::move(maps));
  return out;
}

Subrep gamma(const Representation& x) {
  const HomSubspace rad = radical_hom(x, x);
  std::vector<Morphism> maps;
  for (int i = 0; i < rad.dim(); ++i) maps.push_back(rad.element(i));
  return image_span(maps, x);
}

HomSubspace factoring_subspace(const Representation& mprime, const Representation& x,
                               const Representation& y) {
  const HomSpace target = hom_basis(x, y);
  const HomSpace first = hom_basis(x, mprime);
  const HomSpace second = hom_basis(mprime, y);
  std::vector<Morphism> hs;
  for (int j = 0; j < second.dim(); ++j) hs.push_back(second.basis_element(j));
  MatrixQ gens(static_cast<Index>(first.dim()) * second.dim(), target.dim());
  Index row = 0;
  for (int i = 0; i < first.dim(); ++i) {
    const Morphism g = first.basis_element(i);
    for (const auto& h : hs) gens.row(row++) = target.coordinates(compose(g, h)).transpose();
  }
  return {target, gens.rows() == 0 ? SubspaceQ(target.dim()) : SubspaceQ::from_rows(gens)};
}

DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Representation> parts) {
  DirectSum out;
  out.sum = block_sum(alg, parts);
  const int nv = alg->num_vertices();
  std::vector<Index> off(sz(nv), 0);
  for (const auto& p : parts) {
    Morphism inj, proj;
    for (int v = 0; v < nv; ++v) {
      MatrixQ i = MatrixQ::Zero(out.sum.dim(v), p.dim(v));
      i.middleRows(off[sz(v)], p.dim(v)) = MatrixQ::Identity(p.dim(v), p.dim(v));
      proj.blocks.push_back(i.transpose());
      inj.blocks.push_back(std::move(i));
      off[sz(v)] += p.dim(v);
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

// ---------------------------------------------------------------------------

int DecompositionResult::num_parts() const {
  int n = 0;
  for (const auto& c : classes) n += c.multiplicity;
  return n;
}

namespace {

struct Part {
  Representation rep;
  Morphism inclusion;  // into the module being decomposed
  int end_dim = 0;
  int rad_dim = 0;
};

MatrixQ matrix_power(MatrixQ m, int exponent) {
  MatrixQ result = MatrixQ::Identity(m.rows(), m.cols());
  while (exponent > 0) {
    if (exponent & 1) result = sparse_product(result, m);
    exponent >>= 1;
    if (exponent) m = sparse_product(m, m);
  }
  return result;
}

// Returns the Fitting pieces (kernel, image) of g^m when both are nonzero.
std::optional<std::pair<Subrep, Subrep>> fitting_split(const Representation& x, const Morphism& g) {
  const int m = x.length();
  Morphism power;
  int r = 0;
  for (const auto& b : g.blocks) {
    power.blocks.push_back(matrix_power(b, m));
    r += static_cast<int>(rank(power.blocks.back()));
  }
  if (r == 0 || r == m) return std::nullopt;
  return std::make_pair(kernel(power, x), image(power, x));
}

void split_recursive(const Representation& x, const Morphism& inclusion, Rng& rng, int budget,
                     std::vector<Part>& out) {
  if (x.is_zero()) return;
  const HomSpace end = hom_basis(x, x);
  const HomSubspace rad = radical_hom(end, end);
  if (end.dim() - rad.dim() == 1) {
    out.push_back({x, inclusion, end.dim(), rad.dim()});
    return;
  }
  const Morphism id = identity_morphism(x);
  auto attempt = [&](const Morphism& f) -> bool {
    for (int shift : {0, 1, -1}) {
      const Morphism g = shift == 0 ? f : f + Rational(-shift) * id;
      auto pieces = fitting_split(x, g);
      if (!pieces) continue;
      auto& [k, i] = *pieces;
      split_recursive(k.sub, compose(k.inclusion, inclusion), rng, budget, out);
      split_recursive(i.sub, compose(i.inclusion, inclusion), rng, budget, out);
      return true;
    }
    return false;
  };
  std::vector<Morphism> basis;
  for (int i = 0; i < end.dim(); ++i) basis.push_back(end.basis_element(i));
  for (const auto& f : basis)
    if (attempt(f)) return;
  for (const auto& f : basis)
    for (const auto& g : basis)
      if (attempt(compose(f, g))) return;
  for (int t = 0; t < budget; ++t) {
    VectorQ c(end.dim());
    for (int i = 0; i < end.dim(); ++i) c(i) = rng.small_rational();
    if (attempt(end.element(c))) return;
  }
  throw NonSplitIndecomposable("decompose: summand of length " + std::to_string(x.length()) +
                               " has dim End/rad = " + std::to_string(end.dim() - rad.dim()) +
                               " and no Fitting splitting was found");
}

}  // namespace

bool indecomposables_isomorphic(const Representation& x, const Representation& y) {
  if (x.dims() != y.dims()) return false;
  const HomSpace xy = hom_basis(x, y);
  if (xy.dim() == 0) return false;
  const HomSubspace rad = radical_hom(xy, hom_basis(y, x));
  return rad.dim() < xy.dim();
}

DecompositionResult decompose(const Representation& x, std::uint64_t seed, int random_budget) {
  DecompositionResult result;
  if (x.is_zero()) return result;
  Rng rng(seed);
  std::vector<Part> parts;
  split_recursive(x, identity_morphism(x), rng, random_budget, parts);

  // Projections from the inverse of the change-of-basis matrix per vertex.
  const int nv = static_cast<int>(x.dims().size());
  std::vector<Morphism> projections(parts.size());
  for (int v = 0; v < nv; ++v) {
    MatrixQ t(x.dim(v), x.dim(v));
    Index c0 = 0;
    for (const auto& p : parts) {
      t.middleCols(c0, p.rep.dim(v)) = p.inclusion.blocks[sz(v)];
      c0 += p.rep.dim(v);
    }
    const auto inv = inverse(t);
    if (!inv) throw Error("decompose: summands do not span the module");
    Index r0 = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      projections[i].blocks.push_back(inv->middleRows(r0, parts[i].rep.dim(v)));
      r0 += parts[i].rep.dim(v);
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto it = std::find_if(result.classes.begin(), result.classes.end(), [&](const SummandClass& c) {
      return indecomposables_isomorphic(c.rep, parts[i].rep);
    });
    if (it == result.classes.end()) {
      SummandClass c;
      c.rep = parts[i].rep;
      c.end_dim = parts[i].end_dim;
      c.rad_dim = parts[i].rad_dim;
      result.classes.push_back(std::move(c));
      it = std::prev(result.classes.end());
    }
    // Express every copy through the class representative.
    const auto iso = find_isomorphism(it->rep, parts[i].rep, seed);
    if (!iso) throw NonSplitIndecomposable("decompose: no explicit isomorphism found between copies");
    const Morphism& to_rep = *iso;
    const auto inv_blocks = [&] {
      Morphism back;
      for (const auto& b : to_rep.blocks) back.blocks.push_back(*inverse(b));
      return back;
    }();
    it->injections.push_back(compose(to_rep, parts[i].inclusion));
    it->projections.push_back(compose(projections[i], inv_blocks));
    ++it->multiplicity;
  }

  std::stable_sort(result.classes.begin(), result.classes.end(),
                   [](const SummandClass& a, const SummandClass& b) {
                     if (a.rep.length() != b.rep.length()) return a.rep.length() > b.rep.length();
                     return a.rep.dims() > b.rep.dims();
                   });
  return result;
}

std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y,
                                         std::uint64_t seed, int random_budget) {
  if (x.dims() != y.dims()) return std::nullopt;
  const HomSpace h = hom_basis(x, y);
  if (x.is_zero()) return zero_morphism(x, y);
  if (h.dim() == 0) return std::nullopt;
  for (int i = 0; i < h.dim(); ++i) {
    Morphism f = h.basis_element(i);
    if (is_isomorphism(f)) return f;
  }
  Rng rng(seed);
  for (int t = 0; t < random_budget; ++t) {
    VectorQ c(h.dim());
    for (int i = 0; i < h.dim(); ++i) c(i) = rng.small_rational();
    Morphism f = h.element(c);
    if (is_isomorphism(f)) return f;
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& x, const Representation& y, std::uint64_t seed) {
  return find_isomorphism(x, y, seed).has_value();
}

std::optional<Morphism> find_injection(const Representation& x, const Representation& y,
                                       std::uint64_t seed, int random_budget) {
  for (int v = 0; v < static_cast<int>(x.dims().size()); ++v)
    if (x.dim(v) > y.dim(v)) return std::nullopt;
  const HomSpace h = hom_basis(x, y);
  if (x.is_zero()) return zero_morphism(x, y);
  if (h.dim() == 0) return std::nullopt;
  for (int i = 0; i < h.dim(); ++i) {
    Morphism f = h.basis_element(i);
    if (is_injective(f)) return f;
  }
  Rng rng(seed);
  for (int t = 0; t < random_budget; ++t) {
    VectorQ c(h.dim());
    for (int i = 0; i < h.dim(); ++i) c(i) = rng.small_rational();
    Morphism f = h.element(c);
    if (is_injective(f)) return f;
  }
  return std::nullopt;
}

FdAlgebra end_algebra(const Representation& x, std::span<const Morphism> idempotents) {
  if (x.is_zero()) throw InputError("end_algebra: zero module");
  const HomSpace h = hom_basis(x, x);
  const int m = h.dim();
  std::vector<Morphism> basis;
  for (int i = 0; i < m; ++i) basis.push_back(h.basis_element(i));
  std::vector<MatrixQ> left(sz(m), MatrixQ(m, m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) left[sz(a)].col(b) = h.coordinates(compose(basis[sz(a)], basis[sz(b)]));
  const VectorQ unit = h.coordinates(identity_morphism(x));
  std::vector<VectorQ> idem;
  if (idempotents.empty())
    idem.push_back(unit);
  else
    for (const auto& e : idempotents) idem.push_back(h.coordinates(e));
  return FdAlgebra("End", std::move(left), unit, std::move(idem));
}

}  // namespace gforge
