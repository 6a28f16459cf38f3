#include "gforge/bqa.hpp"

#include "gforge/errors.hpp"

#include <set>
#include <sstream>

namespace gforge {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw InputError("quiver: empty vertex label");
    if (!seen.insert(v).second) throw InputError("quiver: duplicate vertex label '" + v + "'");
  }
  std::set<std::string> arrow_seen;
  for (const auto& a : arrows_) {
    if (a.label.empty()) throw InputError("quiver: empty arrow label");
    if (!arrow_seen.insert(a.label).second)
      throw InputError("quiver: duplicate arrow label '" + a.label + "'");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
      throw InputError("quiver: arrow '" + a.label + "' has an undeclared endpoint");
  }
}

std::optional<int> Quiver::find_vertex(const std::string& label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[static_cast<std::size_t>(v)] == label) return v;
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(const std::string& label) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[static_cast<std::size_t>(a)].label == label) return a;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back({a.label, a.target, a.source});
  return Quiver(vertices_, std::move(rev));
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    const auto& b = o.arrows_[i];
    if (a.label != b.label || a.source != b.source || a.target != b.target) return false;
  }
  return true;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_label(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(p.arrows[i]).label;
  }
  return out;
}

std::string relation_to_string(const Quiver& q, const Relation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    if (i) out += " + ";
    out += r.terms[i].coeff.get_str();
    for (int a : r.terms[i].arrows) {
      out += '*';
      out += q.arrow(a).label;
    }
  }
  return out;
}

void check_relation(const Quiver& q, const Relation& r, const std::string& where) {
  if (r.terms.empty()) throw MalformedRelation(where + ": no terms");
  bool nonzero = false;
  int len = -1, src = -1, dst = -1;
  for (const auto& t : r.terms) {
    if (t.arrows.size() < 2) throw MalformedRelation(where + ": paths must have length >= 2");
    for (int a : t.arrows)
      if (a < 0 || a >= q.num_arrows()) throw MalformedRelation(where + ": unknown arrow");
    for (std::size_t i = 0; i + 1 < t.arrows.size(); ++i)
      if (q.arrow(t.arrows[i]).target != q.arrow(t.arrows[i + 1]).source)
        throw MalformedRelation(where + ": path " + q.arrow(t.arrows[i]).label + "*" +
                                q.arrow(t.arrows[i + 1]).label + " is not composable");
    const int s = q.arrow(t.arrows.front()).source;
    const int e = q.arrow(t.arrows.back()).target;
    if (len < 0) {
      len = static_cast<int>(t.arrows.size());
      src = s;
      dst = e;
    } else {
      if (s != src || e != dst)
        throw MalformedRelation(where + ": paths are not parallel (" + q.vertex_label(src) +
                                " -> " + q.vertex_label(dst) + " vs " + q.vertex_label(s) +
                                " -> " + q.vertex_label(e) + ")");
      if (static_cast<int>(t.arrows.size()) != len)
        throw MalformedRelation(where + ": paths of different lengths (relation not homogeneous)");
    }
    if (!is_zero(t.coeff)) nonzero = true;
  }
  if (!nonzero) throw MalformedRelation(where + ": all coefficients are zero");
}

AlgebraPtr BoundQuiverAlgebra::build(std::string name, Quiver quiver,
                                     std::vector<Relation> relations, int max_path_len) {
  if (max_path_len < 2) throw InputError("max_path_len must be at least 2");
  for (std::size_t i = 0; i < relations.size(); ++i)
    check_relation(quiver, relations[i], "relation " + std::to_string(i + 1));

  std::shared_ptr<BoundQuiverAlgebra> alg(new BoundQuiverAlgebra());
  alg->name_ = std::move(name);
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  alg->max_path_len_ = max_path_len;
  const Quiver& q = alg->quiver_;

  // Degree 0: trivial paths.
  Degree d0;
  for (int v = 0; v < q.num_vertices(); ++v) {
    d0.basis.push_back(static_cast<int>(alg->basis_.size()));
    alg->local_index_.push_back(v);
    alg->basis_.push_back(Path{v, {}});
  }
  alg->degrees_.push_back(std::move(d0));

  for (int d = 1;; ++d) {
    const Degree& prev = alg->degrees_.back();
    Degree cur;
    std::vector<std::pair<int, int>> cands;
    for (std::size_t i = 0; i < prev.basis.size(); ++i) {
      const Path& p = alg->basis_[static_cast<std::size_t>(prev.basis[i])];
      const int end = p.end(q);
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).source != end) continue;
        cur.candidate.emplace(std::make_pair(static_cast<int>(i), a),
                              static_cast<Index>(cands.size()));
        cands.emplace_back(static_cast<int>(i), a);
      }
    }
    if (cands.empty()) {
      alg->nilpotency_degree_ = d;
      break;
    }
    const Index ncand = static_cast<Index>(cands.size());

    // The image of I_d in the candidate space is spanned by b*r for every
    // relation r of length k <= d and every basis path b of degree d - k.
    std::vector<VectorQ> gens;
    for (const auto& r : alg->relations_) {
      const int k = static_cast<int>(r.terms.front().arrows.size());
      if (k > d) continue;
      const int rsrc = q.arrow(r.terms.front().arrows.front()).source;
      for (int g : alg->degrees_[static_cast<std::size_t>(d - k)].basis) {
        const Path& b = alg->basis_[static_cast<std::size_t>(g)];
        if (b.end(q) != rsrc) continue;
        VectorQ acc = VectorQ::Zero(ncand);
        for (const auto& t : r.terms) {
          if (is_zero(t.coeff)) continue;
          Path full = b;
          full.arrows.insert(full.arrows.end(), t.arrows.begin(), t.arrows.end());
          const int last = full.arrows.back();
          full.arrows.pop_back();
          const VectorQ prefix = alg->local_normal_form(full);
          for (Index j = 0; j < prefix.size(); ++j) {
            if (is_zero(prefix(j))) continue;
            const auto it = cur.candidate.find({static_cast<int>(j), last});
            acc(it->second) += t.coeff * prefix(j);
          }
        }
        if (!is_zero_matrix(acc)) gens.push_back(std::move(acc));
      }
    }
    MatrixQ gen_rows(static_cast<Index>(gens.size()), ncand);
    for (std::size_t i = 0; i < gens.size(); ++i) gen_rows.row(static_cast<Index>(i)) = gens[i].transpose();
    cur.ideal = gens.empty() ? SubspaceQ(ncand) : SubspaceQ::from_rows(gen_rows);

    cur.local_of_candidate.assign(static_cast<std::size_t>(ncand), -1);
    int local = 0;
    for (Index c : cur.ideal.complement_columns()) {
      const auto [i, a] = cands[static_cast<std::size_t>(c)];
      Path p = alg->basis_[static_cast<std::size_t>(prev.basis[static_cast<std::size_t>(i)])];
      p.arrows.push_back(a);
      cur.local_of_candidate[static_cast<std::size_t>(c)] = local++;
      cur.basis.push_back(static_cast<int>(alg->basis_.size()));
      alg->local_index_.push_back(local - 1);
      alg->basis_.push_back(std::move(p));
    }
    alg->degrees_.push_back(std::move(cur));
    if (alg->degrees_.back().basis.empty()) {
      alg->nilpotency_degree_ = d;
      break;
    }
    if (d >= max_path_len)
      throw NonAdmissible(d, "algebra '" + alg->name_ + "' still has nonzero paths of length " +
                                 std::to_string(d) + " (max_path_len " +
                                 std::to_string(max_path_len) + "); possibly infinite-dimensional");
  }

  const int nv = q.num_vertices();
  alg->between_.assign(static_cast<std::size_t>(nv),
                       std::vector<std::vector<int>>(static_cast<std::size_t>(nv)));
  for (int i = 0; i < alg->total_dim(); ++i)
    alg->between_[static_cast<std::size_t>(alg->basis_source(i))]
                 [static_cast<std::size_t>(alg->basis_target(i))]
                     .push_back(i);
  return alg;
}

const std::vector<int>& BoundQuiverAlgebra::basis_between(int u, int v) const {
  return between_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v));
}

VectorQ BoundQuiverAlgebra::candidates_to_local(int degree, const VectorQ& cand) const {
  const Degree& dg = degrees_[static_cast<std::size_t>(degree)];
  const VectorQ reduced = dg.ideal.reduce(cand);
  VectorQ out = VectorQ::Zero(static_cast<Index>(dg.basis.size()));
  for (Index c = 0; c < reduced.size(); ++c) {
    if (is_zero(reduced(c))) continue;
    out(dg.local_of_candidate[static_cast<std::size_t>(c)]) = reduced(c);
  }
  return out;
}

// Coordinates of p in the basis of its own degree; empty vector when the
// degree is at or beyond the nilpotency degree.
VectorQ BoundQuiverAlgebra::local_normal_form(const Path& p) const {
  const int d = p.length();
  if (d >= static_cast<int>(degrees_.size())) return VectorQ();
  if (d == 0) {
    VectorQ out = VectorQ::Zero(static_cast<Index>(degrees_[0].basis.size()));
    out(p.start) = 1;
    return out;
  }
  Path prefix = p;
  const int last = prefix.arrows.back();
  prefix.arrows.pop_back();
  const VectorQ pre = local_normal_form(prefix);
  const Degree& dg = degrees_[static_cast<std::size_t>(d)];
  VectorQ cand = VectorQ::Zero(static_cast<Index>(dg.local_of_candidate.size()));
  for (Index j = 0; j < pre.size(); ++j) {
    if (is_zero(pre(j))) continue;
    const auto it = dg.candidate.find({static_cast<int>(j), last});
    if (it == dg.candidate.end()) continue;
    cand(it->second) += pre(j);
  }
  return candidates_to_local(d, cand);
}

VectorQ BoundQuiverAlgebra::normal_form(const Path& p) const {
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (quiver_.arrow(p.arrows[i]).target != quiver_.arrow(p.arrows[i + 1]).source)
      throw InputError("normal_form: path is not composable");
  if (!p.arrows.empty() && quiver_.arrow(p.arrows.front()).source != p.start)
    throw InputError("normal_form: path does not start at its start vertex");
  VectorQ out = VectorQ::Zero(total_dim());
  const VectorQ loc = local_normal_form(p);
  if (loc.size() == 0) return out;
  const auto& basis = degrees_[static_cast<std::size_t>(p.length())].basis;
  for (Index j = 0; j < loc.size(); ++j)
    if (!is_zero(loc(j))) out(basis[static_cast<std::size_t>(j)]) = loc(j);
  return out;
}

VectorQ BoundQuiverAlgebra::concatenate(int first, int second) const {
  const Path& a = basis_path(first);
  const Path& b = basis_path(second);
  if (a.end(quiver_) != b.start) return VectorQ::Zero(total_dim());
  Path p = a;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return normal_form(p);
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::opposite() const {
  std::vector<Relation> rels;
  rels.reserve(relations_.size());
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coeff, {t.arrows.rbegin(), t.arrows.rend()}});
    rels.push_back(std::move(rr));
  }
  std::string nm = name_;
  if (nm.size() > 3 && nm.compare(nm.size() - 3, 3, "^op") == 0)
    nm.resize(nm.size() - 3);
  else
    nm += "^op";
  return build(nm, quiver_.opposite(), std::move(rels), max_path_len_);
}

bool BoundQuiverAlgebra::same_presentation(const BoundQuiverAlgebra& o) const {
  if (!(quiver_ == o.quiver_) || relations_.size() != o.relations_.size()) return false;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& a = relations_[i].terms;
    const auto& b = o.relations_[i].terms;
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j].coeff != b[j].coeff || a[j].arrows != b[j].arrows) return false;
  }
  return true;
}

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  return &a == &b || a.same_presentation(b);
}

// ---------------------------------------------------------------------------

Representation::Representation(AlgebraPtr algebra, std::vector<int> dims,
                               std::vector<MatrixQ> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = algebra_->quiver();
  if (static_cast<int>(dims_.size()) != q.num_vertices())
    throw InputError("representation: expected " + std::to_string(q.num_vertices()) +
                     " vertex dimensions");
  for (int d : dims_)
    if (d < 0) throw InputError("representation: negative dimension");
  if (static_cast<int>(maps_.size()) != q.num_arrows())
    throw InputError("representation: expected " + std::to_string(q.num_arrows()) +
                     " arrow matrices");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& m = maps_[static_cast<std::size_t>(a)];
    const int rows = dim(q.arrow(a).target);
    const int cols = dim(q.arrow(a).source);
    if (m.rows() != rows || m.cols() != cols)
      throw InputError("representation: arrow '" + q.arrow(a).label + "' needs a " +
                       std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  for (std::size_t i = 0; i < algebra_->relations().size(); ++i)
    if (!is_zero_matrix(relation_map(algebra_->relations()[i])))
      throw InputError("representation: relation " + std::to_string(i + 1) + " (" +
                       relation_to_string(q, algebra_->relations()[i]) + ") does not vanish");
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<MatrixQ> maps(static_cast<std::size_t>(q.num_arrows()), MatrixQ(0, 0));
  return Representation(algebra, std::vector<int>(static_cast<std::size_t>(q.num_vertices()), 0),
                        std::move(maps));
}

int Representation::length() const {
  int n = 0;
  for (int d : dims_) n += d;
  return n;
}

MatrixQ Representation::path_map(const std::vector<int>& arrows, int start) const {
  MatrixQ m = MatrixQ::Identity(dim(start), dim(start));
  for (int a : arrows) m = (maps_[static_cast<std::size_t>(a)] * m).eval();
  return m;
}

MatrixQ Representation::relation_map(const Relation& r) const {
  const Quiver& q = algebra_->quiver();
  const int s = q.arrow(r.terms.front().arrows.front()).source;
  const int e = q.arrow(r.terms.front().arrows.back()).target;
  MatrixQ acc = MatrixQ::Zero(dim(e), dim(s));
  for (const auto& t : r.terms) acc += t.coeff * path_map(t.arrows, s);
  return acc;
}

bool Representation::operator==(const Representation& o) const {
  if (!same_algebra(*algebra_, *o.algebra_) || dims_ != o.dims_) return false;
  for (std::size_t a = 0; a < maps_.size(); ++a)
    if (!(maps_[a] == o.maps_[a])) return false;
  return true;
}

// ---------------------------------------------------------------------------

Representation projective(const AlgebraPtr& alg, int v) {
  const Quiver& q = alg->quiver();
  const int nv = q.num_vertices();
  std::vector<int> dims(static_cast<std::size_t>(nv));
  for (int w = 0; w < nv; ++w) dims[static_cast<std::size_t>(w)] = static_cast<int>(alg->basis_between(v, w).size());
  std::vector<MatrixQ> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source;
    const int t = q.arrow(a).target;
    const auto& from = alg->basis_between(v, s);
    const auto& to = alg->basis_between(v, t);
    MatrixQ m = MatrixQ::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
    for (std::size_t c = 0; c < from.size(); ++c) {
      Path p = alg->basis_path(from[c]);
      p.arrows.push_back(a);
      const VectorQ nf = alg->normal_form(p);
      for (std::size_t r = 0; r < to.size(); ++r) m(static_cast<Index>(r), static_cast<Index>(c)) = nf(to[r]);
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Representation dualize(const Representation& y, const AlgebraPtr& target) {
  const Quiver& q = target->quiver();
  if (!(y.algebra().quiver() == q.opposite()))
    throw InputError("dualize: representation is not over the opposite algebra");
  std::vector<MatrixQ> maps;
  for (int a = 0; a < q.num_arrows(); ++a) maps.push_back(y.map(a).transpose());
  return Representation(target, y.dims(), std::move(maps));
}

Representation dualize(const Representation& y) { return dualize(y, y.algebra().opposite()); }

Representation injective(const AlgebraPtr& alg, int v) {
  return dualize(projective(alg->opposite(), v), alg);
}

Representation block_sum(const AlgebraPtr& alg, std::span<const Representation> parts) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(static_cast<std::size_t>(q.num_vertices()), 0);
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), *alg)) throw InputError("direct sum: parts over different algebras");
    for (int v = 0; v < q.num_vertices(); ++v) dims[static_cast<std::size_t>(v)] += p.dim(v);
  }
  std::vector<MatrixQ> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source;
    const int t = q.arrow(a).target;
    MatrixQ m = MatrixQ::Zero(dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)]);
    Index r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      m.block(r0, c0, p.dim(t), p.dim(s)) = p.map(a);
      r0 += p.dim(t);
      c0 += p.dim(s);
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(maps));
}

Representation regular_module(const AlgebraPtr& alg) {
  std::vector<Representation> parts;
  for (int v = 0; v < alg->num_vertices(); ++v) parts.push_back(projective(alg, v));
  return block_sum(alg, parts);
}

Representation dual_regular_module(const AlgebraPtr& alg) {
  const auto op = alg->opposite();
  std::vector<Representation> parts;
  for (int v = 0; v < alg->num_vertices(); ++v) parts.push_back(dualize(projective(op, v), alg));
  return block_sum(alg, parts);
}

Representation simple(const AlgebraPtr& alg, int v) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(static_cast<std::size_t>(q.num_vertices()), 0);
  dims[static_cast<std::size_t>(v)] = 1;
  std::vector<MatrixQ> maps;
  for (int a = 0; a < q.num_arrows(); ++a)
    maps.push_back(MatrixQ::Zero(dims[static_cast<std::size_t>(q.arrow(a).target)],
                                 dims[static_cast<std::size_t>(q.arrow(a).source)]));
  return Representation(alg, std::move(dims), std::move(maps));
}

}  // namespace gforge
