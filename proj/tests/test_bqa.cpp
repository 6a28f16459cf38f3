#include "doctest.h"
#include "support.hpp"

#include "gforge/errors.hpp"

using namespace gforge;
using cli::example_algebra;

namespace {

std::vector<int> lengths_of(const AlgebraPtr& alg, Representation (*f)(const AlgebraPtr&, int)) {
  std::vector<int> out;
  for (int v = 0; v < alg->num_vertices(); ++v) out.push_back(f(alg, v).length());
  return out;
}

// Vertex labels of the basis paths starting at v, ordered by length: the
// radical layers of P(v) for a monomial algebra whose P(v) is uniserial.
std::vector<std::string> series_from(const AlgebraPtr& alg, int v) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < alg->total_dim(); ++i)
    if (alg->basis_source(i) == v) ends.push_back({alg->basis_path(i).length(), alg->basis_target(i)});
  std::sort(ends.begin(), ends.end());
  std::vector<std::string> out;
  for (auto [len, w] : ends) out.push_back(alg->quiver().vertex_label(w));
  return out;
}

// Counts paths of each length directly from the quiver, discarding any
// path containing a monomial relation; valid only for monomial algebras.
int monomial_dim_oracle(const BoundQuiverAlgebra& alg) {
  const auto& q = alg.quiver();
  std::vector<std::vector<int>> rels;
  for (const auto& r : alg.relations()) rels.push_back(r.terms.at(0).arrows);
  auto has_rel = [&](const std::vector<int>& p) {
    for (const auto& r : rels)
      if (std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end()) return true;
    return false;
  };
  int count = q.num_vertices();
  std::vector<std::vector<int>> frontier;
  for (int a = 0; a < q.num_arrows(); ++a) frontier.push_back({a});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      if (has_rel(p)) continue;
      ++count;
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).source == q.arrow(p.back()).target) {
          auto np = p;
          np.push_back(a);
          next.push_back(np);
        }
    }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace

TEST_CASE("fixture dimensions") {
  auto a2 = example_algebra("a2");
  CHECK(a2->total_dim() == 3);
  CHECK(projective(a2, 0).dims() == std::vector<int>{1, 1});
  CHECK(injective(a2, 1).dims() == std::vector<int>{1, 1});
  CHECK(is_isomorphic(injective(a2, 1), projective(a2, 0)));

  auto c3 = example_algebra("cyc3");
  CHECK(c3->total_dim() == 7);
  CHECK(lengths_of(c3, projective) == std::vector<int>{3, 2, 2});
  CHECK(series_from(c3, 0) == std::vector<std::string>{"1", "3", "2"});

  auto r = example_algebra("ringel-a2x");
  CHECK(r->total_dim() == 11);
  CHECK(lengths_of(r, projective) == std::vector<int>{6, 2, 3});
  CHECK(lengths_of(r, injective) == std::vector<int>{5, 4, 2});
  CHECK(series_from(r, 2) == std::vector<std::string>{"3", "1", "2"});
  // I(3): socle 3, top 1
  auto i3 = injective(r, 2);
  CHECK(i3.dims() == std::vector<int>{1, 0, 1});
  CHECK(regular_module(r).length() == 11);
  CHECK(regular_module(c3).length() == 7);
  CHECK(regular_module(a2).length() == 3);

  auto l3 = example_algebra("loop3");
  CHECK(l3->total_dim() == 3);
  CHECK(dual_regular_module(l3).length() == 3);
}

TEST_CASE("monomial path counts agree with the oracle") {
  for (auto name : {"a2", "cyc3", "cyc4", "ringel-a2x", "loop3", "loop5", "ss3"}) {
    auto alg = example_algebra(name);
    CHECK(alg->total_dim() == monomial_dim_oracle(*alg));
  }
  auto corpus = cli::random_corpus(11, 15);
  for (const auto& f : corpus.fixtures) CHECK(f.algebra->total_dim() == monomial_dim_oracle(*f.algebra));
}

TEST_CASE("opposite algebra") {
  for (auto name : {"a2", "cyc3", "cyc4", "ringel-a2x", "loop3"}) {
    auto alg = example_algebra(name);
    auto op = alg->opposite();
    CHECK(op->total_dim() == alg->total_dim());
    CHECK(op->opposite()->same_presentation(*alg));
    // projective lengths of the opposite are injective lengths of alg
    CHECK(lengths_of(op, projective) == lengths_of(alg, injective));
    for (int v = 0; v < alg->num_vertices(); ++v) {
      CHECK(dualize(projective(op, v), alg) == injective(alg, v));
    }
  }
  auto a2op = example_algebra("a2")->opposite();
  CHECK(a2op->quiver().arrow(0).source == 1);
  CHECK(a2op->quiver().arrow(0).target == 0);
  auto c3 = example_algebra("cyc3");
  auto lens = lengths_of(c3->opposite(), projective);
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<int>{2, 2, 3});
}

TEST_CASE("dualize") {
  auto l3 = example_algebra("loop3");
  CHECK(dualize(Representation::zero(l3->opposite()), l3).is_zero());
  auto d = dualize(regular_module(l3->opposite()), l3);
  CHECK(d.length() == 3);
  CHECK(is_isomorphic(d, regular_module(l3)));
  for (auto name : {"cyc3", "ringel-a2x"}) {
    auto alg = example_algebra(name);
    auto x = gft::regular_plus_dual(alg);
    CHECK(dualize(dualize(x)) == x);
  }
}

TEST_CASE("relations act as zero on every module") {
  for (auto name : {"cyc3", "ringel-a2x", "loop3"}) {
    auto alg = example_algebra(name);
    auto x = gft::regular_plus_dual(alg);
    for (const auto& r : alg->relations()) CHECK(is_zero_matrix(x.relation_map(r)));
  }
}

TEST_CASE("malformed input is rejected") {
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  Relation not_composable{{RelationTerm{1, {0, 0}}}};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build("x", q, {not_composable}), MalformedRelation);
  Relation short_rel{{RelationTerm{1, {0}}}};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build("x", q, {short_rel}), MalformedRelation);
  Relation mixed{{RelationTerm{1, {0, 1}}, RelationTerm{1, {1, 0}}}};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build("x", q, {mixed}), MalformedRelation);
  // no relations on an oriented cycle: infinite dimensional
  CHECK_THROWS_AS(BoundQuiverAlgebra::build("x", q, {}, 8), NonAdmissible);
  // bad matrix shape
  auto a2 = example_algebra("a2");
  CHECK_THROWS_AS(Representation(a2, {1, 1}, {MatrixQ::Zero(2, 1)}), InputError);
}

TEST_CASE("commutativity relation") {
  // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
  Quiver q({"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}});
  Relation comm{{RelationTerm{1, {0, 1}}, RelationTerm{-1, {2, 3}}}};
  auto alg = BoundQuiverAlgebra::build("square", q, {comm});
  CHECK(alg->total_dim() == 4 + 4 + 1);
  CHECK(projective(alg, 0).dims() == std::vector<int>{1, 1, 1, 1});
  CHECK(injective(alg, 3).dims() == std::vector<int>{1, 1, 1, 1});
}
