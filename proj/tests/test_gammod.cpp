#include "doctest.h"
#include "support.hpp"

#include "gforge/errors.hpp"
#include "gforge/gammod.hpp"

#include <memory>

using namespace gforge;
using cli::example_algebra;

namespace {

FdAlgebraPtr as_gamma(const AlgebraPtr& alg) { return std::make_shared<const FdAlgebra>(path_algebra(*alg)); }

GammaAlgebra gamma_of(const Representation& x) { return gamma_algebra(layered_summands(iyama_filtration(x))); }

// Submodule of the regular Γ-module generated by one random vector.
FdModule random_cyclic(const FdAlgebraPtr& g, gft::Gen& gen) {
  const FdModule reg = regular_module(g);
  VectorQ v = gen.matrix(g->dim(), 1);
  if (is_zero_matrix(v)) v(0) = 1;
  return generated_submodule(reg, SubspaceQ::from_columns(MatrixQ(v))).sub;
}

}  // namespace

TEST_CASE("path algebra as a structure-constant algebra") {
  for (auto name : {"a2", "cyc3", "cyc4", "ringel-a2x", "loop3", "ss2"}) {
    auto alg = example_algebra(name);
    auto g = as_gamma(alg);
    CHECK(g->dim() == alg->total_dim());
    CHECK(g->is_associative());
    CHECK(g->has_unit());
    CHECK(g->idempotents_complete());
    // basic algebra: radical is spanned by the paths of positive length
    CHECK(g->radical().dim() == alg->total_dim() - alg->num_vertices());
    for (int j = 0; j < g->num_simples(); ++j) {
      auto p = projective_submodule(g, j).sub;
      CHECK(composition_vector(p) == projective(alg, j).dims());
      CHECK(check_module_laws(p));
    }
  }
  auto c = cli::random_corpus(41, 25);
  for (const auto& f : c.fixtures) {
    auto g = as_gamma(f.algebra);
    CHECK(g->is_associative());
    CHECK(g->radical().dim() == f.algebra->total_dim() - f.algebra->num_vertices());
  }
}

TEST_CASE("gamma algebra dimensions") {
  auto a2 = example_algebra("a2");
  auto ga = gamma_of(regular_module(a2));
  CHECK(ga.algebra->dim() == 3);
  CHECK(ga.algebra->num_simples() == 2);
  CHECK(ga.layers == std::vector<int>{1, 2});

  auto ss = example_algebra("ss1");
  CHECK(gamma_of(regular_module(ss)).algebra->dim() == 1);

  auto c3 = example_algebra("cyc3");
  auto gc = gamma_of(regular_module(c3));
  CHECK(gc.algebra->num_simples() == 5);
  CHECK(gc.algebra->dim() == 14);
  CHECK(gc.algebra->is_associative());
  CHECK(gc.algebra->idempotents_complete());
}

TEST_CASE("hom module is the projective at its summand") {
  for (auto name : {"a2", "cyc3", "loop3"}) {
    auto alg = example_algebra(name);
    auto g = gamma_of(gft::regular_plus_dual(alg));
    const auto& sum = g.basic;
    CHECK(hom_module(g, Representation::zero(alg)).module.is_zero());
    for (int j = 0; j < g.algebra->num_simples(); ++j) {
      // N_j is the j-th block of the basic sum
      const Representation nj = image(sum.injections[j], sum.sum).sub;
      auto h = hom_module(g, nj);
      CHECK(check_module_laws(h.module));
      auto p = projective_submodule(g.algebra, j).sub;
      CHECK(h.module.dim == p.dim);
      CHECK(composition_vector(h.module) == composition_vector(p));
      auto tr = top_and_radical(h.module);
      std::vector<int> unit(static_cast<std::size_t>(g.algebra->num_simples()), 0);
      unit[j] = 1;
      CHECK(tr.top == unit);
    }
  }
}

TEST_CASE("hom module dimension against brute force") {
  auto r = example_algebra("ringel-a2x");
  auto g = gamma_of(gft::regular_plus_dual(r));
  auto p1 = projective(r, 0);
  int expect = 0;
  for (std::size_t j = 0; j < g.basic.injections.size(); ++j)
    expect += gft::hom_dim_oracle(image(g.basic.injections[j], g.basic.sum).sub, p1);
  auto h = hom_module(g, p1);
  CHECK(h.module.dim == expect);
  CHECK(check_module_laws(h.module));
}

TEST_CASE("tops, radicals and covers") {
  auto c3 = as_gamma(example_algebra("cyc3"));
  for (int j = 0; j < 3; ++j) {
    auto s = simple_module(c3, j);
    auto tr = top_and_radical(s);
    CHECK(tr.radical.sub.is_zero());
    CHECK(gft::total(tr.top) == 1);
    CHECK(tr.top[j] == 1);
    auto pc = projective_cover(s);
    CHECK(pc.tops == std::vector<int>{j});
    CHECK(pc.kernel.sub.dim == projective_submodule(c3, j).sub.dim - 1);
    auto pj = projective_submodule(c3, j).sub;
    CHECK(projective_cover(pj).kernel.sub.is_zero());
  }
  auto p1 = projective_submodule(c3, 0).sub;
  CHECK(composition_vector(top_and_radical(p1).radical.sub) == std::vector<int>{0, 1, 1});
  auto k = projective_cover(simple_module(c3, 1)).kernel.sub;
  CHECK(composition_vector(k) == std::vector<int>{1, 0, 0});
}

TEST_CASE("projective and global dimension") {
  auto c3 = as_gamma(example_algebra("cyc3"));
  for (int j = 0; j < 3; ++j) {
    CHECK(proj_dim(simple_module(c3, j), 10) == j + 1);
    CHECK(proj_dim(projective_submodule(c3, j).sub, 10) == 0);
  }
  CHECK_THROWS_AS(proj_dim(simple_module(c3, 2), 2), BoundExceeded);
  CHECK(global_dimension(c3, 10) == 3);
  CHECK(global_dimension(as_gamma(example_algebra("cyc4")), 10) == 4);
  CHECK(global_dimension(as_gamma(example_algebra("ss3")), 10) == 0);
  auto a2 = as_gamma(example_algebra("a2"));
  for (int j = 0; j < 2; ++j) CHECK(proj_dim(simple_module(a2, j), 10) <= 1);
  // self-injective and not semisimple: infinite
  CHECK_THROWS_AS(global_dimension(as_gamma(example_algebra("loop3")), 6), BoundExceeded);

  auto l3 = example_algebra("loop3");
  auto g = gamma_of(gft::regular_plus_dual(l3));
  CHECK(global_dimension(g.algebra, 10) == 2);
}

TEST_CASE("property: covers on random cyclic modules") {
  for (auto name : {"cyc3", "ringel-a2x"}) {
    auto g = as_gamma(example_algebra(name));
    gft::Gen gen(51);
    for (int t = 0; t < 15; ++t) {
      auto v = random_cyclic(g, gen);
      CHECK(check_module_laws(v));
      auto pc = projective_cover(v);
      int cover_dim = 0;
      for (int j : pc.tops) cover_dim += projective_submodule(g, j).sub.dim;
      CHECK(pc.cover.dim == cover_dim);
      CHECK(rank(pc.map) == v.dim);
      CHECK(pc.kernel.sub.dim == pc.cover.dim - v.dim);
      CHECK(is_zero_matrix(MatrixQ(pc.map * pc.kernel.inclusion)));
      auto tr = top_and_radical(v);
      CHECK(static_cast<int>(pc.tops.size()) == gft::total(tr.top));
      CHECK(gft::total(composition_vector(v)) == v.dim);
    }
  }
}
