#include "doctest.h"
#include "support.hpp"

#include "gforge/errors.hpp"

using namespace gforge;
using cli::example_algebra;

namespace {

const char* kFixtures[] = {"a2", "cyc3", "cyc4", "ringel-a2x", "loop3"};

// rad(X, Y) from the trace form of End(X ⊕ Y) acting on itself by left
// multiplication, restricted to the X -> Y block. Built only from
// hom_basis and compose.
SubspaceQ regular_trace_radical(const Representation& x, const Representation& y) {
  const auto alg = x.algebra_ptr();
  std::vector<Representation> parts{x, y};
  const DirectSum s = direct_sum(alg, parts);
  const HomSpace e = hom_basis(s.sum, s.sum);
  const int m = e.dim();
  std::vector<Morphism> basis;
  for (int i = 0; i < m; ++i) basis.push_back(e.basis_element(i));
  std::vector<MatrixQ> left(static_cast<std::size_t>(m), MatrixQ(m, m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) left[a].col(b) = e.coordinates(compose(basis[b], basis[a]));
  MatrixQ gram(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Rational t = 0;
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
          if (!is_zero(left[a](i, j)) && !is_zero(left[b](j, i))) t += left[a](i, j) * left[b](j, i);
      gram(a, b) = gram(b, a) = t;
    }
  const SubspaceQ rad = nullspace(gram);
  const HomSpace xy = hom_basis(x, y);
  MatrixQ rows(rad.dim(), xy.dim());
  for (Index i = 0; i < rad.dim(); ++i) {
    const Morphism phi = e.element(rad.basis_vector(i));
    const Morphism block = compose(compose(s.injections[0], phi), s.projections[1]);
    rows.row(i) = xy.coordinates(block).transpose();
  }
  return rad.dim() == 0 ? SubspaceQ(xy.dim()) : SubspaceQ::from_rows(rows);
}

bool vertex_contained(const Subrep& small, const Subrep& big) {
  for (std::size_t v = 0; v < small.spaces.size(); ++v)
    if (!big.spaces[v].contains(small.spaces[v])) return false;
  return true;
}

bool same_spaces(const Subrep& a, const Subrep& b) { return a.spaces == b.spaces; }

Representation power(const Representation& x, int k) {
  return block_sum(x.algebra_ptr(), std::vector<Representation>(static_cast<std::size_t>(k), x));
}

std::vector<cli::Fixture> corpus_and_named() {
  std::vector<cli::Fixture> out;
  for (auto name : kFixtures) {
    auto alg = example_algebra(name);
    out.push_back({name, alg, regular_module(alg)});
  }
  auto c = cli::random_corpus(7, 25);
  for (auto& f : c.fixtures) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("Yoneda: dim Hom(P(v), X) = dim X_v") {
  for (auto name : kFixtures) {
    auto alg = example_algebra(name);
    auto x = gft::regular_plus_dual(alg);
    for (int v = 0; v < alg->num_vertices(); ++v) CHECK(hom_basis(projective(alg, v), x).dim() == x.dim(v));
  }
}

TEST_CASE("Hom dimensions against the brute-force oracle") {
  auto a2 = example_algebra("a2");
  CHECK(hom_basis(projective(a2, 1), projective(a2, 0)).dim() == 1);
  CHECK(hom_basis(projective(a2, 0), projective(a2, 1)).dim() == 0);
  auto z = Representation::zero(a2);
  CHECK(hom_basis(z, regular_module(a2)).dim() == 0);
  CHECK(hom_basis(regular_module(a2), z).dim() == 0);
  CHECK(hom_basis(regular_module(a2), regular_module(a2)).dim() == 3);
  auto c3 = example_algebra("cyc3");
  CHECK(hom_basis(regular_module(c3), regular_module(c3)).dim() == 7);

  auto c = cli::random_corpus(3, 20);
  for (const auto& f : c.fixtures) {
    auto d = dual_regular_module(f.algebra);
    CHECK(hom_basis(f.module, d).dim() == gft::hom_dim_oracle(f.module, d));
    CHECK(hom_basis(d, f.module).dim() == gft::hom_dim_oracle(d, f.module));
    CHECK(hom_basis(f.module, f.module).dim() == gft::hom_dim_oracle(f.module, f.module));
  }
}

TEST_CASE("composition") {
  auto a2 = example_algebra("a2");
  auto p1 = projective(a2, 0);
  // socle of P(1) sits at vertex 2, top at vertex 1
  auto soc = generated_subrep(p1, {SubspaceQ(1), SubspaceQ::full(1)});
  auto top = quotient(p1, soc);
  CHECK(top.rep.dims() == std::vector<int>{1, 0});
  CHECK(is_zero(compose(soc.inclusion, top.projection)));

  gft::Gen g(4);
  auto x = gft::regular_plus_dual(example_algebra("cyc3"));
  auto h = hom_basis(x, x);
  for (int t = 0; t < 10; ++t) {
    auto f = h.element(g.matrix(h.dim(), 1, false));
    auto k = h.element(g.matrix(h.dim(), 1, false));
    auto m = h.element(g.matrix(h.dim(), 1, false));
    const Rational c = g.rational(false);
    CHECK(compose(identity_morphism(x), f) == f);
    CHECK(compose(f, identity_morphism(x)) == f);
    CHECK(compose(f, c * k + m) == c * compose(f, k) + compose(f, m));
    CHECK(compose(compose(f, k), m) == compose(f, compose(k, m)));
    CHECK(is_homomorphism(compose(f, k), x, x));
  }
}

TEST_CASE("radical examples") {
  auto a2 = example_algebra("a2");
  auto lam = regular_module(a2);
  CHECK(radical_hom(lam, lam).dim() == 1);
  auto p1 = projective(a2, 0), p2 = projective(a2, 1), s1 = simple(a2, 0);
  CHECK(radical_hom(p2, p1).dim() == hom_basis(p2, p1).dim());
  CHECK(radical_hom(p1, s1).dim() == hom_basis(p1, s1).dim());
  CHECK(radical_hom(p1, p1).dim() == 0);
  auto l3 = example_algebra("loop3");
  CHECK(radical_hom(regular_module(l3), regular_module(l3)).dim() == 2);
}

TEST_CASE("radical agrees with the regular trace form of End(X ⊕ Y)") {
  for (auto name : {"a2", "cyc3", "loop3"}) {
    auto alg = example_algebra(name);
    auto lam = regular_module(alg);
    auto dual = dual_regular_module(alg);
    std::vector<std::pair<Representation, Representation>> pairs{{lam, lam}, {lam, dual}, {dual, lam}};
    for (int v = 0; v < alg->num_vertices(); ++v) {
      pairs.push_back({projective(alg, v), injective(alg, v)});
      pairs.push_back({simple(alg, v), injective(alg, v)});
    }
    for (auto& [x, y] : pairs) CHECK(radical_hom(x, y).coords == regular_trace_radical(x, y));
  }
  auto c = cli::random_corpus(5, 10);
  for (const auto& f : c.fixtures) {
    if (f.module.length() > 8) continue;
    auto inj = injective(f.algebra, 0);
    CHECK(radical_hom(f.module, inj).coords == regular_trace_radical(f.module, inj));
    CHECK(radical_hom(f.module, f.module).coords == regular_trace_radical(f.module, f.module));
  }
}

TEST_CASE("gamma examples") {
  auto a2 = example_algebra("a2");
  auto g = gamma(regular_module(a2));
  CHECK(g.sub.dims() == std::vector<int>{0, 1});
  CHECK(is_isomorphic(g.sub, projective(a2, 1)));
  CHECK(is_isomorphic(g.sub, simple(a2, 1)));

  for (auto name : {"ss1", "ss3"}) {
    auto alg = example_algebra(name);
    CHECK(gamma(regular_module(alg)).sub.is_zero());
  }
  auto c3 = example_algebra("cyc3");
  auto gc = gamma(regular_module(c3));
  CHECK(gc.length() == 4);
  auto d = decompose(gc.sub);
  REQUIRE(d.classes.size() == 3);
  std::vector<Representation> expected{projective(c3, 2), simple(c3, 0), simple(c3, 1)};
  for (const auto& e : expected) {
    int hits = 0;
    for (const auto& cl : d.classes) hits += is_isomorphic(cl.rep, e) ? cl.multiplicity : 0;
    CHECK(hits == 1);
  }
}

TEST_CASE("Warning: maps onto gamma X need not be radical") {
  auto a2 = example_algebra("a2");
  auto x = regular_module(a2);
  auto g = gamma(x);
  // X -> P(2) -> γX: projection onto the summand followed by an iso
  std::vector<Representation> parts{projective(a2, 0), projective(a2, 1)};
  auto s = direct_sum(a2, parts);
  REQUIRE(s.sum == x);
  auto iso = find_isomorphism(projective(a2, 1), g.sub);
  REQUIRE(iso);
  auto onto = compose(s.projections[1], *iso);
  CHECK(is_surjective(onto));
  CHECK_FALSE(radical_hom(x, g.sub).contains(onto));
  // yet followed by the inclusion it is a radical endomorphism of X
  CHECK(radical_hom(x, x).contains(compose(onto, g.inclusion)));
}

TEST_CASE("property: gamma subspace identities on the corpus") {
  for (const auto& f : corpus_and_named()) {
    CAPTURE(f.name);
    const auto& x = f.module;
    const auto g = gamma(x);
    // (1) X generates γX
    const auto to_gamma = hom_basis(x, g.sub);
    std::vector<Morphism> maps;
    for (int i = 0; i < to_gamma.dim(); ++i) maps.push_back(compose(to_gamma.basis_element(i), g.inclusion));
    CHECK(same_spaces(image_span(maps, x), g));
    // (2) radical maps factor through γX
    const auto rad = radical_hom(x, x);
    for (int i = 0; i < rad.dim(); ++i) CHECK(vertex_contained(image(rad.element(i), x), g));
    // (3) proper
    if (!x.is_zero()) CHECK(g.length() < x.length());
    // (4) summand-wise
    const auto dec = decompose(x);
    std::vector<SubspaceQ> acc(static_cast<std::size_t>(x.algebra().num_vertices()));
    for (std::size_t v = 0; v < acc.size(); ++v) acc[v] = SubspaceQ(x.dim(static_cast<int>(v)));
    for (const auto& cl : dec.classes)
      for (int c = 0; c < cl.multiplicity; ++c) {
        const auto xi = image(cl.injections[c], x);
        const auto rxi = radical_hom(x, cl.rep);
        std::vector<Morphism> into;
        for (int i = 0; i < rxi.dim(); ++i) into.push_back(compose(rxi.element(i), cl.injections[c]));
        const auto span = image_span(into, x);
        for (std::size_t v = 0; v < acc.size(); ++v) {
          const auto meet = intersection(xi.spaces[v], g.spaces[v]);
          CHECK(meet == span.spaces[v]);
          acc[v] = span_sum(acc[v], meet);
        }
      }
    for (std::size_t v = 0; v < acc.size(); ++v) CHECK(acc[v] == g.spaces[v]);
  }
}

TEST_CASE("property: gamma commutes with powers") {
  auto c = cli::random_corpus(19, 25);
  for (const auto& f : c.fixtures) {
    if (f.module.length() > 6) continue;
    CAPTURE(f.name);
    auto x2 = power(f.module, 2);
    auto g = gamma(f.module);
    auto g2 = gamma(x2);
    CHECK(g2.length() == 2 * g.length());
    CHECK(is_isomorphic(g2.sub, power(g.sub, 2)));
  }
}

TEST_CASE("factoring subspace") {
  auto c3 = example_algebra("cyc3");
  auto lam = regular_module(c3);
  auto p1 = projective(c3, 0);
  CHECK(factoring_subspace(p1, lam, p1).dim() == hom_basis(lam, p1).dim());
  CHECK(factoring_subspace(Representation::zero(c3), lam, p1).dim() == 0);
  auto m2 = gamma(lam).sub;
  CHECK(hom_basis(lam, p1).dim() == 3);
  CHECK(hom_basis(lam, p1).dim() - factoring_subspace(m2, lam, p1).dim() == 1);
}

TEST_CASE("direct sums") {
  auto c3 = example_algebra("cyc3");
  std::vector<Representation> none;
  CHECK(direct_sum(c3, none).sum.is_zero());
  std::vector<Representation> one{projective(c3, 0)};
  CHECK(is_isomorphic(direct_sum(c3, one).sum, projective(c3, 0)));
  auto c = cli::random_corpus(23, 10);
  for (const auto& f : c.fixtures) {
    std::vector<Representation> parts{f.module, dual_regular_module(f.algebra)};
    auto s = direct_sum(f.algebra, parts);
    CHECK(s.sum.length() == f.module.length() + f.algebra->total_dim());
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(compose(s.injections[i], s.projections[i]) == identity_morphism(parts[i]));
      CHECK(is_homomorphism(s.injections[i], parts[i], s.sum));
    }
    CHECK(is_zero(compose(s.injections[0], s.projections[1])));
  }
}

TEST_CASE("decomposition") {
  auto a2 = example_algebra("a2");
  auto pp = power(projective(a2, 0), 2);
  auto d = decompose(pp);
  REQUIRE(d.classes.size() == 1);
  CHECK(d.classes[0].multiplicity == 2);

  auto c3 = example_algebra("cyc3");
  auto dl = decompose(regular_module(c3));
  CHECK(dl.classes.size() == 3);
  for (const auto& cl : dl.classes) CHECK(cl.multiplicity == 1);

  auto c = cli::random_corpus(29, 25);
  for (const auto& f : c.fixtures) {
    CAPTURE(f.name);
    auto dec = decompose(f.module);
    int len = 0;
    for (const auto& cl : dec.classes) {
      CHECK(cl.end_dim - cl.rad_dim == 1);
      len += cl.multiplicity * cl.rep.length();
      for (int k = 0; k < cl.multiplicity; ++k) {
        CHECK(compose(cl.injections[k], cl.projections[k]) == identity_morphism(cl.rep));
        CHECK(is_injective(cl.injections[k]));
      }
    }
    CHECK(len == f.module.length());
    for (std::size_t i = 0; i < dec.classes.size(); ++i)
      for (std::size_t j = i + 1; j < dec.classes.size(); ++j)
        CHECK_FALSE(is_isomorphic(dec.classes[i].rep, dec.classes[j].rep));
  }
}

TEST_CASE("isomorphism") {
  auto a2 = example_algebra("a2");
  CHECK(is_isomorphic(regular_module(a2), regular_module(a2)));
  CHECK_FALSE(is_isomorphic(projective(a2, 0), projective(a2, 1)));
  CHECK(is_isomorphic(injective(a2, 1), projective(a2, 0)));
  CHECK(indecomposables_isomorphic(injective(a2, 1), projective(a2, 0)));
  CHECK_FALSE(indecomposables_isomorphic(simple(a2, 0), simple(a2, 1)));
  // same dimension vector, not isomorphic
  auto l3 = example_algebra("loop3");
  auto x = power(simple(l3, 0), 2);
  auto p2 = quotient(regular_module(l3), generated_subrep(regular_module(l3), {SubspaceQ::from_rows(
                                                                                 MatrixQ((MatrixQ(1, 3) << 0, 0, 1).finished()))}))
                .rep;
  REQUIRE(p2.length() == 2);
  CHECK_FALSE(is_isomorphic(x, p2));
}
