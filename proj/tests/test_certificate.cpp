#include "doctest.h"
#include "support.hpp"

#include "gforge/qhcheck.hpp"

using namespace gforge;
using cli::example_algebra;

namespace {

void check_all(const IyamaCertificate& c) {
  CHECK(c.ok);
  CHECK(c.report.lsqh);
  CHECK(c.report.delta_filtered);
  CHECK(c.d_at_most_length);
  CHECK(c.layers_match_d);
  CHECK(c.gldim_at_most_d);
  CHECK(c.report.layers.n() == c.d());
  REQUIRE(c.report.gldim);
  CHECK(*c.report.gldim <= c.d());
  CHECK(c.d() <= c.length_x);
  for (const auto& s : c.summands) {
    CAPTURE(s.summand);
    CHECK(s.sequence_exact);
    CHECK(s.kernel_is_factoring);
    CHECK(s.r_matches_alpha);
    CHECK(s.alpha_layers_higher);
    CHECK(s.approximation);
    CHECK(s.dim_hom_n == s.dim_hom_alpha + s.dim_delta);
    if (s.layer >= 2) {
      REQUIRE(s.embeds);
      CHECK(*s.embeds);
    } else {
      CHECK_FALSE(s.embeds);
    }
  }
}

}  // namespace

TEST_CASE("certificate: a2 with X = regular") {
  auto c = iyama_certificate(regular_module(example_algebra("a2")));
  check_all(c);
  CHECK(c.d() == 2);
  CHECK(*c.report.gldim == 1);
}

TEST_CASE("certificate: named fixtures with X = regular + dual") {
  for (auto name : {"cyc3", "loop3", "cyc4"}) {
    CAPTURE(name);
    auto alg = example_algebra(name);
    auto c = iyama_certificate(gft::regular_plus_dual(alg));
    check_all(c);
  }
  auto c3 = iyama_certificate(gft::regular_plus_dual(example_algebra("cyc3")));
  CHECK(c3.length_x == 14);
  CHECK(c3.d() == 3);
}

TEST_CASE("certificate: loop3 gives the Auslander algebra") {
  auto l3 = example_algebra("loop3");
  auto c = iyama_certificate(gft::regular_plus_dual(l3));
  check_all(c);
  CHECK(c.d() == 3);
  REQUIRE(c.assembled.num_summands() == 3);
  // the indecomposables are k[x]/x^i, i = 1, 2, 3
  const auto reg = regular_module(l3);
  for (int i = 1; i <= 3; ++i) {
    MatrixQ rows = MatrixQ::Zero(3 - i, 3);
    for (int k = 0; k < 3 - i; ++k) rows(k, i + k) = 1;
    auto ki = quotient(reg, generated_subrep(reg, {SubspaceQ::from_rows(rows)})).rep;
    REQUIRE(ki.length() == i);
    int hits = 0;
    for (const auto& n : c.assembled.basic) hits += is_isomorphic(n.n, ki);
    CHECK(hits == 1);
  }
  CHECK(*c.report.gldim == 2);
}

TEST_CASE("representation dimension bounds") {
  auto a2 = rep_dim_upper_bound(example_algebra("a2"));
  CHECK(a2.ok);
  CHECK(a2.bound == 2);
  auto l3 = rep_dim_upper_bound(example_algebra("loop3"));
  CHECK(l3.ok);
  CHECK(l3.bound == 2);
  CHECK(l3.certificate.d() == 3);
  auto ss = rep_dim_upper_bound(example_algebra("ss2"));
  CHECK(ss.ok);
  CHECK(ss.bound == 0);
  CHECK(ss.certificate.d() == 1);
}

TEST_CASE("property: certificate holds on the random corpus") {
  auto corpus = cli::random_corpus(71, 25);
  REQUIRE(corpus.fixtures.size() == 25);
  for (const auto& f : corpus.fixtures) {
    CAPTURE(f.name);
    check_all(iyama_certificate(f.module, 71));
    // same answer from a different decomposition seed
    CHECK(iyama_certificate(f.module, 3).report.gldim == iyama_certificate(f.module, 71).report.gldim);
  }
}
