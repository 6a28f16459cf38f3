#include "gforge/cli.hpp"

#include "gforge/errors.hpp"

#include <regex>

namespace gforge::cli {

namespace {

Relation monomial(std::initializer_list<int> arrows) { return Relation{{RelationTerm{Rational(1), arrows}}}; }

// Vertices 1..n, alpha_i : i -> i-1 (alpha_1 : 1 -> n), and the paths
// i -> i-1 -> i-2 for i = 2..n as relations.
AlgebraPtr cyclic(int n, int maxlen) {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) a.push_back({"alpha" + std::to_string(i), i - 1, (i + n - 2) % n});
  std::vector<Relation> rels;
  for (int i = 2; i <= n; ++i) rels.push_back(monomial({i - 1, i - 2}));
  return BoundQuiverAlgebra::build("cyc" + std::to_string(n), Quiver(v, a), rels, maxlen);
}

AlgebraPtr truncated_loop(int n, int maxlen) {
  const Relation power{{RelationTerm{Rational(1), std::vector<int>(static_cast<std::size_t>(n), 0)}}};
  return BoundQuiverAlgebra::build("loop" + std::to_string(n), Quiver({"1"}, {{"x", 0, 0}}), {power}, maxlen);
}

AlgebraPtr semisimple(int n, int maxlen) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return BoundQuiverAlgebra::build("ss" + std::to_string(n), Quiver(v, {}), {}, maxlen);
}

}  // namespace

AlgebraPtr example_algebra(const std::string& name, int max_path_len) {
  std::smatch m;
  if (name == "a2")
    return BoundQuiverAlgebra::build("a2", Quiver({"1", "2"}, {{"a", 0, 1}}), {}, max_path_len);
  if (name == "ringel-a2x") {
    // alpha: 1 -> 2, alpha': 2 -> 1, beta: 1 -> 3, beta': 3 -> 1.
    Quiver q({"1", "2", "3"}, {{"alpha", 0, 1}, {"alpha'", 1, 0}, {"beta", 0, 2}, {"beta'", 2, 0}});
    std::vector<Relation> rels{monomial({1, 0}), monomial({1, 2}), monomial({3, 2}), monomial({3, 0, 1})};
    return BoundQuiverAlgebra::build("ringel-a2x", q, rels, max_path_len);
  }
  static const std::regex family(R"((cyc|loop|ss)([0-9]{1,2}))");
  if (std::regex_match(name, m, family)) {
    const int n = std::stoi(m[2]);
    if (m[1] == "cyc" && n >= 2) return cyclic(n, max_path_len);
    if (m[1] == "loop" && n >= 2) return truncated_loop(n, max_path_len);
    if (m[1] == "ss" && n >= 1) return semisimple(n, max_path_len);
  }
  throw InputError("unknown example '" + name + "' (known: a2, cycN, ringel-a2x, loopN, ssN)");
}

std::vector<std::string> example_names() { return {"a2", "cyc3", "cyc4", "ringel-a2x", "loop3", "ss2"}; }

}  // namespace gforge::cli
