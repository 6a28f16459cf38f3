#pragma once

// Front end: text formats, the example registry, JSON reports, command
// dispatch and the seeded random corpus.

#include "gforge/bqa.hpp"
#include "gforge/errors.hpp"
#include "gforge/qhcheck.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gforge::cli {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// A parse failure with its 1-based position.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Algebra files:
//   name cyc3
//   vertices 1 2 3
//   arrow alpha1 : 1 -> 3
//   rel alpha2*alpha1
//   rel 2*a*b + -1/2*c*d
//   maxlen 30
// Module files:
//   algebra cyc3
//   dims 1 1 1
//   arrow alpha1
//   1
// Matrix rows follow their `arrow` line; omitted arrows act as zero.
// `#` starts a comment.
AlgebraPtr parse_algebra(const std::string& text, std::optional<int> max_path_len = {});
Representation parse_module(const std::string& text, const AlgebraPtr& alg);
std::string serialize_algebra(const BoundQuiverAlgebra& alg);
std::string serialize_module(const Representation& x);

std::string read_file(const std::string& path);

/// Registry names: a2, cycN (N >= 2), ringel-a2x, loopN (N >= 2), ssN (N >= 1).
AlgebraPtr example_algebra(const std::string& name, int max_path_len = kDefaultMaxPathLen);
std::vector<std::string> example_names();

/// `regular`, `dual`, `regular+dual`, or a module file path.
Representation resolve_module(const std::string& spec, const AlgebraPtr& alg);

std::string fnv1a_hex(const std::string& data);

struct CorpusLimits {
  int max_vertices = 4;
  int max_arrows = 6;
  int max_module_length = 12;
  int max_path_len = 6;
  int max_total_dim = 16;
};

struct Fixture {
  std::string name;
  AlgebraPtr algebra;
  Representation module;
};

struct Corpus {
  std::vector<Fixture> fixtures;
  int rejected_algebras = 0;  // not finite-dimensional within the limits
  int skipped_non_split = 0;  // decomposition could not be certified
};

/// Reproducible random (algebra, module) pairs with monomial relations.
Corpus random_corpus(std::uint64_t seed, int count, const CorpusLimits& limits = {});

struct Options {
  std::string command;
  std::optional<std::string> example;
  std::optional<std::string> algebra_file;
  std::string module = "regular";
  std::uint64_t seed = 0;
  std::optional<int> max_path_len;
  std::optional<int> bound;
  std::optional<std::string> layers;
  bool json = false;
  bool opposite = false;
  bool timings = false;
};

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the exit code: 0 verified, 1 verification failed, 2 input error,
/// 3 resource bound.
int run_command(const Options& opts, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gforge::cli
