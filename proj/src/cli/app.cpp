#include "gforge/cli.hpp"

#include "gforge/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <sstream>

namespace gforge::cli {

namespace {

using Json = nlohmann::ordered_json;

Json dims_json(const Representation& x) { return Json(x.dims()); }

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

LayerFunction parse_layers(const std::string& text, int simples) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("--layers: '" + item + "' is not an integer");
    }
  }
  if (static_cast<int>(values.size()) != simples)
    throw InputError("--layers: expected " + std::to_string(simples) + " values, got " +
                     std::to_string(values.size()));
  return LayerFunction(values);
}

Json verdict_json(const SimpleVerdict& v) {
  Json j;
  j["simple"] = v.simple + 1;
  j["layer"] = v.layer;
  j["dim_P"] = v.dim_p;
  j["dim_R"] = v.dim_r;
  j["dim_Delta"] = v.dim_delta;
  j["R_tops"] = one_based(v.r_tops);
  j["rad_Delta_composition"] = v.rad_delta_composition;
  j["condition_a"] = v.condition_a;
  j["condition_b"] = v.condition_b;
  j["pd_Delta"] = v.pd_delta ? Json(*v.pd_delta) : Json(nullptr);
  return j;
}

Json report_json(const QHReport& r) {
  Json j;
  j["layer_function"] = r.layers.values();
  j["layers"] = r.layers.n();
  Json simples = Json::array();
  for (const auto& v : r.simples) simples.push_back(verdict_json(v));
  j["simples"] = simples;
  j["lsqh"] = r.lsqh;
  j["delta_filtration"] = r.delta_filtered;
  Json filt = Json::array();
  for (const auto& f : r.filtrations) filt.push_back(one_based(f));
  j["filtrations"] = filt;
  j["gldim"] = r.gldim ? Json(*r.gldim) : Json(nullptr);
  j["syzygy_bound"] = r.bound;
  return j;
}

Json filtration_json(const AssembledM& a) {
  Json j;
  j["d"] = a.d();
  j["chain_lengths"] = a.filtration.lengths();
  Json parts = Json::array();
  for (int i = 0; i < a.num_summands(); ++i) {
    const auto& s = a.basic[static_cast<std::size_t>(i)];
    Json p;
    p["dims"] = dims_json(s.n);
    p["layer"] = s.layer;
    p["interval"] = {s.lo, s.hi};
    p["multiplicities"] = s.multiplicities;
    p["alpha_dims"] = dims_json(s.alpha.sub);
    parts.push_back(p);
  }
  j["summands"] = parts;
  return j;
}

struct Loaded {
  AlgebraPtr algebra;
  std::string algebra_text;
};

Loaded load_algebra(const Options& o) {
  if (o.example && o.algebra_file) throw InputError("give either --example or --algebra, not both");
  Loaded l;
  if (o.example) {
    l.algebra = example_algebra(*o.example, o.max_path_len.value_or(kDefaultMaxPathLen));
  } else if (o.algebra_file) {
    l.algebra = parse_algebra(read_file(*o.algebra_file), o.max_path_len);
  } else {
    throw InputError("no algebra given (use --example NAME or --algebra FILE)");
  }
  l.algebra_text = serialize_algebra(*l.algebra);
  return l;
}

FdAlgebraPtr path_gamma(const AlgebraPtr& alg, bool opposite) {
  const FdAlgebra g = path_algebra(*alg);
  return std::make_shared<const FdAlgebra>(opposite ? g.opposite() : g);
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_string())
      out << it.key() << ": " << it.value().get<std::string>() << "\n";
    else
      out << it.key() << ": " << it.value().dump() << "\n";
  }
  return out.str();
}

int execute(const Options& o, Json& report) {
  report["schema_version"] = kSchemaVersion;
  report["engine"] = std::string("gamma-forge ") + kEngineVersion;
  report["command"] = o.command;
  report["seed"] = o.seed;

  if (o.command == "example") {
    const Loaded l = load_algebra(o);
    report["algebra"] = l.algebra->name();
    report["total_dim"] = l.algebra->total_dim();
    report["text"] = l.algebra_text;
    return 0;
  }

  const Loaded l = load_algebra(o);
  Json input;
  input["algebra"] = l.algebra->name();
  input["algebra_digest"] = fnv1a_hex(l.algebra_text);
  input["total_dim"] = l.algebra->total_dim();

  const bool needs_module = o.command == "gamma" || o.command == "filtration" || o.command == "certify";
  Representation x;
  if (needs_module) {
    x = resolve_module(o.module, l.algebra);
    input["module"] = o.module;
    input["module_digest"] = fnv1a_hex(serialize_module(x));
    input["module_length"] = x.length();
  }
  report["input"] = input;

  if (o.command == "gamma") {
    const Subrep g = gamma(x);
    report["x_dims"] = dims_json(x);
    report["gamma_dims"] = dims_json(g.sub);
    report["gamma_length"] = g.length();
    Json parts = Json::array();
    for (const auto& c : decompose(g.sub, o.seed).classes) parts.push_back({{"dims", dims_json(c.rep)}, {"multiplicity", c.multiplicity}});
    report["gamma_summands"] = parts;
    return 0;
  }
  if (o.command == "filtration") {
    const AssembledM a = layered_summands(iyama_filtration(x), o.seed);
    Json f = filtration_json(a);
    bool all = true;
    for (int i = 0; i < a.num_summands(); ++i) {
      const bool ok = verify_approximation(a, i, a.basic[static_cast<std::size_t>(i)].alpha);
      f["summands"][static_cast<std::size_t>(i)]["approximation_verified"] = ok;
      all = all && ok;
    }
    report["filtration"] = f;
    report["verified"] = all;
    return all ? 0 : 1;
  }
  if (o.command == "certify") {
    const IyamaCertificate c = iyama_certificate(x, o.seed, o.bound);
    report["filtration"] = filtration_json(c.assembled);
    report["gamma_dim"] = c.gamma.algebra->dim();
    report["qh"] = report_json(c.report);
    Json checks = Json::array();
    for (const auto& s : c.summands) {
      Json j;
      j["summand"] = s.summand + 1;
      j["layer"] = s.layer;
      j["dim_Hom_M_alphaN"] = s.dim_hom_alpha;
      j["dim_Delta"] = s.dim_delta;
      j["dim_Hom_M_N"] = s.dim_hom_n;
      j["sequence_exact"] = s.sequence_exact;
      j["kernel_is_factoring"] = s.kernel_is_factoring;
      j["R_matches_alpha"] = s.r_matches_alpha;
      j["alpha_layers_higher"] = s.alpha_layers_higher;
      j["approximation"] = s.approximation;
      j["embeds_in_X_summand"] = s.embeds ? Json(*s.embeds) : Json(nullptr);
      checks.push_back(j);
    }
    report["summand_checks"] = checks;
    report["d_at_most_length"] = c.d_at_most_length;
    report["layers_match_d"] = c.layers_match_d;
    report["gldim_at_most_d"] = c.gldim_at_most_d;
    report["verified"] = c.ok;
    return c.ok ? 0 : 1;
  }
  if (o.command == "lsqh") {
    const FdAlgebraPtr g = path_gamma(l.algebra, o.opposite);
    std::vector<int> ident;
    for (int j = 1; j <= g->num_simples(); ++j) ident.push_back(j);
    const LayerFunction lf = o.layers ? parse_layers(*o.layers, g->num_simples()) : LayerFunction(ident);
    report["opposite"] = o.opposite;
    report["qh"] = report_json(lsqh_check(g, lf, o.bound));
    const bool ok = report["qh"]["lsqh"].get<bool>();
    report["verified"] = ok;
    return ok ? 0 : 1;
  }
  if (o.command == "rsqh-search") {
    const RsqhSearchResult r = rsqh_search(*path_gamma(l.algebra, o.opposite));
    report["candidates"] = r.candidates;
    report["evaluated"] = r.evaluated;
    report["found"] = r.found ? Json(r.found->values()) : Json(nullptr);
    report["message"] = r.found ? "layer function found on the opposite algebra"
                                : "no layer function among " + std::to_string(r.candidates) + " passes";
    return r.found ? 0 : 1;
  }
  if (o.command == "gldim") {
    const FdAlgebraPtr g = path_gamma(l.algebra, o.opposite);
    report["gldim"] = global_dimension(g, o.bound.value_or(default_bound(*g)));
    return 0;
  }
  if (o.command == "repdim-bound") {
    const RepDimBound r = rep_dim_upper_bound(l.algebra, o.seed, o.bound);
    report["d"] = r.certificate.d();
    report["length_x"] = r.certificate.length_x;
    report["two_total_dim"] = 2 * l.algebra->total_dim();
    report["gamma_dim"] = r.certificate.gamma.algebra->dim();
    report["bound"] = r.bound;
    report["verified"] = r.ok;
    return r.ok ? 0 : 1;
  }
  throw InputError("unknown command '" + o.command + "'");
}

}  // namespace

int run_command(const Options& opts, std::ostream& out, std::ostream& err) {
  Json report;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = execute(opts, report);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (opts.timings)
    report["timings_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  report["exit_code"] = code;
  if (opts.json)
    out << report.dump(2) << "\n";
  else if (opts.command == "example")
    out << report["text"].get<std::string>();
  else
    out << render_text(report);
  return code;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gamma_forge: layer filtrations and strongly quasi-hereditary certificates"};
  Options o;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  app.add_option("command", o.command,
                 "gamma | filtration | certify | lsqh | rsqh-search | gldim | repdim-bound | example")
      ->required();
  app.add_option("name", name, "registry name for `example`");
  app.add_option("--example", o.example, "registry algebra: a2, cycN, ringel-a2x, loopN, ssN");
  app.add_option("--algebra", o.algebra_file, "algebra file");
  app.add_option("--module", o.module, "regular | dual | regular+dual | module file");
  app.add_option("--seed", seed, "seed for randomized searches (default $GAMMA_FORGE_SEED or 0)");
  app.add_option("--max-path-len", o.max_path_len, "maximal path length before giving up");
  app.add_option("--bound", o.bound, "syzygy bound (default #simples + 2)");
  app.add_option("--layers", o.layers, "layer function, e.g. 1,2,2");
  app.add_flag("--json", o.json, "JSON report");
  app.add_flag("--opposite", o.opposite, "use the opposite algebra (lsqh, rsqh-search, gldim)");
  app.add_flag("--timings", o.timings, "add wall-clock timings to the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  if (seed) {
    o.seed = *seed;
  } else if (const char* env = std::getenv("GAMMA_FORGE_SEED")) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::logic_error&) {
      err << "input error: GAMMA_FORGE_SEED='" << env << "' is not an unsigned integer\n";
      return 2;
    }
  }
  if (o.command == "example" && name && !o.example) o.example = name;
  return run_command(o, out, err);
}

}  // namespace gforge::cli
