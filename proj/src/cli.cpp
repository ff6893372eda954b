#include "switchmix/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "switchmix/bounds.hpp"
#include "switchmix/chain.hpp"
#include "switchmix/construct.hpp"
#include "switchmix/degseq.hpp"
#include "switchmix/encoding.hpp"
#include "switchmix/enumerate.hpp"
#include "switchmix/errors.hpp"
#include "switchmix/io.hpp"
#include "switchmix/irreducibility.hpp"
#include "switchmix/schema.hpp"

namespace switchmix::cli {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Written into the result document; sets the exit code.
struct Failure {
  int code;
  std::string reason;
};

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string subcommand;
  std::string degrees_file;
  std::string sequence;
  bool directed = false;
  bool json = false;
  std::string out_file;
  std::string manifest_file;
  std::optional<std::size_t> cap;
  std::string variant = "exact";
  std::uint64_t seed = 1;
  std::uint64_t steps = 1000;
  std::uint64_t thin = 1;
  std::size_t count = 1;
  std::size_t replicas = 1;
  double eps = 0.01;
  std::size_t start = 0;
  std::size_t horizon = 0;
  bool exact_tv = false;
  bool list_states = false;
  std::string encoding_file;
  std::string sidecar_file;
};

struct Input {
  std::optional<DegreeSequence> d;
  std::optional<DirectedDegreeSequence> dd;
  Json record;
};

class Runner {
 public:
  Runner(const Options& o, Json& manifest) : o_(o), manifest_(manifest) {}

  Json run() {
    const std::string& c = o_.subcommand;
    if (c == "validate") return validate();
    if (c == "realize") return realize();
    if (c == "sample") return sample();
    if (c == "analyze") return analyze();
    if (c == "irreducible") return irreducible();
    if (c == "bound") return bound();
    if (c == "repair-encoding") return repair_encoding();
    throw UsageError("unknown subcommand '" + c + "'");
  }

  std::optional<Failure> failure;

 private:
  Json header() const {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["subcommand"] = o_.subcommand;
    return j;
  }

  Input load() {
    if (o_.degrees_file.empty() == o_.sequence.empty()) throw UsageError("give exactly one of --degrees or --sequence");
    Input in;
    std::string text;
    if (!o_.degrees_file.empty()) {
      text = read_file(o_.degrees_file);
      in.record = {{"kind", "degrees"}, {"path", o_.degrees_file}, {"sha256", sha256_hex(text)}};
      std::istringstream s(text);
      if (o_.directed) {
        in.dd = read_directed_degree_sequence(s);
      } else {
        in.d = read_degree_sequence(s);
      }
    } else {
      text = o_.sequence;
      in.record = {{"kind", "sequence"}, {"text", text}, {"sha256", sha256_hex(text)}};
      if (o_.directed) {
        in.dd = parse_directed_degree_sequence(text);
      } else {
        in.d = parse_degree_sequence(text);
      }
    }
    manifest_["inputs"].push_back(in.record);
    return in;
  }

  static Json degrees_json(const Input& in) {
    if (in.d) return Json(std::vector<int>(in.d->degrees().begin(), in.d->degrees().end()));
    Json a = Json::array();
    for (const auto& p : in.dd->pairs()) a.push_back({p.in, p.out});
    return a;
  }

  std::size_t cap() const {
    if (o_.cap) return *o_.cap;
    if (const char* env = std::getenv("SWITCHMIX_CAP")) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string_view(env).size()) return static_cast<std::size_t>(v);
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("SWITCHMIX_CAP is not a non-negative integer: '") + env + "'");
    }
    return kDefaultStateCap;
  }

  Variant variant() const {
    try {
      return parse_variant(o_.variant);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  void fail(int code, std::string reason, Json& doc) {
    doc["error"] = {{"exit_code", code}, {"reason", reason}};
    failure = Failure{code, std::move(reason)};
  }

  static Json edges_json(const Graph& g) {
    Json a = Json::array();
    for (const auto& e : g.sorted_edges()) a.push_back({e.u, e.v});
    return a;
  }
  static Json edges_json(const Digraph& g) {
    Json a = Json::array();
    for (const auto& e : g.sorted_arcs()) a.push_back({e.tail, e.head});
    return a;
  }

  // Unbalanced totals make the directed classification throw; report them
  // as a validation failure instead.
  static std::optional<DirectedClassification> classify_or_empty(const DirectedDegreeSequence& dd) {
    if (!dd.balanced()) return std::nullopt;
    return classify_directed(dd);
  }

  Json validate() {
    const Input in = load();
    Json doc = header();
    doc["directed"] = o_.directed;
    doc["degrees"] = degrees_json(in);
    if (in.d) {
      const DegreeStats s = stats(*in.d);
      const Classification c = classify(*in.d);
      doc["graphical"] = c.graphical;
      doc["stable"] = c.stable;
      doc["theorem1_applicable"] = c.theorem1_applicable;
      doc["M"] = s.M;
      doc["M2"] = s.M2;
      doc["nonadjacent_pairs"] = s.a ? s.a->str() : std::string();
      doc["d_min"] = s.d_min;
      doc["d_max"] = s.d_max;
      if (!c.graphical) fail(kExitInvalid, "not graphical", doc);
    } else {
      const auto c = classify_or_empty(*in.dd);
      doc["digraphical"] = c && c->digraphical;
      doc["theorem2_degree_ok"] = c && c->theorem2_degree_ok;
      doc["m"] = in.dd->arcs();
      doc["r_min"] = in.dd->r_min();
      doc["r_max"] = in.dd->r_max();
      if (!c) {
        fail(kExitInvalid, "not digraphical: in- and out-degree totals differ", doc);
      } else if (!c->digraphical) {
        fail(kExitInvalid, "not digraphical", doc);
      }
    }
    return doc;
  }

  Json realize() {
    const Input in = load();
    Json doc = header();
    doc["directed"] = o_.directed;
    doc["degrees"] = degrees_json(in);
    try {
      if (in.d) {
        const Graph g = switchmix::realize(*in.d);
        doc["n"] = g.n();
        doc["edges"] = edges_json(g);
      } else {
        const Digraph g = realize_directed(*in.dd);
        doc["n"] = g.n();
        doc["arcs"] = edges_json(g);
      }
    } catch (const NotRealizable&) {
      fail(kExitInvalid, o_.directed ? "not digraphical" : "not graphical", doc);
    }
    return doc;
  }

  template <class State>
  Json run_replicas(const State& start, Variant v) {
    std::vector<Json> results(o_.replicas);
    std::vector<std::exception_ptr> errors(o_.replicas);
    auto work = [&](std::size_t r) {
      try {
        const std::uint64_t seed = replica_seed(o_.seed, r);
        ChainRun<State> run{start, o_.steps, seed, v, o_.thin, 0};
        Json samples = Json::array();
        run_chain(run, o_.count, [&](const State& s) { samples.push_back(edges_json(s)); });
        results[r] = {{"replica", r}, {"seed", seed}, {"samples", std::move(samples)}};
      } catch (...) {
        errors[r] = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t r = 1; r < o_.replicas; ++r) threads.emplace_back(work, r);
    if (o_.replicas > 0) work(0);
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    Json a = Json::array();
    for (auto& r : results) a.push_back(std::move(r));
    return a;
  }

  Json sample() {
    const Input in = load();
    const Variant v = variant();
    if (o_.thin == 0) throw UsageError("--thin must be at least 1");
    Json doc = header();
    doc["directed"] = o_.directed;
    doc["degrees"] = degrees_json(in);
    doc["variant"] = o_.directed ? "directed" : to_string(v);
    doc["seed"] = o_.seed;
    doc["steps"] = o_.steps;
    doc["thin"] = o_.thin;
    doc["count"] = o_.count;
    doc["replicas"] = o_.replicas;
    manifest_["seed"] = o_.seed;
    manifest_["variant"] = doc["variant"];
    if (o_.count == 0) {
      doc["results"] = Json::array();
      return doc;
    }
    try {
      doc["results"] = in.d ? run_replicas(switchmix::realize(*in.d), v) : run_replicas(realize_directed(*in.dd), v);
    } catch (const NotRealizable&) {
      fail(kExitInvalid, o_.directed ? "not digraphical" : "not graphical", doc);
    } catch (const FrozenChain& e) {
      fail(kExitInvalid, std::string("frozen chain: ") + e.what(), doc);
    }
    return doc;
  }

  template <class State>
  void fill_analysis(Json& doc, const StateSpaceAnalysis<State>& a) {
    doc["state_count"] = a.states.size();
    doc["transition_denominator"] = a.P.denominator.str();
    doc["start"] = a.start;
    doc["spectral_gap"] = a.spectral_gap;
    doc["mixing_time"] = a.mixing_time;
    doc["mixing_time_exact"] = a.mixing_time_exact;
    doc["worst_start"] = a.worst_start;
    Json curve = Json::array();
    for (const auto& x : a.tv_curve) curve.push_back(x.template convert_to<double>());
    doc["tv_curve"] = std::move(curve);
    if (o_.exact_tv) {
      Json exact = Json::array();
      for (const auto& x : a.tv_curve) exact.push_back(x.str());
      doc["tv_curve_exact"] = std::move(exact);
    }
    if (o_.list_states) {
      Json states = Json::array();
      for (const auto& s : a.states) states.push_back(edges_json(s));
      doc["states"] = std::move(states);
    }
  }

  Json analyze() {
    const Input in = load();
    AnalyzeOptions opt;
    opt.start = o_.start;
    opt.eps = o_.eps;
    opt.horizon = o_.horizon;
    opt.variant = variant();
    opt.cap = cap();
    if (!(o_.eps > 0.0 && o_.eps < 1.0)) throw UsageError("--eps must lie in (0, 1)");
    Json doc = header();
    doc["directed"] = o_.directed;
    doc["degrees"] = degrees_json(in);
    doc["variant"] = o_.directed ? "directed" : to_string(opt.variant);
    doc["eps"] = o_.eps;
    manifest_["variant"] = doc["variant"];
    manifest_["cap"] = opt.cap;
    try {
      if (in.d) {
        fill_analysis(doc, switchmix::analyze(*in.d, opt));
      } else {
        fill_analysis(doc, switchmix::analyze(*in.dd, opt));
      }
    } catch (const NotRealizable&) {
      fail(kExitInvalid, o_.directed ? "not digraphical" : "not graphical", doc);
    } catch (const CapExceeded& e) {
      fail(kExitCap, e.what(), doc);
    }
    return doc;
  }

  Json irreducible() {
    const Input in = load();
    const std::size_t c = cap();
    Json doc = header();
    doc["directed"] = o_.directed;
    doc["degrees"] = degrees_json(in);
    manifest_["cap"] = c;
    try {
      if (in.d) {
        const auto states = enum_states(*in.d, c);
        if (states.empty()) throw NotRealizable("not graphical");
        report(doc, switch_components(switch_adjacency(states)));
      } else {
        if (!in.dd->balanced()) throw NotRealizable("not digraphical");
        const auto states = enum_states(*in.dd, c);
        if (states.empty()) throw NotRealizable("not digraphical");
        const auto r = switch_components(switch_adjacency(states));
        report(doc, r);
        // Triangles without a useful neighbour or arc, in the first state
        // of each component.
        Json obstructions = Json::array();
        std::vector<bool> seen(r.component_count, false);
        for (std::size_t i = 0; i < states.size(); ++i) {
          if (seen[r.component_of[i]]) continue;
          seen[r.component_of[i]] = true;
          Json bare = Json::array();
          for (const auto& U : directed_triangles(states[i])) {
            if (!find_useful(states[i], U)) bare.push_back(U);
          }
          obstructions.push_back({{"component", r.component_of[i]},
                                  {"state", i},
                                  {"arcs", edges_json(states[i])},
                                  {"triangles_without_witness", std::move(bare)}});
        }
        doc["obstructions"] = std::move(obstructions);
      }
    } catch (const NotRealizable&) {
      fail(kExitInvalid, o_.directed ? "not digraphical" : "not graphical", doc);
    } catch (const CapExceeded& e) {
      fail(kExitCap, e.what(), doc);
    }
    return doc;
  }

  static void report(Json& doc, const ConnectivityReport& r) {
    doc["state_count"] = r.state_count;
    doc["transition_count"] = r.transition_count;
    doc["component_count"] = r.component_count;
    doc["component_sizes"] = r.component_sizes;
    doc["irreducible"] = r.irreducible;
  }

  Json bound() {
    const Input in = load();
    if (!(o_.eps > 0.0 && o_.eps < 1.0)) throw UsageError("--eps must lie in (0, 1)");
    Json doc = header();
    doc["directed"] = o_.directed;
    doc["degrees"] = degrees_json(in);
    doc["eps"] = o_.eps;
    try {
      const BoundReport r = in.d ? mixing_bound(*in.d, o_.eps) : mixing_bound(*in.dd, o_.eps);
      const FlowComponents c = in.d ? flow_components(*in.d) : flow_components(*in.dd);
      doc["applicable"] = r.applicable;
      doc["warning"] = r.warning;
      doc["formula"] = r.formula;
      doc["value"] = to_decimal(r.value);
      doc["polynomial"] = r.polynomial.str();
      doc["log_term"] = to_decimal(r.log_term);
      doc["components"] = {{"size", c.size},
                           {"max_degree", c.max_degree},
                           {"state_count_bound", c.state_count_bound.str()},
                           {"log_inverse_pi_bound", to_decimal(c.log_inverse_pi_bound)},
                           {"path_length_bound", c.path_length_bound.str()},
                           {"inverse_q", c.inverse_q.str()},
                           {"inverse_q_bound", c.inverse_q_bound.str()},
                           {"encoding_ratio_bound", c.encoding_ratio_bound.str()},
                           {"load_factor", c.load_factor.str()},
                           {"load_bound", c.load_bound.str()}};
    } catch (const std::invalid_argument& e) {
      fail(kExitInvalid, e.what(), doc);
    }
    return doc;
  }

  Json repair_encoding() {
    if (o_.encoding_file.empty()) throw UsageError("repair-encoding needs --encoding");
    const std::string csv = read_file(o_.encoding_file);
    manifest_["inputs"].push_back({{"kind", "encoding"}, {"path", o_.encoding_file}, {"sha256", sha256_hex(csv)}});
    std::string sidecar;
    Mode mode = o_.directed ? Mode::directed : Mode::undirected;
    if (!o_.sidecar_file.empty()) {
      sidecar = read_file(o_.sidecar_file);
      manifest_["inputs"].push_back({{"kind", "sidecar"}, {"path", o_.sidecar_file}, {"sha256", sha256_hex(sidecar)}});
      mode = sidecar_mode(sidecar);
    }
    std::istringstream s(csv);
    const Encoding L = read_encoding_csv(s, mode);
    if (!sidecar.empty()) check_sidecar(sidecar, L);

    Json doc = header();
    doc["mode"] = to_string(mode);
    doc["n"] = L.n();
    const DefectProfile before = defect_profile(L);
    const bool valid = is_valid_encoding(L);
    const bool good = is_good_encoding(L);
    doc["initial"] = {{"p", before.p}, {"q", before.q}, {"valid", valid}, {"good", good}};
    if (!good) {
      fail(kExitInvalid, valid ? "encoding is not good" : "encoding is not valid", doc);
      return doc;
    }
    const RepairResult r = repair(L);
    Json steps = Json::array();
    for (const auto& step : r.log) steps.push_back({{"phase", to_string(step.phase)}, {"tuple", step.tuple}});
    doc["steps"] = std::move(steps);
    doc["ok"] = r.ok();
    if (r.ok()) {
      doc[mode == Mode::undirected ? "edges" : "arcs"] =
          mode == Mode::undirected ? edges_json(r.encoding.to_graph()) : edges_json(r.encoding.to_digraph());
    } else {
      doc["stuck_at"] = {{"p", r.stuck->first}, {"q", r.stuck->second}};
      fail(kExitInvalid, "repair made no progress", doc);
    }
    return doc;
  }

  const Options& o_;
  Json& manifest_;
};

void add_input_options(CLI::App* sub, Options& o) {
  auto* degrees = sub->add_option("--degrees", o.degrees_file, "Degree sequence file");
  auto* sequence = sub->add_option("--sequence", o.sequence, "Inline sequence, e.g. 3,3,2,2 or 1:1,1:1");
  degrees->excludes(sequence);
  sub->add_flag("--directed", o.directed, "Read (in out) pairs");
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out_file, "Write the JSON result here");
  sub->add_option("--manifest", o.manifest_file, "Write the run manifest here");
  sub->add_flag("--json", o.json, "JSON output (always on)");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Switch chain sampling and analysis for fixed degree sequences", "switchmix"};
  app.set_version_flag("--version", SWITCHMIX_VERSION);
  app.require_subcommand(1);

  std::size_t cap_value = 0;
  auto add_cap = [&](CLI::App* sub) {
    return sub->add_option("--cap", cap_value, "State cap for enumeration (default 1000000 or SWITCHMIX_CAP)");
  };
  std::vector<std::pair<CLI::App*, CLI::Option*>> caps;

  auto* validate = app.add_subcommand("validate", "Check a sequence for realizability");
  add_input_options(validate, o);
  add_output_options(validate, o);

  auto* realize = app.add_subcommand("realize", "Construct one realization");
  add_input_options(realize, o);
  add_output_options(realize, o);

  auto* sample = app.add_subcommand("sample", "Run the switch chain");
  add_input_options(sample, o);
  add_output_options(sample, o);
  sample->add_option("--steps", o.steps, "Burn-in steps")->capture_default_str();
  sample->add_option("--thin", o.thin, "Steps between samples")->capture_default_str();
  sample->add_option("--count", o.count, "Samples per replica")->capture_default_str();
  sample->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  sample->add_option("--replicas", o.replicas, "Independent chains")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--variant", o.variant, "exact or all-pairs")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Exact analysis of an enumerable state space");
  add_input_options(analyze, o);
  add_output_options(analyze, o);
  analyze->add_option("--eps", o.eps, "Total variation threshold")->capture_default_str();
  analyze->add_option("--start", o.start, "Index of the start state")->capture_default_str();
  analyze->add_option("--horizon", o.horizon, "TV curve length (0: until eps)")->capture_default_str();
  analyze->add_option("--variant", o.variant, "exact or all-pairs")->capture_default_str();
  analyze->add_flag("--exact-tv", o.exact_tv, "Also emit the TV curve as exact fractions");
  analyze->add_flag("--list-states", o.list_states, "Emit the enumerated states");
  caps.emplace_back(analyze, add_cap(analyze));

  auto* irreducible = app.add_subcommand("irreducible", "Connectivity of the switch graph");
  add_input_options(irreducible, o);
  add_output_options(irreducible, o);
  caps.emplace_back(irreducible, add_cap(irreducible));

  auto* bound = app.add_subcommand("bound", "Closed-form mixing time bound");
  add_input_options(bound, o);
  add_output_options(bound, o);
  bound->add_option("--eps", o.eps, "Total variation threshold")->capture_default_str();

  auto* repair = app.add_subcommand("repair-encoding", "Remove the defects of an encoding");
  repair->add_option("--encoding", o.encoding_file, "Encoding matrix (CSV)")->required();
  repair->add_option("--sidecar", o.sidecar_file, "JSON sidecar with mode and degrees");
  repair->add_flag("--directed", o.directed, "Directed encoding (when there is no sidecar)");
  add_output_options(repair, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.subcommand = app.get_subcommands().front()->get_name();
  for (const auto& [sub, opt] : caps) {
    if (sub->parsed() && opt->count() > 0) o.cap = cap_value;
  }

  Json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["subcommand"] = o.subcommand;
  manifest["argv"] = std::vector<std::string>(args.begin(), args.end());
  manifest["version"] = SWITCHMIX_VERSION;
  manifest["inputs"] = Json::array();
  manifest["started_at"] = utc_now();

  int code = kExitOk;
  std::string result;
  try {
    Runner runner(o, manifest);
    result = runner.run().dump(2) + "\n";
    if (runner.failure) {
      code = runner.failure->code;
      err << "error: " << runner.failure->reason << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const NotRealizable& e) {
    err << "error: " << e.what() << '\n';
    code = kExitInvalid;
  } catch (const FrozenChain& e) {
    err << "error: frozen chain: " << e.what() << '\n';
    code = kExitInvalid;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    code = kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  }

  if (result.empty()) {
    // Nothing to write; the manifest still records the failed run.
  } else if (o.out_file.empty()) {
    out << result;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.out_file << "'\n";
      return kExitUsage;
    }
    f << result;
  }

  manifest["output_sha256"] = sha256_hex(result);
  manifest["exit_code"] = code;
  manifest["finished_at"] = utc_now();
  const std::string manifest_text = manifest.dump(2) + "\n";
  std::string manifest_path = o.manifest_file;
  if (manifest_path.empty() && !o.out_file.empty()) manifest_path = o.out_file + ".manifest.json";
  if (manifest_path.empty()) {
    err << manifest_text;
  } else {
    std::ofstream f(manifest_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << manifest_path << "'\n";
      return kExitUsage;
    }
    f << manifest_text;
  }
  return code;
}

}  // namespace switchmix::cli
