#include "qtrade/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtrade/adversary.hpp"
#include "qtrade/entropy.hpp"
#include "qtrade/error.hpp"
#include "qtrade/grover.hpp"
#include "qtrade/knuth_yao.hpp"
#include "qtrade/state_io.hpp"
#include "qtrade/stateprep.hpp"

namespace qtrade::cli {

namespace {

using Json = nlohmann::ordered_json;

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Plain rendering: one "key: value" line per scalar field, reals with six
// fractional digits.
std::string render_plain(const Json& doc) {
  std::ostringstream os;
  for (const auto& [key, value] : doc.items()) {
    os << key << ": ";
    if (value.is_number_float()) {
      os << fixed6(value.get<double>());
    } else if (value.is_string()) {
      os << value.get<std::string>();
    } else {
      os << value.dump();
    }
    os << '\n';
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<double> parse_probs(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse probability \"" + item + "\"");
    }
  }
  return out;
}

Json prep_json(const PrepReport& r) {
  Json j;
  j["requested_eps"] = r.requested_eps;
  j["achieved_distance"] = r.achieved_distance;
  j["basis_changing_count"] = r.basis_changing_count;
  j["emitted_basis_changing"] = r.emitted_basis_changing;
  j["emitted_rotations"] = r.emitted_rotations;
  j["layer_count"] = r.layer_count;
  j["lambda"] = r.lambda;
  j["lambda_nominal"] = r.lambda_nominal;
  j["lambda_escalated"] = r.lambda_escalated;
  j["k"] = r.k;
  j["precision"] = r.precision;
  j["precision_alt"] = r.precision_alt;
  j["entropy_H"] = round6(r.entropy_h);
  j["kept_count"] = r.kept_count;
  j["tail_mass"] = r.tail_mass;
  j["num_qubits"] = r.num_qubits;
  return j;
}

Json run_json(const RunReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  if (r.mode == RunMode::Hybrid) {
    j["T_target"] = r.t_target;
    j["h"] = r.h;
    j["block_size"] = r.block_size;
  }
  j["register_dim"] = r.register_dim;
  j["iterations"] = r.iterations;
  j["queries"] = r.queries;
  j["layers"] = r.layers;
  j["success_probability"] = r.success_probability;
  j["product_over_n"] = r.product_over_n();
  return j;
}

struct Options {
  std::uint64_t seed = 0;
  std::string format = "structured";
  std::string out_path;

  std::string state_path;
  std::string dist_path;
  std::string probs;
  std::size_t random_qubits = 0;
  double eps = -1.0;
  std::string dump_state;
  std::string dump_circuit_stats;

  std::size_t precision = 32;
  std::size_t samples = 0;
  bool dump_tree = false;

  std::size_t n = 0;
  std::string mode = "standard";
  std::size_t t_target = 0;
  long long marked = -1;
  std::vector<std::size_t> targets;
  std::string csv_path;

  std::string relation = "grover";
  long long k = -1;
};

ProbDist load_distribution(const Options& o) {
  const int given = !o.dist_path.empty() + !o.state_path.empty() + !o.probs.empty();
  if (given != 1) {
    throw ValidationError("give exactly one of --dist, --state, --probs");
  }
  if (!o.dist_path.empty()) return read_distribution_file(o.dist_path);
  if (!o.probs.empty()) return ProbDist(parse_probs(o.probs));
  return measurement_distribution(read_state_file(o.state_path));
}

Json cmd_prep(const Options& o) {
  if (!(o.eps > 0.0 && o.eps < 1.0)) throw ValidationError("--eps must lie in (0, 1)");
  std::mt19937_64 rng(o.seed);
  if (o.state_path.empty() == (o.random_qubits == 0)) {
    throw ValidationError("give exactly one of --state, --random-qubits");
  }
  const TargetState target = o.state_path.empty()
      ? random_target(o.random_qubits, rng)
      : TargetState::from_state(read_state_file(o.state_path));
  const PrepResult result = synthesize(target, o.eps);
  if (!o.dump_state.empty()) {
    write_file(o.dump_state, format_state(simulate(result.circuit)));
  }
  return prep_json(result.report);
}

Json cmd_entropy(const Options& o) {
  const ProbDist d = load_distribution(o);
  Json j;
  j["num_outcomes"] = d.size();
  j["shannon_entropy"] = round6(shannon_entropy(d));
  if (o.eps >= 0.0) {
    j["eps"] = o.eps;
    j["smoothed_entropy_lb"] = round6(smoothed_entropy_lb(d, o.eps));
  }
  return j;
}

Json cmd_ky(const Options& o, std::string& tree_text) {
  const ProbDist d = load_distribution(o);
  const DdgTree tree = build_ddg(d, o.precision);
  const double h = shannon_entropy(d);
  const double flips = expected_flips(tree);
  Json j;
  j["num_outcomes"] = d.size();
  j["precision_bits"] = o.precision;
  j["entropy"] = round6(h);
  j["expected_flips"] = round6(flips);
  j["gap"] = round6(flips - h);
  if (o.samples > 0) {
    RandomBitSource bits(o.seed);
    std::vector<std::size_t> counts(d.size(), 0);
    std::size_t used = 0;
    for (std::size_t s = 0; s < o.samples; ++s) {
      const DdgSample draw = sample(tree, bits);
      ++counts[draw.outcome];
      used += draw.bits_used;
    }
    Json freq = Json::array();
    for (std::size_t c : counts) {
      freq.push_back(static_cast<double>(c) / static_cast<double>(o.samples));
    }
    j["samples"] = o.samples;
    j["mean_bits"] = static_cast<double>(used) / static_cast<double>(o.samples);
    j["frequencies"] = std::move(freq);
  }
  if (o.dump_tree) tree_text = dump_tree(tree);
  return j;
}

Json cmd_grover(const Options& o) {
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  std::optional<std::size_t> marked;
  if (o.marked >= 0) {
    marked = static_cast<std::size_t>(o.marked);
  } else {
    std::mt19937_64 rng(o.seed);
    marked = std::uniform_int_distribution<std::size_t>(0, o.n - 1)(rng);
  }
  RunReport r;
  if (o.mode == "standard") {
    r = grover_standard(o.n, marked);
  } else if (o.mode == "hybrid") {
    r = hybrid_block(o.n, o.t_target, marked);
  } else if (o.mode == "classical") {
    r = classical_scan(o.n);
  } else {
    throw ValidationError("unknown mode " + o.mode);
  }
  Json j = run_json(r);
  if (o.mode != "classical") j["marked"] = *marked;
  return j;
}

std::vector<std::size_t> sweep_targets(const Options& o) {
  if (!o.targets.empty()) return o.targets;
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t <= o.n; ++t) {
    if (t * t >= o.n) out.push_back(t);
  }
  return out;
}

Json cmd_adversary(const Options& o) {
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  const ProgressTrace tr = progress_trace(o.n, o.t_target);
  Json j;
  j["n"] = o.n;
  j["T_target"] = o.t_target;
  j["h"] = tr.config.h;
  j["iterations"] = tr.config.iterations;
  j["p_t"] = tr.p;
  j["p_t_modulus"] = tr.p_modulus;
  j["k_s"] = tr.k_s;
  j["bounds"] = tr.bounds;
  j["success_probability"] = tr.success_probability;
  return j;
}

Json cmd_bound(const Options& o) {
  if (o.relation != "grover") throw ValidationError("unknown relation " + o.relation);
  if (o.n < 1) throw ValidationError("--n must be at least 1");
  const Relation rel = Relation::grover_decision(o.n);
  const AmbainisParams p = relation_params(rel);
  Json j;
  j["relation"] = o.relation;
  j["n"] = o.n;
  j["m"] = p.m;
  j["m_prime"] = p.m_prime;
  j["l"] = p.l;
  j["l_prime"] = p.l_prime;
  j["bound"] = p.bound;
  if (o.k >= 0) {
    const AlphaBeta ab = alpha_beta(rel, static_cast<std::size_t>(o.k));
    j["k"] = o.k;
    j["alpha"] = ab.alpha;
    j["beta"] = ab.beta;
  }
  return j;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Quantumness accounting: state preparation, entropy, Knuth-Yao "
               "trees, and search tradeoffs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for all randomness")->capture_default_str();
  auto* format_opt = app.add_option("--format", o.format, "structured, csv or plain")
      ->check(CLI::IsMember({"structured", "csv", "plain"}));
  app.add_option("--out", o.out_path, "Write the report here instead of stdout");

  auto* prep = app.add_subcommand("prep", "Synthesize a circuit for a target state");
  prep->add_option("--state", o.state_path, "Target state file");
  prep->add_option("--random-qubits", o.random_qubits, "Random target on this many qubits");
  prep->add_option("--eps", o.eps, "Accuracy in l2 distance")->required();
  prep->add_option("--dump-state", o.dump_state, "Write the prepared state here");

  auto* entropy = app.add_subcommand("entropy", "Shannon and smoothed entropy");
  entropy->add_option("--state", o.state_path, "State file");
  entropy->add_option("--dist", o.dist_path, "Distribution file");
  entropy->add_option("--probs", o.probs, "Comma-separated probabilities");
  entropy->add_option("--eps", o.eps, "Smoothing radius in trace distance");

  auto* ky = app.add_subcommand("ky", "Knuth-Yao DDG tree");
  ky->add_option("--dist", o.dist_path, "Distribution file");
  ky->add_option("--state", o.state_path, "State file (measurement distribution)");
  ky->add_option("--probs", o.probs, "Comma-separated probabilities");
  ky->add_option("--precision", o.precision, "Binary digits kept")->capture_default_str();
  ky->add_option("--samples", o.samples, "Draw this many samples");
  ky->add_flag("--dump-tree", o.dump_tree, "Append the tree as indented text");

  auto* grover = app.add_subcommand("grover", "Run one search algorithm");
  grover->add_option("--n", o.n, "Problem size")->required();
  grover->add_option("--mode", o.mode, "standard, hybrid or classical")
      ->check(CLI::IsMember({"standard", "hybrid", "classical"}));
  grover->add_option("--T", o.t_target, "Query target (hybrid)");
  grover->add_option("--marked", o.marked, "Index of the 1 (default: seeded random)");

  auto* sweep = app.add_subcommand("sweep", "Query/layer tradeoff sweep");
  sweep->add_option("--n", o.n, "Problem size")->required();
  sweep->add_option("--targets", o.targets, "Query targets (default: all in [sqrt n, n])")
      ->delimiter(',');
  sweep->add_option("--csv", o.csv_path, "Write the csv here");

  auto* adversary = app.add_subcommand("adversary", "Progress-indicator trace");
  adversary->add_option("--n", o.n, "Problem size")->required();
  adversary->add_option("--T", o.t_target, "Query target")->required();

  auto* bound = app.add_subcommand("bound", "Adversary bound of a relation");
  bound->add_option("--relation", o.relation, "Relation name (grover)");
  bound->add_option("--n", o.n, "Problem size")->required();
  bound->add_option("--k", o.k, "Also report alpha_k, beta_k");

  Outcome outcome;
  std::vector<std::string> argv_store = {"qtrade"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitValidation;
    outcome.err = std::string("error: ") + e.what();
    return outcome;
  }

  try {
    Json doc;
    std::string extra;
    std::string text;
    if (prep->parsed()) {
      doc = cmd_prep(o);
    } else if (entropy->parsed()) {
      doc = cmd_entropy(o);
    } else if (ky->parsed()) {
      doc = cmd_ky(o, extra);
    } else if (grover->parsed()) {
      doc = cmd_grover(o);
    } else if (sweep->parsed()) {
      const auto targets = sweep_targets(o);
      const auto reports = tradeoff_sweep(o.n, targets);
      const std::string csv = sweep_csv(reports);
      if (!o.csv_path.empty()) write_file(o.csv_path, csv);
      if (format_opt->count() == 0 || o.format == "csv") {
        text = csv;
      } else {
        doc["n"] = o.n;
        Json rows = Json::array();
        for (const auto& r : reports) rows.push_back(run_json(r));
        doc["reports"] = std::move(rows);
      }
    } else if (adversary->parsed()) {
      doc = cmd_adversary(o);
    } else if (bound->parsed()) {
      doc = cmd_bound(o);
    }
    if (text.empty()) {
      text = o.format == "plain" ? render_plain(doc) : doc.dump(2) + "\n";
      text += extra;
    }
    if (o.out_path.empty()) {
      outcome.out = std::move(text);
    } else {
      write_file(o.out_path, text);
    }
  } catch (const ValidationError& e) {
    outcome.exit_code = kExitValidation;
    outcome.err = std::string("error: ") + e.what();
  } catch (const CapacityError& e) {
    outcome.exit_code = kExitRuntime;
    outcome.err = std::string("error: ") + e.what();
  } catch (const nlohmann::json::exception& e) {
    outcome.exit_code = kExitValidation;
    outcome.err = std::string("error: malformed document: ") + e.what();
  } catch (const std::exception& e) {
    outcome.exit_code = kExitRuntime;
    outcome.err = std::string("error: ") + e.what();
  }
  return outcome;
}

}  // namespace qtrade::cli
