#include "mclab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "mclab/coloring.hpp"
#include "mclab/errors.hpp"
#include "mclab/graph_io.hpp"
#include "mclab/mc_bounds.hpp"
#include "mclab/sampler.hpp"

namespace mclab::cli {

namespace {

namespace fs = std::filesystem;

std::string join_certificates(const std::vector<Certificate>& certs) {
  std::string s;
  for (Certificate c : certs) {
    if (!s.empty()) s += ',';
    s += to_string(c);
  }
  return s;
}

int cmd_gen(std::size_t n, double p, std::uint64_t seed, std::uint64_t stream,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Graph g = sample_gnp(n, p, RngSeed{seed, stream});
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << out_path << '\n';
    return kExitUsage;
  }
  write_edge_list(file, g);
  file.flush();
  if (!file) {
    err << "error: failed writing " << out_path << '\n';
    return kExitUsage;
  }
  out << "wrote " << out_path << " (n=" << g.n() << ", m=" << g.m() << ")\n";
  return kExitOk;
}

int cmd_analyze(const std::string& graph_path, std::size_t exact_cap,
                std::size_t chi_cap, std::ostream& out) {
  const Graph g = read_edge_list_file(graph_path);
  AnalyzeOptions options;
  options.exact_cap = exact_cap;
  options.chi_cap = chi_cap;
  options.request_exact = true;
  const McBounds b = analyze(g, options);
  out << "n: " << g.n() << '\n';
  out << "m: " << g.m() << '\n';
  out << "connected: " << (is_connected(g) ? "true" : "false") << '\n';
  out << "lower: " << b.lower << '\n';
  out << "upper: " << b.upper << '\n';
  out << "exact: ";
  if (b.exact) {
    out << *b.exact;
  } else {
    out << "unknown";
  }
  out << '\n';
  out << "certificates: " << join_certificates(b.certificates) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(graph_path);
  const EdgeColoring c = read_coloring_file(coloring_path);
  if (c.size() != g.m()) {
    err << "error: coloring has " << c.size() << " labels but the graph has "
        << g.m() << " edges\n";
    return kExitUsage;
  }
  if (auto pair = find_uncovered_pair(g, c)) {
    out << "invalid: no monochromatic path between " << pair->first << " and "
        << pair->second << '\n';
    out << "uncovered: " << pair->first << ' ' << pair->second << '\n';
    return kExitNegative;
  }
  out << "valid: " << c.num_colors() << " colors\n";
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, std::ostream& out) {
  ExperimentConfig cfg = read_config_file(config_path);
  if (const char* env = std::getenv("MCLAB_WORKERS"); env && *env) {
    char* end = nullptr;
    const unsigned long long w = std::strtoull(env, &end, 10);
    if (*end != '\0' || w == 0) {
      throw ConfigError("MCLAB_WORKERS", "expected a positive integer");
    }
    cfg.workers = static_cast<std::size_t>(w);
  }
  const SweepReport report = sweep(cfg.sweep_config());

  const fs::path csv_path(cfg.output);
  {
    std::ofstream file(csv_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("output", "cannot write " + cfg.output);
    write_csv(file, report);
  }
  fs::path json_path = csv_path;
  json_path.replace_extension(".json");
  if (json_path == csv_path) json_path += ".sidecar.json";
  {
    std::ofstream file(json_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw ConfigError("output", "cannot write " + json_path.string());
    }
    file << sweep_sidecar_json(cfg, report, cfg.output) << '\n';
  }
  std::size_t failed = 0;
  for (const auto& r : report.rows) failed += r.failed ? 1 : 0;
  out << "wrote " << csv_path.string() << " and " << json_path.string() << " ("
      << report.rows.size() - failed << " rows";
  if (failed > 0) out << ", " << failed << " failed";
  out << ")\n";
  return kExitOk;
}

struct ThresholdArgs {
  std::string family = "nlogn";
  double c = 1.0;
  double alpha = 1.0;
  double ell = 1.0;
  std::string regime = "auto";
  std::size_t n = 0;
  double multiplier = 1.0;
};

int cmd_threshold(const ThresholdArgs& a, std::ostream& out) {
  ThresholdSpec spec = ThresholdSpec::constant(1.0);
  switch (parse_family(a.family)) {
    case Family::kConstant: spec = ThresholdSpec::constant(a.c); break;
    case Family::kPower: spec = ThresholdSpec::power(a.alpha); break;
    case Family::kNLogN: spec = ThresholdSpec::n_log_n(a.ell); break;
    case Family::kCustom:
      throw DomainError("custom tables are only supported in sweep configs");
  }
  if (a.regime != "auto") spec = spec.with_regime(parse_regime(a.regime), a.ell);
  if (!(a.multiplier > 0.0)) throw DomainError("multiplier must be > 0");

  const double base = threshold_p(spec, a.n);
  const double p = std::min(a.multiplier * base, 1.0);
  out << "n: " << a.n << '\n';
  out << "family: " << to_string(spec.family()) << '\n';
  out << "regime: " << to_string(spec.regime()) << '\n';
  out << "f: " << format_g9(spec.f(a.n)) << '\n';
  out << "threshold_p: " << format_g9(base) << '\n';
  out << "p: " << format_g9(p) << '\n';
  if (spec.regime() == Regime::kSparse) {
    const double dn = static_cast<double>(a.n);
    const double shift = dn * p - std::log(dn);
    out << "a: " << format_g9(shift) << '\n';
    out << "connectivity_limit: " << format_g9(connectivity_prob_limit(shift))
        << '\n';
  } else {
    out << "upper_constant: " << format_g9(spec.upper_constant()) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string sweep_sidecar_json(const ExperimentConfig& config,
                               const SweepReport& report,
                               const std::string& csv_path) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["csv"] = csv_path;
  j["master_seed"] = config.master_seed;
  j["rng"] =
      "xoshiro256** seeded by splitmix64 from master_seed ^ "
      "splitmix64_mix(stream * 0x9E3779B97F4A7C15 + 0x9E3779B97F4A7C15), "
      "stream = (row << 32) | trial";

  // Worker count is left out: it never changes results.
  ordered_json cfg;
  cfg["family"] = std::string(to_string(config.family));
  cfg["c"] = config.c;
  cfg["alpha"] = config.alpha;
  cfg["ell"] = config.ell;
  cfg["regime"] =
      config.regime ? std::string(to_string(*config.regime)) : "auto";
  ordered_json table = ordered_json::object();
  for (const auto& [n, f] : config.table) table[std::to_string(n)] = f;
  cfg["table"] = table;
  cfg["n_list"] = config.n_list;
  cfg["multipliers"] = config.multipliers;
  cfg["trials"] = config.trials;
  cfg["exact_cap"] = config.exact_cap;
  cfg["chi_cap"] = config.chi_cap;
  cfg["allow_exact"] = config.allow_exact;
  cfg["output"] = config.output;
  j["config"] = cfg;

  ordered_json rows = ordered_json::array();
  for (const SweepRow& r : report.rows) {
    ordered_json row;
    row["n"] = r.n;
    row["multiplier"] = r.multiplier;
    row["failed"] = r.failed;
    if (r.failed) {
      row["error"] = r.error;
    } else {
      row["p"] = r.p;
      row["clamped"] = r.clamped;
      row["trials"] = r.trials;
      row["yes"] = r.yes;
      row["no"] = r.no;
      row["unknown"] = r.unknown;
      row["frac_yes"] = r.frac_yes;
      ordered_json sources;
      for (DecisionSource s :
           {DecisionSource::kDisconnected, DecisionSource::kLowerBound,
            DecisionSource::kUpperBound, DecisionSource::kExactSmall,
            DecisionSource::kNone}) {
        sources[std::string(to_string(s))] = r.count(s);
      }
      row["decision_sources"] = sources;
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Monochromatic connection colorings and G(n,p) threshold "
               "experiments",
               "mclab"};
  app.require_subcommand(1);

  std::size_t gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::uint64_t gen_stream = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) to an edge-list file");
  gen->add_option("--n", gen_n, "Vertex count")->required()->check(
      CLI::Range(std::size_t{1}, Graph::kMaxVertices));
  gen->add_option("--p", gen_p, "Edge probability")->required()->check(
      CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Master seed")->required();
  gen->add_option("--stream", gen_stream, "Stream index");
  gen->add_option("--out", gen_out, "Output edge-list path")->required();

  std::string graph_path;
  std::size_t exact_cap = kDefaultExactEdgeCap;
  std::size_t chi_cap = kDefaultChromaticCap;
  auto* an = app.add_subcommand("analyze", "Bounds and exact value of mc(G)");
  an->add_option("graph", graph_path, "Edge-list file")->required();
  an->add_option("--exact-cap", exact_cap,
                 "Run the exact search when m is at most this");
  an->add_option("--chi-cap", chi_cap,
                 "Compute chi exactly when n is at most this");

  std::string coloring_path;
  auto* ver = app.add_subcommand("verify", "Check an MC-coloring");
  ver->add_option("graph", graph_path, "Edge-list file")->required();
  ver->add_option("coloring", coloring_path, "Coloring file")->required();

  std::string config_path;
  auto* sw = app.add_subcommand("sweep", "Monte Carlo threshold sweep");
  sw->add_option("config", config_path, "Experiment config file")->required();

  ThresholdArgs th;
  auto* thr = app.add_subcommand("threshold", "Evaluate the threshold p(n)");
  thr->add_option("--family", th.family, "constant | power | nlogn");
  thr->add_option("--c", th.c, "Constant f value");
  thr->add_option("--alpha", th.alpha, "Power exponent");
  thr->add_option("--ell", th.ell, "n log n coefficient");
  thr->add_option("--regime", th.regime, "auto | dense | sparse");
  thr->add_option("--n", th.n, "Vertex count")->required();
  thr->add_option("--multiplier", th.multiplier, "Scale applied to p(n)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_n, gen_p, gen_seed, gen_stream, gen_out, out, err);
    }
    if (an->parsed()) return cmd_analyze(graph_path, exact_cap, chi_cap, out);
    if (ver->parsed()) return cmd_verify(graph_path, coloring_path, out, err);
    if (sw->parsed()) return cmd_sweep(config_path, out);
    if (thr->parsed()) return cmd_threshold(th, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mclab::cli
