#include "mclab/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mclab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(const std::string& field, std::string_view text) {
  T value{};
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(field, "cannot parse \"" + std::string(text) + "\"");
  }
  return value;
}

double parse_real(const std::string& field, std::string_view text) {
  const double v = parse_number<double>(field, text);
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::vector<double> default_multipliers(const ThresholdSpec& spec) {
  return {0.5, 1.0, 2.0, spec.upper_constant()};
}

ThresholdSpec ExperimentConfig::spec() const {
  ThresholdSpec s = ThresholdSpec::constant(1.0);
  switch (family) {
    case Family::kConstant: s = ThresholdSpec::constant(c); break;
    case Family::kPower: s = ThresholdSpec::power(alpha); break;
    case Family::kNLogN: s = ThresholdSpec::n_log_n(ell); break;
    case Family::kCustom: return ThresholdSpec::custom(table, regime, ell);
  }
  if (regime && *regime != s.regime()) s = s.with_regime(*regime, ell);
  return s;
}

SweepConfig ExperimentConfig::sweep_config() const {
  SweepConfig sc;
  sc.spec = spec();
  sc.n_list = n_list;
  sc.multipliers = multipliers.empty() ? default_multipliers(sc.spec)
                                       : multipliers;
  sc.trials = trials;
  sc.master_seed = master_seed;
  sc.workers = workers;
  sc.decide.allow_exact = allow_exact;
  sc.decide.exact_cap = exact_cap;
  return sc;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected \"key = value\"");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(key, "repeated key");

    if (key == "family") {
      try {
        cfg.family = parse_family(value);
      } catch (const DomainError& e) {
        throw ConfigError(key, e.what());
      }
    } else if (key == "c") {
      cfg.c = parse_real(key, value);
    } else if (key == "alpha") {
      cfg.alpha = parse_real(key, value);
    } else if (key == "ell") {
      cfg.ell = parse_real(key, value);
    } else if (key == "regime") {
      if (value == "auto") {
        cfg.regime.reset();
      } else {
        try {
          cfg.regime = parse_regime(value);
        } catch (const DomainError& e) {
          throw ConfigError(key, e.what());
        }
      }
    } else if (key == "table") {
      cfg.table.clear();
      if (!value.empty()) {
        for (auto entry : split(value, ',')) {
          const auto colon = entry.find(':');
          if (colon == std::string_view::npos) {
            throw ConfigError(key, "entries must look like n:value");
          }
          const auto n = parse_number<std::uint64_t>(key, trim(entry.substr(0, colon)));
          const double f = parse_real(key, trim(entry.substr(colon + 1)));
          if (!cfg.table.emplace(n, f).second) {
            throw ConfigError(key, "repeated n = " + std::to_string(n));
          }
        }
      }
    } else if (key == "n_list") {
      cfg.n_list.clear();
      for (auto part : split(value, ',')) {
        cfg.n_list.push_back(parse_number<std::size_t>(key, part));
      }
    } else if (key == "multipliers") {
      cfg.multipliers.clear();
      for (auto part : split(value, ',')) {
        const double mult = parse_real(key, part);
        if (!(mult > 0.0)) throw ConfigError(key, "multipliers must be > 0");
        cfg.multipliers.push_back(mult);
      }
    } else if (key == "trials") {
      cfg.trials = parse_number<std::size_t>(key, value);
      if (cfg.trials == 0) throw ConfigError(key, "must be at least 1");
    } else if (key == "master_seed") {
      cfg.master_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "exact_cap") {
      cfg.exact_cap = parse_number<std::size_t>(key, value);
    } else if (key == "chi_cap") {
      cfg.chi_cap = parse_number<std::size_t>(key, value);
    } else if (key == "allow_exact") {
      if (value == "true") {
        cfg.allow_exact = true;
      } else if (value == "false") {
        cfg.allow_exact = false;
      } else {
        throw ConfigError(key, "expected true or false");
      }
    } else if (key == "output") {
      if (value.empty()) throw ConfigError(key, "must not be empty");
      cfg.output = std::string(value);
    } else if (key == "workers") {
      cfg.workers = parse_number<std::size_t>(key, value);
      if (cfg.workers == 0) throw ConfigError(key, "must be at least 1");
    } else {
      throw ConfigError(key, "unknown key");
    }
  }

  if (!seen.count("n_list")) throw ConfigError("n_list", "required");
  if (!seen.count("master_seed")) {
    throw ConfigError("master_seed", "required (no implicit seed)");
  }
  if (cfg.family == Family::kCustom && cfg.table.empty()) {
    throw ConfigError("table", "required for the custom family");
  }
  // Builds the spec once so that bad parameters surface as config errors.
  ThresholdSpec spec = ThresholdSpec::constant(1.0);
  try {
    spec = cfg.spec();
  } catch (const Error& e) {
    const char* field = cfg.family == Family::kConstant ? "c"
                        : cfg.family == Family::kPower  ? "alpha"
                        : cfg.family == Family::kNLogN  ? "ell"
                                                        : "regime";
    throw ConfigError(field, e.what());
  }
  if (cfg.multipliers.empty()) cfg.multipliers = default_multipliers(spec);
  return cfg;
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  auto join = [](const auto& values, auto fmt) {
    std::string s;
    for (const auto& v : values) {
      if (!s.empty()) s += ',';
      s += fmt(v);
    }
    return s;
  };
  out << "family = " << to_string(cfg.family) << '\n';
  out << "c = " << format_real(cfg.c) << '\n';
  out << "alpha = " << format_real(cfg.alpha) << '\n';
  out << "ell = " << format_real(cfg.ell) << '\n';
  out << "regime = " << (cfg.regime ? to_string(*cfg.regime) : "auto") << '\n';
  out << "table = "
      << join(cfg.table,
              [](const auto& kv) {
                return std::to_string(kv.first) + ':' + format_real(kv.second);
              })
      << '\n';
  out << "n_list = "
      << join(cfg.n_list, [](std::size_t n) { return std::to_string(n); })
      << '\n';
  out << "multipliers = " << join(cfg.multipliers, format_real) << '\n';
  out << "trials = " << cfg.trials << '\n';
  out << "master_seed = " << cfg.master_seed << '\n';
  out << "exact_cap = " << cfg.exact_cap << '\n';
  out << "chi_cap = " << cfg.chi_cap << '\n';
  out << "allow_exact = " << (cfg.allow_exact ? "true" : "false") << '\n';
  out << "output = " << cfg.output << '\n';
  out << "workers = " << cfg.workers << '\n';
  return out.str();
}

}  // namespace mclab
