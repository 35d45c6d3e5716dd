#include "mclab/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mclab/errors.hpp"
#include "mclab/sampler.hpp"

namespace mclab {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kConstant: return "constant";
    case Family::kPower: return "power";
    case Family::kNLogN: return "nlogn";
    case Family::kCustom: return "custom";
  }
  return "?";
}

std::string_view to_string(Regime r) {
  return r == Regime::kDense ? "dense" : "sparse";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::kConstant, Family::kPower, Family::kNLogN,
                   Family::kCustom}) {
    if (text == to_string(f)) return f;
  }
  throw DomainError("unknown family \"" + std::string(text) +
                    "\" (expected constant, power, nlogn or custom)");
}

Regime parse_regime(std::string_view text) {
  if (text == "dense") return Regime::kDense;
  if (text == "sparse") return Regime::kSparse;
  throw DomainError("unknown regime \"" + std::string(text) +
                    "\" (expected dense or sparse)");
}

ThresholdSpec ThresholdSpec::constant(double c) {
  if (!(c >= 1.0) || !std::isfinite(c)) {
    throw DomainError("constant f needs c >= 1");
  }
  ThresholdSpec s;
  s.family_ = Family::kConstant;
  s.parameter_ = c;
  s.regime_ = Regime::kSparse;
  return s;
}

ThresholdSpec ThresholdSpec::power(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("power f needs 0 < alpha < 2");
  }
  ThresholdSpec s;
  s.family_ = Family::kPower;
  s.parameter_ = alpha;
  s.regime_ = alpha <= 1.0 ? Regime::kSparse : Regime::kDense;
  return s;
}

ThresholdSpec ThresholdSpec::n_log_n(double ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw DomainError("n log n family needs ell > 0");
  }
  ThresholdSpec s;
  s.family_ = Family::kNLogN;
  s.parameter_ = ell;
  s.ell_ = ell;
  s.regime_ = Regime::kDense;
  return s;
}

ThresholdSpec ThresholdSpec::custom(std::map<std::uint64_t, double> table,
                                    std::optional<Regime> regime, double ell) {
  if (!regime) {
    throw UnsupportedSpecError(
        "UNSUPPORTED: a tabulated f(n) must declare its regime (dense or "
        "sparse)");
  }
  if (table.empty()) throw DomainError("custom f table is empty");
  ThresholdSpec s;
  s.family_ = Family::kCustom;
  s.table_ = std::move(table);
  return s.with_regime(*regime, ell);
}

ThresholdSpec ThresholdSpec::with_regime(Regime regime, double ell) const {
  if (regime == Regime::kDense && !(ell > 0.0 && std::isfinite(ell))) {
    throw DomainError("dense regime needs ell > 0");
  }
  ThresholdSpec s = *this;
  s.regime_ = regime;
  s.ell_ = regime == Regime::kDense ? ell : 1.0;
  return s;
}

double ThresholdSpec::f(std::size_t n) const {
  const double dn = static_cast<double>(n);
  double value = 0.0;
  switch (family_) {
    case Family::kConstant: value = parameter_; break;
    case Family::kPower: value = std::pow(dn, parameter_); break;
    case Family::kNLogN: value = parameter_ * dn * std::log(dn); break;
    case Family::kCustom: {
      auto it = table_.find(n);
      if (it == table_.end()) {
        throw DomainError("custom f has no value at n = " + std::to_string(n));
      }
      value = it->second;
      break;
    }
  }
  const double ceiling = dn * (dn - 1.0) / 2.0;
  if (!(value >= 1.0 && value < ceiling)) {
    throw DomainError("f(" + std::to_string(n) + ") = " +
                      std::to_string(value) +
                      " outside [1, n(n-1)/2)");
  }
  return value;
}

std::size_t ThresholdSpec::target(std::size_t n) const {
  return static_cast<std::size_t>(std::ceil(f(n)));
}

double ThresholdSpec::upper_constant() const {
  if (regime_ == Regime::kDense && ell_ < 1.0) return 5.0 / ell_;
  return 5.0;
}

double threshold_p(const ThresholdSpec& spec, std::size_t n) {
  if (n < kMinThresholdN) {
    throw DomainError("n below formula domain: log log n < 1 for n = " +
                      std::to_string(n) + " (need n >= 16)");
  }
  const double dn = static_cast<double>(n);
  double p = 0.0;
  if (spec.regime() == Regime::kDense) {
    p = (spec.f(n) + dn * std::log(std::log(dn))) / (dn * dn);
  } else {
    spec.f(n);  // validates the spec at n
    p = std::log(dn) / dn;
  }
  return std::clamp(p, 0.0, 1.0);
}

double chernoff_lower_tail(double mu, double delta) {
  if (!(mu > 0.0)) throw DomainError("Chernoff bound needs mu > 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("lower-tail Chernoff bound needs 0 < delta < 1");
  }
  return std::exp(-delta * delta * mu / 2.0);
}

double chernoff_upper_tail(double mu, double delta) {
  if (!(mu > 0.0)) throw DomainError("Chernoff bound needs mu > 0");
  if (!(delta > 0.0) || std::isinf(delta)) {
    throw DomainError("upper-tail Chernoff bound needs delta > 0");
  }
  return std::exp(-delta * delta * mu / (2.0 + delta));
}

double connectivity_prob_limit(double a) {
  if (std::isnan(a)) throw DomainError("connectivity limit needs a number");
  return std::exp(-std::exp(-a));
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::kYes: return "YES";
    case Decision::kNo: return "NO";
    case Decision::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(DecisionSource s) {
  switch (s) {
    case DecisionSource::kDisconnected: return "DISCONNECTED";
    case DecisionSource::kLowerBound: return "LOWER_BOUND";
    case DecisionSource::kUpperBound: return "UPPER_BOUND";
    case DecisionSource::kExactSmall: return "EXACT_SMALL";
    case DecisionSource::kNone: return "NONE";
  }
  return "?";
}

TrialOutcome decide_mc_at_least(const Graph& g, std::size_t f_value,
                                const DecideOptions& options) {
  if (f_value == 0) throw DomainError("decision target must be at least 1");
  TrialOutcome out;
  out.m = g.m();
  out.delta = min_degree(g);
  out.connected = is_connected(g);
  // K_1 has no pair to join and no colour to use.
  if (!out.connected || g.n() == 1) {
    out.decision = Decision::kNo;
    out.source = DecisionSource::kDisconnected;
    return out;
  }
  // Connected: m >= n-1, so the subtractions below stay non-negative.
  const std::size_t lower = g.m() + 2 - g.n();
  const std::size_t upper = g.m() + out.delta + 1 - g.n();
  if (lower >= f_value) {
    out.decision = Decision::kYes;
    out.source = DecisionSource::kLowerBound;
  } else if (upper < f_value) {
    out.decision = Decision::kNo;
    out.source = DecisionSource::kUpperBound;
  } else if (options.allow_exact && g.m() <= options.exact_cap &&
             g.n() <= 64) {
    const std::size_t mc =
        exact_mc_small(g, ExactOptions{options.exact_cap, true});
    out.decision = mc >= f_value ? Decision::kYes : Decision::kNo;
    out.source = DecisionSource::kExactSmall;
  }
  return out;
}

TrialOutcome run_trial(std::size_t n, double p, const ThresholdSpec& spec,
                       RngSeed seed, const DecideOptions& options) {
  const std::size_t target = spec.target(n);
  return decide_mc_at_least(sample_gnp(n, p, seed), target, options);
}

}  // namespace mclab
