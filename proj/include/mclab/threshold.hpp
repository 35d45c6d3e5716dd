#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mclab/graph.hpp"
#include "mclab/mc_bounds.hpp"
#include "mclab/rng.hpp"

namespace mclab {

enum class Family { kConstant, kPower, kNLogN, kCustom };
enum class Regime { kDense, kSparse };

std::string_view to_string(Family f);
std::string_view to_string(Regime r);
Family parse_family(std::string_view text);
Regime parse_regime(std::string_view text);

// Target colour count f(n) and the regime that selects the threshold
// formula. Build through the named constructors; they validate parameters
// and classify the regime.
class ThresholdSpec {
 public:
  // f(n) = c. Sparse.
  static ThresholdSpec constant(double c);
  // f(n) = n^alpha, 0 < alpha < 2. Sparse for alpha <= 1; dense with
  // ell = 1 above (n^alpha outgrows n log n).
  static ThresholdSpec power(double alpha);
  // f(n) = ell * n * log n, ell > 0. Dense.
  static ThresholdSpec n_log_n(double ell);
  // Tabulated f(n). The regime must be declared; a missing regime means the
  // table's asymptotics are unknown and the spec is rejected as unsupported.
  static ThresholdSpec custom(std::map<std::uint64_t, double> table,
                              std::optional<Regime> regime, double ell = 1.0);

  // Same family, regime forced by the caller (ell used only when dense).
  ThresholdSpec with_regime(Regime regime, double ell = 1.0) const;

  Family family() const noexcept { return family_; }
  Regime regime() const noexcept { return regime_; }
  double parameter() const noexcept { return parameter_; }
  double ell() const noexcept { return ell_; }
  const std::map<std::uint64_t, double>& table() const noexcept {
    return table_;
  }

  // f(n); throws DomainError unless 1 <= f(n) < n(n-1)/2.
  double f(std::size_t n) const;

  // ceil(f(n)), the integral colour target.
  std::size_t target(std::size_t n) const;

  // Multiplier above which the upper direction holds w.h.p.: 5 for ell >= 1,
  // 5/ell below. Sparse specs use 5.
  double upper_constant() const;

  friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;

 private:
  ThresholdSpec() = default;

  Family family_ = Family::kConstant;
  Regime regime_ = Regime::kSparse;
  double parameter_ = 1.0;
  double ell_ = 1.0;
  std::map<std::uint64_t, double> table_;
};

// Smallest n accepted by threshold_p: log log n >= 1 from n = 16 on.
inline constexpr std::size_t kMinThresholdN = 16;

// Dense: (f(n) + n log log n) / n^2. Sparse: log n / n. Natural logs,
// clamped to [0,1]. Throws DomainError below kMinThresholdN.
double threshold_p(const ThresholdSpec& spec, std::size_t n);

// exp(-delta^2 mu / 2), for mu > 0 and 0 < delta < 1.
double chernoff_lower_tail(double mu, double delta);
// exp(-delta^2 mu / (2 + delta)), for mu > 0 and delta > 0.
double chernoff_upper_tail(double mu, double delta);

// Limit of P[G(n, (log n + a)/n) connected]: exp(-exp(-a)). Accepts
// +/-infinity (giving 1 and 0); rejects NaN.
double connectivity_prob_limit(double a);

enum class Decision { kYes, kNo, kUnknown };
enum class DecisionSource { kDisconnected, kLowerBound, kUpperBound, kExactSmall, kNone };

std::string_view to_string(Decision d);
std::string_view to_string(DecisionSource s);

struct TrialOutcome {
  bool connected = false;
  std::size_t m = 0;
  std::size_t delta = 0;
  Decision decision = Decision::kUnknown;
  DecisionSource source = DecisionSource::kNone;
};

struct DecideOptions {
  bool allow_exact = false;
  std::size_t exact_cap = kDefaultExactEdgeCap;
};

// Decides mc(g) >= f_value from the bounds alone where they suffice:
// disconnected -> NO; m-n+2 >= f -> YES; m-n+delta+1 < f -> NO; then the
// exact search when allowed and m <= exact_cap; otherwise UNKNOWN.
// Throws DomainError for f_value == 0.
TrialOutcome decide_mc_at_least(const Graph& g, std::size_t f_value,
                                const DecideOptions& options = {});

// One sample of G(n,p) decided against ceil(f(n)).
TrialOutcome run_trial(std::size_t n, double p, const ThresholdSpec& spec,
                       RngSeed seed, const DecideOptions& options = {});

}  // namespace mclab
