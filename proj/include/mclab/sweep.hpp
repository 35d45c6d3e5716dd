#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mclab/threshold.hpp"

namespace mclab {

struct SweepConfig {
  ThresholdSpec spec = ThresholdSpec::n_log_n(1.0);
  std::vector<std::size_t> n_list;
  std::vector<double> multipliers;
  std::size_t trials = 200;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  DecideOptions decide;
};

struct SweepRow {
  std::size_t n = 0;
  double multiplier = 0.0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
  double frac_yes = 0.0;
  // multiplier * threshold exceeded 1 and was clamped.
  bool clamped = false;
  // The row could not run (formula domain, invalid f); counts stay zero.
  bool failed = false;
  std::string error;
  // Indexed by DecisionSource.
  std::array<std::size_t, 5> by_source{};

  std::size_t count(DecisionSource s) const {
    return by_source[static_cast<std::size_t>(s)];
  }
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

// Stream index of trial `trial` in row `row`: (row << 32) | trial.
constexpr std::uint64_t trial_stream(std::size_t row, std::size_t trial) {
  return (static_cast<std::uint64_t>(row) << 32) |
         static_cast<std::uint64_t>(trial);
}

// Rows run n-major, multiplier-minor, in config order. Trials may spread over
// `workers` threads; counts are summed, so the report does not depend on the
// schedule. Throws DomainError for trials == 0, empty lists or multipliers
// <= 0. Per-row formula errors mark the row failed.
SweepReport sweep(const SweepConfig& config);

// Tallies `trials` runs of G(n,p) at a fixed p, using streams
// trial_stream(row, t) of master_seed.
SweepRow run_row(std::size_t n, double p, const ThresholdSpec& spec,
                 std::size_t trials, std::uint64_t master_seed,
                 std::size_t row, std::size_t workers,
                 const DecideOptions& decide = {});

// CSV: n,multiplier,p,trials,yes,no,unknown,frac_yes with a header row;
// floating fields at 9 significant digits. Failed rows are left out (they
// appear in the JSON sidecar).
void write_csv(std::ostream& out, const SweepReport& report);
std::string to_csv(const SweepReport& report);

// "%.9g".
std::string format_g9(double value);

struct TransitionOptions {
  double lo = 1.0;
  double hi = 5.0;
  double tolerance = 0.25;
  std::size_t trials = 200;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  DecideOptions decide;
};

// Bisection on the multiplier for the point where frac_yes crosses 1/2,
// assuming frac_yes is non-decreasing in the multiplier. Every evaluation
// reuses the same streams. Returns the bracket unchanged when tolerance >=
// hi - lo; otherwise throws DomainError unless frac_yes(lo) < 1/2 <=
// frac_yes(hi).
std::pair<double, double> estimate_transition(const ThresholdSpec& spec,
                                              std::size_t n,
                                              const TransitionOptions& options);

// Connectivity experiment at a fixed p.
struct ConnectivityRow {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t connected = 0;
  double frac_connected = 0.0;
};

ConnectivityRow connectivity_experiment(std::size_t n, double p,
                                        std::size_t trials,
                                        std::uint64_t master_seed,
                                        std::size_t workers = 1);

// CSV: n,p,trials,connected,frac_connected.
std::string to_csv(const std::vector<ConnectivityRow>& rows);

}  // namespace mclab
