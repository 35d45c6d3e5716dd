#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mclab/errors.hpp"
#include "mclab/sweep.hpp"
#include "mclab/threshold.hpp"

namespace mclab {

// Rejected configuration, naming the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Sweep experiment description, stored as flat "key = value" text:
//
//   family      = constant | power | nlogn | custom     (default nlogn)
//   c           = constant f value                       (default 1)
//   alpha       = power exponent                         (default 1)
//   ell         = n log n coefficient, or the dense ell
//                 used with a regime override            (default 1)
//   regime      = auto | dense | sparse                  (default auto)
//   table       = n:f(n) pairs, comma separated          (custom only)
//   n_list      = comma separated vertex counts          (required)
//   multipliers = comma separated positive reals   (default 0.5,1,2,C)
//   trials      = trials per row                         (default 200)
//   master_seed = unsigned 64-bit seed                   (required)
//   exact_cap   = edge cap of the exact search           (default 12)
//   chi_cap     = vertex cap of the chromatic search     (default 16)
//   allow_exact = true | false                           (default false)
//   output      = CSV path                               (default sweep.csv)
//   workers     = worker threads                         (default 1)
//
// '#' starts a comment line. C is the spec's upper constant (5, or 5/ell
// for dense ell < 1).
struct ExperimentConfig {
  Family family = Family::kNLogN;
  double c = 1.0;
  double alpha = 1.0;
  double ell = 1.0;
  std::optional<Regime> regime;
  std::map<std::uint64_t, double> table;
  std::vector<std::size_t> n_list;
  std::vector<double> multipliers;
  std::size_t trials = 200;
  std::uint64_t master_seed = 0;
  std::size_t exact_cap = kDefaultExactEdgeCap;
  std::size_t chi_cap = kDefaultChromaticCap;
  bool allow_exact = false;
  std::string output = "sweep.csv";
  std::size_t workers = 1;

  ThresholdSpec spec() const;
  SweepConfig sweep_config() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Default multiplier list for a spec: 0.5, 1, 2 and its upper constant.
std::vector<double> default_multipliers(const ThresholdSpec& spec);

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig read_config_file(const std::string& path);

// Writes every key, floats in shortest round-trip form.
std::string to_config_text(const ExperimentConfig& config);

}  // namespace mclab
