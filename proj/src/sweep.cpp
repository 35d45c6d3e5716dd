#include "mclab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "mclab/errors.hpp"
#include "mclab/sampler.hpp"

namespace mclab {

namespace {

// Runs body(t) for t in [0, count) on up to `workers` threads, worker w
// taking t = w, w + workers, ... Each worker owns its accumulator; they are
// merged in worker order.
template <typename Acc, typename Body, typename Merge>
Acc parallel_tally(std::size_t count, std::size_t workers, Body body,
                   Merge merge) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::vector<Acc> partial(workers);
  auto work = [&](std::size_t w) {
    for (std::size_t t = w; t < count; t += workers) body(partial[w], t);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  Acc total{};
  for (const Acc& a : partial) merge(total, a);
  return total;
}

struct Tally {
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
  std::array<std::size_t, 5> by_source{};
};

}  // namespace

SweepRow run_row(std::size_t n, double p, const ThresholdSpec& spec,
                 std::size_t trials, std::uint64_t master_seed,
                 std::size_t row, std::size_t workers,
                 const DecideOptions& decide) {
  // Checked here so that worker threads never throw.
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1]");
  }
  if (n == 0 || n > Graph::kMaxVertices) throw DomainError("n out of range");
  if (trials == 0) throw DomainError("row needs trials >= 1");
  const std::size_t target = spec.target(n);
  const Tally tally = parallel_tally<Tally>(
      trials, workers,
      [&](Tally& acc, std::size_t t) {
        const RngSeed seed{master_seed, trial_stream(row, t)};
        const TrialOutcome o =
            decide_mc_at_least(sample_gnp(n, p, seed), target, decide);
        switch (o.decision) {
          case Decision::kYes: ++acc.yes; break;
          case Decision::kNo: ++acc.no; break;
          case Decision::kUnknown: ++acc.unknown; break;
        }
        ++acc.by_source[static_cast<std::size_t>(o.source)];
      },
      [](Tally& total, const Tally& part) {
        total.yes += part.yes;
        total.no += part.no;
        total.unknown += part.unknown;
        for (std::size_t i = 0; i < total.by_source.size(); ++i) {
          total.by_source[i] += part.by_source[i];
        }
      });

  SweepRow out;
  out.n = n;
  out.p = p;
  out.trials = trials;
  out.yes = tally.yes;
  out.no = tally.no;
  out.unknown = tally.unknown;
  out.by_source = tally.by_source;
  out.frac_yes = static_cast<double>(tally.yes) / static_cast<double>(trials);
  return out;
}

SweepReport sweep(const SweepConfig& config) {
  if (config.trials == 0) throw DomainError("sweep needs trials >= 1");
  if (config.n_list.empty()) throw DomainError("sweep needs at least one n");
  if (config.multipliers.empty()) {
    throw DomainError("sweep needs at least one multiplier");
  }
  for (double mult : config.multipliers) {
    if (!(mult > 0.0) || !std::isfinite(mult)) {
      throw DomainError("multipliers must be positive and finite");
    }
  }
  if (config.trials > (std::size_t{1} << 32)) {
    throw DomainError("at most 2^32 trials per row");
  }

  SweepReport report;
  report.config = config;
  std::size_t row = 0;
  for (std::size_t n : config.n_list) {
    for (double mult : config.multipliers) {
      SweepRow r;
      r.n = n;
      r.multiplier = mult;
      r.trials = config.trials;
      try {
        const double raw = mult * threshold_p(config.spec, n);
        const double p = std::min(raw, 1.0);
        r = run_row(n, p, config.spec, config.trials, config.master_seed, row,
                    config.workers, config.decide);
        r.multiplier = mult;
        r.clamped = raw > 1.0;
      } catch (const Error& e) {
        r.failed = true;
        r.error = e.what();
      }
      report.rows.push_back(std::move(r));
      ++row;
    }
  }
  return report;
}

std::string format_g9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_csv(std::ostream& out, const SweepReport& report) {
  out << "n,multiplier,p,trials,yes,no,unknown,frac_yes\n";
  for (const SweepRow& r : report.rows) {
    if (r.failed) continue;
    out << r.n << ',' << format_g9(r.multiplier) << ',' << format_g9(r.p)
        << ',' << r.trials << ',' << r.yes << ',' << r.no << ',' << r.unknown
        << ',' << format_g9(r.frac_yes) << '\n';
  }
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  write_csv(out, report);
  return out.str();
}

std::pair<double, double> estimate_transition(
    const ThresholdSpec& spec, std::size_t n,
    const TransitionOptions& options) {
  double lo = options.lo;
  double hi = options.hi;
  if (!(lo > 0.0 && lo < hi)) {
    throw DomainError("transition bracket needs 0 < lo < hi");
  }
  if (!(options.tolerance > 0.0)) {
    throw DomainError("transition tolerance must be positive");
  }
  if (options.tolerance >= hi - lo) return {lo, hi};
  if (options.trials == 0) throw DomainError("transition needs trials >= 1");

  const double base = threshold_p(spec, n);
  auto frac_yes = [&](double mult) {
    return run_row(n, std::min(mult * base, 1.0), spec, options.trials,
                   options.master_seed, 0, options.workers, options.decide)
        .frac_yes;
  };
  if (!(frac_yes(lo) < 0.5 && frac_yes(hi) >= 0.5)) {
    throw DomainError("bracket does not straddle frac_yes = 1/2");
  }
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (frac_yes(mid) >= 0.5) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

ConnectivityRow connectivity_experiment(std::size_t n, double p,
                                        std::size_t trials,
                                        std::uint64_t master_seed,
                                        std::size_t workers) {
  if (trials == 0) throw DomainError("experiment needs trials >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1]");
  }
  if (n == 0 || n > Graph::kMaxVertices) throw DomainError("n out of range");
  ConnectivityRow row;
  row.n = n;
  row.p = p;
  row.trials = trials;
  row.connected = parallel_tally<std::size_t>(
      trials, workers,
      [&](std::size_t& acc, std::size_t t) {
        const RngSeed seed{master_seed, trial_stream(0, t)};
        if (is_connected(sample_gnp(n, p, seed))) ++acc;
      },
      [](std::size_t& total, std::size_t part) { total += part; });
  row.frac_connected =
      static_cast<double>(row.connected) / static_cast<double>(trials);
  return row;
}

std::string to_csv(const std::vector<ConnectivityRow>& rows) {
  std::ostringstream out;
  out << "n,p,trials,connected,frac_connected\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_g9(r.p) << ',' << r.trials << ','
        << r.connected << ',' << format_g9(r.frac_connected) << '\n';
  }
  return out.str();
}

}  // namespace mclab
