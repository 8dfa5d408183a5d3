// Monte Carlo estimation of bias, success, and abort rates with Wilson
// confidence intervals, plus the closed-form oracles the simulations are
// cross-checked against.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eprcoin/adversary.hpp"

namespace eprcoin {

enum class SuccessPredicate { OutcomeEqualsTarget, OutcomeEqualsOne };

struct ExperimentSpec {
  SessionConfig config;  // per-trial seeds are derived from master_seed; config.seed is ignored
  StrategySpec alice{"honest", {}, {}};
  StrategySpec bob{"honest", {}, {}};
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  SuccessPredicate predicate = SuccessPredicate::OutcomeEqualsOne;
  int target_bit = 1;  // read when predicate = OutcomeEqualsTarget
};

struct BiasEstimate {
  std::int64_t trials = 0;
  std::int64_t non_aborted = 0;
  std::int64_t successes = 0;
  double p_hat = 0.0;
  double epsilon_hat = -0.5;  // p_hat - 1/2 exactly
  double ci_low = 0.0;        // 95% Wilson interval on p_hat
  double ci_high = 0.0;
  double abort_rate = 0.0;
  bool defined = false;  // false when every trial aborted

  bool operator==(const BiasEstimate&) const = default;
};

// Wilson score interval; low = 0 exactly at successes = 0 and high = 1
// exactly at successes = n.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t n, double z);

// Runs `trials` independent sessions (seed of trial i = trial_seed(master, i))
// and aggregates counts. Aborted sessions are excluded from p_hat and
// reported through abort_rate. Aggregation is count-based, so the result is
// independent of the number of worker threads.
BiasEstimate estimate(const ExperimentSpec& spec, int threads = 1);

struct OracleRow {
  std::string name;
  double value;
  double expected;
  double tolerance;
  bool pass;
};

// Closed-form values computed from the quantum core alone (no protocol
// simulation): the singlet anti-correlation curve on a 19-angle grid, the
// random-axis pass rates of product and collapsed pairs by sphere quadrature,
// the mixed-strategy bit-1 probability, and the Pauli-mixture distance from
// I/4.
std::vector<OracleRow> analytic_oracles();

}  // namespace eprcoin
