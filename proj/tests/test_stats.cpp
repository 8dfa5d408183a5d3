#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "eprcoin/stats.hpp"

using namespace eprcoin;

namespace {

int test_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ExperimentSpec honest_experiment(int n, std::int64_t trials, std::uint64_t master_seed) {
  ExperimentSpec spec;
  spec.config.n = n;
  spec.alice = StrategySpec::parse("honest");
  spec.bob = StrategySpec::parse("honest");
  spec.trials = trials;
  spec.master_seed = master_seed;
  return spec;
}

}  // namespace

TEST_CASE("wilson interval against hand-evaluated values") {
  // (50, 100, 1.96): center = .519208, radius = .0998645, denom = 1.038416
  {
    const auto [low, high] = wilson_interval(50, 100, 1.96);
    CHECK(low == doctest::Approx(0.403830).epsilon(1e-4));
    CHECK(high == doctest::Approx(0.596170).epsilon(1e-4));
  }
  // (0, 100, 1.96): low is exactly zero, high = z^2/n / (1 + z^2/n)
  {
    const auto [low, high] = wilson_interval(0, 100, 1.96);
    CHECK(low == 0.0);
    CHECK(high == doctest::Approx(0.0369947).epsilon(1e-4));
  }
  // boundary: all successes
  {
    const auto [low, high] = wilson_interval(100, 100, 1.96);
    CHECK(high == 1.0);
    CHECK(low > 0.9);
  }
  CHECK_THROWS_AS(wilson_interval(0, 0, 1.96), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(5, 4, 1.96), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(1, 4, 0.0), std::invalid_argument);
}

TEST_CASE("wilson interval brackets the point estimate") {
  for (std::int64_t n : {1, 2, 10, 1000}) {
    for (std::int64_t s = 0; s <= n; s += std::max<std::int64_t>(1, n / 7)) {
      const auto [low, high] = wilson_interval(s, n, 1.96);
      const double p = static_cast<double>(s) / static_cast<double>(n);
      CHECK(low >= 0.0);
      CHECK(high <= 1.0);
      CHECK(low <= p + 1e-12);
      CHECK(high >= p - 1e-12);
    }
  }
}

TEST_CASE("estimate on an honest pairing is fair, reproducible, and well-formed") {
  const ExperimentSpec spec = honest_experiment(4, 10000, 314);
  const BiasEstimate est = estimate(spec, test_threads());
  CHECK(est.defined);
  CHECK(est.trials == 10000);
  CHECK(est.non_aborted == 10000);
  CHECK(est.abort_rate == 0.0);
  CHECK(std::abs(est.p_hat - 0.5) <= 0.02);
  CHECK(est.epsilon_hat == est.p_hat - 0.5);
  CHECK(est.ci_low <= est.p_hat);
  CHECK(est.ci_high >= est.p_hat);

  const BiasEstimate rerun = estimate(spec, 1);  // thread count must not matter
  CHECK(rerun == est);
}

TEST_CASE("estimate matches manually seeded sessions") {
  ExperimentSpec spec = honest_experiment(6, 3, 2718);
  const BiasEstimate est = estimate(spec);
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < spec.trials; ++i) {
    SessionConfig config = spec.config;
    config.seed = trial_seed(spec.master_seed, static_cast<std::uint64_t>(i));
    const SessionResult r = run_full_session(config, spec.alice, spec.bob);
    REQUIRE(!r.aborted());
    if (*r.outcome_bit == 1) ++successes;
  }
  CHECK(est.successes == successes);
}

TEST_CASE("a single trial gives a degenerate but legal estimate") {
  const BiasEstimate est = estimate(honest_experiment(2, 1, 55));
  CHECK(est.defined);
  CHECK((est.p_hat == 0.0 || est.p_hat == 1.0));
  CHECK(est.ci_low <= est.p_hat);
  CHECK(est.ci_high >= est.p_hat);
  CHECK(est.ci_high - est.ci_low > 0.5);  // wide interval at n = 1
}

TEST_CASE("the target predicate counts the declared bit") {
  ExperimentSpec spec = honest_experiment(4, 2000, 77);
  spec.predicate = SuccessPredicate::OutcomeEqualsTarget;
  spec.target_bit = 0;
  const BiasEstimate zeros = estimate(spec, test_threads());
  spec.target_bit = 1;
  const BiasEstimate ones = estimate(spec, test_threads());
  CHECK(zeros.successes + ones.successes == 2000);
}

TEST_CASE("an experiment that always aborts is flagged undefined") {
  ExperimentSpec spec;
  spec.config.n = 20;
  spec.config.verify = true;
  spec.alice = StrategySpec::parse("alice_mixed_product:1");
  spec.bob = StrategySpec::parse("honest");
  spec.trials = 30;
  spec.master_seed = 11;  // all 30 trials abort under this seed
  const BiasEstimate est = estimate(spec);
  CHECK(!est.defined);
  CHECK(est.non_aborted == 0);
  CHECK(est.abort_rate == 1.0);
  CHECK(est.epsilon_hat == est.p_hat - 0.5);
}

TEST_CASE("estimate rejects nonsensical inputs") {
  ExperimentSpec spec = honest_experiment(4, 0, 1);
  CHECK_THROWS_AS(estimate(spec), std::invalid_argument);
}

TEST_CASE("the honest interval covers one half across master seeds") {
  int misses = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BiasEstimate est =
        estimate(honest_experiment(2, 100000, 1000 + seed), test_threads());
    if (est.ci_low > 0.5 || est.ci_high < 0.5) ++misses;
    CHECK(std::abs(est.p_hat - 0.5) <= 0.01);
  }
  CHECK(misses <= 3);
}

TEST_CASE("estimation error shrinks with the sample size") {
  const double err_small = std::abs(estimate(honest_experiment(2, 100, 5)).p_hat - 0.5);
  const double err_large =
      std::abs(estimate(honest_experiment(2, 100000, 5), test_threads()).p_hat - 0.5);
  CHECK(err_small <= 0.2);
  CHECK(err_large <= 0.01);
}

TEST_CASE("analytic oracle table holds at its stated tolerances") {
  const std::vector<OracleRow> rows = analytic_oracles();
  REQUIRE(rows.size() == 23);
  for (const OracleRow& row : rows) {
    INFO(row.name);
    CHECK(row.pass);
    CHECK(std::abs(row.value - row.expected) <= row.tolerance);
  }

  // spot values
  bool saw_mixture = false, saw_theta0 = false, saw_product = false, saw_collapsed = false,
       saw_mixed = false;
  for (const OracleRow& row : rows) {
    if (row.name == "pauli_mixture_max_dev_from_quarter_identity") {
      saw_mixture = true;
      CHECK(row.value <= 1e-12);
    }
    if (row.name == "singlet_anticorrelation_theta_0pi_over_18") {
      saw_theta0 = true;
      CHECK(row.value == doctest::Approx(1.0).epsilon(1e-12));
    }
    if (row.name == "product_pair_random_axis_pass_rate") {
      saw_product = true;
      CHECK(std::abs(row.value - 1.0 / 3.0) <= 0.02);
    }
    if (row.name == "collapsed_pair_random_axis_pass_rate") {
      saw_collapsed = true;
      CHECK(std::abs(row.value - 2.0 / 3.0) <= 0.02);
    }
    if (row.name == "mixed_strategy_bit1_probability") {
      saw_mixed = true;
      CHECK(row.value == doctest::Approx(0.75).epsilon(1e-12));
    }
  }
  CHECK(saw_mixture);
  CHECK(saw_theta0);
  CHECK(saw_product);
  CHECK(saw_collapsed);
  CHECK(saw_mixed);
}
