#include "eprcoin/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace eprcoin {

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t n, double z) {
  if (n < 1) throw std::invalid_argument("wilson_interval: n must be positive");
  if (successes < 0 || successes > n)
    throw std::invalid_argument("wilson_interval: successes out of range");
  if (!(z > 0.0)) throw std::invalid_argument("wilson_interval: z must be positive");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = p + z2 / (2.0 * nn);
  const double radius = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  double low = (center - radius) / denom;
  double high = (center + radius) / denom;
  if (successes == 0) low = 0.0;
  if (successes == n) high = 1.0;
  return {std::clamp(low, 0.0, 1.0), std::clamp(high, 0.0, 1.0)};
}

namespace {

struct Counts {
  std::int64_t non_aborted = 0;
  std::int64_t successes = 0;
};

Counts run_range(const ExperimentSpec& spec, std::int64_t begin, std::int64_t end) {
  Counts counts;
  for (std::int64_t i = begin; i < end; ++i) {
    SessionConfig config = spec.config;
    config.seed = trial_seed(spec.master_seed, static_cast<std::uint64_t>(i));
    const SessionResult r = run_full_session(config, spec.alice, spec.bob);
    if (r.aborted()) continue;
    ++counts.non_aborted;
    const int want = spec.predicate == SuccessPredicate::OutcomeEqualsOne ? 1 : spec.target_bit;
    if (*r.outcome_bit == want) ++counts.successes;
  }
  return counts;
}

}  // namespace

BiasEstimate estimate(const ExperimentSpec& spec, int threads) {
  if (spec.trials < 1) throw std::invalid_argument("estimate: trials must be >= 1");
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<std::int64_t>(threads, spec.trials));

  Counts total;
  if (threads == 1) {
    total = run_range(spec, 0, spec.trials);
  } else {
    std::vector<Counts> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    const std::int64_t chunk = (spec.trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, spec.trials);
      workers.emplace_back([&spec, &partial, t, begin, end] {
        partial[static_cast<std::size_t>(t)] = run_range(spec, begin, end);
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& c : partial) {
      total.non_aborted += c.non_aborted;
      total.successes += c.successes;
    }
  }

  BiasEstimate est;
  est.trials = spec.trials;
  est.non_aborted = total.non_aborted;
  est.successes = total.successes;
  est.abort_rate =
      static_cast<double>(spec.trials - total.non_aborted) / static_cast<double>(spec.trials);
  if (total.non_aborted == 0) {
    est.defined = false;
    est.p_hat = 0.0;
    est.epsilon_hat = est.p_hat - 0.5;
    est.ci_low = est.ci_high = 0.0;
    return est;
  }
  est.defined = true;
  est.p_hat = static_cast<double>(total.successes) / static_cast<double>(total.non_aborted);
  est.epsilon_hat = est.p_hat - 0.5;
  std::tie(est.ci_low, est.ci_high) = wilson_interval(total.successes, total.non_aborted, 1.96);
  return est;
}

std::vector<OracleRow> analytic_oracles() {
  std::vector<OracleRow> rows;
  const PureTwoQubitState singlet = make_bell(BellKind::PsiMinus);
  const Axis z = z_axis();

  // Pauli mixture vs I/4, max entrywise deviation.
  {
    const DensityMatrix4 rho = uniform_pauli_mixture(BellKind::PsiMinus);
    double dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Complex want = i == j ? Complex{0.25, 0.0} : Complex{0.0, 0.0};
        dev = std::max(dev, std::abs(rho.m[i][j] - want));
      }
    rows.push_back({"pauli_mixture_max_dev_from_quarter_identity", dev, 0.0, 1e-12, false});
  }

  // Singlet anti-correlation curve on a 19-angle grid: P(differ) = (1+cos t)/2.
  for (int k = 0; k <= 18; ++k) {
    const double theta = std::numbers::pi * k / 18.0;
    const Axis tilted{std::sin(theta), 0.0, std::cos(theta)};
    const double value = anticorrelation_probability(singlet, z, tilted);
    rows.push_back({"singlet_anticorrelation_theta_" + std::to_string(k) + "pi_over_18", value,
                    (1.0 + std::cos(theta)) / 2.0, 1e-12, false});
  }

  // Random-axis pass rates by sphere quadrature (fixed internal stream).
  {
    const int samples = 10000;
    RandomStream quad(mix64(0xacce55ULL));
    double product_sum = 0.0;
    double collapsed_sum = 0.0;
    const PureTwoQubitState product = make_product(1, 1);
    const PureTwoQubitState collapsed = make_product(0, 1);
    for (int i = 0; i < samples; ++i) {
      const Axis a = uniform_axis(quad);
      product_sum += anticorrelation_probability(product, a, a);
      collapsed_sum += anticorrelation_probability(collapsed, a, a);
    }
    rows.push_back(
        {"product_pair_random_axis_pass_rate", product_sum / samples, 1.0 / 3.0, 0.02, false});
    rows.push_back({"collapsed_pair_random_axis_pass_rate", collapsed_sum / samples, 2.0 / 3.0,
                    0.02, false});
  }

  // Half product pairs, half singlets: P(bit 1) on the designated pair.
  {
    const double p_product = outcome_probability(make_product(1, 1), Particle::A, z,
                                                 SpinOutcome::Down);
    const double p_singlet = outcome_probability(singlet, Particle::A, z, SpinOutcome::Down);
    rows.push_back({"mixed_strategy_bit1_probability", 0.5 * p_product + 0.5 * p_singlet, 0.75,
                    1e-12, false});
  }

  for (auto& row : rows) row.pass = std::abs(row.value - row.expected) <= row.tolerance;
  return rows;
}

}  // namespace eprcoin
