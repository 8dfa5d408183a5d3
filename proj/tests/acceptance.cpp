// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.
#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "eprcoin/adversary.hpp"
#include "eprcoin/io.hpp"
#include "eprcoin/stats.hpp"

using namespace eprcoin;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << id << (pass ? " PASS " : " FAIL ") << detail << "\n";
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ExperimentSpec experiment(const std::string& alice, const std::string& bob, int n, bool verify,
                          DesignatedRule rule, std::int64_t trials, std::uint64_t master_seed,
                          int target) {
  ExperimentSpec spec;
  spec.config.n = n;
  spec.config.verify = verify;
  spec.config.rule = rule;
  spec.alice = StrategySpec::parse(alice);
  spec.bob = StrategySpec::parse(bob);
  spec.trials = trials;
  spec.master_seed = master_seed;
  if (target == 0 || target == 1) {
    spec.predicate = SuccessPredicate::OutcomeEqualsTarget;
    spec.target_bit = target;
  }
  return spec;
}

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
  CmdResult result;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---------------------------------------------------------------------------

void ac1_evolution_table() {
  const PureTwoQubitState singlet = make_bell(BellKind::PsiMinus);
  bool pass = equal_up_to_phase(apply_pauli(singlet, Particle::A, PauliOp::X),
                                make_bell(BellKind::PhiMinus), 1e-12) &&
              equal_up_to_phase(apply_pauli(singlet, Particle::A, PauliOp::Y),
                                make_bell(BellKind::PhiPlus), 1e-12) &&
              equal_up_to_phase(apply_pauli(singlet, Particle::A, PauliOp::Z),
                                make_bell(BellKind::PsiPlus), 1e-12) &&
              equal_up_to_phase(apply_pauli(singlet, Particle::A, PauliOp::Ident), singlet,
                                1e-12);
  for (PauliOp op : {PauliOp::X, PauliOp::Y, PauliOp::Z, PauliOp::Ident})
    for (Particle p : {Particle::A, Particle::B})
      for (BellKind kind : {BellKind::PsiMinus, BellKind::PsiPlus, BellKind::PhiMinus,
                            BellKind::PhiPlus}) {
        const PureTwoQubitState s = make_bell(kind);
        pass = pass && equal_componentwise(apply_pauli(apply_pauli(s, p, op), p, op), s, 1e-12);
      }
  report("AC-1", pass, "singlet evolutions X->phi- Y->phi+ Z->psi+ I->psi-, sigma^2 = I exact");
}

void ac2_locking_algebra() {
  const DensityMatrix4 mixture = uniform_pauli_mixture(BellKind::PsiMinus);
  double dev_identity = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex want = i == j ? Complex{0.25, 0.0} : Complex{0.0, 0.0};
      dev_identity = std::max(dev_identity, std::abs(mixture.m[i][j] - want));
    }
  DensityMatrix4 products{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const DensityMatrix4 term = projector(make_product(a, b));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) products.m[i][j] += 0.25 * term.m[i][j];
    }
  double dev_products = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      dev_products = std::max(dev_products, std::abs(mixture.m[i][j] - products.m[i][j]));
  const bool pass = dev_identity <= 1e-12 && dev_products <= 1e-12;
  report("AC-2", pass,
         "mixture vs I/4 dev=" + fmt(dev_identity) + ", vs product mixture dev=" +
             fmt(dev_products) + " (tol 1e-12)");
}

void ac3_honest_fairness() {
  const std::int64_t trials = 100000;
  const std::uint64_t master = 30001;
  std::atomic<std::int64_t> ones{0}, aborts{0}, correlated_pairs{0};
  const int threads = worker_threads();
  std::vector<std::thread> workers;
  const std::int64_t chunk = (trials + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      std::int64_t my_ones = 0, my_aborts = 0, my_correlated = 0;
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, trials);
      for (std::int64_t i = begin; i < end; ++i) {
        SessionConfig config;
        config.n = 20;
        config.seed = trial_seed(master, static_cast<std::uint64_t>(i));
        const SessionResult r = run_full_session(config, StrategySpec::parse("honest"),
                                                 StrategySpec::parse("honest"));
        if (r.aborted()) {
          ++my_aborts;
          continue;
        }
        if (*r.outcome_bit == 1) ++my_ones;
        for (const auto& pair : r.final_pair_bits)
          if (pair.alice_bit == pair.bob_bit) ++my_correlated;
      }
      ones += my_ones;
      aborts += my_aborts;
      correlated_pairs += my_correlated;
    });
  }
  for (auto& w : workers) w.join();
  const double p_hat = static_cast<double>(ones) / static_cast<double>(trials - aborts);
  const bool pass =
      std::abs(p_hat - 0.5) <= 0.005 && aborts == 0 && correlated_pairs == 0;
  report("AC-3", pass,
         "honest p_hat(1)=" + fmt(p_hat) + " (0.5 +- 0.005), aborts=" +
             std::to_string(aborts.load()) + ", correlated final pairs=" +
             std::to_string(correlated_pairs.load()));
}

void ac4_dishonest_alice_bias() {
  const BiasEstimate est =
      estimate(experiment("alice_mixed_product:0.5", "honest", 20, false,
                          DesignatedRule::FixedFirst, 100000, 30002, -1),
               worker_threads());
  const bool pass = std::abs(est.p_hat - 0.75) <= 0.005 && est.abort_rate == 0.0;
  report("AC-4", pass,
         "mixed-product p_hat(1)=" + fmt(est.p_hat) + " (0.75 +- 0.005), epsilon_hat=" +
             fmt(est.epsilon_hat) + ", abort_rate=" + fmt(est.abort_rate));
}

void ac5_bob_bias_under_locking() {
  bool pass = true;
  std::string detail = "verification off, fixed-first:";
  for (const char* base : {"bob_premeasure_all", "bob_zaxis_select"}) {
    for (int target : {0, 1}) {
      const std::string bob = std::string(base) + ":target=" + std::to_string(target);
      const BiasEstimate est =
          estimate(experiment("honest", bob, 20, false, DesignatedRule::FixedFirst, 100000,
                              30010 + static_cast<std::uint64_t>(target), target),
                   worker_threads());
      const bool ok = std::abs(est.p_hat - 0.5) <= 0.005;
      pass = pass && ok;
      detail += " " + std::string(base) + "[t" + std::to_string(target) + "]=" +
                fmt(est.p_hat) + (ok ? "" : "<-out-of-range");
    }
  }
  report("AC-5", pass, detail + " (required 0.5 +- 0.005)");
}

void ac6_detection_rates() {
  // derived oracle rates by sphere quadrature over 10^4 axes
  RandomStream quad(20250801);
  double collapsed_rate = 0.0, product_rate = 0.0;
  const int samples = 10000;
  const PureTwoQubitState collapsed = make_product(0, 1);
  const PureTwoQubitState product = make_product(1, 1);
  for (int k = 0; k < samples; ++k) {
    const Axis a = uniform_axis(quad);
    collapsed_rate += anticorrelation_probability(collapsed, a, a);
    product_rate += anticorrelation_probability(product, a, a);
  }
  collapsed_rate /= samples;  // expected 2/3
  product_rate /= samples;    // expected 1/3

  const double abort_oracle_a = 1.0 - std::pow(collapsed_rate, 10.0);
  const BiasEstimate est_a =
      estimate(experiment("honest", "bob_premeasure_all:target=1", 20, true,
                          DesignatedRule::FixedFirst, 100000, 30003, 1),
               worker_threads());
  const bool pass_a = std::abs(est_a.abort_rate - abort_oracle_a) <= 0.01;

  // E[p^K] for K ~ Binomial(10, 1/2) is ((1+p)/2)^10
  const double abort_oracle_b = 1.0 - std::pow((1.0 + product_rate) / 2.0, 10.0);
  const BiasEstimate est_b =
      estimate(experiment("alice_mixed_product:0.5", "honest", 20, true,
                          DesignatedRule::FixedFirst, 100000, 30004, -1),
               worker_threads());
  const bool pass_b = std::abs(est_b.abort_rate - abort_oracle_b) <= 0.01;

  report("AC-6", pass_a && pass_b,
         "premeasure_all abort=" + fmt(est_a.abort_rate) + " vs oracle " + fmt(abort_oracle_a) +
             "; mixed-product abort=" + fmt(est_b.abort_rate) + " vs oracle " +
             fmt(abort_oracle_b) + " (tol 0.01)");
}

void ac7_naive_break() {
  const BiasEstimate est =
      estimate(experiment("naive_alice_nolock", "bob_zaxis_select:target=1", 20, true,
                          DesignatedRule::BobChooses, 100000, 30005, 1),
               worker_threads());
  const bool pass = est.p_hat >= 0.995 && est.abort_rate == 0.0;
  report("AC-7", pass,
         "zaxis vs naive p_hat(target)=" + fmt(est.p_hat) + " (>= 0.995), abort_rate=" +
             fmt(est.abort_rate));
}

void ac8_designated_rule_probe() {
  const std::string bob = "bob_premeasure_unverified:target=1";
  const BiasEstimate chooses = estimate(
      experiment("honest", bob, 20, true, DesignatedRule::BobChooses, 100000, 30006, 1),
      worker_threads());
  const BiasEstimate fixed = estimate(
      experiment("honest", bob, 20, true, DesignatedRule::FixedFirst, 100000, 30007, 1),
      worker_threads());
  const BiasEstimate pub = estimate(
      experiment("honest", bob, 20, true, DesignatedRule::PublicRandom, 100000, 30008, 1),
      worker_threads());
  const bool pass = chooses.p_hat >= 0.985 && chooses.abort_rate <= 0.005 &&
                    std::abs(fixed.p_hat - 0.5) <= 0.005 &&
                    std::abs(pub.p_hat - 0.5) <= 0.005;
  report("AC-8", pass,
         "bob-chooses p_hat=" + fmt(chooses.p_hat) + " abort=" + fmt(chooses.abort_rate) +
             "; fixed p_hat=" + fmt(fixed.p_hat) + "; public-random p_hat=" + fmt(pub.p_hat));
}

void ac9_born_rule_curve() {
  RandomStream rng(30009);
  const PureTwoQubitState singlet = make_bell(BellKind::PsiMinus);
  const Axis za = z_axis();
  bool pass = true;
  std::string detail = "max dev ";
  double max_dev = 0.0;
  for (int k = 0; k <= 6; ++k) {
    const double theta = std::numbers::pi * k / 6.0;
    const Axis tilted{std::sin(theta), 0.0, std::cos(theta)};
    int differ = 0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
      const MeasurementResult first = measure_spin(singlet, Particle::A, za, rng.uniform01());
      const MeasurementResult second =
          measure_spin(first.state, Particle::B, tilted, rng.uniform01());
      if (first.outcome != second.outcome) ++differ;
    }
    const double freq = static_cast<double>(differ) / samples;
    const double want = (1.0 + std::cos(theta)) / 2.0;
    max_dev = std::max(max_dev, std::abs(freq - want));
    pass = pass && std::abs(freq - want) <= 0.02;
  }
  report("AC-9", pass, detail + fmt(max_dev) + " over theta grid (tol 0.02)");
}

void ac10_determinism_and_io() {
  const std::string cli = EPRCOIN_CLI_PATH;
  const std::string flags =
      " run --n 20 --seed 42 --alice honest --bob honest --rule fixed --bell psi- --verify on";
  const CmdResult first = run_cmd(cli + flags + " --transcript acceptance_t1.eprt");
  const CmdResult second = run_cmd(cli + flags + " --transcript acceptance_t2.eprt");
  bool pass = first.exit_code == 0 && second.exit_code == 0 && first.out == second.out;
  const std::string t1 = slurp("acceptance_t1.eprt");
  pass = pass && !t1.empty() && t1 == slurp("acceptance_t2.eprt");

  // codec identities on the golden honest transcript
  const std::string golden = std::string(EPRCOIN_GOLDEN_DIR) + "/honest_n4.eprt";
  const std::string golden_text = slurp(golden);
  bool codec_ok = false;
  try {
    const TranscriptFile parsed = parse_transcript(golden_text);
    codec_ok = encode_transcript(parsed) == golden_text;
    int seq = 0;
    for (const auto& entry : parsed.records) {
      const RecordMeta meta{parsed.session_id, seq, entry.sender};
      const std::string line = encode_record(meta, entry.msg);
      const auto [meta2, msg2] = decode_record(line, parsed.config.n);
      codec_ok = codec_ok && encode_record(meta2, msg2) == line;
      ++seq;
    }
  } catch (const std::exception&) {
    codec_ok = false;
  }
  pass = pass && codec_ok;

  const CmdResult replay_ok = run_cmd(cli + " replay " + golden);
  pass = pass && replay_ok.exit_code == 0;

  // flip one byte (an outcome sign) and expect a mismatch, exit code 2
  std::string tampered = golden_text;
  const auto results_pos = tampered.find("RESULTS");
  auto sign_pos = tampered.find(" +1", results_pos);
  if (sign_pos == std::string::npos) sign_pos = tampered.find(" -1", results_pos);
  bool tamper_ok = false;
  if (sign_pos != std::string::npos) {
    tampered[sign_pos + 1] = tampered[sign_pos + 1] == '+' ? '-' : '+';
    std::ofstream out("acceptance_tampered.eprt", std::ios::binary);
    out << tampered;
    out.close();
    const CmdResult replay_bad = run_cmd(cli + " replay acceptance_tampered.eprt");
    tamper_ok = replay_bad.exit_code == 2;
  }
  pass = pass && tamper_ok;

  report("AC-10", pass,
         std::string("byte-identical reruns, codec identities, replay exit codes ") +
             std::to_string(replay_ok.exit_code) + "/" + (tamper_ok ? "2" : "!2"));
}

}  // namespace

int main() {
  ac1_evolution_table();
  ac2_locking_algebra();
  ac3_honest_fairness();
  ac4_dishonest_alice_bias();
  ac5_bob_bias_under_locking();
  ac6_detection_rates();
  ac7_naive_break();
  ac8_designated_rule_probe();
  ac9_born_rule_curve();
  ac10_determinism_and_io();
  if (g_failures > 0) std::cout << g_failures << " criterion(s) failed\n";
  return g_failures;
}
