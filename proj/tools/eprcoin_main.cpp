// eprcoin — run coin-tossing sessions and cheating experiments, dump the
// analytic oracle table, or replay a recorded transcript.
//
// Exit codes: 0 success/DONE, 1 usage or I/O error, 2 domain outcome
// (abort, oracle failure, replay mismatch).
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "eprcoin/adversary.hpp"
#include "eprcoin/io.hpp"
#include "eprcoin/stats.hpp"

namespace {

using namespace eprcoin;

int resolve_threads() {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("EPRCOIN_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < threads) threads = static_cast<unsigned>(cap);
  }
  return static_cast<int>(threads);
}

struct RunFlags {
  int n = 20;
  std::uint64_t seed = 0;
  std::string alice = "honest";
  std::string bob = "honest";
  std::string rule = "fixed";
  std::string bell = "psi-";
  std::string verify = "on";
  std::string transcript_path;
};

void add_session_flags(CLI::App* cmd, RunFlags& flags, bool with_seed) {
  cmd->add_option("--n", flags.n, "number of pairs (even, >= 2)");
  if (with_seed) cmd->add_option("--seed", flags.seed, "session seed");
  cmd->add_option("--alice", flags.alice, "alice strategy spec");
  cmd->add_option("--bob", flags.bob, "bob strategy spec");
  cmd->add_option("--rule", flags.rule, "designated-pair rule: fixed|bob|random")
      ->check(CLI::IsMember({"fixed", "bob", "random"}));
  cmd->add_option("--bell", flags.bell, "final bell state: psi-|psi+")
      ->check(CLI::IsMember({"psi-", "psi+"}));
  cmd->add_option("--verify", flags.verify, "verification: on|off")
      ->check(CLI::IsMember({"on", "off"}));
}

SessionConfig make_config(const RunFlags& flags) {
  if (flags.n < 2 || flags.n % 2 != 0)
    throw CLI::ValidationError("--n", "must be a positive even integer");
  SessionConfig config;
  config.n = flags.n;
  config.seed = flags.seed;
  config.rule = parse_rule_token(flags.rule);
  config.final_bell = parse_bell_token(flags.bell);
  config.verify = flags.verify == "on";
  return config;
}

int cmd_run(const RunFlags& flags) {
  const SessionConfig config = make_config(flags);
  const StrategySpec alice = StrategySpec::parse(flags.alice);
  const StrategySpec bob = StrategySpec::parse(flags.bob);
  std::cout << "eprcoin run n=" << config.n << " seed=" << config.seed
            << " rule=" << rule_token(config.rule) << " bell=" << bell_token(config.final_bell)
            << " verify=" << (config.verify ? "on" : "off") << " alice=" << alice.canonical()
            << " bob=" << bob.canonical() << "\n";
  const SessionResult result = run_full_session(config, alice, bob, [](ProtocolPhase phase) {
    std::cout << "phase " << phase_name(phase) << "\n";
  });
  if (!flags.transcript_path.empty()) write_transcript(flags.transcript_path, result);
  if (result.aborted()) {
    std::cout << "abort " << result.abort_reason << "\n";
    std::cout << "outcome ABORT\n";
    return 2;
  }
  std::cout << "outcome " << *result.outcome_bit << "\n";
  std::cout << "designated " << result.designated_index << "\n";
  return 0;
}

struct BiasFlags {
  RunFlags session;
  std::int64_t trials = 100000;
  std::uint64_t master_seed = 0;
  std::string target = "one";
  std::string out_path;
};

void print_report(std::ostream& out, const ExperimentSpec& spec, const BiasEstimate& est,
                  double elapsed_seconds) {
  out << "alice=" << spec.alice.canonical() << "\n";
  out << "bob=" << spec.bob.canonical() << "\n";
  out << "n=" << spec.config.n << "\n";
  out << "rule=" << rule_token(spec.config.rule) << "\n";
  out << "bell=" << bell_token(spec.config.final_bell) << "\n";
  out << "verify=" << (spec.config.verify ? "on" : "off") << "\n";
  out << "master_seed=" << spec.master_seed << "\n";
  out << "target="
      << (spec.predicate == SuccessPredicate::OutcomeEqualsOne ? std::string("one")
                                                               : std::to_string(spec.target_bit))
      << "\n";
  out << "trials=" << est.trials << "\n";
  out << "non_aborted=" << est.non_aborted << "\n";
  out << "successes=" << est.successes << "\n";
  out << "defined=" << (est.defined ? 1 : 0) << "\n";
  out << "p_hat=" << fmt_real(est.p_hat) << "\n";
  out << "epsilon_hat=" << fmt_real(est.epsilon_hat) << "\n";
  out << "ci_low=" << fmt_real(est.ci_low) << "\n";
  out << "ci_high=" << fmt_real(est.ci_high) << "\n";
  out << "abort_rate=" << fmt_real(est.abort_rate) << "\n";
  out << "elapsed_seconds=" << fmt_real(elapsed_seconds) << "\n";
}

int cmd_bias(const BiasFlags& flags) {
  if (flags.trials < 1) throw CLI::ValidationError("--trials", "must be >= 1");
  ExperimentSpec spec;
  spec.config = make_config(flags.session);
  spec.alice = StrategySpec::parse(flags.session.alice);
  spec.bob = StrategySpec::parse(flags.session.bob);
  spec.trials = flags.trials;
  spec.master_seed = flags.master_seed;
  if (flags.target == "one") {
    spec.predicate = SuccessPredicate::OutcomeEqualsOne;
  } else if (flags.target == "0" || flags.target == "1") {
    spec.predicate = SuccessPredicate::OutcomeEqualsTarget;
    spec.target_bit = flags.target == "1" ? 1 : 0;
  } else {
    throw CLI::ValidationError("--target", "must be 0, 1, or one");
  }
  // Validate the strategy specs before burning any cycles.
  make_alice(spec.alice);
  make_bob(spec.bob);

  const auto start = std::chrono::steady_clock::now();
  const BiasEstimate est = estimate(spec, resolve_threads());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  print_report(std::cout, spec, est, elapsed);
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + flags.out_path);
    print_report(out, spec, est, elapsed);
  }
  return 0;
}

int cmd_oracle() {
  bool all_pass = true;
  for (const OracleRow& row : analytic_oracles()) {
    std::cout << row.name << " value=" << fmt_real(row.value)
              << " expected=" << fmt_real(row.expected) << " tol=" << fmt_real(row.tolerance)
              << (row.pass ? " PASS" : " FAIL") << "\n";
    all_pass = all_pass && row.pass;
  }
  return all_pass ? 0 : 2;
}

int cmd_replay(const std::string& path) {
  TranscriptFile transcript;
  try {
    transcript = read_transcript(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    const SessionResult result = replay(transcript);
    std::cout << "replay ok: ";
    if (result.aborted())
      std::cout << "ABORT\n";
    else
      std::cout << "outcome " << *result.outcome_bit << " designated "
                << result.designated_index << "\n";
    return 0;
  } catch (const ReplayMismatch& e) {
    std::cout << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EPR coin-tossing protocol simulator"};
  app.require_subcommand(1);
  app.set_config("--config");

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one session");
  add_session_flags(run, run_flags, true);
  run->add_option("--transcript", run_flags.transcript_path, "write the transcript here (.eprt)");

  BiasFlags bias_flags;
  CLI::App* bias = app.add_subcommand("bias", "estimate bias over many sessions");
  add_session_flags(bias, bias_flags.session, false);
  bias->add_option("--trials", bias_flags.trials, "number of sessions");
  bias->add_option("--master-seed", bias_flags.master_seed, "seed of the per-trial seed stream");
  bias->add_option("--target", bias_flags.target, "success predicate: 0|1|one");
  bias->add_option("--out", bias_flags.out_path, "write a key=value report here");

  CLI::App* oracle = app.add_subcommand("oracle", "print the closed-form oracle table");

  std::string replay_path;
  CLI::App* replay_cmd = app.add_subcommand("replay", "check a recorded transcript");
  replay_cmd->add_option("path", replay_path, "transcript file (.eprt)")->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_flags);
    if (bias->parsed()) return cmd_bias(bias_flags);
    if (oracle->parsed()) return cmd_oracle();
    if (replay_cmd->parsed()) return cmd_replay(replay_path);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
