#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& args) {
  CmdResult result;
  const std::string cmd = std::string(EPRCOIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const char* kHonestRun =
    "run --n 20 --seed 42 --alice honest --bob honest --rule fixed --bell psi- --verify on";

}  // namespace

TEST_CASE("run completes, reruns identically, and reports the phase log") {
  const CmdResult first = run_cmd(kHonestRun);
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("phase LOCKED_AND_SENT") != std::string::npos);
  CHECK(first.out.find("phase DONE") != std::string::npos);
  CHECK(first.out.find("outcome ") != std::string::npos);
  const CmdResult second = run_cmd(kHonestRun);
  CHECK(second.out == first.out);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cmd("run --n 7").exit_code == 1);
  CHECK(run_cmd("run --no-such-flag 3").exit_code == 1);
  CHECK(run_cmd("bias --trials 0").exit_code == 1);
  CHECK(run_cmd("bias --target 2").exit_code == 1);
  CHECK(run_cmd("run --rule sideways").exit_code == 1);

  const CmdResult bad_strategy = run_cmd("run --alice not_a_strategy");
  CHECK(bad_strategy.exit_code == 1);
  CHECK(bad_strategy.out.find("valid") != std::string::npos);
}

TEST_CASE("session aborts exit with code 2") {
  const CmdResult aborted =
      run_cmd("run --n 20 --seed 11 --alice alice_mixed_product:1 --bob honest --verify on");
  CHECK(aborted.exit_code == 2);
  CHECK(aborted.out.find("outcome ABORT") != std::string::npos);
}

TEST_CASE("oracle table prints and passes") {
  const CmdResult oracle = run_cmd("oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("pauli_mixture_max_dev_from_quarter_identity") != std::string::npos);
  CHECK(oracle.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bias prints the estimate table") {
  const CmdResult bias = run_cmd(
      "bias --n 4 --trials 500 --master-seed 6 --alice honest --bob honest --target one");
  CHECK(bias.exit_code == 0);
  CHECK(bias.out.find("trials=500") != std::string::npos);
  CHECK(bias.out.find("p_hat=") != std::string::npos);
  CHECK(bias.out.find("abort_rate=") != std::string::npos);
}

TEST_CASE("replay of a missing file exits with code 1") {
  CHECK(run_cmd("replay no_such_file.eprt").exit_code == 1);
}

TEST_CASE("replay round trip through the filesystem") {
  const CmdResult made = run_cmd(std::string(kHonestRun) + " --transcript cli_roundtrip.eprt");
  REQUIRE(made.exit_code == 0);
  const CmdResult ok = run_cmd("replay cli_roundtrip.eprt");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("replay ok") != std::string::npos);
}
