// Named strategies for both parties: honest baselines plus the built-in
// attacks, each expressed through the strategy hooks only.
//
// Canonical spec strings (used by the CLI and embedded in transcripts):
//   honest                            either side
//   naive_alice_nolock                Alice: plain singlets, no locking
//   alice_mixed_product:<fraction>    Alice: |1>|1> with that probability
//   bob_zaxis_select:target=<0|1>     Bob: z-premeasure, discard by outcome
//   bob_premeasure_all:target=<0|1>   Bob: z-premeasure, then honest play
//   bob_premeasure_unverified:target=<0|1>
//                                     Bob: z-premeasure only unchallenged pairs
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "eprcoin/protocol.hpp"
#include "eprcoin/strategy.hpp"

namespace eprcoin {

struct StrategySpec {
  std::string name;
  std::optional<double> fraction;  // alice_mixed_product
  std::optional<int> target;       // bob attacks: preferred outcome bit

  std::string canonical() const;
  static StrategySpec parse(const std::string& text);  // throws std::invalid_argument
};

std::unique_ptr<AliceStrategy> honest_alice();
std::unique_ptr<AliceStrategy> naive_alice_nolock();
std::unique_ptr<AliceStrategy> alice_mixed_product(double product_fraction);

std::unique_ptr<BobStrategy> honest_bob();
std::unique_ptr<BobStrategy> bob_zaxis_select(int target_bit);
std::unique_ptr<BobStrategy> bob_premeasure_all(int target_bit);
std::unique_ptr<BobStrategy> bob_premeasure_unverified(int target_bit);

// Factory entry points; reject wrong-side or unknown names with a message
// listing the valid ones.
std::unique_ptr<AliceStrategy> make_alice(const StrategySpec& spec);
std::unique_ptr<BobStrategy> make_bob(const StrategySpec& spec);

SessionResult run_full_session(const SessionConfig& config, const StrategySpec& alice,
                               const StrategySpec& bob, const PhaseCallback& on_phase = {});

}  // namespace eprcoin
