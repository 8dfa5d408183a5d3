// Deterministic randomness. Everything derives from one master seed through
// the splitmix64 finalizer, so Alice, Bob, and the public coin run on
// independent substreams and parallel trials never share draws:
//
//   role_seed(session_seed, role) = mix64(session_seed ^ ROLE_TAG[role])
//   trial_seed(master_seed, i)    = mix64(master_seed ^ mix64(TRIAL_TAG + i * GAMMA))
//
// Uniform doubles come from the top 53 bits of mt19937_64 output, which is
// fully specified by the standard, so streams reproduce across platforms.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eprcoin/qstate.hpp"

namespace eprcoin {

std::uint64_t mix64(std::uint64_t x);

enum class Role { Alice, Bob, Public };

std::uint64_t role_seed(std::uint64_t session_seed, Role role);
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }
  double uniform01();  // in [0, 1)
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
};

// Uniform sorted k-subset of {0, ..., n-1} (partial Fisher-Yates).
std::vector<int> sample_subset(RandomStream& rng, int n, int k);

PauliOp random_pauli(RandomStream& rng);
Axis uniform_axis(RandomStream& rng);

}  // namespace eprcoin
