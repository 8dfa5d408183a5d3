#include "eprcoin/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace eprcoin {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;  // splitmix64 increment
constexpr std::uint64_t kTrialTag = 0x745249414c5f5347ULL;
constexpr std::uint64_t kRoleTag[3] = {0x414c494345ULL, 0x424f42ULL, 0x5055424c4943ULL};
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGamma;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t role_seed(std::uint64_t session_seed, Role role) {
  return mix64(session_seed ^ kRoleTag[static_cast<int>(role)]);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed ^ mix64(kTrialTag + trial_index * kGamma));
}

double RandomStream::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;  // multiple of bound
  std::uint64_t x = eng_();
  while (x >= limit) x = eng_();
  return x % bound;
}

std::vector<int> sample_subset(RandomStream& rng, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_subset: k out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

PauliOp random_pauli(RandomStream& rng) {
  constexpr PauliOp ops[4] = {PauliOp::X, PauliOp::Y, PauliOp::Z, PauliOp::Ident};
  return ops[rng.uniform_below(4)];
}

Axis uniform_axis(RandomStream& rng) {
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  return axis_from_uniforms(u1, u2);
}

}  // namespace eprcoin
