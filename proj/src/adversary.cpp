#include "eprcoin/adversary.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace eprcoin {

namespace {

class HonestAlice final : public AliceStrategy {
 public:
  PreparedPair prepare_pair(int, RandomStream& rng) override {
    const PauliOp op = random_pauli(rng);
    return PreparedPair{apply_pauli(make_bell(BellKind::PsiMinus), Particle::A, op), op};
  }
};

class NaiveAliceNoLock final : public AliceStrategy {
 public:
  PreparedPair prepare_pair(int, RandomStream&) override {
    return PreparedPair{make_bell(BellKind::PsiMinus), PauliOp::Ident};
  }
};

// With probability `fraction` a pair is the known product state |1>|1> (its
// record is Ident, so Alice's unlock steps leave it alone); otherwise a
// properly locked singlet. All of her measurements stay faithful.
class AliceMixedProduct final : public AliceStrategy {
 public:
  explicit AliceMixedProduct(double fraction) : fraction_(fraction) {}

  PreparedPair prepare_pair(int, RandomStream& rng) override {
    if (rng.uniform01() < fraction_) return PreparedPair{make_product(1, 1), PauliOp::Ident};
    const PauliOp op = random_pauli(rng);
    return PreparedPair{apply_pauli(make_bell(BellKind::PsiMinus), Particle::A, op), op};
  }

 private:
  double fraction_;
};

class HonestBob final : public BobStrategy {
 public:
  std::vector<int> choose_challenge(BobLab&, int n, RandomStream& rng) override {
    return sample_subset(rng, n, n / 2);
  }
  Axis choose_axis(BobLab&, int, RandomStream& rng) override { return uniform_axis(rng); }
  SpinOutcome report_result(BobLab& lab, int index, const Axis& axis) override {
    return lab.measure(index, axis);
  }
};

// Secretly measures every particle along z on receipt, then shapes the run
// around the outcomes: the challenge discards the pairs whose bit he dislikes
// (ties broken by lowest index), every verification axis is z, and the
// reports are the premeasured outcomes.
class BobZAxisSelect final : public BobStrategy {
 public:
  explicit BobZAxisSelect(int target) : target_(target) {}

  void on_receive(BobLab& lab, int n) override {
    pre_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pre_.push_back(lab.measure(i, z_axis()));
  }

  std::vector<int> choose_challenge(BobLab&, int n, RandomStream&) override {
    // A kept pair is useful when its partner's bit is the complement of the
    // target (anti-correlation then hands Alice the target bit).
    std::vector<int> discard_order;
    for (int i = 0; i < n; ++i)
      if (spin_bit(pre_[static_cast<std::size_t>(i)]) == target_) discard_order.push_back(i);
    for (int i = 0; i < n; ++i)
      if (spin_bit(pre_[static_cast<std::size_t>(i)]) != target_) discard_order.push_back(i);
    discard_order.resize(static_cast<std::size_t>(n / 2));
    return discard_order;
  }

  Axis choose_axis(BobLab&, int, RandomStream&) override { return z_axis(); }

  SpinOutcome report_result(BobLab&, int index, const Axis&) override {
    return pre_[static_cast<std::size_t>(index)];
  }

  int choose_final_index(BobLab&, const std::vector<int>& final_indices,
                         const std::vector<std::pair<int, SpinOutcome>>& own_outcomes,
                         RandomStream&) override {
    for (const auto& [index, outcome] : own_outcomes)
      if (spin_bit(outcome) != target_) return index;
    return final_indices.front();
  }

 private:
  int target_;
  std::vector<SpinOutcome> pre_;
};

// Measures everything along z on receipt and afterwards follows the protocol
// honestly: uniform challenge, uniform axes, truthful measurement of the
// (collapsed) particle along each requested axis.
class BobPremeasureAll final : public BobStrategy {
 public:
  explicit BobPremeasureAll(int target) : target_(target) {}

  void on_receive(BobLab& lab, int n) override {
    for (int i = 0; i < n; ++i) lab.measure(i, z_axis());
  }
  std::vector<int> choose_challenge(BobLab&, int n, RandomStream& rng) override {
    return sample_subset(rng, n, n / 2);
  }
  Axis choose_axis(BobLab&, int, RandomStream& rng) override { return uniform_axis(rng); }
  SpinOutcome report_result(BobLab& lab, int index, const Axis& axis) override {
    return lab.measure(index, axis);
  }
  int choose_final_index(BobLab&, const std::vector<int>& final_indices,
                         const std::vector<std::pair<int, SpinOutcome>>& own_outcomes,
                         RandomStream&) override {
    // The choose-your-pair rule, when enabled, permits this openly.
    for (const auto& [index, outcome] : own_outcomes)
      if (spin_bit(outcome) != target_) return index;
    return final_indices.front();
  }

 private:
  int target_;
};

// Commits to a uniform challenge first, premeasures only the pairs he will
// *not* submit to verification, and plays the verification itself honestly on
// the untouched pairs. Pays off only when he also gets to pick the final pair.
class BobPremeasureUnverified final : public BobStrategy {
 public:
  explicit BobPremeasureUnverified(int target) : target_(target) {}

  std::vector<int> choose_challenge(BobLab& lab, int n, RandomStream& rng) override {
    std::vector<int> challenge = sample_subset(rng, n, n / 2);
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(challenge.begin(), challenge.end(), i))
        lab.measure(i, z_axis());
    return challenge;
  }
  Axis choose_axis(BobLab&, int, RandomStream& rng) override { return uniform_axis(rng); }
  SpinOutcome report_result(BobLab& lab, int index, const Axis& axis) override {
    return lab.measure(index, axis);
  }
  int choose_final_index(BobLab&, const std::vector<int>& final_indices,
                         const std::vector<std::pair<int, SpinOutcome>>& own_outcomes,
                         RandomStream&) override {
    for (const auto& [index, outcome] : own_outcomes)
      if (spin_bit(outcome) != target_) return index;
    return final_indices.front();
  }

 private:
  int target_;
};

constexpr const char* kAliceNames =
    "honest, naive_alice_nolock, alice_mixed_product:<fraction>";
constexpr const char* kBobNames =
    "honest, bob_zaxis_select:target=<0|1>, bob_premeasure_all:target=<0|1>, "
    "bob_premeasure_unverified:target=<0|1>";

int require_target(const StrategySpec& spec) {
  if (!spec.target) throw std::invalid_argument(spec.name + " requires target=<0|1>");
  return *spec.target;
}

std::string format_fraction(double f) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), f);
  if (ec != std::errc{}) throw std::invalid_argument("unformattable fraction");
  return std::string(buf, end);
}

}  // namespace

std::unique_ptr<AliceStrategy> honest_alice() { return std::make_unique<HonestAlice>(); }
std::unique_ptr<AliceStrategy> naive_alice_nolock() {
  return std::make_unique<NaiveAliceNoLock>();
}
std::unique_ptr<AliceStrategy> alice_mixed_product(double product_fraction) {
  if (!(product_fraction >= 0.0 && product_fraction <= 1.0))
    throw std::invalid_argument("alice_mixed_product: fraction must lie in [0, 1]");
  return std::make_unique<AliceMixedProduct>(product_fraction);
}

std::unique_ptr<BobStrategy> honest_bob() { return std::make_unique<HonestBob>(); }
std::unique_ptr<BobStrategy> bob_zaxis_select(int target_bit) {
  return std::make_unique<BobZAxisSelect>(target_bit);
}
std::unique_ptr<BobStrategy> bob_premeasure_all(int target_bit) {
  return std::make_unique<BobPremeasureAll>(target_bit);
}
std::unique_ptr<BobStrategy> bob_premeasure_unverified(int target_bit) {
  return std::make_unique<BobPremeasureUnverified>(target_bit);
}

std::string StrategySpec::canonical() const {
  if (name == "alice_mixed_product") return name + ":" + format_fraction(fraction.value_or(0.0));
  if (target) return name + ":target=" + std::to_string(*target);
  return name;
}

StrategySpec StrategySpec::parse(const std::string& text) {
  StrategySpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) throw std::invalid_argument("empty strategy name");
  if (colon == std::string::npos) return spec;
  const std::string param = text.substr(colon + 1);
  if (param.rfind("target=", 0) == 0) {
    const std::string value = param.substr(7);
    if (value != "0" && value != "1")
      throw std::invalid_argument("strategy target must be 0 or 1: " + text);
    spec.target = value == "1" ? 1 : 0;
    return spec;
  }
  double fraction = 0.0;
  const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), fraction);
  if (ec != std::errc{} || ptr != param.data() + param.size())
    throw std::invalid_argument("bad strategy parameter: " + text);
  spec.fraction = fraction;
  return spec;
}

std::unique_ptr<AliceStrategy> make_alice(const StrategySpec& spec) {
  if (spec.name == "honest") return honest_alice();
  if (spec.name == "naive_alice_nolock") return naive_alice_nolock();
  if (spec.name == "alice_mixed_product") {
    if (!spec.fraction)
      throw std::invalid_argument("alice_mixed_product requires a fraction, e.g. "
                                  "alice_mixed_product:0.5");
    return alice_mixed_product(*spec.fraction);
  }
  throw std::invalid_argument("unknown alice strategy '" + spec.name +
                              "'; valid: " + kAliceNames);
}

std::unique_ptr<BobStrategy> make_bob(const StrategySpec& spec) {
  if (spec.name == "honest") return honest_bob();
  if (spec.name == "bob_zaxis_select") return bob_zaxis_select(require_target(spec));
  if (spec.name == "bob_premeasure_all") return bob_premeasure_all(require_target(spec));
  if (spec.name == "bob_premeasure_unverified")
    return bob_premeasure_unverified(require_target(spec));
  throw std::invalid_argument("unknown bob strategy '" + spec.name + "'; valid: " + kBobNames);
}

SessionResult run_full_session(const SessionConfig& config, const StrategySpec& alice,
                               const StrategySpec& bob, const PhaseCallback& on_phase) {
  return run_full_session(config, make_alice(alice), make_bob(bob), alice.canonical(),
                          bob.canonical(), on_phase);
}

}  // namespace eprcoin
