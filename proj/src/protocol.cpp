#include "eprcoin/protocol.hpp"

#include <algorithm>

namespace eprcoin {

const char* phase_name(ProtocolPhase phase) {
  switch (phase) {
    case ProtocolPhase::Init:
      return "INIT";
    case ProtocolPhase::LockedAndSent:
      return "LOCKED_AND_SENT";
    case ProtocolPhase::Challenged:
      return "CHALLENGED";
    case ProtocolPhase::SubsetUnlocked:
      return "SUBSET_UNLOCKED";
    case ProtocolPhase::ResultsExchanged:
      return "RESULTS_EXCHANGED";
    case ProtocolPhase::Verified:
      return "VERIFIED";
    case ProtocolPhase::FinalUnlocked:
      return "FINAL_UNLOCKED";
    case ProtocolPhase::Done:
      return "DONE";
    case ProtocolPhase::Aborted:
      return "ABORTED";
  }
  return "?";
}

SubstreamSeeds SubstreamSeeds::derive(std::uint64_t session_seed) {
  return SubstreamSeeds{role_seed(session_seed, Role::Alice), role_seed(session_seed, Role::Bob),
                        role_seed(session_seed, Role::Public)};
}

int BobLab::pair_count() const { return session_->config_.n; }

SpinOutcome BobLab::measure(int index, const Axis& axis) {
  auto& pairs = session_->pairs_;
  if (index < 0 || index >= static_cast<int>(pairs.size()))
    throw std::out_of_range("BobLab::measure: pair index out of range");
  auto& pair = pairs[static_cast<std::size_t>(index)];
  const MeasurementResult r =
      measure_spin(pair.joint, Particle::B, axis, session_->bob_rng_.uniform01());
  pair.joint = r.state;
  return r.outcome;
}

namespace {

void validate_config(const SessionConfig& config) {
  if (config.n < 2 || config.n % 2 != 0)
    throw std::invalid_argument("session config: n must be a positive even integer");
  if (config.final_bell != BellKind::PsiMinus && config.final_bell != BellKind::PsiPlus)
    throw std::invalid_argument("session config: final bell state must be psi- or psi+");
}

}  // namespace

Session::Session(SessionConfig config, std::unique_ptr<AliceStrategy> alice,
                 std::unique_ptr<BobStrategy> bob, std::string alice_spec, std::string bob_spec)
    : Session(config, SubstreamSeeds::derive(config.seed), std::move(alice), std::move(bob),
              std::move(alice_spec), std::move(bob_spec)) {}

Session::Session(SessionConfig config, SubstreamSeeds seeds, std::unique_ptr<AliceStrategy> alice,
                 std::unique_ptr<BobStrategy> bob, std::string alice_spec, std::string bob_spec)
    : config_(config),
      alice_(std::move(alice)),
      bob_(std::move(bob)),
      alice_spec_(std::move(alice_spec)),
      bob_spec_(std::move(bob_spec)),
      alice_rng_(seeds.alice),
      bob_rng_(seeds.bob),
      public_rng_(seeds.pub),
      lab_(*this) {
  validate_config(config_);
  if (!alice_ || !bob_) throw std::invalid_argument("session: both strategies are required");
  pairs_.resize(static_cast<std::size_t>(config_.n));
  for (int i = 0; i < config_.n; ++i) pairs_[static_cast<std::size_t>(i)].index = i;
}

std::string Session::session_id() const { return "s" + std::to_string(config_.seed); }

void Session::require_phase(ProtocolPhase expected, const char* op) const {
  if (phase_ != expected)
    throw ProtocolOrderError(std::string(op) + " called in phase " + phase_name(phase_) +
                             ", expected " + phase_name(expected));
}

void Session::append(Sender sender, Message msg) {
  transcript_.push_back(TranscriptEntry{sender, std::move(msg)});
}

void Session::abort_session(std::string reason) {
  abort_reason_ = std::move(reason);
  phase_ = ProtocolPhase::Aborted;
}

void Session::step_prepare_lock_send() {
  require_phase(ProtocolPhase::Init, "step_prepare_lock_send");
  for (auto& pair : pairs_) {
    PreparedPair prepared = alice_->prepare_pair(pair.index, alice_rng_);
    if (!prepared.state.is_normalized())
      throw std::invalid_argument("alice strategy prepared a non-normalized state");
    pair.joint = prepared.state;
    pair.lock_op = prepared.lock_op;
  }
  append(Sender::Alice, MsgParticles{config_.n});
  phase_ = ProtocolPhase::LockedAndSent;
  bob_->on_receive(lab_, config_.n);
}

void Session::step_challenge() {
  require_phase(ProtocolPhase::LockedAndSent, "step_challenge");
  std::vector<int> indices = bob_->choose_challenge(lab_, config_.n, bob_rng_);
  std::sort(indices.begin(), indices.end());
  const bool distinct = std::adjacent_find(indices.begin(), indices.end()) == indices.end();
  const bool in_range =
      indices.empty() || (indices.front() >= 0 && indices.back() < config_.n);
  if (static_cast<int>(indices.size()) != config_.n / 2 || !distinct || !in_range) {
    abort_session("malformed challenge subset");
    return;
  }
  challenge_ = indices;
  finals_.clear();
  for (int i = 0; i < config_.n; ++i)
    if (!std::binary_search(challenge_.begin(), challenge_.end(), i)) finals_.push_back(i);
  for (int i : challenge_) pairs_[static_cast<std::size_t>(i)].in_challenge = true;
  append(Sender::Bob, MsgChallenge{challenge_});
  phase_ = ProtocolPhase::Challenged;
}

void Session::step_unlock_subset() {
  require_phase(ProtocolPhase::Challenged, "step_unlock_subset");
  for (int i : challenge_) {
    auto& pair = pairs_[static_cast<std::size_t>(i)];
    const PauliOp op = alice_->unlock_op(i, pair.lock_op);
    pair.joint = apply_pauli(pair.joint, Particle::A, op);
  }
  append(Sender::Alice, MsgUnlockDone{});
  phase_ = ProtocolPhase::SubsetUnlocked;
}

void Session::step_verification_exchange() {
  require_phase(ProtocolPhase::SubsetUnlocked, "step_verification_exchange");
  MsgAxes axes;
  MsgResults bob_results;
  for (int i : challenge_) {
    auto& pair = pairs_[static_cast<std::size_t>(i)];
    const Axis axis = bob_->choose_axis(lab_, i, bob_rng_);
    if (!is_unit(axis)) {
      abort_session("malformed verification axis");
      return;
    }
    pair.verification_axis = axis;
    const SpinOutcome reported = bob_->report_result(lab_, i, axis);
    pair.bob_result = reported;
    axes.entries.emplace_back(i, axis);
    bob_results.entries.emplace_back(i, reported);
  }
  append(Sender::Bob, std::move(axes));
  append(Sender::Bob, std::move(bob_results));
  // Alice measures along Bob's axes and reveals.
  MsgResults alice_results;
  for (int i : challenge_) {
    auto& pair = pairs_[static_cast<std::size_t>(i)];
    const MeasurementResult r =
        measure_spin(pair.joint, Particle::A, *pair.verification_axis, alice_rng_.uniform01());
    pair.joint = r.state;
    pair.alice_result = r.outcome;
    alice_results.entries.emplace_back(i, r.outcome);
  }
  append(Sender::Alice, std::move(alice_results));
  phase_ = ProtocolPhase::ResultsExchanged;
}

void Session::step_verify() {
  require_phase(ProtocolPhase::ResultsExchanged, "step_verify");
  bool ok = true;
  if (config_.verify) {
    // Strict criterion: one correlated pair is already a failure.
    for (int i : challenge_) {
      const auto& pair = pairs_[static_cast<std::size_t>(i)];
      if (*pair.alice_result == *pair.bob_result) {
        ok = false;
        break;
      }
    }
  }
  append(Sender::Bob, MsgVerifyStatus{ok});
  if (ok) {
    phase_ = ProtocolPhase::Verified;
  } else {
    abort_session("verification failed");
  }
}

void Session::step_final_unlock() {
  require_phase(ProtocolPhase::Verified, "step_final_unlock");
  for (int i : finals_) {
    auto& pair = pairs_[static_cast<std::size_t>(i)];
    const PauliOp op = alice_->final_unlock_op(i, pair.lock_op);
    pair.joint = apply_pauli(pair.joint, Particle::A, op);
    if (config_.final_bell == BellKind::PsiPlus)
      pair.joint = apply_pauli(pair.joint, Particle::A, PauliOp::Z);
  }
  append(Sender::Alice, MsgFinalUnlockDone{});
  phase_ = ProtocolPhase::FinalUnlocked;
}

SessionResult Session::step_final_measure() {
  require_phase(ProtocolPhase::FinalUnlocked, "step_final_measure");
  const Axis z = z_axis();
  MsgResults bob_final;
  MsgResults alice_final;
  std::vector<std::pair<int, SpinOutcome>> bob_outcomes;
  for (int i : finals_) {
    auto& pair = pairs_[static_cast<std::size_t>(i)];
    const MeasurementResult rb = measure_spin(pair.joint, Particle::B, z, bob_rng_.uniform01());
    pair.joint = rb.state;
    pair.bob_result = rb.outcome;
    bob_outcomes.emplace_back(i, rb.outcome);
    bob_final.entries.emplace_back(i, rb.outcome);
  }
  for (int i : finals_) {
    auto& pair = pairs_[static_cast<std::size_t>(i)];
    const MeasurementResult ra = measure_spin(pair.joint, Particle::A, z, alice_rng_.uniform01());
    pair.joint = ra.state;
    pair.alice_result = ra.outcome;
    alice_final.entries.emplace_back(i, ra.outcome);
  }
  append(Sender::Bob, std::move(bob_final));
  append(Sender::Alice, std::move(alice_final));

  switch (config_.rule) {
    case DesignatedRule::FixedFirst:
      designated_ = finals_.front();
      break;
    case DesignatedRule::PublicRandom:
      designated_ =
          finals_[public_rng_.uniform_below(static_cast<std::uint64_t>(finals_.size()))];
      break;
    case DesignatedRule::BobChooses: {
      const int chosen = bob_->choose_final_index(lab_, finals_, bob_outcomes, bob_rng_);
      if (!std::binary_search(finals_.begin(), finals_.end(), chosen)) {
        abort_session("claimed index is not in the final set");
        return result();
      }
      designated_ = chosen;
      append(Sender::Bob,
             MsgOutcomeClaim{chosen, *pairs_[static_cast<std::size_t>(chosen)].bob_result});
      break;
    }
  }
  const SpinOutcome alice_outcome = *pairs_[static_cast<std::size_t>(designated_)].alice_result;
  append(Sender::Alice, MsgOutcomeClaim{designated_, alice_outcome});
  outcome_bit_ = spin_bit(alice_outcome);
  phase_ = ProtocolPhase::Done;
  return result();
}

SessionResult Session::result() const {
  if (phase_ != ProtocolPhase::Done && phase_ != ProtocolPhase::Aborted)
    throw ProtocolOrderError("result() requires a finished session");
  SessionResult r;
  r.outcome_bit = outcome_bit_;
  r.designated_index = designated_;
  r.transcript = transcript_;
  r.config = config_;
  r.alice_spec = alice_spec_;
  r.bob_spec = bob_spec_;
  r.abort_reason = abort_reason_;
  if (phase_ == ProtocolPhase::Done) {
    for (int i : finals_) {
      const auto& pair = pairs_[static_cast<std::size_t>(i)];
      r.final_pair_bits.push_back(SessionResult::FinalPair{i, spin_bit(*pair.alice_result),
                                                           spin_bit(*pair.bob_result)});
    }
  }
  return r;
}

SessionResult run_full_session(const SessionConfig& config, std::unique_ptr<AliceStrategy> alice,
                               std::unique_ptr<BobStrategy> bob, std::string alice_spec,
                               std::string bob_spec, const PhaseCallback& on_phase) {
  Session session(config, std::move(alice), std::move(bob), std::move(alice_spec),
                  std::move(bob_spec));
  const auto notify = [&] {
    if (on_phase) on_phase(session.phase());
  };
  session.step_prepare_lock_send();
  notify();
  session.step_challenge();
  notify();
  if (session.phase() == ProtocolPhase::Aborted) return session.result();
  session.step_unlock_subset();
  notify();
  session.step_verification_exchange();
  notify();
  if (session.phase() == ProtocolPhase::Aborted) return session.result();
  session.step_verify();
  notify();
  if (session.phase() == ProtocolPhase::Aborted) return session.result();
  session.step_final_unlock();
  notify();
  SessionResult r = session.step_final_measure();
  notify();
  return r;
}

}  // namespace eprcoin
