// One coin-tossing session as an explicit phase-tagged state machine with
// message objects exchanged between an Alice engine and a Bob engine.
// Ordering constraints are enforced structurally: locks are recorded before
// transmission, Bob's challenge precedes any unlock, and the final unlock
// happens only after verification.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "eprcoin/qstate.hpp"
#include "eprcoin/rng.hpp"
#include "eprcoin/strategy.hpp"

namespace eprcoin {

// How the pair that defines the coin is picked from the final set.
enum class DesignatedRule { FixedFirst, BobChooses, PublicRandom };

struct SessionConfig {
  int n = 20;  // number of pairs; positive and even (n/2 verified, n/2 final)
  std::uint64_t seed = 0;
  DesignatedRule rule = DesignatedRule::FixedFirst;
  BellKind final_bell = BellKind::PsiMinus;  // PsiMinus or PsiPlus
  bool verify = true;
  // The bit convention (UP -> 0, DOWN -> 1) is declared once for all
  // sessions; see spin_bit() in qstate.hpp.
};

enum class ProtocolPhase {
  Init,
  LockedAndSent,
  Challenged,
  SubsetUnlocked,
  ResultsExchanged,
  Verified,
  FinalUnlocked,
  Done,
  Aborted,
};

const char* phase_name(ProtocolPhase phase);

enum class Sender { Alice, Bob, Public };

struct MsgParticles {
  int n = 0;
};
struct MsgChallenge {
  std::vector<int> indices;  // sorted, distinct, exactly n/2
};
struct MsgUnlockDone {};
struct MsgAxes {
  std::vector<std::pair<int, Axis>> entries;  // ascending index
};
struct MsgResults {
  std::vector<std::pair<int, SpinOutcome>> entries;  // ascending index
};
struct MsgVerifyStatus {
  bool ok = false;
};
struct MsgFinalUnlockDone {};
struct MsgOutcomeClaim {
  int index = -1;
  SpinOutcome outcome = SpinOutcome::Up;
};

// The message union deliberately has no field for a lock operator, so lock
// records cannot leak into a transcript by construction.
using Message = std::variant<MsgParticles, MsgChallenge, MsgUnlockDone, MsgAxes, MsgResults,
                             MsgVerifyStatus, MsgFinalUnlockDone, MsgOutcomeClaim>;

struct TranscriptEntry {
  Sender sender;
  Message msg;  // seq = position in the transcript
};

struct PairRecord {
  int index = 0;
  PauliOp lock_op = PauliOp::Ident;  // Alice's private record; never serialized
  PureTwoQubitState joint;           // collapses under measurement
  bool in_challenge = false;
  std::optional<Axis> verification_axis;  // present iff in_challenge
  std::optional<SpinOutcome> alice_result;
  std::optional<SpinOutcome> bob_result;
};

struct SessionResult {
  std::optional<int> outcome_bit;  // empty = ABORT
  int designated_index = -1;       // -1 on abort
  std::vector<TranscriptEntry> transcript;
  struct FinalPair {
    int index;
    int alice_bit;
    int bob_bit;
  };
  std::vector<FinalPair> final_pair_bits;
  SessionConfig config;
  std::string alice_spec;
  std::string bob_spec;
  std::string abort_reason;  // nonempty iff aborted

  bool aborted() const { return !outcome_bit.has_value(); }
};

struct ProtocolOrderError : std::logic_error {
  using std::logic_error::logic_error;
};

// Seeds of the three per-session substreams; normally derived from the
// session seed, overridable for experiments that need to vary one party's
// randomness while pinning the others.
struct SubstreamSeeds {
  std::uint64_t alice;
  std::uint64_t bob;
  std::uint64_t pub;

  static SubstreamSeeds derive(std::uint64_t session_seed);
};

class Session;

// Bob's only handle on the shared pairs: measuring his own particle.
class BobLab {
 public:
  int pair_count() const;
  SpinOutcome measure(int index, const Axis& axis);

 private:
  friend class Session;
  explicit BobLab(Session& session) : session_(&session) {}
  Session* session_;
};

class Session {
 public:
  Session(SessionConfig config, std::unique_ptr<AliceStrategy> alice,
          std::unique_ptr<BobStrategy> bob, std::string alice_spec = "honest",
          std::string bob_spec = "honest");
  Session(SessionConfig config, SubstreamSeeds seeds, std::unique_ptr<AliceStrategy> alice,
          std::unique_ptr<BobStrategy> bob, std::string alice_spec = "honest",
          std::string bob_spec = "honest");

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  // Steps 1-3: prepare singlets, lock each with a private Pauli, transmit.
  void step_prepare_lock_send();
  // Step 4: Bob discloses his n/2 challenge indices.
  void step_challenge();
  // Step 5: Alice reapplies her recorded operators on the challenged pairs.
  void step_unlock_subset();
  // Steps 6-7: Bob commits axes and results, then Alice measures and reveals.
  void step_verification_exchange();
  // Step 8: strict anti-correlation check over the challenged pairs.
  void step_verify();
  // Step 9: Alice unlocks the remaining pairs (plus Z when converting to
  // PsiPlus).
  void step_final_unlock();
  // Step 10: both measure along z; the designated pair defines the coin.
  SessionResult step_final_measure();

  ProtocolPhase phase() const { return phase_; }
  const std::vector<PairRecord>& pairs() const { return pairs_; }
  const std::vector<int>& challenge_indices() const { return challenge_; }
  const std::vector<int>& final_indices() const { return finals_; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  std::string session_id() const;
  SessionResult result() const;  // valid once Done or Aborted

 private:
  friend class BobLab;

  void require_phase(ProtocolPhase expected, const char* op) const;
  void append(Sender sender, Message msg);
  void abort_session(std::string reason);

  SessionConfig config_;
  std::unique_ptr<AliceStrategy> alice_;
  std::unique_ptr<BobStrategy> bob_;
  std::string alice_spec_;
  std::string bob_spec_;
  RandomStream alice_rng_;
  RandomStream bob_rng_;
  RandomStream public_rng_;
  BobLab lab_;
  ProtocolPhase phase_ = ProtocolPhase::Init;
  std::vector<PairRecord> pairs_;
  std::vector<int> challenge_;
  std::vector<int> finals_;
  std::vector<TranscriptEntry> transcript_;
  int designated_ = -1;
  std::optional<int> outcome_bit_;
  std::string abort_reason_;
};

using PhaseCallback = std::function<void(ProtocolPhase)>;

// Runs all phases in order; any abort is returned as an ABORT result carrying
// the transcript up to the abort point.
SessionResult run_full_session(const SessionConfig& config, std::unique_ptr<AliceStrategy> alice,
                               std::unique_ptr<BobStrategy> bob, std::string alice_spec = "honest",
                               std::string bob_spec = "honest",
                               const PhaseCallback& on_phase = {});

}  // namespace eprcoin
