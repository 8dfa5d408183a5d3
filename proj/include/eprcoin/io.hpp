// Canonical, byte-exact transcript encoding (.eprt files) and deterministic
// replay.
//
// Grammar (UTF-8, LF line endings, no BOM):
//   header:  EPRCOIN v1 n=<n> seed=<u64> rule=<fixed|bob|random>
//            bell=<psi-|psi+> verify=<on|off> alice=<spec> bob=<spec>
//   record:  REC <session-id> <seq> <ALICE|BOB|PUBLIC> <msg-type> <payload...>
//   end:     END <0|1|ABORT> <designated-index|->
//
// Payload atoms: integers in plain decimal; reals with 17 significant digits
// in lowercase scientific notation with a minimal exponent (the canonical
// form of 1.0 is 1.0000000000000000e0); spin outcomes as +1/-1; index sets as
// comma-separated sorted integers. seq runs 0,1,2,... with no gaps, and a
// transcript is append-only. Parsing is strict: every valid transcript
// re-serializes byte-identically.
//
// Replay does not re-sample quantum outcomes; it feeds the recorded messages
// back through the protocol rules and recomputes everything that is a pure
// function of the public record (message order and shape, the verification
// status, the designated index, the final outcome). The first divergence is
// reported with its seq.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eprcoin/protocol.hpp"

namespace eprcoin {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReplayMismatch : std::runtime_error {
  int seq;
  ReplayMismatch(int seq_, const std::string& what)
      : std::runtime_error("replay mismatch at seq " + std::to_string(seq_) + ": " + what),
        seq(seq_) {}
};

// Canonical real / integer atoms.
std::string fmt_real(double v);
double parse_real(const std::string& token);  // rejects non-canonical spellings
std::string fmt_outcome(SpinOutcome o);
SpinOutcome parse_outcome(const std::string& token);

// Token maps shared with the CLI.
std::string rule_token(DesignatedRule rule);
DesignatedRule parse_rule_token(const std::string& token);
std::string bell_token(BellKind kind);  // psi-/psi+ only
BellKind parse_bell_token(const std::string& token);
std::string sender_token(Sender sender);
Sender parse_sender_token(const std::string& token);
std::string session_id_for(std::uint64_t seed);

struct RecordMeta {
  std::string session_id;
  int seq = 0;
  Sender sender = Sender::Alice;
};

std::string encode_record(const RecordMeta& meta, const Message& msg);
// n gives the decoding context (cardinality and index-range checks).
std::pair<RecordMeta, Message> decode_record(const std::string& line, int n);

struct TranscriptFile {
  SessionConfig config;
  std::string alice_spec;
  std::string bob_spec;
  std::string session_id;
  std::vector<TranscriptEntry> records;
  std::optional<int> outcome_bit;  // empty = ABORT
  int designated_index = -1;       // -1 encodes '-'
};

std::string encode_transcript(const SessionResult& result);
std::string encode_transcript(const TranscriptFile& transcript);
TranscriptFile parse_transcript(const std::string& text);

// Validates the recorded session against the protocol rules and returns the
// reconstructed result; throws ReplayMismatch at the first divergent seq.
SessionResult replay(const TranscriptFile& transcript);

void write_transcript(const std::string& path, const SessionResult& result);
TranscriptFile read_transcript(const std::string& path);

}  // namespace eprcoin
