#include "eprcoin/io.hpp"

#include "eprcoin/adversary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eprcoin {

namespace {

std::vector<std::string> split_strict(const std::string& text, char sep) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      if (current.empty()) throw ParseError("empty field");
      tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (current.empty()) throw ParseError("empty field");
  tokens.push_back(std::move(current));
  return tokens;
}

std::int64_t parse_int(const std::string& token, const char* field) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() ||
      std::to_string(value) != token)
    throw ParseError(std::string(field) + ": not a canonical integer: '" + token + "'");
  return value;
}

std::uint64_t parse_u64(const std::string& token, const char* field) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() ||
      std::to_string(value) != token)
    throw ParseError(std::string(field) + ": not a canonical unsigned integer: '" + token + "'");
  return value;
}

std::string expect_kv(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0)
    throw ParseError("header: expected " + key + "=..., got '" + token + "'");
  return token.substr(prefix.size());
}

const char* message_type_token(const Message& msg) {
  struct Visitor {
    const char* operator()(const MsgParticles&) const { return "PARTICLES"; }
    const char* operator()(const MsgChallenge&) const { return "CHALLENGE"; }
    const char* operator()(const MsgUnlockDone&) const { return "UNLOCK_DONE"; }
    const char* operator()(const MsgAxes&) const { return "AXES"; }
    const char* operator()(const MsgResults&) const { return "RESULTS"; }
    const char* operator()(const MsgVerifyStatus&) const { return "VERIFY_STATUS"; }
    const char* operator()(const MsgFinalUnlockDone&) const { return "FINAL_UNLOCK_DONE"; }
    const char* operator()(const MsgOutcomeClaim&) const { return "OUTCOME_CLAIM"; }
  };
  return std::visit(Visitor{}, msg);
}

void check_index_list(const std::vector<int>& indices, int n, int want_count, const char* what) {
  if (static_cast<int>(indices.size()) != want_count)
    throw ParseError(std::string(what) + ": expected " + std::to_string(want_count) +
                     " entries, got " + std::to_string(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= n)
      throw ParseError(std::string(what) + ": index out of range: " +
                       std::to_string(indices[k]));
    if (k > 0 && indices[k] <= indices[k - 1])
      throw ParseError(std::string(what) + ": indices not strictly ascending");
  }
}

}  // namespace

std::string fmt_real(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("fmt_real: non-finite value");
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  const std::string s = buf;
  const auto e = s.find('e');
  const std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  bool negative = false;
  std::size_t i = 0;
  if (exponent[0] == '+') {
    i = 1;
  } else if (exponent[0] == '-') {
    negative = true;
    i = 1;
  }
  while (i + 1 < exponent.size() && exponent[i] == '0') ++i;
  return mantissa + "e" + (negative ? "-" : "") + exponent.substr(i);
}

double parse_real(const std::string& token) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty())
    throw ParseError("not a real number: '" + token + "'");
  if (fmt_real(value) != token)
    throw ParseError("non-canonical real: '" + token + "'");
  return value;
}

std::string fmt_outcome(SpinOutcome o) { return o == SpinOutcome::Up ? "+1" : "-1"; }

SpinOutcome parse_outcome(const std::string& token) {
  if (token == "+1") return SpinOutcome::Up;
  if (token == "-1") return SpinOutcome::Down;
  throw ParseError("outcome must be +1 or -1, got '" + token + "'");
}

std::string rule_token(DesignatedRule rule) {
  switch (rule) {
    case DesignatedRule::FixedFirst:
      return "fixed";
    case DesignatedRule::BobChooses:
      return "bob";
    case DesignatedRule::PublicRandom:
      return "random";
  }
  return "?";
}

DesignatedRule parse_rule_token(const std::string& token) {
  if (token == "fixed") return DesignatedRule::FixedFirst;
  if (token == "bob") return DesignatedRule::BobChooses;
  if (token == "random") return DesignatedRule::PublicRandom;
  throw ParseError("rule must be fixed|bob|random, got '" + token + "'");
}

std::string bell_token(BellKind kind) {
  if (kind == BellKind::PsiMinus) return "psi-";
  if (kind == BellKind::PsiPlus) return "psi+";
  throw std::invalid_argument("final bell state must be psi- or psi+");
}

BellKind parse_bell_token(const std::string& token) {
  if (token == "psi-") return BellKind::PsiMinus;
  if (token == "psi+") return BellKind::PsiPlus;
  throw ParseError("bell must be psi-|psi+, got '" + token + "'");
}

std::string sender_token(Sender sender) {
  switch (sender) {
    case Sender::Alice:
      return "ALICE";
    case Sender::Bob:
      return "BOB";
    case Sender::Public:
      return "PUBLIC";
  }
  return "?";
}

Sender parse_sender_token(const std::string& token) {
  if (token == "ALICE") return Sender::Alice;
  if (token == "BOB") return Sender::Bob;
  if (token == "PUBLIC") return Sender::Public;
  throw ParseError("sender must be ALICE|BOB|PUBLIC, got '" + token + "'");
}

std::string session_id_for(std::uint64_t seed) { return "s" + std::to_string(seed); }

std::string encode_record(const RecordMeta& meta, const Message& msg) {
  std::ostringstream out;
  out << "REC " << meta.session_id << ' ' << meta.seq << ' ' << sender_token(meta.sender) << ' '
      << message_type_token(msg);
  struct Payload {
    std::ostringstream& out;
    void operator()(const MsgParticles& m) const { out << ' ' << m.n; }
    void operator()(const MsgChallenge& m) const {
      out << ' ';
      for (std::size_t k = 0; k < m.indices.size(); ++k) {
        if (k) out << ',';
        out << m.indices[k];
      }
    }
    void operator()(const MsgUnlockDone&) const {}
    void operator()(const MsgAxes& m) const {
      for (const auto& [index, axis] : m.entries)
        out << ' ' << index << ' ' << fmt_real(axis.x) << ' ' << fmt_real(axis.y) << ' '
            << fmt_real(axis.z);
    }
    void operator()(const MsgResults& m) const {
      for (const auto& [index, outcome] : m.entries)
        out << ' ' << index << ' ' << fmt_outcome(outcome);
    }
    void operator()(const MsgVerifyStatus& m) const { out << ' ' << (m.ok ? '1' : '0'); }
    void operator()(const MsgFinalUnlockDone&) const {}
    void operator()(const MsgOutcomeClaim& m) const {
      out << ' ' << m.index << ' ' << fmt_outcome(m.outcome);
    }
  };
  std::visit(Payload{out}, msg);
  return out.str();
}

std::pair<RecordMeta, Message> decode_record(const std::string& line, int n) {
  const std::vector<std::string> tokens = split_strict(line, ' ');
  if (tokens.size() < 5) throw ParseError("record: too few fields");
  if (tokens[0] != "REC") throw ParseError("record: expected REC, got '" + tokens[0] + "'");
  RecordMeta meta;
  meta.session_id = tokens[1];
  meta.seq = static_cast<int>(parse_int(tokens[2], "seq"));
  if (meta.seq < 0) throw ParseError("seq: negative");
  meta.sender = parse_sender_token(tokens[3]);
  const std::string& type = tokens[4];
  const std::size_t payload_count = tokens.size() - 5;
  const auto payload = [&](std::size_t k) -> const std::string& { return tokens[5 + k]; };

  if (type == "PARTICLES") {
    if (payload_count != 1) throw ParseError("PARTICLES: expected one field");
    const int count = static_cast<int>(parse_int(payload(0), "PARTICLES n"));
    if (count < 2 || count % 2 != 0) throw ParseError("PARTICLES: n must be even and >= 2");
    return {meta, MsgParticles{count}};
  }
  if (type == "CHALLENGE") {
    if (payload_count != 1) throw ParseError("CHALLENGE: expected one field");
    MsgChallenge msg;
    for (const std::string& t : split_strict(payload(0), ','))
      msg.indices.push_back(static_cast<int>(parse_int(t, "CHALLENGE index")));
    check_index_list(msg.indices, n, n / 2, "CHALLENGE");
    return {meta, std::move(msg)};
  }
  if (type == "UNLOCK_DONE") {
    if (payload_count != 0) throw ParseError("UNLOCK_DONE: unexpected payload");
    return {meta, MsgUnlockDone{}};
  }
  if (type == "AXES") {
    if (payload_count % 4 != 0 || payload_count == 0)
      throw ParseError("AXES: payload must be (index x y z) groups");
    MsgAxes msg;
    std::vector<int> indices;
    for (std::size_t k = 0; k < payload_count; k += 4) {
      const int index = static_cast<int>(parse_int(payload(k), "AXES index"));
      const Axis axis{parse_real(payload(k + 1)), parse_real(payload(k + 2)),
                      parse_real(payload(k + 3))};
      if (!is_unit(axis, 1e-6)) throw ParseError("AXES: axis is not unit length");
      indices.push_back(index);
      msg.entries.emplace_back(index, axis);
    }
    check_index_list(indices, n, n / 2, "AXES");
    return {meta, std::move(msg)};
  }
  if (type == "RESULTS") {
    if (payload_count % 2 != 0 || payload_count == 0)
      throw ParseError("RESULTS: payload must be (index outcome) pairs");
    MsgResults msg;
    std::vector<int> indices;
    for (std::size_t k = 0; k < payload_count; k += 2) {
      const int index = static_cast<int>(parse_int(payload(k), "RESULTS index"));
      indices.push_back(index);
      msg.entries.emplace_back(index, parse_outcome(payload(k + 1)));
    }
    check_index_list(indices, n, n / 2, "RESULTS");
    return {meta, std::move(msg)};
  }
  if (type == "VERIFY_STATUS") {
    if (payload_count != 1 || (payload(0) != "0" && payload(0) != "1"))
      throw ParseError("VERIFY_STATUS: expected 0 or 1");
    return {meta, MsgVerifyStatus{payload(0) == "1"}};
  }
  if (type == "FINAL_UNLOCK_DONE") {
    if (payload_count != 0) throw ParseError("FINAL_UNLOCK_DONE: unexpected payload");
    return {meta, MsgFinalUnlockDone{}};
  }
  if (type == "OUTCOME_CLAIM") {
    if (payload_count != 2) throw ParseError("OUTCOME_CLAIM: expected index and outcome");
    const int index = static_cast<int>(parse_int(payload(0), "OUTCOME_CLAIM index"));
    if (index < 0 || index >= n) throw ParseError("OUTCOME_CLAIM: index out of range");
    return {meta, MsgOutcomeClaim{index, parse_outcome(payload(1))}};
  }
  throw ParseError("unknown message type '" + type + "'");
}

namespace {

std::string encode_header(const SessionConfig& config, const std::string& alice_spec,
                          const std::string& bob_spec) {
  std::ostringstream out;
  out << "EPRCOIN v1 n=" << config.n << " seed=" << config.seed << " rule="
      << rule_token(config.rule) << " bell=" << bell_token(config.final_bell)
      << " verify=" << (config.verify ? "on" : "off") << " alice=" << alice_spec
      << " bob=" << bob_spec;
  return out.str();
}

std::string encode_end(const std::optional<int>& outcome, int designated) {
  std::ostringstream out;
  out << "END ";
  if (outcome)
    out << *outcome;
  else
    out << "ABORT";
  out << ' ';
  if (designated >= 0)
    out << designated;
  else
    out << '-';
  return out.str();
}

std::string encode_body(const SessionConfig& config, const std::string& alice_spec,
                        const std::string& bob_spec, const std::vector<TranscriptEntry>& records,
                        const std::optional<int>& outcome, int designated) {
  std::ostringstream out;
  out << encode_header(config, alice_spec, bob_spec) << '\n';
  const std::string sid = session_id_for(config.seed);
  int seq = 0;
  for (const auto& entry : records)
    out << encode_record(RecordMeta{sid, seq++, entry.sender}, entry.msg) << '\n';
  out << encode_end(outcome, designated) << '\n';
  return out.str();
}

}  // namespace

std::string encode_transcript(const SessionResult& result) {
  return encode_body(result.config, result.alice_spec, result.bob_spec, result.transcript,
                     result.outcome_bit, result.designated_index);
}

std::string encode_transcript(const TranscriptFile& transcript) {
  return encode_body(transcript.config, transcript.alice_spec, transcript.bob_spec,
                     transcript.records, transcript.outcome_bit, transcript.designated_index);
}

TranscriptFile parse_transcript(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw ParseError("transcript must end with a newline");
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c == '\r') {
      throw ParseError("transcript must use LF line endings");
    } else {
      current.push_back(c);
    }
  }
  if (lines.size() < 2) throw ParseError("transcript needs a header and an END line");

  TranscriptFile t;
  try {
    const std::vector<std::string> h = split_strict(lines[0], ' ');
    if (h.size() != 9 || h[0] != "EPRCOIN" || h[1] != "v1")
      throw ParseError("bad header, expected 'EPRCOIN v1 ...'");
    t.config.n = static_cast<int>(parse_int(expect_kv(h[2], "n"), "header n"));
    if (t.config.n < 2 || t.config.n % 2 != 0)
      throw ParseError("header n must be even and >= 2");
    t.config.seed = parse_u64(expect_kv(h[3], "seed"), "header seed");
    t.config.rule = parse_rule_token(expect_kv(h[4], "rule"));
    t.config.final_bell = parse_bell_token(expect_kv(h[5], "bell"));
    const std::string verify = expect_kv(h[6], "verify");
    if (verify != "on" && verify != "off") throw ParseError("verify must be on|off");
    t.config.verify = verify == "on";
    t.alice_spec = expect_kv(h[7], "alice");
    t.bob_spec = expect_kv(h[8], "bob");
    // Strategy spec strings must themselves be canonical.
    for (const std::string& spec : {t.alice_spec, t.bob_spec}) {
      try {
        if (StrategySpec::parse(spec).canonical() != spec)
          throw ParseError("non-canonical strategy spec '" + spec + "'");
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad strategy spec: ") + e.what());
      }
    }
  } catch (const ParseError& e) {
    throw ParseError("line 1: " + std::string(e.what()));
  }

  for (std::size_t k = 1; k + 1 < lines.size(); ++k) {
    try {
      auto [meta, msg] = decode_record(lines[k], t.config.n);
      if (meta.seq != static_cast<int>(k - 1))
        throw ParseError("seq " + std::to_string(meta.seq) + " out of order (gaps are errors)");
      if (k == 1)
        t.session_id = meta.session_id;
      else if (meta.session_id != t.session_id)
        throw ParseError("session id changed mid-transcript");
      t.records.push_back(TranscriptEntry{meta.sender, std::move(msg)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(k + 1) + ": " + std::string(e.what()));
    }
  }

  try {
    const std::vector<std::string> e = split_strict(lines.back(), ' ');
    if (e.size() != 3 || e[0] != "END") throw ParseError("bad END line");
    if (e[1] == "ABORT") {
      t.outcome_bit = std::nullopt;
    } else if (e[1] == "0" || e[1] == "1") {
      t.outcome_bit = e[1] == "1" ? 1 : 0;
    } else {
      throw ParseError("END outcome must be 0|1|ABORT");
    }
    if (e[2] == "-") {
      t.designated_index = -1;
    } else {
      t.designated_index = static_cast<int>(parse_int(e[2], "END designated"));
      if (t.designated_index < 0 || t.designated_index >= t.config.n)
        throw ParseError("END designated index out of range");
    }
    if (t.outcome_bit.has_value() != (t.designated_index >= 0))
      throw ParseError("END outcome and designated index do not match");
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(lines.size()) + ": " + std::string(e.what()));
  }
  return t;
}

namespace {

// Pulls typed records off the transcript in protocol order.
class RecordCursor {
 public:
  explicit RecordCursor(const std::vector<TranscriptEntry>& records) : records_(records) {}

  bool exhausted() const { return next_ >= records_.size(); }
  int seq() const { return static_cast<int>(next_); }

  template <typename T>
  const T* try_take(Sender want_sender) {
    if (exhausted()) return nullptr;
    const TranscriptEntry& entry = records_[next_];
    const T* msg = std::get_if<T>(&entry.msg);
    if (msg == nullptr || entry.sender != want_sender) return nullptr;
    ++next_;
    return msg;
  }

  template <typename T>
  const T& take(Sender want_sender, const char* what) {
    const T* msg = try_take<T>(want_sender);
    if (msg == nullptr) {
      if (exhausted()) throw TruncatedTranscript{};
      throw ReplayMismatch(seq(), std::string("expected ") + what);
    }
    return *msg;
  }

  struct TruncatedTranscript {};

 private:
  const std::vector<TranscriptEntry>& records_;
  std::size_t next_ = 0;
};

std::vector<std::pair<int, SpinOutcome>> expect_indices(const MsgResults& msg,
                                                        const std::vector<int>& want, int seq,
                                                        const char* what) {
  for (std::size_t k = 0; k < want.size(); ++k)
    if (msg.entries[k].first != want[k])
      throw ReplayMismatch(seq, std::string(what) + " covers the wrong index set");
  return msg.entries;
}

}  // namespace

SessionResult replay(const TranscriptFile& t) {
  SessionResult result;
  result.config = t.config;
  result.alice_spec = t.alice_spec;
  result.bob_spec = t.bob_spec;
  result.transcript = t.records;
  result.outcome_bit = t.outcome_bit;
  result.designated_index = t.designated_index;

  const auto finish_abort = [&]() -> SessionResult {
    if (t.outcome_bit.has_value())
      throw ReplayMismatch(static_cast<int>(t.records.size()),
                           "transcript is incomplete but END claims an outcome");
    result.abort_reason = "replayed abort";
    return result;
  };

  RecordCursor cursor(t.records);
  try {
    const MsgParticles& particles =
        cursor.take<MsgParticles>(Sender::Alice, "ALICE PARTICLES");
    if (t.session_id != session_id_for(t.config.seed))
      throw ReplayMismatch(0, "session id does not match the seed");
    if (particles.n != t.config.n) throw ReplayMismatch(0, "PARTICLES count differs from header");

    const MsgChallenge& challenge = cursor.take<MsgChallenge>(Sender::Bob, "BOB CHALLENGE");
    const std::vector<int>& challenged = challenge.indices;
    std::vector<int> finals;
    for (int i = 0; i < t.config.n; ++i)
      if (!std::binary_search(challenged.begin(), challenged.end(), i)) finals.push_back(i);

    cursor.take<MsgUnlockDone>(Sender::Alice, "ALICE UNLOCK_DONE");

    const int axes_seq = cursor.seq();
    const MsgAxes& axes = cursor.take<MsgAxes>(Sender::Bob, "BOB AXES");
    for (std::size_t k = 0; k < challenged.size(); ++k)
      if (axes.entries[k].first != challenged[k])
        throw ReplayMismatch(axes_seq, "AXES cover the wrong index set");

    const int bob_ver_seq = cursor.seq();
    const auto bob_ver = expect_indices(cursor.take<MsgResults>(Sender::Bob, "BOB RESULTS"),
                                        challenged, bob_ver_seq, "BOB RESULTS");
    const int alice_ver_seq = cursor.seq();
    const auto alice_ver = expect_indices(cursor.take<MsgResults>(Sender::Alice, "ALICE RESULTS"),
                                          challenged, alice_ver_seq, "ALICE RESULTS");

    const int verify_seq = cursor.seq();
    const MsgVerifyStatus& status =
        cursor.take<MsgVerifyStatus>(Sender::Bob, "BOB VERIFY_STATUS");
    bool expect_ok = true;
    if (t.config.verify) {
      for (std::size_t k = 0; k < bob_ver.size(); ++k)
        if (bob_ver[k].second == alice_ver[k].second) expect_ok = false;
    }
    if (status.ok != expect_ok)
      throw ReplayMismatch(verify_seq, "VERIFY_STATUS disagrees with the recorded results");
    if (!status.ok) {
      if (!cursor.exhausted())
        throw ReplayMismatch(cursor.seq(), "records continue past a failed verification");
      if (t.outcome_bit.has_value())
        throw ReplayMismatch(cursor.seq(), "END claims an outcome after a failed verification");
      result.abort_reason = "verification failed";
      return result;
    }

    cursor.take<MsgFinalUnlockDone>(Sender::Alice, "ALICE FINAL_UNLOCK_DONE");

    const int bob_final_seq = cursor.seq();
    const auto bob_final = expect_indices(cursor.take<MsgResults>(Sender::Bob, "BOB RESULTS"),
                                          finals, bob_final_seq, "BOB final RESULTS");
    const int alice_final_seq = cursor.seq();
    const auto alice_final = expect_indices(
        cursor.take<MsgResults>(Sender::Alice, "ALICE RESULTS"), finals, alice_final_seq,
        "ALICE final RESULTS");

    int designated = -1;
    if (t.config.rule == DesignatedRule::BobChooses) {
      const int claim_seq = cursor.seq();
      const MsgOutcomeClaim& claim =
          cursor.take<MsgOutcomeClaim>(Sender::Bob, "BOB OUTCOME_CLAIM");
      const auto it = std::find(finals.begin(), finals.end(), claim.index);
      if (it == finals.end())
        throw ReplayMismatch(claim_seq, "claimed index is not in the final set");
      const std::size_t pos = static_cast<std::size_t>(it - finals.begin());
      if (bob_final[pos].second != claim.outcome)
        throw ReplayMismatch(claim_seq, "Bob's claim disagrees with his recorded outcome");
      designated = claim.index;
    } else if (t.config.rule == DesignatedRule::FixedFirst) {
      designated = finals.front();
    } else {
      RandomStream pub(role_seed(t.config.seed, Role::Public));
      designated = finals[pub.uniform_below(finals.size())];
    }

    const int alice_claim_seq = cursor.seq();
    const MsgOutcomeClaim& claim =
        cursor.take<MsgOutcomeClaim>(Sender::Alice, "ALICE OUTCOME_CLAIM");
    if (claim.index != designated)
      throw ReplayMismatch(alice_claim_seq, "claimed index is not the designated pair");
    const auto it = std::find(finals.begin(), finals.end(), designated);
    const std::size_t pos = static_cast<std::size_t>(it - finals.begin());
    if (alice_final[pos].second != claim.outcome)
      throw ReplayMismatch(alice_claim_seq, "Alice's claim disagrees with her recorded outcome");

    if (!cursor.exhausted())
      throw ReplayMismatch(cursor.seq(), "records continue past the outcome claim");
    const int end_seq = cursor.seq();
    if (!t.outcome_bit.has_value())
      throw ReplayMismatch(end_seq, "END says ABORT for a completed session");
    if (*t.outcome_bit != spin_bit(claim.outcome))
      throw ReplayMismatch(end_seq, "END outcome disagrees with the designated claim");
    if (t.designated_index != designated)
      throw ReplayMismatch(end_seq, "END designated index disagrees with the record");

    for (std::size_t k = 0; k < finals.size(); ++k)
      result.final_pair_bits.push_back(SessionResult::FinalPair{
          finals[k], spin_bit(alice_final[k].second), spin_bit(bob_final[k].second)});
    return result;
  } catch (const RecordCursor::TruncatedTranscript&) {
    // A session may abort on a malformed message at any pending point; the
    // transcript then simply stops. END must agree.
    return finish_abort();
  }
}

void write_transcript(const std::string& path, const SessionResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << encode_transcript(result);
  if (!out) throw std::runtime_error("write failed: " + path);
}

TranscriptFile read_transcript(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_transcript(buffer.str());
}

}  // namespace eprcoin
