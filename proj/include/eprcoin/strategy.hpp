// Behavioral hooks for the two parties. A strategy may deviate only through
// these hooks: Alice's receive her own pair bookkeeping, Bob's receive public
// data plus a BobLab handle whose only power is measuring his own particle.
// Neither side can read the other's private records.
#pragma once

#include <utility>
#include <vector>

#include "eprcoin/qstate.hpp"

namespace eprcoin {

class RandomStream;
class BobLab;

struct PreparedPair {
  PureTwoQubitState state;
  PauliOp lock_op = PauliOp::Ident;  // what Alice records for this pair
};

class AliceStrategy {
 public:
  virtual ~AliceStrategy() = default;

  virtual PreparedPair prepare_pair(int index, RandomStream& rng) = 0;

  // Operator applied at unlock time; honest behavior reapplies the record.
  virtual PauliOp unlock_op(int index, PauliOp recorded);
  virtual PauliOp final_unlock_op(int index, PauliOp recorded);
};

class BobStrategy {
 public:
  virtual ~BobStrategy() = default;

  virtual void on_receive(BobLab& lab, int n);
  virtual std::vector<int> choose_challenge(BobLab& lab, int n, RandomStream& rng) = 0;
  virtual Axis choose_axis(BobLab& lab, int index, RandomStream& rng) = 0;
  // Bob commits this before Alice reveals her outcomes; honest Bob measures,
  // a dishonest Bob may report anything.
  virtual SpinOutcome report_result(BobLab& lab, int index, const Axis& axis) = 0;
  // Used only under DesignatedRule::BobChooses, after Bob has seen his own
  // final outcomes. Default: lowest final index.
  virtual int choose_final_index(BobLab& lab, const std::vector<int>& final_indices,
                                 const std::vector<std::pair<int, SpinOutcome>>& own_outcomes,
                                 RandomStream& rng);
};

}  // namespace eprcoin
