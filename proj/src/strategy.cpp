#include "eprcoin/strategy.hpp"

namespace eprcoin {

PauliOp AliceStrategy::unlock_op(int, PauliOp recorded) { return recorded; }

PauliOp AliceStrategy::final_unlock_op(int, PauliOp recorded) { return recorded; }

void BobStrategy::on_receive(BobLab&, int) {}

int BobStrategy::choose_final_index(BobLab&, const std::vector<int>& final_indices,
                                    const std::vector<std::pair<int, SpinOutcome>>&,
                                    RandomStream&) {
  return final_indices.front();
}

}  // namespace eprcoin
