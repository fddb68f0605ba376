#include "esd/weights.hpp"

#include <stdexcept>
#include <string>

namespace esd {

WeightSet::WeightSet(Label pool) : pool_(pool) {
  if (pool < 0 || pool > kMaxPool) {
    throw std::length_error("label pool " + std::to_string(pool) + " too large for a dense weight table");
  }
  if (pool >= 2) owner_.assign(static_cast<std::size_t>(2 * pool - 3), Edge{});
}

std::optional<Edge> WeightSet::owner(Label w) const {
  if (!contains(w)) return std::nullopt;
  return owner_[index(w)];
}

bool WeightSet::insert(Label w, Edge e) {
  if (!in_range(w)) throw std::out_of_range("edge-weight " + std::to_string(w) + " outside [3, 2l-1]");
  Edge& slot = owner_[index(w)];
  if (slot.u != 0) return false;
  slot = e;
  ++size_;
  return true;
}

void WeightSet::erase(Label w) {
  if (!in_range(w)) return;
  Edge& slot = owner_[index(w)];
  if (slot.u != 0) {
    slot = Edge{};
    --size_;
  }
}

std::vector<Label> WeightSet::weights() const {
  std::vector<Label> out;
  out.reserve(size_);
  for_each([&](Label w) { out.push_back(w); });
  return out;
}

}  // namespace esd
