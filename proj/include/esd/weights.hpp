#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "esd/graph.hpp"

namespace esd {

// Dense occupancy table over the edge-weights reachable by an injective
// labeling from {1..pool}, i.e. [3, 2*pool - 1]. Each occupied weight remembers
// the edge that holds it.
class WeightSet {
 public:
  static constexpr Label kMaxPool = Label{1} << 24;

  WeightSet() = default;
  explicit WeightSet(Label pool);

  Label pool() const { return pool_; }
  static constexpr Label min_weight() { return 3; }
  Label max_weight() const { return 2 * pool_ - 1; }
  bool in_range(Label w) const { return w >= min_weight() && w <= max_weight(); }

  bool contains(Label w) const { return in_range(w) && owner_[index(w)].u != 0; }
  std::optional<Edge> owner(Label w) const;
  // Returns false and leaves the set unchanged if w is already occupied.
  // Throws std::out_of_range for a weight outside [3, 2*pool - 1].
  bool insert(Label w, Edge e);
  void erase(Label w);

  std::size_t size() const { return size_; }
  // Occupied weights in ascending order.
  std::vector<Label> weights() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < owner_.size(); ++i) {
      if (owner_[i].u != 0) fn(static_cast<Label>(i) + min_weight());
    }
  }

 private:
  std::size_t index(Label w) const { return static_cast<std::size_t>(w - min_weight()); }

  Label pool_ = 0;
  std::vector<Edge> owner_;
  std::size_t size_ = 0;
};

}  // namespace esd
