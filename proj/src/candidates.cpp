#include "esd/candidates.hpp"

namespace esd {

LabelSet::LabelSet(Label pool, bool full) : pool_(pool), words_(static_cast<std::size_t>((pool + 63) / 64), 0) {
  if (!full || pool <= 0) return;
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (const auto tail = static_cast<unsigned>(pool % 64); tail != 0) {
    words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  count_ = static_cast<std::size_t>(pool);
}

bool LabelSet::erase(Label a) {
  if (!contains(a)) return false;
  words_[word(a)] &= ~(std::uint64_t{1} << bit(a));
  --count_;
  return true;
}

void LabelSet::insert(Label a) {
  if (a < 1 || a > pool_ || contains(a)) return;
  words_[word(a)] |= std::uint64_t{1} << bit(a);
  ++count_;
}

Label LabelSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Label>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]))) + 1;
  }
  return 0;
}

std::vector<Label> LabelSet::to_vector() const {
  std::vector<Label> out;
  out.reserve(count_);
  for_each([&](Label a) { out.push_back(a); });
  return out;
}

CandidateSets::CandidateSets(int order, Label pool) : sets_(static_cast<std::size_t>(order) + 1, LabelSet(pool, true)) {
  sets_[0] = LabelSet(pool, false);
}

}  // namespace esd
