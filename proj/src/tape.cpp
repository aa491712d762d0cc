#include "mchain/tape.hpp"

#include <algorithm>

namespace mchain {

SparseBitTape SparseBitTape::from_string(const std::string& bits, std::int64_t origin) {
  SparseBitTape t;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c == '1')
      t.ones_.insert(origin + static_cast<std::int64_t>(i));
    else if (c != '0')
      throw std::invalid_argument("tape string must be over {0,1}");
  }
  return t;
}

SparseBitTape::Window SparseBitTape::window() const {
  Window w;
  if (ones_.empty()) return w;
  w.offset = min_one();
  std::int64_t hi = max_one();
  w.bits.assign(static_cast<std::size_t>(hi - w.offset + 1), '0');
  for (std::int64_t i : ones_) w.bits[static_cast<std::size_t>(i - w.offset)] = '1';
  return w;
}

CircularTape CircularTape::from_string(const std::string& bits, int head) {
  std::vector<std::uint8_t> cells;
  cells.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("tape string must be over {0,1}");
    cells.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return CircularTape(std::move(cells), head);
}

DenseTape::DenseTape(const HeadedTape& t, std::int64_t margin) {
  std::int64_t lo = t.head, hi = t.head;
  if (!t.tape.empty()) {
    lo = std::min(lo, t.tape.min_one());
    hi = std::max(hi, t.tape.max_one());
  }
  offset_ = lo - margin;
  cells_.assign(static_cast<std::size_t>(hi - lo + 1 + 2 * margin), 0);
  for (std::int64_t i : t.tape.support()) cells_[static_cast<std::size_t>(i - offset_)] = 1;
  head_ = t.head;
}

void DenseTape::grow() {
  // Double outward on whichever side the head escaped.
  std::int64_t size = static_cast<std::int64_t>(cells_.size());
  std::int64_t extra = std::max<std::int64_t>(size, 64);
  if (head_ < offset_) {
    std::int64_t add = std::max(extra, offset_ - head_);
    std::vector<std::uint8_t> next(static_cast<std::size_t>(size + add), 0);
    std::copy(cells_.begin(), cells_.end(), next.begin() + static_cast<std::ptrdiff_t>(add));
    cells_ = std::move(next);
    offset_ -= add;
  } else {
    std::int64_t add = std::max(extra, head_ - (offset_ + size) + 1);
    cells_.resize(static_cast<std::size_t>(size + add), 0);
  }
}

HeadedTape DenseTape::to_headed() const {
  HeadedTape t;
  t.head = head_;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i]) t.tape.write(offset_ + static_cast<std::int64_t>(i), 1);
  return t;
}

}  // namespace mchain
