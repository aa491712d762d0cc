#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mchain {

enum class Dir { Left, Right };

inline char dir_char(Dir d) { return d == Dir::Left ? 'L' : 'R'; }

// Bi-infinite binary tape, blank = 0. Only the 1-cells are stored, so a
// run that never writes keeps the tape at its input size.
class SparseBitTape {
 public:
  SparseBitTape() = default;

  // "0110" maps to cells origin..origin+3.
  static SparseBitTape from_string(const std::string& bits, std::int64_t origin = 0);

  int read(std::int64_t i) const { return ones_.count(i) ? 1 : 0; }

  void write(std::int64_t i, int bit) {
    if (bit)
      ones_.insert(i);
    else
      ones_.erase(i);
  }

  bool empty() const { return ones_.empty(); }
  std::int64_t min_one() const { return *ones_.begin(); }   // requires !empty()
  std::int64_t max_one() const { return *ones_.rbegin(); }  // requires !empty()
  const std::set<std::int64_t>& support() const { return ones_; }

  struct Window {
    std::int64_t offset = 0;
    std::string bits = "0";
  };
  // Minimal window covering the support; the empty tape renders as "0" at 0.
  Window window() const;

  bool operator==(const SparseBitTape& o) const { return ones_ == o.ones_; }
  bool operator!=(const SparseBitTape& o) const { return !(*this == o); }

 private:
  std::set<std::int64_t> ones_;
};

struct HeadedTape {
  SparseBitTape tape;
  std::int64_t head = 0;

  static HeadedTape from_string(const std::string& bits, std::int64_t head = 0) {
    return HeadedTape{SparseBitTape::from_string(bits), head};
  }

  int read() const { return tape.read(head); }
  void write(int bit) { tape.write(head, bit); }
  void move(Dir d) { head += d == Dir::Right ? 1 : -1; }

  bool operator==(const HeadedTape& o) const { return head == o.head && tape == o.tape; }
  bool operator!=(const HeadedTape& o) const { return !(*this == o); }
};

// Fixed-length cyclic tape with immutable cells; only the head moves.
class CircularTape {
 public:
  CircularTape() : cells_{0}, head_(0) {}
  explicit CircularTape(std::vector<std::uint8_t> cells, int head = 0)
      : cells_(std::move(cells)), head_(head) {
    if (cells_.empty()) throw std::invalid_argument("circular tape needs at least one cell");
    if (head_ < 0 || head_ >= static_cast<int>(cells_.size()))
      throw std::invalid_argument("circular tape head out of range");
  }

  static CircularTape from_string(const std::string& bits, int head = 0);

  int read() const { return cells_[head_]; }
  void move(Dir d) {
    int n = static_cast<int>(cells_.size());
    head_ = d == Dir::Right ? (head_ + 1) % n : (head_ + n - 1) % n;
  }

  int head() const { return head_; }
  int length() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const CircularTape& o) const {
    return head_ == o.head_ && cells_ == o.cells_;
  }

 private:
  std::vector<std::uint8_t> cells_;
  int head_;
};

// Growable dense window over a headed tape. Interpreter loops run on this and
// convert back to the sparse form when they finish.
class DenseTape {
 public:
  explicit DenseTape(const HeadedTape& t, std::int64_t margin = 16);

  int read() const { return cells_[static_cast<std::size_t>(head_ - offset_)]; }
  void write(int bit) { cells_[static_cast<std::size_t>(head_ - offset_)] = static_cast<std::uint8_t>(bit); }
  void move(Dir d) {
    head_ += d == Dir::Right ? 1 : -1;
    if (head_ < offset_ || head_ >= offset_ + static_cast<std::int64_t>(cells_.size())) grow();
  }

  std::int64_t head() const { return head_; }
  void set_head(std::int64_t h) {
    head_ = h;
    if (head_ < offset_ || head_ >= offset_ + static_cast<std::int64_t>(cells_.size())) grow();
  }
  int read_at(std::int64_t i) const {
    if (i < offset_ || i >= offset_ + static_cast<std::int64_t>(cells_.size())) return 0;
    return cells_[static_cast<std::size_t>(i - offset_)];
  }

  HeadedTape to_headed() const;

 private:
  void grow();

  std::vector<std::uint8_t> cells_;
  std::int64_t offset_ = 0;  // tape index of cells_[0]
  std::int64_t head_ = 0;
};

enum class RunStatus { Halted, BudgetExceeded, LoopDetected };

inline const char* run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Halted: return "halted";
    case RunStatus::BudgetExceeded: return "budget-exceeded";
    case RunStatus::LoopDetected: return "loop-detected";
  }
  return "?";
}

template <typename Config>
struct RunResult {
  RunStatus status = RunStatus::BudgetExceeded;
  std::int64_t steps = 0;
  Config final;
};

}  // namespace mchain
