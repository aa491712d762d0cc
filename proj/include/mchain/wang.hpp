#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mchain/tape.hpp"

namespace mchain {

// Wang B machine: instructions L, R, M (mark, writes 1), J(x) (jump on 1).
// The program halts by moving past the last instruction; pc == size() is the
// halted configuration. J(x) with x == size() is accepted at the type level
// for the Hasenjaeger encoder's sentinel; the plain interpreter simply halts
// when the pc lands there.
enum class WangOp { L, R, M, J };

struct WangInstr {
  WangOp op = WangOp::M;
  std::int64_t target = 0;  // J only

  bool operator==(const WangInstr& o) const { return op == o.op && (op != WangOp::J || target == o.target); }
};

inline WangInstr wL() { return {WangOp::L, 0}; }
inline WangInstr wR() { return {WangOp::R, 0}; }
inline WangInstr wM() { return {WangOp::M, 0}; }
inline WangInstr wJ(std::int64_t x) { return {WangOp::J, x}; }

struct WangProgram {
  std::vector<WangInstr> instrs;

  std::int64_t size() const { return static_cast<std::int64_t>(instrs.size()); }
  bool operator==(const WangProgram& o) const { return instrs == o.instrs; }
};

std::vector<std::string> validate_wang(const WangProgram& p);  // jump-range errors

std::string wang_instr_str(const WangInstr& i);

struct WangConfig {
  std::int64_t pc = 0;
  HeadedTape tape;

  bool operator==(const WangConfig& o) const { return pc == o.pc && tape == o.tape; }
};

// Dynamic restriction-3 monitor: records every M executed on a 1-cell.
// The standard compiled programs do this routinely (padding marks); the
// Hooper-transformed ones must never.
struct WangMonitor {
  std::int64_t remark_events = 0;
  std::int64_t first_remark_step = -1;

  void record(std::int64_t step) {
    ++remark_events;
    if (first_remark_step < 0) first_remark_step = step;
  }
};

// Observer sees (steps_done, pc_after, tape) after every executed instruction.
template <typename Observer>
RunResult<WangConfig> wang_run_observed(const WangProgram& p, const WangConfig& start,
                                        std::int64_t budget, Observer&& observe,
                                        WangMonitor* monitor = nullptr) {
  RunResult<WangConfig> r;
  const std::int64_t n = p.size();
  DenseTape tape(start.tape);
  std::int64_t pc = start.pc;
  std::int64_t steps = 0;
  while (pc != n) {
    if (steps >= budget) {
      r.status = RunStatus::BudgetExceeded;
      r.steps = steps;
      r.final = WangConfig{pc, tape.to_headed()};
      return r;
    }
    const WangInstr& ins = p.instrs[static_cast<std::size_t>(pc)];
    switch (ins.op) {
      case WangOp::L:
        tape.move(Dir::Left);
        ++pc;
        break;
      case WangOp::R:
        tape.move(Dir::Right);
        ++pc;
        break;
      case WangOp::M:
        if (monitor && tape.read() == 1) monitor->record(steps + 1);
        tape.write(1);
        ++pc;
        break;
      case WangOp::J:
        pc = tape.read() ? ins.target : pc + 1;
        break;
    }
    ++steps;
    observe(steps, pc, tape);
  }
  r.status = RunStatus::Halted;
  r.steps = steps;
  r.final = WangConfig{pc, tape.to_headed()};
  return r;
}

RunResult<WangConfig> wang_run(const WangProgram& p, const WangConfig& start, std::int64_t budget,
                               WangMonitor* monitor = nullptr);

// Hooper's restricted subclass. Restriction 1: the instruction after a jump
// is L or R. Restriction 2: every jump target is an L or R instruction.
// Restriction 3 (M only on 0-cells) is dynamic; see WangMonitor.
struct HooperViolation {
  int restriction = 0;  // 1 or 2
  std::int64_t index = 0;
  std::string detail;
};

std::vector<HooperViolation> check_hooper_restrictions(const WangProgram& p);

}  // namespace mchain
