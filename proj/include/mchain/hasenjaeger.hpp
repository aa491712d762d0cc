#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mchain/tape.hpp"

namespace mchain {

// Three-tape machine: cyclic read-only program tape P, cyclic read-only
// counter tape C, bi-infinite non-erasing work tape W. Every step reads all
// three tapes, then each tape independently moves or stays; W may instead be
// marked with 1.
struct HasAction {
  int pMove = 0;  // -1 left, 0 stay, +1 right
  int cMove = 0;
  int wMove = 0;
  bool wMark = false;  // write 1 to W (instead of moving W)
  int next = 0;
  int ruleId = 0;  // source row number, for traces
};

struct HasenjaegerMachine {
  int num_states = 0;
  int start_state = 0;
  std::vector<HasAction> table;  // index = ((state*2 + p)*2 + c)*2 + w

  const HasAction& lookup(int state, int p, int c, int w) const {
    return table[static_cast<std::size_t>(((state * 2 + p) * 2 + c) * 2 + w)];
  }
};

// One row of a wildcard rule table; -1 in a read column matches both bits.
struct HasWildcardRule {
  int ruleId = 0;
  int state = 0;
  int p = -1, c = -1, w = -1;
  HasAction action;
};

// Expands wildcard rows to a full table. Throws std::invalid_argument when
// rows overlap or leave a combination uncovered.
HasenjaegerMachine machine_from_rows(int num_states, int start_state,
                                     const std::vector<HasWildcardRule>& rows);

// The 4-state machine recovered from the device wiring, rules 1..14.
// State indices 0..3 stand for q1..q4; start state 0.
HasenjaegerMachine canonical_machine();
std::vector<HasWildcardRule> canonical_rows();

struct HasenjaegerConfig {
  int state = 0;
  CircularTape p;
  CircularTape c;
  HeadedTape w;

  bool operator==(const HasenjaegerConfig& o) const {
    return state == o.state && p == o.p && c == o.c && w == o.w;
  }
  bool operator!=(const HasenjaegerConfig& o) const { return !(*this == o); }
};

// Applies one step in place; returns the fired rule's ruleId.
int has_step(const HasenjaegerMachine& m, HasenjaegerConfig& c);

enum class HasHaltMode { None, Sentinel, CycleDetect };

// Sentinel: stop (LoopDetected) when the machine is in the start state with
// the P head at sentinel_pc and W reading 1 — the entry condition of the
// encoder's self-jump loop. CycleDetect: stop when a configuration signature
// (state, pHead, cHead, wHead) repeats with no W write in between.
struct HasHaltRule {
  HasHaltMode mode = HasHaltMode::None;
  int sentinel_pc = 0;
};

struct HasTraceRow {
  std::int64_t step = 0;  // 1-based
  int state = 0;
  int pHead = 0, cHead = 0;
  std::int64_t wHead = 0;
  int pRead = 0, cRead = 0, wRead = 0;
  int ruleId = 0;
};

using HasTraceSink = std::function<void(const HasTraceRow&)>;

// Called at every loop top where the machine is in the start state, before
// halt/budget checks: the instruction-boundary configurations of a simulated
// Wang program all appear here.
using HasBoundaryFn = std::function<void(std::int64_t steps, int pHead, int cHead,
                                         std::int64_t wHead, const DenseTape& w)>;

// Literal step-by-step interpreter. Supports all halt modes and tracing.
RunResult<HasenjaegerConfig> has_run(const HasenjaegerMachine& m, const HasenjaegerConfig& start,
                                     std::int64_t budget, const HasHaltRule& halt,
                                     const HasBoundaryFn& on_boundary = nullptr,
                                     const HasTraceSink& trace = nullptr);

// Batch interpreter for the canonical machine: collapses the q3 right-scan
// and q4 left-scan phases into closed-form head arithmetic. Step counts and
// every start-state loop-top configuration are identical to has_run; the
// machine argument must equal canonical_machine(). CycleDetect is not
// supported here (it needs per-step signatures).
RunResult<HasenjaegerConfig> has_run_fast(const HasenjaegerMachine& m,
                                          const HasenjaegerConfig& start, std::int64_t budget,
                                          const HasHaltRule& halt,
                                          const HasBoundaryFn& on_boundary = nullptr);

}  // namespace mchain
