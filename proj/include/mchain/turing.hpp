#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mchain/tape.hpp"

namespace mchain {

// Binary single-tape machine. Blank is 0, the start state is 0, and the
// highest-numbered state is the halt state; it has no outgoing rules. All
// other states carry exactly one rule per read symbol.
struct TmAction {
  int write = 0;
  Dir move = Dir::Right;
  int next = 0;
};

struct TuringMachine {
  int num_states = 0;
  std::vector<std::array<TmAction, 2>> actions;  // indexed by state, read bit

  int start_state() const { return 0; }
  int halt_state() const { return num_states - 1; }
  bool is_non_erasing() const;
};

struct TmRule {
  int state = 0;
  int read = 0;
  int write = 0;
  Dir move = Dir::Right;
  int next = 0;
};

struct TmDescription {
  int num_states = 0;
  std::vector<TmRule> rules;
};

TmDescription describe(const TuringMachine& m);

enum class TmErrorCode {
  BadStateCount,
  StateOutOfRange,
  HaltStateRule,
  DuplicateRule,
  MissingRule,
  ErasingRule,
};

struct TmError {
  TmErrorCode code;
  std::string detail;
};

struct TmValidation {
  std::optional<TuringMachine> machine;
  std::vector<TmError> errors;
  bool ok() const { return machine.has_value(); }
};

TmValidation validate_tm(const TmDescription& d);

// A non-erasing machine never overwrites a 1 with a 0.
struct NonErasingMachine {
  TuringMachine tm;
};

TmValidation validate_tm_rules(const TmDescription& d);  // same as validate_tm
std::optional<NonErasingMachine> as_non_erasing(const TuringMachine& m,
                                                std::vector<TmError>* errors = nullptr);

struct TmConfig {
  int state = 0;
  HeadedTape tape;

  bool operator==(const TmConfig& o) const { return state == o.state && tape == o.tape; }
  bool operator!=(const TmConfig& o) const { return !(*this == o); }
};

// Runs until the halt state or the step budget. The observer sees the
// configuration after every completed step and may be a no-op.
template <typename Observer>
RunResult<TmConfig> tm_run_observed(const TuringMachine& m, const TmConfig& start,
                                    std::int64_t budget, Observer&& observe) {
  RunResult<TmConfig> r;
  DenseTape tape(start.tape);
  int state = start.state;
  const int halt = m.halt_state();
  std::int64_t steps = 0;
  while (state != halt) {
    if (steps >= budget) {
      r.status = RunStatus::BudgetExceeded;
      r.steps = steps;
      r.final = TmConfig{state, tape.to_headed()};
      return r;
    }
    const TmAction& a = m.actions[static_cast<std::size_t>(state)][static_cast<std::size_t>(tape.read())];
    tape.write(a.write);
    tape.move(a.move);
    state = a.next;
    ++steps;
    observe(steps, state, tape);
  }
  r.status = RunStatus::Halted;
  r.steps = steps;
  r.final = TmConfig{state, tape.to_headed()};
  return r;
}

RunResult<TmConfig> tm_run(const TuringMachine& m, const TmConfig& start, std::int64_t budget);

}  // namespace mchain
