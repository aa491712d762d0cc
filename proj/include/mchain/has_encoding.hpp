#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mchain/hasenjaeger.hpp"
#include "mchain/tape.hpp"
#include "mchain/wang.hpp"

namespace mchain {

// Program-tape image of a Wang program: M -> 1, R -> 01, L -> 001,
// J(x) -> 000 0^y 1, concatenated, with a trailing self-jump J(n) sentinel.
// Every encoded instruction carries exactly one 1, which is what the jump
// scan counts.
struct EncodedProgram {
  std::vector<std::uint8_t> bits;
  std::vector<int> block_starts;  // leftmost bit of each <I_k>, k = 0..n (n = sentinel)
  std::int64_t n = 0;             // source instruction count

  std::string bit_string() const;
};

// The relative jump distance counted in 1-bits when scanning left on P.
std::int64_t jump_offset(std::int64_t k, std::int64_t x, std::int64_t n);

bool ends_with_mark(const WangProgram& p);
WangProgram with_trailing_mark(const WangProgram& p);

EncodedProgram encode_program(const WangProgram& p);

// Cyclic counter of length n+2: a single 0 cell (index 0) and n+1 ones,
// head starting on the 0.
CircularTape counter_tape(std::int64_t n);

struct HasAssembly {
  EncodedProgram prog;
  HasenjaegerConfig config;
  HasHaltRule halt;
};

// Start configuration: P head on <I_0>, C head on its 0, W equal to the Wang
// tape, start state, sentinel halt rule.
HasAssembly assemble(const WangProgram& p, const HeadedTape& tape);

// The physical device had 18 program cells and an 18-cell counter; returns
// the constraints an encoding breaks, empty when it fits.
std::vector<std::string> physical_fit(const EncodedProgram& e);

}  // namespace mchain
