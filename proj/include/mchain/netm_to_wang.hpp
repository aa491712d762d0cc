#pragma once

#include <cstdint>
#include <utility>

#include "mchain/tape.hpp"
#include "mchain/turing.hpp"
#include "mchain/wang.hpp"

namespace mchain {

// Shared layout facts for the compiled program: cells of the simulated tape
// become bit pairs (<0> = 10, <1> = 11) and each source state owns one
// fixed-size instruction block, so state q maps to pc block_size*q.
struct WangCodec {
  std::int64_t block_size = 13;     // 13 standard, 54 restricted
  std::int64_t num_states = 0;      // source machine |Q|
  std::int64_t program_length = 0;  // block_size*(|Q|-1) + trailer

  std::int64_t pc_of_state(std::int64_t q) const { return block_size * q; }
  std::int64_t trailer_start() const { return block_size * (num_states - 1); }
};

// Per non-halt state q_i the block is R, J(block+8), <read-0 case>(6),
// <read-1 case>(5); one trailing M ends the program. Case jumps target the
// next state's block. The compiled program simulates one source step in at
// most 8 instructions.
std::pair<WangProgram, WangCodec> compile_netm_to_wang(const NonErasingMachine& m);

// Same layout stretched to 54-instruction blocks so the program satisfies
// the restricted subclass of check_hooper_restrictions: L,R after every
// jump, every M replaced by the guarded J(k+4),R,L,M,R,L gadget, L-cases
// padded with (L,R)x5, and an 8-instruction trailer (L,R then a gadget) so
// halt jumps land on a move instruction.
std::pair<WangProgram, WangCodec> compile_netm_to_hooper(const NonErasingMachine& m);

// Simulated cell i sits at pair (2i, 2i+1); the head rests on the leftmost
// bit of the pair under the simulated head; pc = block of the given state.
WangConfig encode_wang_tape(const HeadedTape& tape, std::int64_t state, const WangCodec& codec);

struct MisalignedPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inverse of the pair encoding: 10 -> 0, 11 -> 1, untouched 00 -> blank.
// Throws MisalignedPair when a touched pair starts with 0.
HeadedTape decode_wang_tape(const WangConfig& c);

}  // namespace mchain
