#include "mchain/netm_to_wang.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mchain {

std::pair<WangProgram, WangCodec> compile_netm_to_wang(const NonErasingMachine& m) {
  const TuringMachine& tm = m.tm;
  WangProgram p;
  WangCodec codec;
  codec.block_size = 13;
  codec.num_states = tm.num_states;
  auto emit = [&](WangInstr i) { p.instrs.push_back(i); };
  for (std::int64_t q = 0; q + 1 < tm.num_states; ++q) {
    assert(p.size() == 13 * q);
    emit(wR());
    emit(wJ(13 * q + 8));
    const TmAction& a0 = tm.actions[static_cast<std::size_t>(q)][0];
    std::int64_t j0 = 13 * a0.next;
    if (a0.write == 0 && a0.move == Dir::Right) {
      emit(wR()); emit(wM()); emit(wM()); emit(wM()); emit(wM()); emit(wJ(j0));
    } else if (a0.write == 0 && a0.move == Dir::Left) {
      emit(wL()); emit(wL()); emit(wL()); emit(wM()); emit(wM()); emit(wJ(j0));
    } else if (a0.write == 1 && a0.move == Dir::Right) {
      emit(wM()); emit(wR()); emit(wM()); emit(wM()); emit(wM()); emit(wJ(j0));
    } else {
      emit(wM()); emit(wL()); emit(wL()); emit(wL()); emit(wM()); emit(wJ(j0));
    }
    const TmAction& a1 = tm.actions[static_cast<std::size_t>(q)][1];
    std::int64_t j1 = 13 * a1.next;
    if (a1.write != 1) throw std::invalid_argument("machine is not non-erasing");
    if (a1.move == Dir::Right) {
      emit(wR()); emit(wM()); emit(wM()); emit(wM()); emit(wJ(j1));
    } else {
      emit(wL()); emit(wL()); emit(wL()); emit(wM()); emit(wJ(j1));
    }
  }
  emit(wM());
  codec.program_length = p.size();
  assert(codec.program_length == 13 * (tm.num_states - 1) + 1);
  return {std::move(p), codec};
}

namespace {

struct HooperEmitter {
  WangProgram p;

  std::int64_t at() const { return p.size(); }
  void emit(WangInstr i) { p.instrs.push_back(i); }
  void move_pair() { emit(wL()); emit(wR()); }
  // Guarded mark: jump over the M when the cell already holds a 1.
  void gadget() {
    std::int64_t k = at();
    emit(wJ(k + 4)); emit(wR()); emit(wL()); emit(wM()); emit(wR()); emit(wL());
  }
  void padding() {
    for (int i = 0; i < 5; ++i) move_pair();
  }
  void case_jump(std::int64_t target) {
    emit(wJ(target));
    move_pair();
  }
};

}  // namespace

std::pair<WangProgram, WangCodec> compile_netm_to_hooper(const NonErasingMachine& m) {
  const TuringMachine& tm = m.tm;
  HooperEmitter e;
  WangCodec codec;
  codec.block_size = 54;
  codec.num_states = tm.num_states;
  for (std::int64_t q = 0; q + 1 < tm.num_states; ++q) {
    assert(e.at() == 54 * q);
    e.emit(wR());
    e.case_jump(54 * q + 32);  // dispatcher: jump to the read-1 case
    assert(e.at() == 54 * q + 4);
    const TmAction& a0 = tm.actions[static_cast<std::size_t>(q)][0];
    std::int64_t j0 = 54 * a0.next;
    if (a0.write == 0 && a0.move == Dir::Right) {
      e.emit(wR()); e.gadget(); e.gadget(); e.gadget(); e.gadget(); e.case_jump(j0);
    } else if (a0.write == 0 && a0.move == Dir::Left) {
      e.emit(wL()); e.emit(wL()); e.emit(wL()); e.gadget(); e.gadget(); e.padding(); e.case_jump(j0);
    } else if (a0.write == 1 && a0.move == Dir::Right) {
      e.gadget(); e.emit(wR()); e.gadget(); e.gadget(); e.gadget(); e.case_jump(j0);
    } else {
      e.gadget(); e.emit(wL()); e.emit(wL()); e.emit(wL()); e.gadget(); e.padding(); e.case_jump(j0);
    }
    assert(e.at() == 54 * q + 32);
    const TmAction& a1 = tm.actions[static_cast<std::size_t>(q)][1];
    std::int64_t j1 = 54 * a1.next;
    if (a1.write != 1) throw std::invalid_argument("machine is not non-erasing");
    if (a1.move == Dir::Right) {
      e.emit(wR()); e.gadget(); e.gadget(); e.gadget(); e.case_jump(j1);
    } else {
      e.emit(wL()); e.emit(wL()); e.emit(wL()); e.gadget(); e.padding(); e.case_jump(j1);
    }
    assert(e.at() == 54 * (q + 1));
  }
  // Halt jumps J(54(|Q|-1)) must land on a move, so the trailer opens with
  // L,R before the guarded mark that replaces the trailing M.
  e.move_pair();
  e.gadget();
  codec.program_length = e.at();
  assert(codec.program_length == 54 * (tm.num_states - 1) + 8);
  return {std::move(e.p), codec};
}

WangConfig encode_wang_tape(const HeadedTape& tape, std::int64_t state, const WangCodec& codec) {
  WangConfig c;
  std::int64_t lo = tape.head, hi = tape.head;
  if (!tape.tape.empty()) {
    lo = std::min(lo, tape.tape.min_one());
    hi = std::max(hi, tape.tape.max_one());
  }
  for (std::int64_t i = lo; i <= hi; ++i) {
    c.tape.tape.write(2 * i, 1);
    if (tape.tape.read(i)) c.tape.tape.write(2 * i + 1, 1);
  }
  c.tape.head = 2 * tape.head;
  c.pc = codec.pc_of_state(state);
  return c;
}

namespace {

std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : (v - 1) / 2; }

}  // namespace

HeadedTape decode_wang_tape(const WangConfig& c) {
  HeadedTape out;
  out.head = floor_div2(c.tape.head);
  const SparseBitTape& t = c.tape.tape;
  if (!t.empty()) {
    std::int64_t lo = floor_div2(t.min_one());
    std::int64_t hi = floor_div2(t.max_one());
    for (std::int64_t i = lo; i <= hi; ++i) {
      int a = t.read(2 * i), b = t.read(2 * i + 1);
      if (a == 0 && b == 0) continue;  // untouched blank
      if (a == 0) {
        std::ostringstream os;
        os << "pair at cell " << i << " reads 01";
        throw MisalignedPair(os.str());
      }
      if (b) out.tape.write(i, 1);
    }
  }
  if (c.tape.read(2 * out.head) == 0)
    throw MisalignedPair("pair under the head starts with 0");
  return out;
}

}  // namespace mchain
