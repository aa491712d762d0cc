#include "mchain/has_encoding.hpp"

#include <sstream>
#include <stdexcept>

namespace mchain {

std::string EncodedProgram::bit_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

std::int64_t jump_offset(std::int64_t k, std::int64_t x, std::int64_t n) {
  if (k < 0 || k > n || x < 0 || x > n) throw std::invalid_argument("jump_offset out of range");
  return x <= k ? k - x : n + 1 + k - x;
}

bool ends_with_mark(const WangProgram& p) {
  return !p.instrs.empty() && p.instrs.back().op == WangOp::M;
}

WangProgram with_trailing_mark(const WangProgram& p) {
  WangProgram q = p;
  q.instrs.push_back(wM());
  return q;
}

EncodedProgram encode_program(const WangProgram& p) {
  EncodedProgram e;
  e.n = p.size();
  auto emit = [&](const WangInstr& ins, std::int64_t k) {
    e.block_starts.push_back(static_cast<int>(e.bits.size()));
    switch (ins.op) {
      case WangOp::M:
        e.bits.push_back(1);
        break;
      case WangOp::R:
        e.bits.insert(e.bits.end(), {0, 1});
        break;
      case WangOp::L:
        e.bits.insert(e.bits.end(), {0, 0, 1});
        break;
      case WangOp::J: {
        std::int64_t y = jump_offset(k, ins.target, e.n);
        e.bits.insert(e.bits.end(), {0, 0, 0});
        e.bits.insert(e.bits.end(), static_cast<std::size_t>(y), 0);
        e.bits.push_back(1);
        break;
      }
    }
  };
  for (std::int64_t k = 0; k < e.n; ++k) emit(p.instrs[static_cast<std::size_t>(k)], k);
  emit(wJ(e.n), e.n);  // self-jump sentinel
  return e;
}

CircularTape counter_tape(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("counter_tape needs n >= 1");
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) + 2, 1);
  cells[0] = 0;
  return CircularTape(std::move(cells), 0);
}

HasAssembly assemble(const WangProgram& p, const HeadedTape& tape) {
  HasAssembly a;
  a.prog = encode_program(p);
  a.config.state = 0;
  a.config.p = CircularTape(a.prog.bits, a.prog.block_starts.front());
  a.config.c = counter_tape(a.prog.n);
  a.config.w = tape;
  a.halt.mode = HasHaltMode::Sentinel;
  a.halt.sentinel_pc = a.prog.block_starts.back();
  return a;
}

std::vector<std::string> physical_fit(const EncodedProgram& e) {
  std::vector<std::string> out;
  if (e.bits.size() > 18) {
    std::ostringstream os;
    os << "program tape needs " << e.bits.size() << " cells, device has 18";
    out.push_back(os.str());
  }
  if (e.n + 2 > 18) {
    std::ostringstream os;
    os << "counter tape needs " << (e.n + 2) << " cells, device has 18";
    out.push_back(os.str());
  }
  return out;
}

}  // namespace mchain
