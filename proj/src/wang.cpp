#include "mchain/wang.hpp"

#include <sstream>

namespace mchain {

std::vector<std::string> validate_wang(const WangProgram& p) {
  std::vector<std::string> errors;
  if (p.instrs.empty()) errors.push_back("program must have at least one instruction");
  const std::int64_t n = p.size();
  for (std::int64_t i = 0; i < n; ++i) {
    const WangInstr& ins = p.instrs[static_cast<std::size_t>(i)];
    if (ins.op == WangOp::J && (ins.target < 0 || ins.target > n)) {
      std::ostringstream os;
      os << "jump target out of range at index " << i << ": J " << ins.target;
      errors.push_back(os.str());
    }
  }
  return errors;
}

std::string wang_instr_str(const WangInstr& i) {
  switch (i.op) {
    case WangOp::L: return "L";
    case WangOp::R: return "R";
    case WangOp::M: return "M";
    case WangOp::J: {
      std::ostringstream os;
      os << "J " << i.target;
      return os.str();
    }
  }
  return "?";
}

RunResult<WangConfig> wang_run(const WangProgram& p, const WangConfig& start, std::int64_t budget,
                               WangMonitor* monitor) {
  return wang_run_observed(p, start, budget, [](std::int64_t, std::int64_t, const DenseTape&) {},
                           monitor);
}

std::vector<HooperViolation> check_hooper_restrictions(const WangProgram& p) {
  std::vector<HooperViolation> out;
  const std::int64_t n = p.size();
  auto is_move = [&](std::int64_t idx) {
    if (idx < 0 || idx >= n) return false;
    WangOp op = p.instrs[static_cast<std::size_t>(idx)].op;
    return op == WangOp::L || op == WangOp::R;
  };
  for (std::int64_t k = 0; k < n; ++k) {
    const WangInstr& ins = p.instrs[static_cast<std::size_t>(k)];
    if (ins.op != WangOp::J) continue;
    if (!is_move(k + 1)) {
      std::ostringstream os;
      os << "successor of J at " << k << " is "
         << (k + 1 < n ? wang_instr_str(p.instrs[static_cast<std::size_t>(k + 1)]) : std::string("end"));
      out.push_back({1, k, os.str()});
    }
    if (!is_move(ins.target)) {
      std::ostringstream os;
      os << "target " << ins.target << " of J at " << k << " is "
         << (ins.target < n && ins.target >= 0
                 ? wang_instr_str(p.instrs[static_cast<std::size_t>(ins.target)])
                 : std::string("end"));
      out.push_back({2, k, os.str()});
    }
  }
  return out;
}

}  // namespace mchain
