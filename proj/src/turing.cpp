#include "mchain/turing.hpp"

#include <set>
#include <sstream>

namespace mchain {

bool TuringMachine::is_non_erasing() const {
  for (const auto& per_state : actions)
    if (per_state[1].write == 0) return false;
  return true;
}

TmDescription describe(const TuringMachine& m) {
  TmDescription d;
  d.num_states = m.num_states;
  for (int q = 0; q + 1 < m.num_states; ++q)
    for (int r = 0; r < 2; ++r) {
      const TmAction& a = m.actions[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)];
      d.rules.push_back(TmRule{q, r, a.write, a.move, a.next});
    }
  return d;
}

static std::string rule_str(const TmRule& r) {
  std::ostringstream os;
  os << "(" << r.state << "," << r.read << ") -> (" << r.write << "," << dir_char(r.move)
     << "," << r.next << ")";
  return os.str();
}

TmValidation validate_tm(const TmDescription& d) {
  TmValidation v;
  if (d.num_states < 2) {
    v.errors.push_back({TmErrorCode::BadStateCount,
                        "need at least a start and a halt state"});
    return v;
  }
  std::set<std::pair<int, int>> seen;
  for (const TmRule& r : d.rules) {
    if (r.state < 0 || r.state >= d.num_states || r.next < 0 || r.next >= d.num_states ||
        r.read < 0 || r.read > 1 || r.write < 0 || r.write > 1) {
      v.errors.push_back({TmErrorCode::StateOutOfRange, rule_str(r)});
      continue;
    }
    if (r.state == d.num_states - 1) {
      v.errors.push_back({TmErrorCode::HaltStateRule, rule_str(r)});
      continue;
    }
    if (!seen.insert({r.state, r.read}).second) {
      v.errors.push_back({TmErrorCode::DuplicateRule, rule_str(r)});
      continue;
    }
  }
  for (int q = 0; q + 1 < d.num_states; ++q)
    for (int b = 0; b < 2; ++b)
      if (!seen.count({q, b})) {
        std::ostringstream os;
        os << "state " << q << " read " << b;
        v.errors.push_back({TmErrorCode::MissingRule, os.str()});
      }
  if (!v.errors.empty()) return v;

  TuringMachine m;
  m.num_states = d.num_states;
  m.actions.assign(static_cast<std::size_t>(d.num_states), {});
  for (const TmRule& r : d.rules)
    m.actions[static_cast<std::size_t>(r.state)][static_cast<std::size_t>(r.read)] =
        TmAction{r.write, r.move, r.next};
  v.machine = std::move(m);
  return v;
}

TmValidation validate_tm_rules(const TmDescription& d) { return validate_tm(d); }

std::optional<NonErasingMachine> as_non_erasing(const TuringMachine& m,
                                                std::vector<TmError>* errors) {
  bool ok = true;
  for (int q = 0; q + 1 < m.num_states; ++q) {
    const TmAction& a = m.actions[static_cast<std::size_t>(q)][1];
    if (a.write == 0) {
      ok = false;
      if (errors)
        errors->push_back({TmErrorCode::ErasingRule,
                           rule_str(TmRule{q, 1, a.write, a.move, a.next})});
    }
  }
  if (!ok) return std::nullopt;
  return NonErasingMachine{m};
}

RunResult<TmConfig> tm_run(const TuringMachine& m, const TmConfig& start, std::int64_t budget) {
  return tm_run_observed(m, start, budget, [](std::int64_t, int, const DenseTape&) {});
}

}  // namespace mchain
