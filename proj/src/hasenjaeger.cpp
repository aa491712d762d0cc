#include "mchain/hasenjaeger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mchain {

namespace {

HasAction act(char p, char c, char w, int next, int ruleId) {
  auto mv = [](char ch) {
    switch (ch) {
      case 'L': return -1;
      case 'R': return +1;
      case '_': return 0;
    }
    throw std::invalid_argument("bad move char");
  };
  HasAction a;
  a.pMove = mv(p);
  a.cMove = mv(c);
  if (w == '1') {
    a.wMark = true;
  } else {
    a.wMove = mv(w);
  }
  a.next = next;
  a.ruleId = ruleId;
  return a;
}

}  // namespace

std::vector<HasWildcardRule> canonical_rows() {
  // States 0..3 are q1..q4; -1 reads match both bits.
  std::vector<HasWildcardRule> rows;
  auto row = [&](int id, int q, int p, int c, int w, char pa, char ca, char wa, int next) {
    rows.push_back({id, q, p, c, w, act(pa, ca, wa, next, id)});
  };
  row(1, 0, 1, -1, 0, 'R', '_', '1', 0);
  row(2, 0, 1, -1, 1, 'R', '_', '_', 0);
  row(3, 0, 0, -1, -1, 'R', '_', '_', 1);
  row(4, 1, 1, 0, -1, 'R', '_', 'R', 0);
  row(5, 1, 0, 0, -1, 'R', 'R', '_', 1);
  row(6, 1, 1, 1, -1, 'R', 'L', 'L', 0);
  row(7, 1, 0, 1, -1, 'R', 'L', '_', 2);
  row(8, 2, 0, -1, 0, 'R', '_', '_', 2);
  row(9, 2, 1, -1, 0, 'R', '_', '_', 0);
  row(10, 2, 0, -1, 1, 'R', 'R', '_', 2);
  row(11, 2, 1, -1, 1, 'L', 'R', '_', 3);
  row(12, 3, 0, 1, -1, 'L', '_', '_', 3);
  row(13, 3, 1, 1, -1, 'L', 'L', '_', 3);
  row(14, 3, -1, 0, -1, 'R', '_', '_', 0);
  return rows;
}

HasenjaegerMachine machine_from_rows(int num_states, int start_state,
                                     const std::vector<HasWildcardRule>& rows) {
  if (num_states < 1 || start_state < 0 || start_state >= num_states)
    throw std::invalid_argument("bad state count or start state");
  HasenjaegerMachine m;
  m.num_states = num_states;
  m.start_state = start_state;
  m.table.assign(static_cast<std::size_t>(num_states) * 8, HasAction{});
  std::vector<char> covered(m.table.size(), 0);
  for (const HasWildcardRule& r : rows) {
    if (r.state < 0 || r.state >= num_states) throw std::invalid_argument("rule state out of range");
    if (r.action.next < 0 || r.action.next >= num_states)
      throw std::invalid_argument("rule next state out of range");
    for (int p = 0; p < 2; ++p) {
      if (r.p != -1 && r.p != p) continue;
      for (int c = 0; c < 2; ++c) {
        if (r.c != -1 && r.c != c) continue;
        for (int w = 0; w < 2; ++w) {
          if (r.w != -1 && r.w != w) continue;
          std::size_t idx = static_cast<std::size_t>(((r.state * 2 + p) * 2 + c) * 2 + w);
          if (covered[idx]) throw std::invalid_argument("overlapping rules in table");
          covered[idx] = 1;
          m.table[idx] = r.action;
        }
      }
    }
  }
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i]) throw std::invalid_argument("rule table not total");
  return m;
}

HasenjaegerMachine canonical_machine() { return machine_from_rows(4, 0, canonical_rows()); }

int has_step(const HasenjaegerMachine& m, HasenjaegerConfig& c) {
  int pr = c.p.read(), cr = c.c.read(), wr = c.w.read();
  const HasAction& a = m.lookup(c.state, pr, cr, wr);
  if (a.pMove < 0) c.p.move(Dir::Left);
  if (a.pMove > 0) c.p.move(Dir::Right);
  if (a.cMove < 0) c.c.move(Dir::Left);
  if (a.cMove > 0) c.c.move(Dir::Right);
  if (a.wMark) {
    c.w.write(1);
  } else if (a.wMove < 0) {
    c.w.move(Dir::Left);
  } else if (a.wMove > 0) {
    c.w.move(Dir::Right);
  }
  c.state = a.next;
  return a.ruleId;
}

namespace {

struct RunTapes {
  std::vector<std::uint8_t> p, c;
  int pHead = 0, cHead = 0;
  DenseTape w;
  int state = 0;

  RunTapes(const HasenjaegerConfig& cfg)
      : p(cfg.p.cells()), c(cfg.c.cells()), pHead(cfg.p.head()), cHead(cfg.c.head()),
        w(cfg.w), state(cfg.state) {}

  HasenjaegerConfig snapshot() const {
    return HasenjaegerConfig{state, CircularTape(p, pHead), CircularTape(c, cHead),
                             w.to_headed()};
  }
};

int wrap(int v, int len) {
  v %= len;
  return v < 0 ? v + len : v;
}

}  // namespace

RunResult<HasenjaegerConfig> has_run(const HasenjaegerMachine& m, const HasenjaegerConfig& start,
                                     std::int64_t budget, const HasHaltRule& halt,
                                     const HasBoundaryFn& on_boundary, const HasTraceSink& trace) {
  RunTapes t(start);
  const int plen = static_cast<int>(t.p.size());
  const int clen = static_cast<int>(t.c.size());
  std::int64_t steps = 0;
  std::set<std::tuple<int, int, int, std::int64_t>> sigs;
  while (true) {
    if (t.state == m.start_state) {
      if (on_boundary) on_boundary(steps, t.pHead, t.cHead, t.w.head(), t.w);
      if (halt.mode == HasHaltMode::Sentinel && t.pHead == halt.sentinel_pc && t.w.read() == 1)
        return {RunStatus::LoopDetected, steps, t.snapshot()};
    }
    if (halt.mode == HasHaltMode::CycleDetect) {
      auto sig = std::make_tuple(t.state, t.pHead, t.cHead, t.w.head());
      if (!sigs.insert(sig).second) return {RunStatus::LoopDetected, steps, t.snapshot()};
    }
    if (steps >= budget) return {RunStatus::BudgetExceeded, steps, t.snapshot()};

    int pr = t.p[static_cast<std::size_t>(t.pHead)];
    int cr = t.c[static_cast<std::size_t>(t.cHead)];
    int wr = t.w.read();
    const HasAction& a = m.lookup(t.state, pr, cr, wr);
    if (trace) trace(HasTraceRow{steps + 1, t.state, t.pHead, t.cHead, t.w.head(), pr, cr, wr, a.ruleId});
    t.pHead = wrap(t.pHead + a.pMove, plen);
    t.cHead = wrap(t.cHead + a.cMove, clen);
    if (a.wMark) {
      if (t.w.read() == 0) {
        t.w.write(1);
        sigs.clear();
      }
    } else if (a.wMove != 0) {
      t.w.move(a.wMove < 0 ? Dir::Left : Dir::Right);
    }
    t.state = a.next;
    ++steps;
  }
}

namespace {

// Rank structure over the fixed P tape for the batch interpreter.
struct PIndex {
  std::vector<std::int64_t> prefix;  // prefix[i] = ones in [0, i)
  std::vector<int> ones;
  int len = 0;

  explicit PIndex(const std::vector<std::uint8_t>& bits) {
    len = static_cast<int>(bits.size());
    prefix.assign(static_cast<std::size_t>(len) + 1, 0);
    for (int i = 0; i < len; ++i) {
      prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + bits[static_cast<std::size_t>(i)];
      if (bits[static_cast<std::size_t>(i)]) ones.push_back(i);
    }
  }

  std::int64_t count() const { return static_cast<std::int64_t>(ones.size()); }

  // Distance d >= 0 to the nearest 1 at or right of pos (circular); -1 if none.
  std::int64_t dist_to_one_right(int pos) const {
    if (ones.empty()) return -1;
    auto it = std::lower_bound(ones.begin(), ones.end(), pos);
    if (it != ones.end()) return *it - pos;
    return static_cast<std::int64_t>(ones.front()) + len - pos;
  }

  // Number of ones among the b cells pos, pos-1, ..., pos-b+1 (circular).
  std::int64_t ones_in_left_span(int pos, std::int64_t b) const {
    if (b <= 0) return 0;
    std::int64_t full = b / len;
    std::int64_t rem = b % len;
    std::int64_t cnt = full * count();
    if (rem > 0) {
      int l = wrap(pos - static_cast<int>(rem) + 1, len);
      if (l <= pos)
        cnt += prefix[static_cast<std::size_t>(pos) + 1] - prefix[static_cast<std::size_t>(l)];
      else
        cnt += (count() - prefix[static_cast<std::size_t>(l)]) + prefix[static_cast<std::size_t>(pos) + 1];
    }
    return cnt;
  }

  // Position of the m-th 1 at or left of pos (m >= 1, circular, may wrap
  // several times) and the left distance to it. Requires count() > 0.
  std::pair<int, std::int64_t> kth_one_left(int pos, std::int64_t m) const {
    std::int64_t r0 = prefix[static_cast<std::size_t>(pos) + 1];  // ones in [0, pos]
    if (m <= r0) {
      int p = ones[static_cast<std::size_t>(r0 - m)];
      return {p, pos - p};
    }
    std::int64_t rem = m - r0;
    std::int64_t k = count();
    std::int64_t cycles = (rem - 1) / k;
    std::int64_t within = (rem - 1) % k;
    int p = ones[static_cast<std::size_t>(k - 1 - within)];
    return {p, static_cast<std::int64_t>(pos) + (cycles + 1) * len - p};
  }
};

bool same_table(const HasenjaegerMachine& a, const HasenjaegerMachine& b) {
  if (a.num_states != b.num_states || a.start_state != b.start_state ||
      a.table.size() != b.table.size())
    return false;
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    const HasAction &x = a.table[i], &y = b.table[i];
    if (x.pMove != y.pMove || x.cMove != y.cMove || x.wMove != y.wMove || x.wMark != y.wMark ||
        x.next != y.next)
      return false;
  }
  return true;
}

}  // namespace

RunResult<HasenjaegerConfig> has_run_fast(const HasenjaegerMachine& m,
                                          const HasenjaegerConfig& start, std::int64_t budget,
                                          const HasHaltRule& halt,
                                          const HasBoundaryFn& on_boundary) {
  static const HasenjaegerMachine canon = canonical_machine();
  if (!same_table(m, canon))
    throw std::invalid_argument("has_run_fast only supports the canonical machine");
  if (halt.mode == HasHaltMode::CycleDetect)
    throw std::invalid_argument("has_run_fast does not support CycleDetect");

  RunTapes t(start);
  const int plen = static_cast<int>(t.p.size());
  const int clen = static_cast<int>(t.c.size());
  PIndex pidx(t.p);

  // Distance from each C cell leftward to the nearest 0 on C; -1 if C has no 0.
  std::vector<std::int64_t> c_zero_left(static_cast<std::size_t>(clen), -1);
  if (std::find(t.c.begin(), t.c.end(), std::uint8_t{0}) != t.c.end()) {
    // Two wraps so every cell sees the zero behind it.
    std::int64_t d = -1;
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < clen; ++i) {
        if (!t.c[static_cast<std::size_t>(i)])
          d = 0;
        else if (d >= 0)
          ++d;
        if (d >= 0) c_zero_left[static_cast<std::size_t>(i)] = d;
      }
  }

  std::int64_t steps = 0;
  while (true) {
    if (t.state == m.start_state) {
      if (on_boundary) on_boundary(steps, t.pHead, t.cHead, t.w.head(), t.w);
      if (halt.mode == HasHaltMode::Sentinel && t.pHead == halt.sentinel_pc && t.w.read() == 1)
        return {RunStatus::LoopDetected, steps, t.snapshot()};
    }
    if (steps >= budget) return {RunStatus::BudgetExceeded, steps, t.snapshot()};
    std::int64_t remaining = budget - steps;

    if (t.state <= 1) {  // q1, q2: single literal step
      int pr = t.p[static_cast<std::size_t>(t.pHead)];
      int cr = t.c[static_cast<std::size_t>(t.cHead)];
      int wr = t.w.read();
      const HasAction& a = m.lookup(t.state, pr, cr, wr);
      t.pHead = wrap(t.pHead + a.pMove, plen);
      t.cHead = wrap(t.cHead + a.cMove, clen);
      if (a.wMark)
        t.w.write(1);
      else if (a.wMove != 0)
        t.w.move(a.wMove < 0 ? Dir::Left : Dir::Right);
      t.state = a.next;
      ++steps;
      continue;
    }

    if (t.state == 2) {  // q3: scan P right to the next 1 (rules 8/10, then 9/11)
      int wr = t.w.read();
      std::int64_t d = pidx.dist_to_one_right(t.pHead);
      if (d < 0 || remaining <= d) {  // no 1 on P, or budget ends mid-scan
        std::int64_t b = remaining;
        t.pHead = wrap(t.pHead + static_cast<int>(b % plen), plen);
        if (wr) t.cHead = wrap(t.cHead + static_cast<int>(b % clen), clen);
        steps += b;
        continue;
      }
      int onePos = wrap(t.pHead + static_cast<int>(d % plen), plen);
      if (wr == 0) {  // rule 9 exits to q1, C untouched
        t.pHead = wrap(onePos + 1, plen);
        t.state = 0;
      } else {  // rule 11 exits to q4; C advanced once per step
        t.pHead = wrap(onePos - 1, plen);
        t.cHead = wrap(t.cHead + static_cast<int>((d + 1) % clen), clen);
        t.state = 3;
      }
      steps += d + 1;
      continue;
    }

    // q4: scan P left, decrementing C on each 1, until C reads 0 (rule 14).
    std::int64_t m0 = c_zero_left[static_cast<std::size_t>(t.cHead)];
    if (m0 == 0) {  // rule 14 now
      t.pHead = wrap(t.pHead + 1, plen);
      t.state = 0;
      ++steps;
      continue;
    }
    std::int64_t scan;  // steps in the 12/13 scan; -1 when it never ends
    int pos = 0;
    if (m0 < 0 || pidx.count() == 0) {
      scan = -1;
    } else {
      auto [p, dist] = pidx.kth_one_left(t.pHead, m0);
      pos = p;
      scan = dist + 1;
    }
    if (scan < 0 || remaining <= scan) {  // partial scan up to the budget
      std::int64_t b = remaining;
      std::int64_t crossed = pidx.ones_in_left_span(t.pHead, b);
      t.pHead = wrap(t.pHead - static_cast<int>(b % plen), plen);
      t.cHead = wrap(t.cHead - static_cast<int>(crossed % clen), clen);
      steps += b;
      continue;
    }
    t.pHead = pos;  // scan ends one cell left of pos; rule 14 steps back onto it
    t.cHead = wrap(t.cHead - static_cast<int>(m0 % clen), clen);
    t.state = 0;
    steps += scan + 1;
  }
}

}  // namespace mchain
