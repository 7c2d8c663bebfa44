#include "hanoi/lemma_lab.hpp"

#include <algorithm>
#include <set>

namespace hanoi {

std::string to_string(EndStateKind kind) {
  switch (kind) {
    case EndStateKind::kTwoStacks:
      return "two-stacks";
    case EndStateKind::kThreeStacks:
      return "three-stacks";
    case EndStateKind::kOther:
      return "other";
  }
  return "other";
}

std::string to_string(LedgerProvenance provenance) {
  return provenance == LedgerProvenance::kAnalytic ? "analytic" : "empirical";
}

std::vector<Disk> EndStateClass::bottoms() const {
  std::vector<Disk> out;
  if (kind == EndStateKind::kOther) return out;
  out.push_back(big_disk);
  if (degenerate) return out;
  out.push_back(second_bottom);
  if (kind == EndStateKind::kThreeStacks) out.push_back(j4);
  return out;
}

EndStateClass classify_end_state(const MoveSequence& demolishing) {
  const int n = demolishing.n;
  if (demolishing.empty() || demolishing.moves.back().disk != n) {
    throw InvalidArgument("not a demolishing phase: last move must be disk " +
                          std::to_string(n));
  }
  if (first_freed_index(demolishing, n) != demolishing.size() - 1) {
    throw InvalidArgument("not a demolishing phase: disk n moves earlier");
  }
  const ValidationReport report = validate_sequence(demolishing);
  if (!report.valid) {
    throw InvalidArgument("illegal move at index " +
                          std::to_string(*report.failed_index));
  }
  const State& end = *report.final_state;

  EndStateClass out;
  out.big_disk = n;
  out.big_peg = end.peg_of(n);
  if (n == 1) {
    out.kind = EndStateKind::kTwoStacks;
    out.degenerate = true;
    return out;
  }
  out.second_bottom = n - 1;
  out.second_peg = end.peg_of(n - 1);

  std::set<Peg> occupied;
  for (Disk d = 1; d < n; ++d) occupied.insert(end.peg_of(d));
  if (occupied.size() == 1) {
    out.kind = EndStateKind::kTwoStacks;
    return out;
  }
  if (occupied.size() == 2) {
    out.kind = EndStateKind::kThreeStacks;
    for (Peg p : occupied) {
      if (p != out.second_peg) out.j4_peg = p;
    }
    out.j4 = end.stack(out.j4_peg).front();
    return out;
  }
  out.kind = EndStateKind::kOther;
  out.description = std::to_string(occupied.size()) +
                    " pegs hold the disks smaller than n";
  return out;
}

namespace {

// Latest departure from `peg` by a disk above `threshold`, with its last
// arrival. Nothing larger than `threshold` starts on `peg` by construction.
std::optional<AvoidanceWitness> last_violation(const MoveSequence& seq, Peg peg,
                                               Disk threshold) {
  std::vector<std::size_t> arrival(static_cast<std::size_t>(seq.n) + 1, 0);
  std::optional<AvoidanceWitness> witness;
  bool any_arrival = false;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const Move& m = seq.moves[i];
    if (m.disk <= threshold) continue;
    if (m.to == peg) {
      arrival[m.disk] = i;
      any_arrival = true;
    }
    if (m.from == peg) {
      witness = AvoidanceWitness{m.disk, peg, arrival[m.disk], i, m.to};
    }
  }
  if (any_arrival && !witness) {
    // A larger disk parked on the peg for good. Classification rules this
    // out for demolishing phases; report the arrival alone.
    for (std::size_t i = seq.moves.size(); i-- > 0;) {
      const Move& m = seq.moves[i];
      if (m.disk > threshold && m.to == peg) {
        return AvoidanceWitness{m.disk, peg, i, i, peg};
      }
    }
  }
  return witness;
}

}  // namespace

AvoidanceReport check_avoidance(const MoveSequence& demolishing) {
  AvoidanceReport report;
  report.end_state = classify_end_state(demolishing);
  const EndStateClass& cls = report.end_state;
  if (cls.degenerate || cls.kind == EndStateKind::kOther) return report;

  if (cls.kind == EndStateKind::kTwoStacks) {
    const Disk n = demolishing.n;
    if (demolishing.source == cls.second_peg) {
      report.holds = false;
      report.witness = AvoidanceWitness{n, cls.second_peg, 0, 0, cls.big_peg};
      return report;
    }
    report.witness = last_violation(demolishing, cls.second_peg, n - 1);
  } else {
    report.witness = last_violation(demolishing, cls.j4_peg, cls.j4);
  }
  report.holds = !report.witness.has_value();
  return report;
}

MoveSequence shorten_violating(const MoveSequence& seq, Disk y, Peg p) {
  AvoidanceReport report;
  try {
    report = check_avoidance(seq);
  } catch (const InvalidArgument& e) {
    throw NotAViolation(std::string("input is not a demolishing phase: ") + e.what());
  }
  const EndStateClass& cls = report.end_state;
  if (cls.kind != EndStateKind::kThreeStacks) {
    throw NotAViolation("shortening applies to three-stack endings only");
  }
  if (y <= cls.j4) {
    throw NotAViolation("disk " + std::to_string(y) + " is not larger than j4=" +
                        std::to_string(cls.j4));
  }
  if (!report.witness || report.witness->disk != y) {
    throw NotAViolation("disk " + std::to_string(y) +
                        " is not the last disk larger than j4 on peg " +
                        std::to_string(cls.j4_peg));
  }
  if (report.witness->departure_peg != p) {
    throw NotAViolation("disk " + std::to_string(y) + " last leaves peg " +
                        std::to_string(cls.j4_peg) + " for peg " +
                        std::to_string(report.witness->departure_peg) + ", not " +
                        std::to_string(p));
  }

  const std::size_t cut = report.witness->departure_index;
  MoveSequence out{seq.n, seq.k, seq.source, {}};
  out.moves.assign(seq.moves.begin(), seq.moves.begin() + static_cast<std::ptrdiff_t>(cut));
  for (std::size_t i = cut + 1; i < seq.moves.size(); ++i) {
    if (seq.moves[i].disk != y) out.moves.push_back(seq.moves[i]);
  }
  const ValidationReport check = validate_sequence(out);
  if (!check.valid) {
    throw Error("shortened sequence is illegal at index " +
                std::to_string(*check.failed_index));
  }
  return out;
}

BottomCostReport check_bottom_costs(const MoveSequence& demolishing) {
  const EndStateClass cls = classify_end_state(demolishing);
  const CostProfile costs = cost_profile(demolishing);
  BottomCostReport report;
  for (Disk d : cls.bottoms()) {
    const std::uint64_t c = costs.at(d);
    report.bottoms.push_back({d, c});
    if (c != 1) report.all_one = false;
  }
  return report;
}

BottomCostSummary summarize_bottom_costs(std::span<const MoveSequence> phases) {
  BottomCostSummary s;
  for (const MoveSequence& phase : phases) {
    ++s.phases;
    if (check_bottom_costs(phase).all_one) ++s.passing;
  }
  s.universal = s.passing == s.phases;
  s.existential = s.passing > 0;
  return s;
}

MoveCount case1_bound(int n, const OptimumLookup& optimum) {
  if (n < 2) throw InvalidArgument("case1_bound needs n >= 2");
  return 1 + optimum(n - 1);
}

CostLedger analytic_ledger(int depth) {
  if (depth < 1) throw InvalidArgument("ledger depth must be at least 1");
  if (depth > 64) throw Overflow("x_t = 2^(t-1) exceeds 64 bits past t = 64");
  CostLedger ledger;
  ledger.provenance = LedgerProvenance::kAnalytic;
  std::uint64_t running = 0;
  for (std::uint64_t t = 1; t <= static_cast<std::uint64_t>(depth); ++t) {
    ledger.x.push_back(MoveCount{1} << (t - 1));
    const std::uint64_t mult = t == 1 ? 3 : t + 1;
    ledger.multiplicity.push_back(mult);
    running += mult;
    ledger.cumulative.push_back(running);
    ledger.transferable.push_back(t * (t + 1) / 2);
    ledger.transferable_3peg.push_back(t);
    ledger.increment.push_back(t);
  }
  return ledger;
}

int required_depth(int n_max) {
  int depth = 1;
  while (static_cast<long long>(depth) * (depth + 1) / 2 <= n_max) ++depth;
  return depth;
}

CostLedger empirical_ledger(std::span<const MoveSequence> phases) {
  std::map<std::uint64_t, std::uint64_t> best;
  for (const MoveSequence& phase : phases) {
    std::map<std::uint64_t, std::uint64_t> tally;
    for (std::uint64_t c : cost_profile(phase).counts) {
      if (c > 0) ++tally[c];
    }
    for (const auto& [cost, count] : tally) {
      best[cost] = std::max(best[cost], count);
    }
  }
  CostLedger ledger;
  ledger.provenance = LedgerProvenance::kEmpirical;
  std::uint64_t running = 0;
  for (const auto& [cost, count] : best) {
    ledger.x.push_back(cost);
    ledger.multiplicity.push_back(count);
    running += count;
    ledger.cumulative.push_back(running);
  }
  return ledger;
}

std::vector<LedgerDiscrepancy> compare_ledgers(const CostLedger& analytic,
                                               const CostLedger& empirical) {
  std::vector<LedgerDiscrepancy> out;
  const int depth = std::min(analytic.depth(), empirical.depth());
  for (int t = 0; t < depth; ++t) {
    if (analytic.x[t] != empirical.x[t]) {
      out.push_back({t + 1, "x", analytic.x[t], empirical.x[t]});
    }
    if (analytic.multiplicity[t] != empirical.multiplicity[t]) {
      out.push_back({t + 1, "M", analytic.multiplicity[t], empirical.multiplicity[t]});
    }
  }
  return out;
}

void check_growth(const CostLedger& ledger) {
  for (int t = 1; t < ledger.depth(); ++t) {
    if (ledger.x[t] / 2 < ledger.x[t - 1]) {
      throw InvalidArgument("ledger violates x_t >= 2 x_(t-1) at t=" +
                            std::to_string(t + 1));
    }
  }
}

namespace {

MoveCount checked_mul(MoveCount a, MoveCount b) {
  MoveCount out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("bound overflows 64 bits");
  return out;
}

MoveCount checked_add(MoveCount a, MoveCount b) {
  MoveCount out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("bound overflows 64 bits");
  return out;
}

// Largest i with prefix(i) <= n, where prefix(0) = 0, plus the remainder.
// Needs level i + 1 to exist so the remainder is bounded.
std::pair<int, std::uint64_t> decompose(int n, const std::vector<std::uint64_t>& parts,
                                        const char* what) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InvalidArgument(std::string(what) + " has a zero entry");
    if (sum + parts[i] > static_cast<std::uint64_t>(n)) {
      return {static_cast<int>(i), static_cast<std::uint64_t>(n) - sum};
    }
    sum += parts[i];
  }
  throw LedgerTooShallow(std::string(what) + " of depth " + std::to_string(parts.size()) +
                         " cannot decompose n=" + std::to_string(n));
}

}  // namespace

MoveCount bound_formula_1(int n, const CostLedger& ledger) {
  if (n < 0) throw InvalidArgument("disk count must be non-negative");
  check_growth(ledger);
  const auto [i, r] = decompose(n, ledger.multiplicity, "M");
  const auto& x = ledger.x;
  const auto& mult = ledger.multiplicity;
  if (i == 0) {
    if (r == 0) return 0;
    return 1 + checked_mul(r - 1, 2 * x[0]);
  }
  MoveCount total = 1 + checked_mul(mult[0] - 1, 2 * x[0]);
  for (int t = 2; t <= i; ++t) {
    total = checked_add(total, checked_mul(mult[t - 1], checked_mul(2, x[t - 1])));
  }
  return checked_add(total, checked_mul(r, checked_mul(2, x[i])));
}

MoveCount bound_formula_2(int n, const CostLedger& ledger) {
  if (n < 0) throw InvalidArgument("disk count must be non-negative");
  if (ledger.increment.size() != ledger.x.size()) {
    throw LedgerTooShallow("ledger carries no m(x_t) values");
  }
  check_growth(ledger);
  const auto [i, r] = decompose(n, ledger.increment, "m");
  const auto& x = ledger.x;
  const auto& m = ledger.increment;
  if (i == 0) return 0;
  MoveCount total = 1;
  if (i >= 2) total = checked_add(total, checked_mul(m[1], 2 * x[0]));
  for (int t = 3; t <= i; ++t) {
    total = checked_add(total, checked_mul(m[t - 1], checked_mul(2, x[t - 2])));
  }
  return checked_add(total, checked_mul(r, checked_mul(2, x[i - 1])));
}

std::vector<EqualityRow> equality_report(int n_lo, int n_hi, const CostLedger& ledger,
                                         const std::map<int, MoveCount>& exact) {
  std::vector<EqualityRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    EqualityRow row;
    row.n = n;
    row.stewart = stewart_count(n);
    row.bound1 = bound_formula_1(n, ledger);
    row.bound2 = bound_formula_2(n, ledger);
    if (auto it = exact.find(n); it != exact.end()) row.exact = it->second;
    row.equal = row.stewart == row.bound1 && row.stewart == row.bound2 &&
                (!row.exact || *row.exact == row.stewart);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hanoi
