#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hanoi/frame_stewart.hpp"
#include "hanoi/sequence.hpp"

namespace hanoi {

// Shape of the position right after a demolishing phase's last move, when
// disk n has just landed on a bare peg.
enum class EndStateKind { kTwoStacks, kThreeStacks, kOther };

std::string to_string(EndStateKind kind);

struct EndStateClass {
  EndStateKind kind = EndStateKind::kOther;
  Disk big_disk = 0;
  Peg big_peg = -1;
  // Disk n - 1 and its peg; 0 / -1 when n == 1.
  Disk second_bottom = 0;
  Peg second_peg = -1;
  // Three stacks only: the bottom of the stack without n or n - 1, and the
  // peg it ends on.
  Disk j4 = 0;
  Peg j4_peg = -1;
  // n == 1: nothing but disk n.
  bool degenerate = false;
  std::string description;

  std::vector<Disk> bottoms() const;
};

// Throws InvalidArgument unless the sequence is legal and ends with the first
// move of disk n.
EndStateClass classify_end_state(const MoveSequence& demolishing);

struct AvoidanceWitness {
  Disk disk = 0;
  Peg critical_peg = -1;
  // Move that last put `disk` on the critical peg, and the move that last
  // took it off again.
  std::size_t arrival_index = 0;
  std::size_t departure_index = 0;
  Peg departure_peg = -1;
};

struct AvoidanceReport {
  bool holds = true;
  std::optional<AvoidanceWitness> witness;
  EndStateClass end_state;
};

// Two stacks: disk n never visits the peg where n - 1 ends. Three stacks: no
// disk larger than j4 ever stands on j4's final peg. The witness is the
// violating disk whose final departure from that peg comes last.
AvoidanceReport check_avoidance(const MoveSequence& demolishing);

// Removes the witness's final departure to `p` and every later move of `y`.
// Moves that landed on the bare critical peg now land on y, and moves that
// landed on y now land on what y stood on; peg by peg nothing else changes.
// Throws NotAViolation when (y, p) is not the last violation on replay.
MoveSequence shorten_violating(const MoveSequence& seq, Disk y, Peg p);

struct BottomCost {
  Disk disk = 0;
  std::uint64_t cost = 0;
};

struct BottomCostReport {
  bool all_one = true;
  std::vector<BottomCost> bottoms;
};

BottomCostReport check_bottom_costs(const MoveSequence& demolishing);

// Both readings of the bottom-cost claim over a set of minimal phases.
struct BottomCostSummary {
  std::size_t phases = 0;
  std::size_t passing = 0;
  // Every phase has unit bottom costs.
  bool universal = true;
  // Some phase has unit bottom costs.
  bool existential = false;
};

BottomCostSummary summarize_bottom_costs(std::span<const MoveSequence> phases);

using OptimumLookup = std::function<MoveCount(int n)>;

// 1 + H(n - 1): the least any strategy that gathers disks 1..n-1 on a single
// stack can spend.
MoveCount case1_bound(int n, const OptimumLookup& optimum);

enum class LedgerProvenance { kAnalytic, kEmpirical };

std::string to_string(LedgerProvenance provenance);

// Per cost level t = 1..depth (index t - 1): the cost x_t, the largest
// number M of disks sharing it in a demolishing phase, and the prefix sums
// L4. Analytic ledgers also carry I4, I3 and m = I4(x_t) - I4(x_{t-1}).
struct CostLedger {
  LedgerProvenance provenance = LedgerProvenance::kAnalytic;
  std::vector<MoveCount> x;
  std::vector<std::uint64_t> multiplicity;
  std::vector<std::uint64_t> cumulative;
  std::vector<std::uint64_t> transferable;
  std::vector<std::uint64_t> transferable_3peg;
  std::vector<std::uint64_t> increment;

  int depth() const noexcept { return static_cast<int>(x.size()); }
};

// x_t = 2^(t-1), I3 = t, I4 = t(t+1)/2, m = t, M(x_1) = 3, M(x_t) = t + 1.
CostLedger analytic_ledger(int depth);

// Depth needed by the bound formulas for every n <= n_max.
int required_depth(int n_max);

// Observed demolishing-phase costs over the given phases, with the largest
// per-phase multiplicity of each.
CostLedger empirical_ledger(std::span<const MoveSequence> phases);

struct LedgerDiscrepancy {
  int level = 0;
  std::string field;
  std::uint64_t analytic = 0;
  std::uint64_t empirical = 0;
};

// Levels where the empirical costs or multiplicities differ from the
// analytic ones, up to the shallower depth.
std::vector<LedgerDiscrepancy> compare_ledgers(const CostLedger& analytic,
                                               const CostLedger& empirical);

// Throws InvalidArgument when some x_t < 2 x_{t-1}.
void check_growth(const CostLedger& ledger);

// n = sum_{t<=i} M(x_t) + r with 0 <= r < M(x_{i+1}); evaluates
// 1 + (M(x_1) - 1) 2 x_1 + sum_{t=2..i} M(x_t) 2 x_t + r 2 x_{i+1}, which is
// 1 + 4 + ... for the analytic ledger.
MoveCount bound_formula_1(int n, const CostLedger& ledger);

// n = sum_{t<=i} m(x_t) + r' with 0 <= r' < m(x_{i+1}); evaluates
// 1 + m(x_2) 2 x_1 + sum_{t=3..i} m(x_t) 2 x_{t-1} + r' 2 x_i.
MoveCount bound_formula_2(int n, const CostLedger& ledger);

struct EqualityRow {
  int n = 0;
  MoveCount stewart = 0;
  MoveCount bound1 = 0;
  MoveCount bound2 = 0;
  std::optional<MoveCount> exact;
  bool equal = false;
};

// One row per n in [n_lo, n_hi]; `exact` supplies searched optima where known.
std::vector<EqualityRow> equality_report(int n_lo, int n_hi, const CostLedger& ledger,
                                         const std::map<int, MoveCount>& exact);

}  // namespace hanoi
