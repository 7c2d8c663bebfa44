#include "hanoi/frame_stewart.hpp"

#include <string>

namespace hanoi {

int f4_exponent(std::uint64_t j) {
  if (j == 0) throw InvalidArgument("f4_exponent is defined for j >= 1");
  std::uint64_t m = 0;
  // Triangular numbers grow fast enough that this loop is short.
  while ((m + 1) * (m + 2) / 2 < j) ++m;
  return static_cast<int>(m);
}

std::vector<int> exponent_table(std::uint64_t j_max) {
  std::vector<int> out;
  out.reserve(j_max);
  for (std::uint64_t j = 1; j <= j_max; ++j) out.push_back(f4_exponent(j));
  return out;
}

MoveCount stewart_count(int n) {
  if (n < 0) throw InvalidArgument("disk count must be non-negative");
  MoveCount total = 0;
  for (int j = 1; j <= n; ++j) {
    const int e = f4_exponent(static_cast<std::uint64_t>(j));
    if (e >= 64) throw Overflow("stewart_count overflows at n=" + std::to_string(n));
    const MoveCount term = MoveCount{1} << e;
    if (total > UINT64_MAX - term) {
      throw Overflow("stewart_count overflows at n=" + std::to_string(n));
    }
    total += term;
  }
  return total;
}

namespace {

std::optional<MoveCount> add(std::optional<MoveCount> a,
                             std::optional<MoveCount> b) {
  if (!a || !b || *a > UINT64_MAX - *b) return std::nullopt;
  return *a + *b;
}

}  // namespace

FrameStewartTable::FrameStewartTable(int n_max, int k_max)
    : n_max_(n_max), k_max_(k_max) {
  if (k_max < 3) throw InvalidArgument("peg count must be at least 3");
  if (n_max < 0) throw InvalidArgument("disk count must be non-negative");
  const auto size = static_cast<std::size_t>(n_max + 1) * (k_max - 2);
  counts_.assign(size, std::nullopt);
  splits_.assign(size, 0);

  for (int n = 0; n <= n_max; ++n) {
    if (n < 64) counts_[index(n, 3)] = (MoveCount{1} << n) - 1;
  }
  for (int k = 4; k <= k_max; ++k) {
    counts_[index(0, k)] = 0;
    for (int n = 1; n <= n_max; ++n) {
      std::optional<MoveCount> best;
      int best_t = 0;
      for (int t = 1; t <= n; ++t) {
        const auto top = counts_[index(n - t, k)];
        const auto cand = add(add(top, top), counts_[index(t, k - 1)]);
        if (cand && (!best || *cand < *best)) {
          best = cand;
          best_t = t;
        }
      }
      counts_[index(n, k)] = best;
      splits_[index(n, k)] = best_t;
    }
  }
}

std::size_t FrameStewartTable::index(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 3 || k > k_max_) {
    throw InvalidArgument("(n=" + std::to_string(n) + ", k=" +
                          std::to_string(k) + ") outside the table");
  }
  return static_cast<std::size_t>(k - 3) * (n_max_ + 1) + n;
}

std::optional<MoveCount> FrameStewartTable::count(int n, int k) const {
  return counts_[index(n, k)];
}

int FrameStewartTable::split(int n, int k) const { return splits_[index(n, k)]; }

MoveCount frame_stewart_count(int n, int k) {
  if (k < 3) throw InvalidArgument("peg count must be at least 3");
  const FrameStewartTable table(n, k);
  if (auto c = table.count(n, k)) return *c;
  throw Overflow("Frame-Stewart count for n=" + std::to_string(n) +
                 ", k=" + std::to_string(k) + " exceeds 64 bits");
}

SplitChoice optimal_split(int n, int k) {
  if (n < 1) throw InvalidArgument("optimal_split needs n >= 1");
  if (k < 4) throw InvalidArgument("optimal_split needs k >= 4");
  const FrameStewartTable table(n, k);
  const auto cost = table.count(n, k);
  if (!cost) throw Overflow("split cost exceeds 64 bits");
  return {n, k, table.split(n, k), *cost};
}

namespace {

class Generator {
 public:
  Generator(const FrameStewartTable& table, std::vector<Move>& out)
      : table_(table), out_(out) {}

  // Moves disks lo..hi (a contiguous top run) from src to dst using `pegs`.
  void run(Disk lo, Disk hi, Peg src, Peg dst, const std::vector<Peg>& pegs) {
    if (lo > hi) return;
    if (lo == hi) {
      out_.push_back({hi, src, dst});
      return;
    }
    const Peg spare = lowest_spare(pegs, src, dst);
    const int m = hi - lo + 1;
    if (pegs.size() == 3) {
      run(lo, hi - 1, src, spare, pegs);
      out_.push_back({hi, src, dst});
      run(lo, hi - 1, spare, dst, pegs);
      return;
    }
    const int t = table_.split(m, static_cast<int>(pegs.size()));
    std::vector<Peg> fewer;
    fewer.reserve(pegs.size() - 1);
    for (Peg p : pegs) {
      if (p != spare) fewer.push_back(p);
    }
    run(lo, hi - t, src, spare, pegs);
    run(hi - t + 1, hi, src, dst, fewer);
    run(lo, hi - t, spare, dst, pegs);
  }

 private:
  static Peg lowest_spare(const std::vector<Peg>& pegs, Peg src, Peg dst) {
    for (Peg p : pegs) {
      if (p != src && p != dst) return p;
    }
    throw InvalidArgument("no spare peg");
  }

  const FrameStewartTable& table_;
  std::vector<Move>& out_;
};

}  // namespace

MoveSequence generate_solution(int n, int k, Peg source, Peg target) {
  if (k < 3) throw InvalidArgument("peg count must be at least 3");
  if (n < 0) throw InvalidArgument("disk count must be non-negative");
  if (source < 0 || source >= k || target < 0 || target >= k) {
    throw InvalidArgument("peg out of range");
  }
  if (source == target) throw InvalidArgument("source and target coincide");
  const MoveCount length = frame_stewart_count(n, k);

  MoveSequence seq{n, k, source, {}};
  seq.moves.reserve(length);
  const FrameStewartTable table(n, k);
  std::vector<Peg> pegs(static_cast<std::size_t>(k));
  for (Peg p = 0; p < k; ++p) pegs[p] = p;
  Generator(table, seq.moves).run(1, n, source, target, pegs);
  return seq;
}

MoveSequence generate_symmetric_solution(int n, Peg source, Peg target, int k) {
  if (n < 1) throw InvalidArgument("symmetric solutions need n >= 1");
  const MoveSequence full = generate_solution(n, k, source, target);
  const PhaseSplit split = split_phases(full);
  if (!split.complete || split.demolishing.size() != (full.size() + 1) / 2) {
    throw SymmetryUnavailable(
        "generated demolishing phase has " +
        std::to_string(split.demolishing.size()) + " moves, expected " +
        std::to_string((full.size() + 1) / 2));
  }
  MoveSequence out = mirror(split.demolishing);
  if (mirror_target(split.demolishing) != target) {
    throw SymmetryUnavailable("mirrored transfer does not end on the target");
  }
  return out;
}

}  // namespace hanoi
