#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hanoi/sequence.hpp"

namespace hanoi {

using MoveCount = std::uint64_t;

// Largest m with j > m(m+1)/2. Throws InvalidArgument for j = 0.
int f4_exponent(std::uint64_t j);

// e(1..j_max); entry j - 1 holds f4_exponent(j).
std::vector<int> exponent_table(std::uint64_t j_max);

// Sum over j = 1..n of 2^f4_exponent(j). Throws Overflow past 64 bits.
MoveCount stewart_count(int n);

struct SplitChoice {
  int n = 0;
  int k = 0;
  // Bottom disks moved with one peg fewer.
  int t = 0;
  MoveCount cost = 0;
};

// Memoized Frame-Stewart recursion for every disk count up to n_max and peg
// count 3..k_max. Entries that do not fit 64 bits are stored as nullopt.
class FrameStewartTable {
 public:
  FrameStewartTable(int n_max, int k_max);

  int max_disks() const noexcept { return n_max_; }
  int max_pegs() const noexcept { return k_max_; }

  std::optional<MoveCount> count(int n, int k) const;
  // Smallest minimizing t; 0 when k == 3 or n == 0.
  int split(int n, int k) const;

 private:
  std::size_t index(int n, int k) const;

  int n_max_;
  int k_max_;
  std::vector<std::optional<MoveCount>> counts_;
  std::vector<int> splits_;
};

// 2^n - 1 for k = 3, otherwise min over 1 <= t <= n of
// 2 FS(n - t, k) + FS(t, k - 1).
MoveCount frame_stewart_count(int n, int k);

SplitChoice optimal_split(int n, int k);

// Frame-Stewart transfer: park the top n - t disks on the lowest free spare
// peg, move the bottom t disks with the remaining k - 1 pegs, then bring the
// parked disks over.
MoveSequence generate_solution(int n, int k, Peg source, Peg target);

// A transfer whose reconstructing phase mirrors its demolishing phase.
// Throws SymmetryUnavailable if the generated demolishing phase is not
// (count + 1) / 2 long.
MoveSequence generate_symmetric_solution(int n, Peg source, Peg target,
                                         int k = kDefaultPegs);

}  // namespace hanoi
