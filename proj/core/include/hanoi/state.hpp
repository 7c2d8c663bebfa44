#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/errors.hpp"

namespace hanoi {

// Disks are numbered 1..n with 1 the smallest. Pegs are numbered 0..k-1.
using Disk = int;
using Peg = int;

// The bare floor of a peg, written "inf" in triple notation. It compares
// larger than every disk, so "disk < support" holds for every legal support.
inline constexpr Disk kFloor = std::numeric_limits<Disk>::max();

inline constexpr int kDefaultPegs = 4;

struct Move {
  Disk disk = 0;
  Peg from = 0;
  Peg to = 0;

  auto operator<=>(const Move&) const = default;
};

std::string to_string(const Move& move);

// Assignment of every disk to a peg. The order on a peg is implied by size.
class State {
 public:
  State() = default;

  // All n disks on `source`. n = 0 gives the empty state. Throws
  // InvalidArgument for k < 3 or a source outside 0..k-1.
  static State initial(int n, int k, Peg source);

  // peg_of[d - 1] is the peg of disk d.
  static State from_pegs(int k, std::vector<Peg> peg_of);

  int disks() const noexcept { return static_cast<int>(peg_of_.size()); }
  int pegs() const noexcept { return pegs_; }

  Peg peg_of(Disk disk) const { return peg_of_.at(disk - 1); }
  const std::vector<Peg>& assignment() const noexcept { return peg_of_; }

  std::optional<Disk> top_disk(Peg peg) const;

  // The disk directly beneath `disk`, or kFloor when it is lowest on its peg.
  Disk support_of(Disk disk) const;

  // The support a disk would land on at `peg`: its top disk, or kFloor.
  Disk landing_on(Peg peg) const;

  // Disks on `peg` from bottom to top.
  std::vector<Disk> stack(Peg peg) const;

  std::optional<IllegalReason> check(const Move& move) const;
  bool is_legal(const Move& move) const { return !check(move).has_value(); }

  // Throws IllegalMove naming the failed clause.
  State apply(const Move& move) const;
  void apply_in_place(const Move& move);

  bool operator==(const State&) const = default;

 private:
  State(int k, std::vector<Peg> peg_of) : pegs_(k), peg_of_(std::move(peg_of)) {}

  int pegs_ = kDefaultPegs;
  std::vector<Peg> peg_of_;
};

}  // namespace hanoi
