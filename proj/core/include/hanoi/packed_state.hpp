#pragma once

#include <cstdint>
#include <vector>

#include "hanoi/state.hpp"

namespace hanoi {

// Disk d's peg lives in bits [(d-1)*b, d*b) with b = ceil(log2 k).
using PackedState = std::uint64_t;

class PackedCodec {
 public:
  static constexpr int kMaxPegs = 16;

  PackedCodec(int n, int k);

  int disks() const noexcept { return n_; }
  int pegs() const noexcept { return k_; }
  int bits_per_disk() const noexcept { return bits_; }
  int total_bits() const noexcept { return bits_ * n_; }
  // Number of distinct codes, 2^(b n). Codes with a field >= k are unused.
  std::uint64_t code_space() const noexcept { return std::uint64_t{1} << total_bits(); }

  PackedState pack(const State& state) const;
  State unpack(PackedState code) const;
  PackedState all_on(Peg peg) const;

  Peg peg_of(PackedState code, Disk disk) const noexcept {
    return static_cast<Peg>((code >> shift(disk)) & field_mask_);
  }
  int shift(Disk disk) const noexcept { return (disk - 1) * bits_; }

  PackedState move(PackedState code, Disk disk, Peg from, Peg to) const noexcept {
    return code ^ (static_cast<PackedState>(from ^ to) << shift(disk));
  }

  // True when every field names a real peg.
  bool is_valid(PackedState code) const noexcept;

  // Calls f(next_code, Move) for every legal move out of `code`.
  template <class F>
  void for_each_successor(PackedState code, F&& f) const {
    Disk top[kMaxPegs] = {};
    int found = 0;
    for (Disk d = 1; d <= n_ && found < k_; ++d) {
      const Peg p = peg_of(code, d);
      if (top[p] == 0) {
        top[p] = d;
        ++found;
      }
    }
    for (Peg p = 0; p < k_; ++p) {
      const Disk d = top[p];
      if (d == 0) continue;
      for (Peg q = 0; q < k_; ++q) {
        if (q == p || (top[q] != 0 && top[q] < d)) continue;
        f(move(code, d, p, q), Move{d, p, q});
      }
    }
  }

 private:
  int n_;
  int k_;
  int bits_;
  PackedState field_mask_;
};

// Canonical representative under exchanging the two auxiliary pegs of a
// 4-peg problem with fixed source and target: the smaller of the code and
// its swapped image.
PackedState canonicalize(PackedState code, const PackedCodec& codec, Peg source,
                         Peg target);

// One bit per packed code.
class VisitedBitmap {
 public:
  explicit VisitedBitmap(std::uint64_t size) : words_((size + 63) / 64, 0) {}

  bool test(std::uint64_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  // Sets bit i; returns its previous value.
  bool test_and_set(std::uint64_t i) noexcept {
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  }
  std::size_t bytes() const noexcept { return words_.size() * sizeof(std::uint64_t); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace hanoi
