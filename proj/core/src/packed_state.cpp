#include "hanoi/packed_state.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hanoi {

PackedCodec::PackedCodec(int n, int k) : n_(n), k_(k) {
  if (k < 3 || k > kMaxPegs) {
    throw InvalidArgument("packed states support 3.." + std::to_string(kMaxPegs) +
                          " pegs, got " + std::to_string(k));
  }
  if (n < 0) throw InvalidArgument("disk count must be non-negative");
  bits_ = std::bit_width(static_cast<unsigned>(k - 1));
  if (bits_ * n > 62) {
    throw InvalidArgument("n=" + std::to_string(n) + " with k=" +
                          std::to_string(k) + " does not fit a 62-bit code");
  }
  field_mask_ = (PackedState{1} << bits_) - 1;
}

PackedState PackedCodec::pack(const State& state) const {
  if (state.disks() != n_ || state.pegs() != k_) {
    throw InvalidArgument("state shape does not match the codec");
  }
  PackedState code = 0;
  for (Disk d = 1; d <= n_; ++d) {
    code |= static_cast<PackedState>(state.peg_of(d)) << shift(d);
  }
  return code;
}

State PackedCodec::unpack(PackedState code) const {
  std::vector<Peg> pegs(static_cast<std::size_t>(n_));
  for (Disk d = 1; d <= n_; ++d) pegs[d - 1] = peg_of(code, d);
  return State::from_pegs(k_, std::move(pegs));
}

PackedState PackedCodec::all_on(Peg peg) const {
  if (peg < 0 || peg >= k_) throw InvalidArgument("peg out of range");
  PackedState code = 0;
  for (Disk d = 1; d <= n_; ++d) code |= static_cast<PackedState>(peg) << shift(d);
  return code;
}

bool PackedCodec::is_valid(PackedState code) const noexcept {
  if (code >> total_bits() != 0) return false;
  for (Disk d = 1; d <= n_; ++d) {
    if (peg_of(code, d) >= k_) return false;
  }
  return true;
}

PackedState canonicalize(PackedState code, const PackedCodec& codec, Peg source,
                         Peg target) {
  if (codec.pegs() != 4) {
    throw InvalidArgument("canonicalize is defined for 4 pegs");
  }
  if (source == target) throw InvalidArgument("source and target coincide");
  Peg aux[2];
  int found = 0;
  for (Peg p = 0; p < 4; ++p) {
    if (p != source && p != target) aux[found++] = p;
  }
  // 01 repeated once per disk field.
  PackedState low = 0;
  for (Disk d = 1; d <= codec.disks(); ++d) low |= PackedState{1} << codec.shift(d);

  auto fields_equal = [&](Peg peg) {
    const PackedState x = code ^ (low * static_cast<PackedState>(peg));
    return ~(x | (x >> 1)) & low;
  };
  const PackedState hit = fields_equal(aux[0]) | fields_equal(aux[1]);
  const PackedState swapped = code ^ (hit * static_cast<PackedState>(aux[0] ^ aux[1]));
  return std::min(code, swapped);
}

}  // namespace hanoi
