#include "hanoi/state.hpp"

#include <utility>

namespace hanoi {

std::string to_string(IllegalReason reason) {
  switch (reason) {
    case IllegalReason::kNotOnSourcePeg:
      return "disk is not on the source peg";
    case IllegalReason::kNotTopDisk:
      return "disk is not the top disk of its peg";
    case IllegalReason::kCoversSmallerDisk:
      return "would place a larger disk on a smaller one";
    case IllegalReason::kSamePeg:
      return "source and destination peg coincide";
    case IllegalReason::kOutOfRange:
      return "disk or peg out of range";
  }
  return "unknown";
}

std::string to_string(const Move& move) {
  return "disk " + std::to_string(move.disk) + " " + std::to_string(move.from) +
         "->" + std::to_string(move.to);
}

State State::initial(int n, int k, Peg source) {
  if (k < 3) {
    throw InvalidArgument("peg count must be at least 3, got " +
                          std::to_string(k));
  }
  if (n < 0) {
    throw InvalidArgument("disk count must be non-negative");
  }
  if (source < 0 || source >= k) {
    throw InvalidArgument("source peg " + std::to_string(source) +
                          " out of range for k=" + std::to_string(k));
  }
  return State(k, std::vector<Peg>(static_cast<std::size_t>(n), source));
}

State State::from_pegs(int k, std::vector<Peg> peg_of) {
  if (k < 3) {
    throw InvalidArgument("peg count must be at least 3");
  }
  for (Peg p : peg_of) {
    if (p < 0 || p >= k) {
      throw InvalidArgument("peg " + std::to_string(p) + " out of range");
    }
  }
  return State(k, std::move(peg_of));
}

std::optional<Disk> State::top_disk(Peg peg) const {
  for (std::size_t i = 0; i < peg_of_.size(); ++i) {
    if (peg_of_[i] == peg) return static_cast<Disk>(i + 1);
  }
  return std::nullopt;
}

Disk State::support_of(Disk disk) const {
  const Peg peg = peg_of(disk);
  for (Disk d = disk + 1; d <= disks(); ++d) {
    if (peg_of_[d - 1] == peg) return d;
  }
  return kFloor;
}

Disk State::landing_on(Peg peg) const { return top_disk(peg).value_or(kFloor); }

std::vector<Disk> State::stack(Peg peg) const {
  std::vector<Disk> out;
  for (Disk d = disks(); d >= 1; --d) {
    if (peg_of_[d - 1] == peg) out.push_back(d);
  }
  return out;
}

std::optional<IllegalReason> State::check(const Move& move) const {
  if (move.disk < 1 || move.disk > disks() || move.from < 0 ||
      move.from >= pegs_ || move.to < 0 || move.to >= pegs_) {
    return IllegalReason::kOutOfRange;
  }
  if (move.from == move.to) return IllegalReason::kSamePeg;
  if (peg_of(move.disk) != move.from) return IllegalReason::kNotOnSourcePeg;
  // Smaller disks on the same peg sit above.
  for (Disk d = 1; d < move.disk; ++d) {
    if (peg_of_[d - 1] == move.from) return IllegalReason::kNotTopDisk;
    if (peg_of_[d - 1] == move.to) return IllegalReason::kCoversSmallerDisk;
  }
  return std::nullopt;
}

State State::apply(const Move& move) const {
  State next = *this;
  next.apply_in_place(move);
  return next;
}

void State::apply_in_place(const Move& move) {
  if (auto reason = check(move)) throw IllegalMove(*reason);
  peg_of_[move.disk - 1] = move.to;
}

}  // namespace hanoi
