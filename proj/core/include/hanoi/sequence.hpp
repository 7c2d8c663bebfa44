#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hanoi/state.hpp"

namespace hanoi {

// An ordered list of peg-level moves starting from all disks on `source`.
struct MoveSequence {
  int n = 0;
  int k = kDefaultPegs;
  Peg source = 0;
  std::vector<Move> moves;

  std::size_t size() const noexcept { return moves.size(); }
  bool empty() const noexcept { return moves.empty(); }
  State initial_state() const { return State::initial(n, k, source); }

  bool operator==(const MoveSequence&) const = default;
};

struct ValidationReport {
  bool valid = true;
  std::size_t length = 0;
  // Set on success.
  std::optional<State> final_state;
  // Set on failure: index of the first illegal move and why.
  std::optional<std::size_t> failed_index;
  std::optional<IllegalReason> reason;
};

ValidationReport validate_sequence(const MoveSequence& seq);

// Replays the sequence; throws IllegalMove at the first illegal step.
State final_state(const MoveSequence& seq);

// True when the sequence ends with every disk on `target` and target differs
// from the source. An invalid sequence is never a transfer.
bool is_full_transfer(const MoveSequence& seq, Peg target);

// Disk-relative record of one move: `disk` leaves `was_on` and lands on
// `lands_on`. Either support may be kFloor.
struct TripleMove {
  Disk disk = 0;
  Disk was_on = kFloor;
  Disk lands_on = kFloor;

  auto operator<=>(const TripleMove&) const = default;
};

std::vector<TripleMove> encode_triples(const MoveSequence& seq);

// Realizes triples as peg-level moves. A landing on the floor goes to the
// lowest-indexed bare peg. Throws Unrealizable at the first step with no
// legal realization.
MoveSequence decode_triples(std::span<const TripleMove> triples, int n, int k,
                            Peg source);

struct PhaseSplit {
  MoveSequence demolishing;
  MoveSequence reconstructing;
  // False when disk n never moves; then `demolishing` holds everything.
  bool complete = false;
};

PhaseSplit split_phases(const MoveSequence& seq);

// Extends a demolishing phase of length l to a full transfer of length
// 2l - 1. Move l + u replays move l - u backwards with the source peg and
// the big disk's landing peg exchanged, which in triple form swaps the two
// supports. Throws InvalidArgument unless the last move is disk n's first.
MoveSequence mirror(const MoveSequence& demolishing);

// Peg the mirrored transfer ends on: where disk n lands.
Peg mirror_target(const MoveSequence& demolishing);

struct CostProfile {
  // counts[d - 1] is the number of moves of disk d.
  std::vector<std::uint64_t> counts;

  std::uint64_t at(Disk disk) const { return counts.at(disk - 1); }
  std::uint64_t total() const;
};

CostProfile cost_profile(const MoveSequence& seq);

// Index of the first move of disk j, the instant it is freed.
std::optional<std::size_t> first_freed_index(const MoveSequence& seq, Disk j);

}  // namespace hanoi
