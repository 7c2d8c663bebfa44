#include "hanoi/sequence.hpp"

#include <numeric>
#include <string>

namespace hanoi {

ValidationReport validate_sequence(const MoveSequence& seq) {
  ValidationReport report;
  report.length = seq.size();
  State state = seq.initial_state();
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    if (auto reason = state.check(seq.moves[i])) {
      report.valid = false;
      report.failed_index = i;
      report.reason = reason;
      return report;
    }
    state.apply_in_place(seq.moves[i]);
  }
  report.final_state = std::move(state);
  return report;
}

State final_state(const MoveSequence& seq) {
  State state = seq.initial_state();
  for (const Move& m : seq.moves) state.apply_in_place(m);
  return state;
}

bool is_full_transfer(const MoveSequence& seq, Peg target) {
  if (target == seq.source || target < 0 || target >= seq.k) return false;
  const ValidationReport report = validate_sequence(seq);
  if (!report.valid) return false;
  for (Peg p : report.final_state->assignment()) {
    if (p != target) return false;
  }
  return true;
}

std::vector<TripleMove> encode_triples(const MoveSequence& seq) {
  std::vector<TripleMove> out;
  out.reserve(seq.size());
  State state = seq.initial_state();
  for (const Move& m : seq.moves) {
    if (auto reason = state.check(m)) throw IllegalMove(*reason);
    out.push_back({m.disk, state.support_of(m.disk), state.landing_on(m.to)});
    state.apply_in_place(m);
  }
  return out;
}

namespace {

bool valid_support(Disk support, int n) {
  return support == kFloor || (support >= 1 && support <= n);
}

}  // namespace

MoveSequence decode_triples(std::span<const TripleMove> triples, int n, int k,
                            Peg source) {
  MoveSequence seq{n, k, source, {}};
  State state = State::initial(n, k, source);
  seq.moves.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const TripleMove& t = triples[i];
    if (t.disk < 1 || t.disk > n || !valid_support(t.was_on, n) ||
        !valid_support(t.lands_on, n)) {
      throw Unrealizable(i, "disk out of range");
    }
    if (t.was_on <= t.disk || t.lands_on <= t.disk) {
      throw Unrealizable(i, "supports must be larger than the moving disk");
    }
    const Peg from = state.peg_of(t.disk);
    if (state.top_disk(from) != t.disk) {
      throw Unrealizable(i, "disk " + std::to_string(t.disk) + " is covered");
    }
    if (state.support_of(t.disk) != t.was_on) {
      throw Unrealizable(i, "disk " + std::to_string(t.disk) +
                                " does not sit on the stated support");
    }
    Peg to = -1;
    if (t.lands_on == kFloor) {
      for (Peg p = 0; p < k; ++p) {
        if (p != from && !state.top_disk(p)) {
          to = p;
          break;
        }
      }
      if (to < 0) throw Unrealizable(i, "no bare peg available");
    } else {
      to = state.peg_of(t.lands_on);
      if (to == from || state.top_disk(to) != t.lands_on) {
        throw Unrealizable(i, "landing disk " + std::to_string(t.lands_on) +
                                  " is not an exposed top");
      }
    }
    const Move move{t.disk, from, to};
    state.apply_in_place(move);
    seq.moves.push_back(move);
  }
  return seq;
}

PhaseSplit split_phases(const MoveSequence& seq) {
  PhaseSplit split;
  split.demolishing = MoveSequence{seq.n, seq.k, seq.source, {}};
  split.reconstructing = split.demolishing;
  auto big = seq.moves.end();
  if (seq.n > 0) {
    for (auto it = seq.moves.begin(); it != seq.moves.end(); ++it) {
      if (it->disk == seq.n) {
        big = it;
        break;
      }
    }
  }
  if (big == seq.moves.end()) {
    split.demolishing.moves = seq.moves;
    split.complete = false;
    return split;
  }
  split.demolishing.moves.assign(seq.moves.begin(), big + 1);
  split.reconstructing.moves.assign(big + 1, seq.moves.end());
  split.complete = true;
  return split;
}

namespace {

void require_demolishing(const MoveSequence& d) {
  if (d.empty() || d.moves.back().disk != d.n) {
    throw InvalidArgument("demolishing phase must end with a move of disk " +
                          std::to_string(d.n));
  }
  for (std::size_t i = 0; i + 1 < d.moves.size(); ++i) {
    if (d.moves[i].disk == d.n) {
      throw InvalidArgument("disk " + std::to_string(d.n) +
                            " moves before the end of the demolishing phase");
    }
  }
  const ValidationReport report = validate_sequence(d);
  if (!report.valid) {
    throw InvalidArgument("demolishing phase is illegal at index " +
                          std::to_string(*report.failed_index));
  }
}

}  // namespace

Peg mirror_target(const MoveSequence& demolishing) {
  require_demolishing(demolishing);
  return demolishing.moves.back().to;
}

MoveSequence mirror(const MoveSequence& demolishing) {
  require_demolishing(demolishing);
  const Peg source = demolishing.source;
  const Peg landing = demolishing.moves.back().to;
  auto swap_ends = [&](Peg p) {
    if (p == source) return landing;
    if (p == landing) return source;
    return p;
  };

  MoveSequence out = demolishing;
  const std::size_t l = demolishing.size();
  out.moves.reserve(2 * l - 1);
  for (std::size_t u = 1; u < l; ++u) {
    const Move& m = demolishing.moves[l - 1 - u];
    out.moves.push_back({m.disk, swap_ends(m.to), swap_ends(m.from)});
  }
  return out;
}

std::uint64_t CostProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

CostProfile cost_profile(const MoveSequence& seq) {
  CostProfile profile;
  profile.counts.assign(static_cast<std::size_t>(seq.n), 0);
  for (const Move& m : seq.moves) {
    if (m.disk < 1 || m.disk > seq.n) {
      throw InvalidArgument("move names disk " + std::to_string(m.disk) +
                            " outside 1.." + std::to_string(seq.n));
    }
    ++profile.counts[m.disk - 1];
  }
  return profile;
}

std::optional<std::size_t> first_freed_index(const MoveSequence& seq, Disk j) {
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    if (seq.moves[i].disk == j) return i;
  }
  return std::nullopt;
}

}  // namespace hanoi
