#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hanoi/lemma_lab.hpp"
#include "oracles.hpp"

namespace fixtures {

// Random legal moves of the smaller disks until disk n can leave the source
// for a bare peg, then that move. Returns nullopt if the walk gives up.
inline std::optional<hanoi::MoveSequence> random_phase(std::mt19937_64& rng, int n, int k,
                                                       int max_steps = 400) {
  hanoi::MoveSequence seq{n, k, 0, {}};
  oracle::Pegs pegs = oracle::tower(n, k, 0);
  for (int step = 0; step < max_steps; ++step) {
    if (pegs[0].size() == 1) {
      std::vector<int> bare;
      for (int p = 1; p < k; ++p)
        if (pegs[p].empty()) bare.push_back(p);
      if (!bare.empty() && rng() % 3 == 0) {
        seq.moves.push_back({n, 0, bare[rng() % bare.size()]});
        return seq;
      }
    }
    std::vector<hanoi::Move> options;
    for (int p = 0; p < k; ++p) {
      if (pegs[p].empty() || pegs[p].back() == n) continue;
      for (int q = 0; q < k; ++q) {
        if (q != p && (pegs[q].empty() || pegs[q].back() > pegs[p].back()))
          options.push_back({pegs[p].back(), p, q});
      }
    }
    if (options.empty()) return std::nullopt;
    const hanoi::Move m = options[rng() % options.size()];
    pegs[m.from].pop_back();
    pegs[m.to].push_back(m.disk);
    seq.moves.push_back(m);
  }
  return std::nullopt;
}

struct Violation {
  hanoi::MoveSequence phase;
  hanoi::AvoidanceWitness witness;
};

// Random four-peg demolishing phases (3 <= n <= n_max) that end in three
// stacks and break avoidance: some disk above j4 visits j4's final peg.
inline std::vector<Violation> random_violations(std::mt19937_64& rng, std::size_t count,
                                                int n_max = 6) {
  std::vector<Violation> out;
  while (out.size() < count) {
    const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(n_max - 2));
    auto phase = random_phase(rng, n, 4);
    if (!phase) continue;
    const hanoi::AvoidanceReport r = hanoi::check_avoidance(*phase);
    if (r.holds || r.end_state.kind != hanoi::EndStateKind::kThreeStacks) continue;
    out.push_back({std::move(*phase), *r.witness});
  }
  return out;
}

}  // namespace fixtures
