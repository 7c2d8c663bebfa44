#pragma once

// Independent reference implementations used to check the library. They
// share no code with it beyond the plain Move struct.

#include <climits>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hanoi/sequence.hpp"

namespace oracle {

using Pegs = std::vector<std::vector<int>>;  // bottom -> top

inline Pegs tower(int n, int k, int source) {
  Pegs pegs(k);
  for (int d = n; d >= 1; --d) pegs[source].push_back(d);
  return pegs;
}

// Applies moves on explicit stacks. Returns nullopt on the first illegal one.
inline std::optional<Pegs> replay(const hanoi::MoveSequence& seq) {
  Pegs pegs = tower(seq.n, seq.k, seq.source);
  for (const hanoi::Move& m : seq.moves) {
    if (m.from < 0 || m.from >= seq.k || m.to < 0 || m.to >= seq.k || m.from == m.to)
      return std::nullopt;
    auto& a = pegs[m.from];
    auto& b = pegs[m.to];
    if (a.empty() || a.back() != m.disk) return std::nullopt;
    if (!b.empty() && b.back() < m.disk) return std::nullopt;
    a.pop_back();
    b.push_back(m.disk);
  }
  return pegs;
}

inline bool transfers_to(const hanoi::MoveSequence& seq, int target) {
  auto end = replay(seq);
  return end && static_cast<int>((*end)[target].size()) == seq.n;
}

// Disk-relative record of each move, INT_MAX for the floor.
struct Triple {
  int disk, was_on, lands_on;
  bool operator==(const Triple&) const = default;
};

inline std::vector<Triple> triples(const hanoi::MoveSequence& seq) {
  Pegs pegs = tower(seq.n, seq.k, seq.source);
  std::vector<Triple> out;
  for (const hanoi::Move& m : seq.moves) {
    auto& a = pegs[m.from];
    auto& b = pegs[m.to];
    a.pop_back();
    out.push_back({m.disk, a.empty() ? INT_MAX : a.back(), b.empty() ? INT_MAX : b.back()});
    b.push_back(m.disk);
  }
  return out;
}

// Breadth-first search over explicit peg assignments.
inline int bfs_optimum(int n, int k, int source, int target) {
  using Key = std::vector<int>;
  Key start(n, source), goal(n, target);
  if (start == goal) return 0;
  std::map<Key, int> dist{{start, 0}};
  std::deque<Key> queue{start};
  while (!queue.empty()) {
    Key s = queue.front();
    queue.pop_front();
    std::vector<int> top(k, INT_MAX);
    for (int d = n; d >= 1; --d) top[s[d - 1]] = d;
    for (int p = 0; p < k; ++p) {
      if (top[p] == INT_MAX) continue;
      for (int q = 0; q < k; ++q) {
        if (q == p || top[q] < top[p]) continue;
        Key t = s;
        t[top[p] - 1] = q;
        if (dist.count(t)) continue;
        dist[t] = dist[s] + 1;
        if (t == goal) return dist[t];
        queue.push_back(t);
      }
    }
  }
  return -1;
}

// Number of shortest source-to-target paths, by dynamic programming over
// breadth-first layers.
inline std::uint64_t count_optimal_paths(int n, int k, int source, int target) {
  using Key = std::vector<int>;
  Key start(n, source), goal(n, target);
  std::map<Key, int> dist{{start, 0}};
  std::map<Key, std::uint64_t> ways{{start, 1}};
  std::deque<Key> queue{start};
  while (!queue.empty()) {
    Key s = queue.front();
    queue.pop_front();
    if (s == goal) break;
    std::vector<int> top(k, INT_MAX);
    for (int d = n; d >= 1; --d) top[s[d - 1]] = d;
    for (int p = 0; p < k; ++p) {
      if (top[p] == INT_MAX) continue;
      for (int q = 0; q < k; ++q) {
        if (q == p || top[q] < top[p]) continue;
        Key t = s;
        t[top[p] - 1] = q;
        auto it = dist.find(t);
        if (it == dist.end()) {
          dist[t] = dist[s] + 1;
          ways[t] = ways[s];
          queue.push_back(t);
        } else if (it->second == dist[s] + 1) {
          ways[t] += ways[s];
        }
      }
    }
  }
  return ways[goal];
}

inline std::uint64_t frame_stewart(int n, int k) {
  static std::map<std::pair<int, int>, std::uint64_t> memo;
  if (n == 0) return 0;
  if (k == 3) return (std::uint64_t{1} << n) - 1;
  if (n == 1) return 1;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  std::uint64_t best = UINT64_MAX;
  for (int t = 1; t <= n; ++t) {
    const std::uint64_t c = 2 * frame_stewart(n - t, k) + frame_stewart(t, k - 1);
    if (c < best) best = c;
  }
  return memo[{n, k}] = best;
}

// Walks the triangular blocks: m + 1 disks cost 2^m each.
inline std::uint64_t stewart(int n) {
  std::uint64_t total = 0;
  int left = n;
  for (int m = 0; left > 0; ++m) {
    const int take = std::min(left, m + 1);
    total += static_cast<std::uint64_t>(take) << m;
    left -= take;
  }
  return total;
}

// Random legal walk of `len` moves from the tower on `source`.
inline hanoi::MoveSequence random_walk(std::mt19937_64& rng, int n, int k, int source,
                                       std::size_t len) {
  hanoi::MoveSequence seq{n, k, source, {}};
  Pegs pegs = tower(n, k, source);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<hanoi::Move> options;
    for (int p = 0; p < k; ++p) {
      if (pegs[p].empty()) continue;
      for (int q = 0; q < k; ++q) {
        if (q != p && (pegs[q].empty() || pegs[q].back() > pegs[p].back()))
          options.push_back({pegs[p].back(), p, q});
      }
    }
    if (options.empty()) break;
    const hanoi::Move m = options[rng() % options.size()];
    pegs[m.from].pop_back();
    pegs[m.to].push_back(m.disk);
    seq.moves.push_back(m);
  }
  return seq;
}

}  // namespace oracle
