#include "hanoi/search.hpp"

#include <algorithm>
#include <functional>

namespace hanoi {

std::string to_string(SearchMethod method) {
  return method == SearchMethod::kForward ? "forward" : "bidirectional";
}

SearchMethod parse_search_method(const std::string& text) {
  if (text == "forward") return SearchMethod::kForward;
  if (text == "bidirectional") return SearchMethod::kBidirectional;
  throw InvalidArgument("unknown search method '" + text + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& budget)
      : budget_(budget), start_(Clock::now()) {}

  void reserve(std::uint64_t bytes) {
    reserved_ += bytes;
    if (budget_.max_memory_bytes != 0 && reserved_ > budget_.max_memory_bytes) {
      throw BudgetExceeded(0, 0,
                           "search needs " + std::to_string(reserved_) +
                               " bytes, budget is " +
                               std::to_string(budget_.max_memory_bytes));
    }
  }

  void check(std::uint64_t explored, std::uint64_t lower_bound) {
    if (budget_.max_states != 0 && explored > budget_.max_states) {
      throw BudgetExceeded(lower_bound, explored,
                           "state budget of " + std::to_string(budget_.max_states) +
                               " exhausted");
    }
    if (budget_.max_seconds > 0.0 && (++ticks_ & 0x3FFF) == 0 &&
        elapsed().count() > budget_.max_seconds) {
      throw BudgetExceeded(lower_bound, explored, "time budget exhausted");
    }
  }

  std::chrono::duration<double> elapsed() const { return Clock::now() - start_; }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t reserved_ = 0;
  std::uint64_t ticks_ = 0;
};

void check_pegs(int k, Peg source, Peg target) {
  if (source < 0 || source >= k || target < 0 || target >= k) {
    throw InvalidArgument("peg out of range");
  }
  if (source == target) throw InvalidArgument("source and target coincide");
}

struct Folding {
  const PackedCodec* codec;
  Peg source;
  Peg target;
  bool enabled;

  PackedState operator()(PackedState code) const {
    return enabled ? canonicalize(code, *codec, source, target) : code;
  }
};

MoveCount search_forward(const PackedCodec& codec, Peg source, Peg target,
                         bool any_target, const Folding& fold, BudgetGuard& guard,
                         std::uint64_t& explored) {
  std::vector<PackedState> goals;
  if (any_target) {
    for (Peg p = 0; p < codec.pegs(); ++p) {
      if (p != source) goals.push_back(fold(codec.all_on(p)));
    }
  } else {
    goals.push_back(fold(codec.all_on(target)));
  }
  auto is_goal = [&](PackedState c) {
    return std::find(goals.begin(), goals.end(), c) != goals.end();
  };

  const PackedState start = fold(codec.all_on(source));
  if (is_goal(start)) return 0;

  guard.reserve(codec.code_space() / 8);
  VisitedBitmap visited(codec.code_space());
  visited.test_and_set(start);
  explored = 1;

  std::vector<PackedState> frontier{start};
  std::vector<PackedState> next;
  MoveCount depth = 0;
  while (!frontier.empty()) {
    next.clear();
    bool found = false;
    for (PackedState u : frontier) {
      codec.for_each_successor(u, [&](PackedState v, const Move&) {
        if (found) return;
        const PackedState c = fold(v);
        if (visited.test_and_set(c)) return;
        ++explored;
        if (is_goal(c)) {
          found = true;
          return;
        }
        next.push_back(c);
      });
      if (found) return depth + 1;
      guard.check(explored, depth + 1);
    }
    ++depth;
    frontier.swap(next);
  }
  throw Error("target unreachable");
}

// Alternates full levels from both ends, always growing the smaller
// frontier. While the visited sets are disjoint every path of length
// <= a + b is ruled out, so the first level that produces a shared state
// fixes the optimum at a + b + 1.
MoveCount search_bidirectional(const PackedCodec& codec, Peg source, Peg target,
                               const Folding& fold, BudgetGuard& guard,
                               std::uint64_t& explored) {
  const PackedState start = fold(codec.all_on(source));
  const PackedState goal = fold(codec.all_on(target));
  if (start == goal) return 0;

  guard.reserve(2 * (codec.code_space() / 8));
  VisitedBitmap seen[2] = {VisitedBitmap(codec.code_space()),
                           VisitedBitmap(codec.code_space())};
  std::vector<PackedState> frontier[2] = {{start}, {goal}};
  MoveCount depth[2] = {0, 0};
  seen[0].test_and_set(start);
  seen[1].test_and_set(goal);
  explored = 2;

  std::vector<PackedState> next;
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    VisitedBitmap& own = seen[side];
    const VisitedBitmap& other = seen[1 - side];
    next.clear();
    bool met = false;
    for (PackedState u : frontier[side]) {
      codec.for_each_successor(u, [&](PackedState v, const Move&) {
        if (met) return;
        const PackedState c = fold(v);
        if (own.test_and_set(c)) return;
        ++explored;
        if (other.test(c)) {
          met = true;
          return;
        }
        next.push_back(c);
      });
      if (met) return depth[0] + depth[1] + 1;
      guard.check(explored, depth[0] + depth[1] + 1);
    }
    ++depth[side];
    frontier[side].swap(next);
  }
  throw Error("target unreachable");
}

}  // namespace

SearchResult exact_min_moves(int n, int k, Peg source, Peg target,
                             const SearchOptions& options) {
  check_pegs(k, source, target);
  const PackedCodec codec(n, k);
  BudgetGuard guard(options.budget);

  SearchResult result;
  result.n = n;
  result.k = k;
  result.source = source;
  result.target = target;
  result.any_target = options.any_target;
  result.method = options.any_target ? SearchMethod::kForward : options.method;
  // With a free target the two auxiliaries are still interchangeable: the
  // goal set maps onto itself.
  result.symmetry = options.use_symmetry && k == 4;
  const Folding fold{&codec, source, target, result.symmetry};

  if (result.method == SearchMethod::kForward) {
    result.optimum = search_forward(codec, source, target, options.any_target,
                                    fold, guard, result.explored);
  } else {
    result.optimum =
        search_bidirectional(codec, source, target, fold, guard, result.explored);
  }
  result.elapsed = guard.elapsed();
  return result;
}

std::uint64_t DistanceTable::reached() const {
  return static_cast<std::uint64_t>(
      std::count_if(dist_.begin(), dist_.end(),
                    [](std::uint16_t d) { return d != kUnreached; }));
}

unsigned DistanceTable::eccentricity() const {
  unsigned best = 0;
  for (std::uint16_t d : dist_) {
    if (d != kUnreached) best = std::max<unsigned>(best, d);
  }
  return best;
}

DistanceTable distance_table(int n, int k, Peg source, const SearchBudget& budget) {
  if (source < 0 || source >= k) throw InvalidArgument("source peg out of range");
  const PackedCodec codec(n, k);
  BudgetGuard guard(budget);
  guard.reserve(codec.code_space() * sizeof(std::uint16_t));

  std::vector<std::uint16_t> dist(codec.code_space(), DistanceTable::kUnreached);
  const PackedState start = codec.all_on(source);
  dist[start] = 0;
  std::uint64_t explored = 1;
  std::vector<PackedState> frontier{start};
  std::vector<PackedState> next;
  std::uint16_t depth = 0;
  while (!frontier.empty()) {
    if (depth + 1 >= DistanceTable::kUnreached) {
      throw Overflow("distances exceed the 16-bit table");
    }
    next.clear();
    for (PackedState u : frontier) {
      codec.for_each_successor(u, [&](PackedState v, const Move&) {
        if (dist[v] != DistanceTable::kUnreached) return;
        dist[v] = static_cast<std::uint16_t>(depth + 1);
        ++explored;
        next.push_back(v);
      });
      guard.check(explored, depth + 1);
    }
    ++depth;
    frontier.swap(next);
  }
  return DistanceTable(codec, source, std::move(dist));
}

bool ShortestPathDag::on_dag(PackedState code) const {
  const auto f = forward.at(code);
  const auto b = backward.at(code);
  return f && b && *f + *b == optimum;
}

bool ShortestPathDag::on_dag_edge(PackedState from, PackedState to) const {
  const auto f = forward.at(from);
  const auto b = backward.at(to);
  return f && b && *f + 1 + *b == optimum;
}

ShortestPathDag shortest_path_dag(int n, int k, Peg source, Peg target,
                                  const SearchBudget& budget) {
  check_pegs(k, source, target);
  DistanceTable fwd = distance_table(n, k, source, budget);
  DistanceTable bwd = distance_table(n, k, target, budget);
  const auto opt = fwd.at(fwd.codec().all_on(target));
  if (!opt) throw Error("target unreachable");
  return ShortestPathDag{std::move(fwd), std::move(bwd), target, *opt};
}

std::uint64_t count_shortest_paths(const ShortestPathDag& dag) {
  const PackedCodec& codec = dag.forward.codec();
  std::vector<std::vector<PackedState>> by_remaining(dag.optimum + 1);
  for (PackedState c = 0; c < codec.code_space(); ++c) {
    if (dag.on_dag(c)) by_remaining[*dag.backward.at(c)].push_back(c);
  }
  std::vector<std::uint64_t> paths(codec.code_space(), 0);
  for (std::size_t d = 0; d < by_remaining.size(); ++d) {
    for (PackedState u : by_remaining[d]) {
      if (d == 0) {
        paths[u] = 1;
        continue;
      }
      std::uint64_t total = 0;
      codec.for_each_successor(u, [&](PackedState v, const Move&) {
        if (!dag.on_dag_edge(u, v)) return;
        total = paths[v] > UINT64_MAX - total ? UINT64_MAX : total + paths[v];
      });
      paths[u] = total;
    }
  }
  return paths[codec.all_on(dag.forward.source())];
}

namespace {

void check_enumeration_bound(int n, const EnumerationOptions& options) {
  if (n > options.max_disks) {
    throw InvalidArgument("enumeration is bounded to n <= " +
                          std::to_string(options.max_disks) + ", got n=" +
                          std::to_string(n));
  }
}

// Depth-first walk of the shortest-path DAG. `stop_at_big` ends a branch at
// the first move of disk n.
Enumeration walk_dag(int n, int k, Peg source, Peg target,
                     const EnumerationOptions& options, bool stop_at_big) {
  check_enumeration_bound(n, options);
  const ShortestPathDag dag = shortest_path_dag(n, k, source, target, options.budget);
  const PackedCodec& codec = dag.forward.codec();
  const PackedState goal = codec.all_on(target);

  Enumeration out;
  out.optimum = dag.optimum;
  std::vector<Move> path;
  std::function<void(PackedState)> visit = [&](PackedState u) {
    if (out.truncated) return;
    if (!stop_at_big && u == goal) {
      if (out.sequences.size() >= options.cap) {
        out.truncated = true;
        return;
      }
      out.sequences.push_back(MoveSequence{n, k, source, path});
      return;
    }
    codec.for_each_successor(u, [&](PackedState v, const Move& m) {
      if (out.truncated || !dag.on_dag_edge(u, v)) return;
      path.push_back(m);
      if (stop_at_big && m.disk == n) {
        if (out.sequences.size() >= options.cap) {
          out.truncated = true;
        } else {
          out.sequences.push_back(MoveSequence{n, k, source, path});
        }
      } else {
        visit(v);
      }
      path.pop_back();
    });
  };
  if (n > 0) {
    visit(codec.all_on(source));
  } else if (!stop_at_big) {
    out.sequences.push_back(MoveSequence{0, k, source, {}});
  }

  std::sort(out.sequences.begin(), out.sequences.end(),
            [](const MoveSequence& a, const MoveSequence& b) { return a.moves < b.moves; });
  return out;
}

}  // namespace

Enumeration enumerate_minimal_solutions(int n, int k, Peg source, Peg target,
                                        const EnumerationOptions& options) {
  return walk_dag(n, k, source, target, options, false);
}

Enumeration enumerate_minimal_demolishing(int n, int k, Peg source, Peg target,
                                          const EnumerationOptions& options) {
  return walk_dag(n, k, source, target, options, true);
}

}  // namespace hanoi
