#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/frame_stewart.hpp"
#include "hanoi/packed_state.hpp"
#include "hanoi/sequence.hpp"

namespace hanoi {

enum class SearchMethod { kForward, kBidirectional };

std::string to_string(SearchMethod method);
SearchMethod parse_search_method(const std::string& text);

struct SearchBudget {
  // 0 means unlimited.
  std::uint64_t max_states = 0;
  double max_seconds = 0.0;
  // Cap on visited bitmaps and distance arrays.
  std::uint64_t max_memory_bytes = std::uint64_t{1} << 30;
};

struct SearchOptions {
  SearchMethod method = SearchMethod::kBidirectional;
  // Fold the two auxiliary pegs together (4 pegs only).
  bool use_symmetry = true;
  // Minimum over every non-source target instead of the given one. Always
  // runs forward.
  bool any_target = false;
  SearchBudget budget;
};

struct SearchResult {
  int n = 0;
  int k = kDefaultPegs;
  Peg source = 0;
  Peg target = 1;
  MoveCount optimum = 0;
  std::uint64_t explored = 0;
  std::chrono::duration<double> elapsed{0};
  SearchMethod method = SearchMethod::kBidirectional;
  bool symmetry = false;
  bool any_target = false;
};

// True optimum by breadth-first search over packed states with visited
// bitmaps. Throws BudgetExceeded carrying the best lower bound reached.
SearchResult exact_min_moves(int n, int k, Peg source, Peg target,
                             const SearchOptions& options = {});

// Forward BFS distances from all-on-source to every state.
class DistanceTable {
 public:
  static constexpr std::uint16_t kUnreached = 0xFFFF;

  DistanceTable(PackedCodec codec, Peg source, std::vector<std::uint16_t> dist)
      : codec_(codec), source_(source), dist_(std::move(dist)) {}

  const PackedCodec& codec() const noexcept { return codec_; }
  Peg source() const noexcept { return source_; }

  std::optional<unsigned> at(PackedState code) const {
    const std::uint16_t d = dist_.at(code);
    if (d == kUnreached) return std::nullopt;
    return d;
  }
  std::optional<unsigned> distance(const State& state) const {
    return at(codec_.pack(state));
  }
  std::uint64_t reached() const;
  unsigned eccentricity() const;

 private:
  PackedCodec codec_;
  Peg source_;
  std::vector<std::uint16_t> dist_;
};

DistanceTable distance_table(int n, int k, Peg source,
                             const SearchBudget& budget = {});

// Forward and backward distance tables; an edge u -> v lies on a shortest
// source-to-target path iff d_fwd(u) + 1 + d_bwd(v) == optimum.
struct ShortestPathDag {
  DistanceTable forward;
  DistanceTable backward;
  Peg target = 1;
  MoveCount optimum = 0;

  bool on_dag(PackedState code) const;
  bool on_dag_edge(PackedState from, PackedState to) const;
};

ShortestPathDag shortest_path_dag(int n, int k, Peg source, Peg target,
                                  const SearchBudget& budget = {});

// Number of shortest source-to-target paths, saturating at UINT64_MAX.
std::uint64_t count_shortest_paths(const ShortestPathDag& dag);

struct EnumerationOptions {
  int max_disks = 6;
  std::size_t cap = 1'000'000;
  SearchBudget budget;
};

struct Enumeration {
  MoveCount optimum = 0;
  // Sorted lexicographically by their move lists.
  std::vector<MoveSequence> sequences;
  bool truncated = false;
};

Enumeration enumerate_minimal_solutions(int n, int k, Peg source, Peg target,
                                        const EnumerationOptions& options = {});

// Distinct prefixes, through the first move of disk n, of minimal solutions.
Enumeration enumerate_minimal_demolishing(int n, int k, Peg source, Peg target,
                                          const EnumerationOptions& options = {});

}  // namespace hanoi
