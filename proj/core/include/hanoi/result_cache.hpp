#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hanoi/search.hpp"

namespace hanoi {

// Persisted optima for one peg count. On disk:
//
//   hanoi-cache 1 k=<k>
//   <n> <optimum> <method> <checksum>
//   ...
//
// The checksum is FNV-1a 64 over "k n optimum method" and is written in hex.
struct CacheEntry {
  MoveCount optimum = 0;
  SearchMethod method = SearchMethod::kBidirectional;
};

class ResultCache {
 public:
  static constexpr int kVersion = 1;

  explicit ResultCache(int k = kDefaultPegs) : k_(k) {}

  int pegs() const noexcept { return k_; }
  const std::map<int, CacheEntry>& entries() const noexcept { return entries_; }

  std::optional<CacheEntry> find(int n) const;
  void store(int n, const CacheEntry& entry) { entries_[n] = entry; }
  void store(const SearchResult& result);

  std::string serialize() const;
  // Throws CorruptCache on a bad magic, version, or checksum.
  static ResultCache parse(const std::string& text);

 private:
  int k_;
  std::map<int, CacheEntry> entries_;
};

std::uint64_t cache_checksum(int k, int n, MoveCount optimum, SearchMethod method);

void save_cache(const ResultCache& cache, const std::string& path);
// Throws CorruptCache for malformed content, Error when unreadable.
ResultCache load_cache(const std::string& path);

// Cached optimum when present, otherwise a fresh search that is stored back
// into the cache. `hit` reports which path was taken.
SearchResult cached_min_moves(ResultCache& cache, int n, Peg source, Peg target,
                              const SearchOptions& options, bool* hit = nullptr);

}  // namespace hanoi
