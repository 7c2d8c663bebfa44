#include "hanoi/result_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hanoi {

namespace {

constexpr const char* kMagic = "hanoi-cache";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::uint64_t cache_checksum(int k, int n, MoveCount optimum, SearchMethod method) {
  const std::string payload = std::to_string(k) + " " + std::to_string(n) + " " +
                              std::to_string(optimum) + " " + to_string(method);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<CacheEntry> ResultCache::find(int n) const {
  if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  return std::nullopt;
}

void ResultCache::store(const SearchResult& result) {
  if (result.k != k_) {
    throw InvalidArgument("result for k=" + std::to_string(result.k) +
                          " stored in a cache for k=" + std::to_string(k_));
  }
  store(result.n, CacheEntry{result.optimum, result.method});
}

std::string ResultCache::serialize() const {
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << " k=" << k_ << '\n';
  for (const auto& [n, e] : entries_) {
    out << n << ' ' << e.optimum << ' ' << to_string(e.method) << ' '
        << hex64(cache_checksum(k_, n, e.optimum, e.method)) << '\n';
  }
  return out.str();
}

ResultCache ResultCache::parse(const std::string& text) {
  std::istringstream in(text);
  std::string magic, k_field;
  int version = 0;
  if (!(in >> magic >> version >> k_field) || magic != kMagic) {
    throw CorruptCache("missing cache header");
  }
  if (version != kVersion) {
    throw CorruptCache("unsupported cache version " + std::to_string(version));
  }
  if (k_field.rfind("k=", 0) != 0) throw CorruptCache("malformed peg count");
  int k = 0;
  try {
    k = std::stoi(k_field.substr(2));
  } catch (const std::exception&) {
    throw CorruptCache("malformed peg count");
  }
  if (k < 3) throw CorruptCache("peg count below 3");

  ResultCache cache(k);
  std::string line;
  std::getline(in, line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int n = 0;
    MoveCount optimum = 0;
    std::string method_name, checksum;
    if (!(fields >> n >> optimum >> method_name >> checksum)) {
      throw CorruptCache("malformed record on line " + std::to_string(line_no));
    }
    SearchMethod method;
    try {
      method = parse_search_method(method_name);
    } catch (const InvalidArgument&) {
      throw CorruptCache("unknown method on line " + std::to_string(line_no));
    }
    if (checksum != hex64(cache_checksum(k, n, optimum, method))) {
      throw CorruptCache("checksum mismatch on line " + std::to_string(line_no));
    }
    cache.store(n, CacheEntry{optimum, method});
  }
  return cache;
}

void save_cache(const ResultCache& cache, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write cache file " + path);
  out << cache.serialize();
  if (!out) throw Error("failed writing cache file " + path);
}

ResultCache load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read cache file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ResultCache::parse(buf.str());
}

SearchResult cached_min_moves(ResultCache& cache, int n, Peg source, Peg target,
                              const SearchOptions& options, bool* hit) {
  if (auto entry = cache.find(n)) {
    if (hit) *hit = true;
    SearchResult r;
    r.n = n;
    r.k = cache.pegs();
    r.source = source;
    r.target = target;
    r.optimum = entry->optimum;
    r.method = entry->method;
    r.any_target = options.any_target;
    r.symmetry = options.use_symmetry && cache.pegs() == 4;
    return r;
  }
  if (hit) *hit = false;
  SearchResult r = exact_min_moves(n, cache.pegs(), source, target, options);
  cache.store(r);
  return r;
}

}  // namespace hanoi
