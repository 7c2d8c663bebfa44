#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "hanoi/frame_stewart.hpp"
#include "hanoi/lemma_lab.hpp"
#include "hanoi/result_cache.hpp"
#include "hanoi/search.hpp"
#include "hanoi/sequence_io.hpp"
#include "hanoi/version.hpp"

namespace hanoi::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kCacheEnv = "HANOI_CACHE";

json support_json(Disk d) { return d == kFloor ? json("inf") : json(d); }

json sequence_json(const MoveSequence& seq) {
  json moves = json::array();
  for (const Move& m : seq.moves) {
    moves.push_back({{"disk", m.disk}, {"from", m.from}, {"to", m.to}});
  }
  json triples = json::array();
  for (const TripleMove& t : encode_triples(seq)) {
    triples.push_back({t.disk, support_json(t.was_on), support_json(t.lands_on)});
  }
  return {{"n", seq.n},           {"k", seq.k},         {"source", seq.source},
          {"length", seq.size()}, {"moves", moves},     {"triples", triples}};
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

// Loads the cache file when one is configured and present.
struct CacheHandle {
  std::string path;
  ResultCache cache;
  int hits = 0;
  int misses = 0;

  CacheHandle(std::string p, int k) : path(std::move(p)), cache(k) {
    if (path.empty()) return;
    std::ifstream probe(path);
    if (!probe) return;
    cache = load_cache(path);
    if (cache.pegs() != k) {
      throw InvalidArgument("cache " + path + " holds k=" +
                            std::to_string(cache.pegs()) + ", requested k=" +
                            std::to_string(k));
    }
  }

  SearchResult lookup(int n, Peg source, Peg target, const SearchOptions& options) {
    bool hit = false;
    SearchResult r = cached_min_moves(cache, n, source, target, options, &hit);
    hit ? ++hits : ++misses;
    return r;
  }

  void save() const {
    if (!path.empty() && misses > 0) save_cache(cache, path);
  }
};

std::string default_cache_path() {
  if (const char* env = std::getenv(kCacheEnv)) return env;
  return {};
}

struct Manifest {
  std::string command;
  json parameters = json::object();
  int cache_hits = 0;
  int cache_misses = 0;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int n = 0;
  int k = kDefaultPegs;
  std::string method = "recursive";
  std::string format = "text";
};

int cmd_count(const CountArgs& a, std::ostream& out, Manifest& manifest) {
  manifest.parameters = {{"n", a.n}, {"k", a.k}, {"method", a.method}};
  MoveCount count = 0;
  if (a.method == "closed") {
    if (a.k != 4) throw InvalidArgument("the closed form covers k=4 only");
    count = stewart_count(a.n);
  } else {
    count = frame_stewart_count(a.n, a.k);
  }
  if (a.format == "json") {
    out << json{{"command", "count"}, {"n", a.n}, {"k", a.k},
                {"method", a.method}, {"count", count}}.dump()
        << '\n';
  } else {
    out << count << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  int n = 0;
  int k = kDefaultPegs;
  Peg source = 0;
  Peg target = 1;
  bool symmetric = false;
  std::string format = "triples";
};

int cmd_solve(const SolveArgs& a, std::ostream& out, Manifest& manifest) {
  manifest.parameters = {{"n", a.n},           {"k", a.k},
                         {"source", a.source}, {"target", a.target},
                         {"symmetric", a.symmetric}};
  const MoveSequence seq = a.symmetric
                               ? generate_symmetric_solution(a.n, a.source, a.target, a.k)
                               : generate_solution(a.n, a.k, a.source, a.target);
  if (a.format == "json") {
    json doc = sequence_json(seq);
    doc["command"] = "solve";
    doc["target"] = a.target;
    doc["symmetric"] = a.symmetric;
    out << doc.dump() << '\n';
  } else {
    out << format_listing(seq);
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  bool expect_transfer = false;
  std::optional<std::size_t> expect_length;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::istream& in,
               Manifest& manifest) {
  manifest.parameters = {{"file", a.file}, {"expect_transfer", a.expect_transfer}};
  if (a.expect_length) manifest.parameters["expect_length"] = *a.expect_length;

  const TripleListing listing = parse_triple_listing(read_input(a.file, in));
  json doc{{"command", "verify"}, {"n", listing.n}, {"k", listing.k},
           {"source", listing.source}, {"length", listing.triples.size()}};
  bool ok = true;
  std::string detail;
  std::optional<MoveSequence> seq;
  try {
    seq = listing.decode();
  } catch (const Unrealizable& e) {
    ok = false;
    doc["failed_index"] = e.index();
    detail = e.what();
  }
  if (seq) {
    const State end = final_state(*seq);
    std::optional<Peg> target;
    for (Peg p = 0; p < listing.k; ++p) {
      if (p != listing.source && is_full_transfer(*seq, p)) target = p;
    }
    doc["full_transfer"] = target.has_value();
    if (target) doc["target"] = *target;
    if (a.expect_transfer && !target) {
      ok = false;
      detail = "not a full transfer";
    }
    if (a.expect_length && *a.expect_length != seq->size()) {
      ok = false;
      detail = "length " + std::to_string(seq->size()) + ", expected " +
               std::to_string(*a.expect_length);
    }
    json pegs = json::array();
    for (Peg p : end.assignment()) pegs.push_back(p);
    doc["final_pegs"] = pegs;
  }
  doc["valid"] = ok;
  if (!detail.empty()) doc["detail"] = detail;

  if (a.format == "json") {
    out << doc.dump() << '\n';
  } else if (ok) {
    out << "valid length=" << listing.triples.size();
    if (doc.contains("target")) out << " transfer_to=" << doc["target"].get<int>();
    out << '\n';
  } else {
    out << "invalid: " << detail << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int n = 0;
  int k = kDefaultPegs;
  Peg source = 0;
  Peg target = 1;
  std::uint64_t budget_states = 0;
  double budget_seconds = 0.0;
  bool no_symmetry = false;
  bool any_target = false;
  std::string method = "bidirectional";
  std::string cache;
  std::string format = "text";
};

SearchOptions search_options(const SearchArgs& a) {
  SearchOptions o;
  o.method = parse_search_method(a.method);
  o.use_symmetry = !a.no_symmetry;
  o.any_target = a.any_target;
  o.budget.max_states = a.budget_states;
  o.budget.max_seconds = a.budget_seconds;
  return o;
}

int cmd_search(const SearchArgs& a, std::ostream& out, Manifest& manifest) {
  manifest.parameters = {{"n", a.n},
                         {"k", a.k},
                         {"source", a.source},
                         {"target", a.target},
                         {"method", a.method},
                         {"symmetry", !a.no_symmetry},
                         {"any_target", a.any_target},
                         {"budget_states", a.budget_states},
                         {"budget_seconds", a.budget_seconds}};
  CacheHandle cache(a.cache, a.k);
  const SearchResult r = cache.lookup(a.n, a.source, a.target, search_options(a));
  cache.save();
  manifest.cache_hits = cache.hits;
  manifest.cache_misses = cache.misses;
  const bool hit = cache.hits > 0;

  if (a.format == "json") {
    out << json{{"command", "search"},
                {"n", r.n},
                {"k", r.k},
                {"source", r.source},
                {"target", r.target},
                {"optimum", r.optimum},
                {"explored", r.explored},
                {"method", to_string(r.method)},
                {"symmetry", r.symmetry},
                {"any_target", r.any_target},
                {"cache_hit", hit}}
               .dump()
        << '\n';
  } else {
    out << "optimum=" << r.optimum << '\n'
        << "explored=" << r.explored << '\n'
        << "method=" << to_string(r.method) << '\n'
        << "symmetry=" << (r.symmetry ? "on" : "off") << '\n'
        << "cache=" << (hit ? "hit" : "miss") << '\n'
        << "elapsed_s=" << r.elapsed.count() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int n = 0;
  int k = kDefaultPegs;
  Peg source = 0;
  Peg target = 1;
  bool phases = false;
  bool full = false;
  std::size_t cap = 1'000'000;
  int max_disks = 6;
  std::string format = "triples";
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, Manifest& manifest) {
  if (a.phases && a.full) throw InvalidArgument("--phases and --full are exclusive");
  const bool phases = !a.full;
  manifest.parameters = {{"n", a.n},         {"k", a.k},
                         {"source", a.source}, {"target", a.target},
                         {"mode", phases ? "phases" : "full"},
                         {"cap", a.cap}};
  EnumerationOptions options;
  options.cap = a.cap;
  options.max_disks = a.max_disks;
  const Enumeration e =
      phases ? enumerate_minimal_demolishing(a.n, a.k, a.source, a.target, options)
             : enumerate_minimal_solutions(a.n, a.k, a.source, a.target, options);

  if (a.format == "json") {
    json seqs = json::array();
    for (const MoveSequence& s : e.sequences) seqs.push_back(sequence_json(s));
    out << json{{"command", "enumerate"},
                {"n", a.n},
                {"k", a.k},
                {"mode", phases ? "phases" : "full"},
                {"optimum", e.optimum},
                {"count", e.sequences.size()},
                {"truncated", e.truncated},
                {"sequences", seqs}}
               .dump()
        << '\n';
  } else {
    for (const MoveSequence& s : e.sequences) out << format_listing(s) << '\n';
    out << "# count " << e.sequences.size() << (e.truncated ? " truncated" : "")
        << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string file;
  std::optional<int> generated;
  std::string checks = "avoidance,bottoms,phase-length";
  bool shorten = false;
  std::string cache;
  std::string format = "text";
};

std::set<std::string> parse_checks(const std::string& text) {
  static const std::set<std::string> known{"avoidance", "bottoms", "phase-length"};
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!known.count(item)) throw InvalidArgument("unknown check '" + item + "'");
    out.insert(item);
  }
  return out;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::istream& in,
                Manifest& manifest) {
  const auto checks = parse_checks(a.checks);
  manifest.parameters = {{"checks", a.checks}, {"shorten", a.shorten}};
  std::vector<MoveSequence> inputs;
  if (a.generated) {
    manifest.parameters["generated"] = *a.generated;
    inputs.push_back(generate_symmetric_solution(*a.generated, 0, 1));
  } else {
    if (a.file.empty()) throw InvalidArgument("analyze needs a file or --generated");
    manifest.parameters["file"] = a.file;
    for (const TripleListing& l : parse_triple_listings(read_input(a.file, in))) {
      inputs.push_back(l.decode());
    }
    if (inputs.empty()) throw ParseError(1, "no listings found");
  }

  std::optional<CacheHandle> cache;
  json results = json::array();
  bool universal_ok = true;
  std::size_t bottoms_pass = 0;
  std::ostringstream text;

  for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
    const PhaseSplit split = split_phases(inputs[idx]);
    const MoveSequence& phase = split.demolishing;
    json r{{"index", idx}, {"n", phase.n}, {"phase_length", phase.size()}};
    text << "sequence " << idx << ": n=" << phase.n << " phase_length=" << phase.size();
    if (!split.complete) {
      r["error"] = "disk n never moves";
      text << " error=disk-n-never-moves\n";
      universal_ok = false;
      results.push_back(r);
      continue;
    }
    const EndStateClass cls = classify_end_state(phase);
    r["end_state"] = to_string(cls.kind);
    text << " end_state=" << to_string(cls.kind);
    if (cls.kind == EndStateKind::kThreeStacks) {
      r["j4"] = cls.j4;
      text << " j4=" << cls.j4;
    }
    text << '\n';

    if (checks.count("avoidance")) {
      const AvoidanceReport av = check_avoidance(phase);
      r["avoidance"] = av.holds;
      text << "  avoidance: " << (av.holds ? "pass" : "FAIL");
      if (av.witness) {
        const AvoidanceWitness& w = *av.witness;
        r["witness"] = {{"disk", w.disk},
                        {"critical_peg", w.critical_peg},
                        {"arrival_index", w.arrival_index},
                        {"departure_index", w.departure_index},
                        {"departure_peg", w.departure_peg}};
        text << " witness: disk " << w.disk << " on peg " << w.critical_peg
             << " (arrives at move " << w.arrival_index << ", leaves at move "
             << w.departure_index << " for peg " << w.departure_peg << ")";
      }
      text << '\n';
      if (!av.holds) {
        universal_ok = false;
        if (a.shorten && av.witness) {
          const MoveSequence shorter =
              shorten_violating(phase, av.witness->disk, av.witness->departure_peg);
          r["shortened"] = sequence_json(shorter);
          text << "  shortened (" << shorter.size() << " moves):\n"
               << format_listing(shorter);
        }
      }
    }
    if (checks.count("bottoms")) {
      const BottomCostReport b = check_bottom_costs(phase);
      json detail = json::array();
      text << "  bottoms: " << (b.all_one ? "pass" : "not-all-one");
      for (const BottomCost& bc : b.bottoms) {
        detail.push_back({{"disk", bc.disk}, {"cost", bc.cost}});
        text << " C(" << bc.disk << ")=" << bc.cost;
      }
      text << '\n';
      r["bottoms"] = {{"all_one", b.all_one}, {"detail", detail}};
      if (b.all_one) ++bottoms_pass;
    }
    if (checks.count("phase-length")) {
      if (!cache) cache.emplace(a.cache, kDefaultPegs);
      const MoveCount h = cache->lookup(phase.n, 0, 1, SearchOptions{}).optimum;
      const bool ok = phase.size() == (h + 1) / 2;
      r["phase_length_ok"] = ok;
      r["optimum"] = h;
      text << "  phase-length: " << (ok ? "pass" : "FAIL") << " (" << phase.size()
           << " vs (" << h << "+1)/2)\n";
      if (!ok) universal_ok = false;
    }
    results.push_back(r);
  }
  if (cache) {
    cache->save();
    manifest.cache_hits = cache->hits;
    manifest.cache_misses = cache->misses;
  }

  // Unit bottom costs are read existentially: one passing phase suffices.
  const bool bottoms_ok = !checks.count("bottoms") || bottoms_pass > 0;
  const bool ok = universal_ok && bottoms_ok;
  if (a.format == "json") {
    out << json{{"command", "analyze"},
                {"sequences", results},
                {"bottoms_passing", bottoms_pass},
                {"pass", ok}}
               .dump()
        << '\n';
  } else {
    out << text.str();
    if (checks.count("bottoms")) {
      out << "bottoms: " << bottoms_pass << "/" << inputs.size()
          << " phases with unit bottom costs\n";
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- ledger

struct LedgerArgs {
  int depth = 0;
  std::optional<int> empirical;
  std::string report;
  int bfs_bound = 0;
  std::string cache;
  std::string format = "text";
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("malformed range '" + text + "', expected a..b");
  }
}

json ledger_json(const CostLedger& l) {
  json doc{{"provenance", to_string(l.provenance)},
           {"x", l.x},
           {"M", l.multiplicity},
           {"L4", l.cumulative}};
  if (!l.transferable.empty()) {
    doc["I4"] = l.transferable;
    doc["I3"] = l.transferable_3peg;
    doc["m"] = l.increment;
  }
  return doc;
}

void print_ledger_rows(const CostLedger& l, const std::string& sep, std::ostream& out) {
  auto row = [&](const char* name, const std::vector<std::uint64_t>& values) {
    out << name;
    for (auto v : values) out << sep << v;
    out << '\n';
  };
  row("x", l.x);
  row("M", l.multiplicity);
  row("L4", l.cumulative);
  if (!l.transferable.empty()) {
    row("I4", l.transferable);
    row("I3", l.transferable_3peg);
    row("m", l.increment);
  }
}

int cmd_ledger(const LedgerArgs& a, std::ostream& out, Manifest& manifest) {
  manifest.parameters = {{"depth", a.depth}, {"report", a.report},
                         {"bfs_bound", a.bfs_bound}};
  if (a.empirical) manifest.parameters["empirical"] = *a.empirical;
  if (a.depth == 0 && !a.empirical && a.report.empty()) {
    throw InvalidArgument("ledger needs --depth, --empirical or --report");
  }
  const std::string sep = a.format == "csv" ? "," : " ";
  json doc{{"command", "ledger"}};
  bool all_equal = true;

  if (a.depth > 0) {
    const CostLedger l = analytic_ledger(a.depth);
    doc["analytic"] = ledger_json(l);
    if (a.format != "json") {
      out << "# analytic ledger, depth " << a.depth << '\n';
      print_ledger_rows(l, sep, out);
    }
  }

  if (a.empirical) {
    std::vector<MoveSequence> phases;
    for (int n = 1; n <= *a.empirical; ++n) {
      EnumerationOptions options;
      options.max_disks = std::max(options.max_disks, *a.empirical);
      auto e = enumerate_minimal_demolishing(n, kDefaultPegs, 0, 1, options);
      phases.insert(phases.end(), e.sequences.begin(), e.sequences.end());
    }
    const CostLedger emp = empirical_ledger(phases);
    const CostLedger ana = analytic_ledger(std::max(1, emp.depth()));
    json gaps = json::array();
    for (const LedgerDiscrepancy& d : compare_ledgers(ana, emp)) {
      gaps.push_back({{"level", d.level}, {"field", d.field},
                      {"analytic", d.analytic}, {"empirical", d.empirical}});
    }
    doc["empirical"] = ledger_json(emp);
    doc["empirical"]["n_max"] = *a.empirical;
    doc["empirical"]["phases"] = phases.size();
    doc["discrepancies"] = gaps;
    if (a.format != "json") {
      out << "# empirical ledger over " << phases.size()
          << " minimal demolishing phases, n <= " << *a.empirical << '\n';
      print_ledger_rows(emp, sep, out);
      for (const auto& g : gaps) {
        out << "# differs from analytic at t=" << g["level"].get<int>() << ": "
            << g["field"].get<std::string>() << " analytic="
            << g["analytic"].get<std::uint64_t>()
            << " empirical=" << g["empirical"].get<std::uint64_t>() << '\n';
      }
    }
  }

  if (!a.report.empty()) {
    const auto [lo, hi] = parse_range(a.report);
    if (lo < 0 || hi < lo) throw InvalidArgument("bad report range");
    std::map<int, MoveCount> exact;
    CacheHandle cache(a.cache, kDefaultPegs);
    for (int n = lo; n <= std::min(hi, a.bfs_bound); ++n) {
      exact[n] = cache.lookup(n, 0, 1, SearchOptions{}).optimum;
    }
    cache.save();
    manifest.cache_hits = cache.hits;
    manifest.cache_misses = cache.misses;

    const auto rows = equality_report(lo, hi, analytic_ledger(required_depth(hi)), exact);
    json table = json::array();
    if (a.format != "json") {
      out << "n" << sep << "stewart" << sep << "bound1" << sep << "bound2" << sep
          << "exact" << sep << "status\n";
    }
    for (const EqualityRow& row : rows) {
      all_equal = all_equal && row.equal;
      json jr{{"n", row.n},         {"stewart", row.stewart}, {"bound1", row.bound1},
              {"bound2", row.bound2}, {"equal", row.equal}};
      jr["exact"] = row.exact ? json(*row.exact) : json(nullptr);
      table.push_back(jr);
      if (a.format != "json") {
        out << row.n << sep << row.stewart << sep << row.bound1 << sep << row.bound2
            << sep << (row.exact ? std::to_string(*row.exact) : std::string("-"))
            << sep << (row.equal ? "EQUAL" : "MISMATCH") << '\n';
      }
    }
    doc["report"] = table;
    doc["all_equal"] = all_equal;
  }

  if (a.format == "json") out << doc.dump() << '\n';
  return all_equal ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Multi-peg Tower of Hanoi workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write a run manifest (JSON) to this path");

  const std::string cache_default = default_cache_path();

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "Frame-Stewart move count");
  c_count->add_option("-n", count.n, "Disk count")->required()->check(CLI::NonNegativeNumber);
  c_count->add_option("-k", count.k, "Peg count")->check(CLI::Range(3, 64));
  c_count->add_option("--method", count.method)
      ->check(CLI::IsMember({"closed", "recursive"}));
  c_count->add_option("--format", count.format)->check(CLI::IsMember({"text", "json"}));

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Generate a Frame-Stewart solution");
  c_solve->add_option("-n", solve.n, "Disk count")->required()->check(CLI::NonNegativeNumber);
  c_solve->add_option("-k", solve.k, "Peg count")->check(CLI::Range(3, 16));
  c_solve->add_option("--source", solve.source);
  c_solve->add_option("--target", solve.target);
  c_solve->add_flag("--symmetric", solve.symmetric,
                    "Mirror the demolishing phase into the reconstructing phase");
  c_solve->add_option("--format", solve.format)->check(CLI::IsMember({"triples", "json"}));

  VerifyArgs verify;
  std::size_t expect_length = 0;
  auto* c_verify = app.add_subcommand("verify", "Validate a triple listing");
  c_verify->add_option("file", verify.file, "Listing path, '-' for stdin")->required();
  c_verify->add_flag("--expect-transfer", verify.expect_transfer);
  auto* opt_len = c_verify->add_option("--expect-length", expect_length);
  c_verify->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

  SearchArgs search;
  search.cache = cache_default;
  auto* c_search = app.add_subcommand("search", "Exact optimum by breadth-first search");
  c_search->add_option("-n", search.n, "Disk count")->required()->check(CLI::NonNegativeNumber);
  c_search->add_option("-k", search.k, "Peg count")->check(CLI::Range(3, 16));
  c_search->add_option("--source", search.source);
  c_search->add_option("--target", search.target);
  c_search->add_option("--budget-states", search.budget_states);
  c_search->add_option("--budget-seconds", search.budget_seconds);
  c_search->add_flag("--no-symmetry", search.no_symmetry);
  c_search->add_flag("--any-target", search.any_target);
  c_search->add_option("--method", search.method)
      ->check(CLI::IsMember({"forward", "bidirectional"}));
  c_search->add_option("--cache", search.cache, "Result cache file");
  c_search->add_option("--format", search.format)->check(CLI::IsMember({"text", "json"}));

  EnumerateArgs enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "Dump all minimal sequences");
  c_enum->add_option("-n", enumerate.n, "Disk count")->required()->check(CLI::NonNegativeNumber);
  c_enum->add_option("-k", enumerate.k, "Peg count")->check(CLI::Range(3, 16));
  c_enum->add_option("--source", enumerate.source);
  c_enum->add_option("--target", enumerate.target);
  c_enum->add_flag("--phases", enumerate.phases, "Minimal demolishing phases (default)");
  c_enum->add_flag("--full", enumerate.full, "Full minimal solutions");
  c_enum->add_option("--cap", enumerate.cap);
  c_enum->add_option("--max-disks", enumerate.max_disks);
  c_enum->add_option("--format", enumerate.format)
      ->check(CLI::IsMember({"triples", "json"}));

  AnalyzeArgs analyze;
  analyze.cache = cache_default;
  int generated = 0;
  auto* c_analyze = app.add_subcommand("analyze", "Run lemma checks on sequences");
  c_analyze->add_option("file", analyze.file, "Listing path, '-' for stdin");
  auto* opt_gen = c_analyze->add_option("--generated", generated,
                                        "Analyze the generated symmetric solution");
  c_analyze->add_option("--checks", analyze.checks);
  c_analyze->add_flag("--shorten", analyze.shorten,
                      "Emit the shortened phase for avoidance failures");
  c_analyze->add_option("--cache", analyze.cache);
  c_analyze->add_option("--format", analyze.format)->check(CLI::IsMember({"text", "json"}));

  LedgerArgs ledger;
  ledger.cache = cache_default;
  int empirical = 0;
  auto* c_ledger = app.add_subcommand("ledger", "Cost ledgers and the equality table");
  c_ledger->add_option("--depth", ledger.depth)->check(CLI::Range(1, 64));
  auto* opt_emp = c_ledger->add_option("--empirical", empirical, "Largest n to enumerate");
  c_ledger->add_option("--report", ledger.report, "Range a..b of disk counts");
  c_ledger->add_option("--bfs-bound", ledger.bfs_bound);
  c_ledger->add_option("--cache", ledger.cache);
  c_ledger->add_option("--format", ledger.format)
      ->check(CLI::IsMember({"text", "csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (*opt_len) verify.expect_length = expect_length;
  if (*opt_gen) analyze.generated = generated;
  if (*opt_emp) ledger.empirical = empirical;

  Manifest manifest;
  const auto started = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*c_count) {
      manifest.command = "count";
      code = cmd_count(count, out, manifest);
    } else if (*c_solve) {
      manifest.command = "solve";
      code = cmd_solve(solve, out, manifest);
    } else if (*c_verify) {
      manifest.command = "verify";
      code = cmd_verify(verify, out, in, manifest);
    } else if (*c_search) {
      manifest.command = "search";
      code = cmd_search(search, out, manifest);
    } else if (*c_enum) {
      manifest.command = "enumerate";
      code = cmd_enumerate(enumerate, out, manifest);
    } else if (*c_analyze) {
      manifest.command = "analyze";
      code = cmd_analyze(analyze, out, in, manifest);
    } else if (*c_ledger) {
      manifest.command = "ledger";
      code = cmd_ledger(ledger, out, manifest);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n'
        << "lower_bound=" << e.lower_bound() << '\n'
        << "explored=" << e.explored() << '\n';
    code = kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    code = kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  }

  if (!manifest_path.empty()) {
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
    json m{{"command", manifest.command},
           {"parameters", manifest.parameters},
           {"version", kVersion},
           {"timestamp", utc_timestamp()},
           {"duration_s", took.count()},
           {"cache_hits", manifest.cache_hits},
           {"cache_misses", manifest.cache_misses},
           {"exit_code", code}};
    std::ofstream file(manifest_path, std::ios::trunc);
    file << m.dump(2) << '\n';
  }
  return code;
}

}  // namespace hanoi::cli
