#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hanoi/sequence.hpp"

namespace hanoi {

// Plain-text triple listing:
//
//   # comment
//   n k source
//   j i t
//   ...
//
// One triple per line, "inf" for the floor. A blank line ends a listing; the
// next non-comment line starts a new one with its own header.
struct TripleListing {
  int n = 0;
  int k = kDefaultPegs;
  Peg source = 0;
  std::vector<TripleMove> triples;
  // 1-based line of the header, for diagnostics.
  std::size_t header_line = 0;

  MoveSequence decode() const { return decode_triples(triples, n, k, source); }
};

// Throws ParseError with the offending line number.
std::vector<TripleListing> parse_triple_listings(std::string_view text);

// Exactly one listing; throws ParseError otherwise.
TripleListing parse_triple_listing(std::string_view text);

std::string format_support(Disk support);
std::string format_triple(const TripleMove& t);

// Header plus one line per move, each newline-terminated.
std::string format_listing(const MoveSequence& seq);

}  // namespace hanoi
