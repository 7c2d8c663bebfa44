#include "hanoi/sequence_io.hpp"

#include <charconv>
#include <sstream>

namespace hanoi {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, std::size_t line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) +
                               "'");
  }
  return value;
}

Disk parse_support(std::string_view token, std::size_t line) {
  if (token == "inf") return kFloor;
  const int value = parse_int(token, line);
  if (value < 1) throw ParseError(line, "disk numbers start at 1");
  return value;
}

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) {
    line = line.substr(0, pos);
  }
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::vector<TripleListing> parse_triple_listings(std::string_view text) {
  std::vector<TripleListing> listings;
  bool in_block = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_tokens(strip_comment(raw));
    if (tokens.empty()) {
      // Comment-only lines do not end a listing.
      if (raw.find('#') == std::string_view::npos) in_block = false;
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected 3 fields, got " +
                                    std::to_string(tokens.size()));
    }
    if (!in_block) {
      TripleListing listing;
      listing.n = parse_int(tokens[0], line_no);
      listing.k = parse_int(tokens[1], line_no);
      listing.source = parse_int(tokens[2], line_no);
      listing.header_line = line_no;
      if (listing.n < 0) throw ParseError(line_no, "negative disk count");
      if (listing.k < 3) throw ParseError(line_no, "need at least 3 pegs");
      if (listing.source < 0 || listing.source >= listing.k) {
        throw ParseError(line_no, "source peg out of range");
      }
      listings.push_back(std::move(listing));
      in_block = true;
    } else {
      TripleListing& cur = listings.back();
      if (tokens[0] == "inf") throw ParseError(line_no, "moving disk is 'inf'");
      TripleMove t{parse_int(tokens[0], line_no),
                   parse_support(tokens[1], line_no),
                   parse_support(tokens[2], line_no)};
      if (t.disk < 1 || t.disk > cur.n) {
        throw ParseError(line_no, "disk " + std::to_string(t.disk) +
                                      " out of range 1.." +
                                      std::to_string(cur.n));
      }
      if ((t.was_on != kFloor && t.was_on > cur.n) ||
          (t.lands_on != kFloor && t.lands_on > cur.n)) {
        throw ParseError(line_no, "support disk out of range");
      }
      cur.triples.push_back(t);
    }
    if (end == text.size()) break;
  }
  return listings;
}

TripleListing parse_triple_listing(std::string_view text) {
  auto listings = parse_triple_listings(text);
  if (listings.empty()) throw ParseError(1, "missing header line 'n k source'");
  if (listings.size() > 1) {
    throw ParseError(listings[1].header_line,
                     "expected a single listing, found another header");
  }
  return std::move(listings.front());
}

std::string format_support(Disk support) {
  return support == kFloor ? std::string("inf") : std::to_string(support);
}

std::string format_triple(const TripleMove& t) {
  return std::to_string(t.disk) + " " + format_support(t.was_on) + " " +
         format_support(t.lands_on);
}

std::string format_listing(const MoveSequence& seq) {
  std::ostringstream out;
  out << seq.n << ' ' << seq.k << ' ' << seq.source << '\n';
  for (const TripleMove& t : encode_triples(seq)) out << format_triple(t) << '\n';
  return out.str();
}

}  // namespace hanoi
