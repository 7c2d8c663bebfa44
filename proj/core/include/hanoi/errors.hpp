#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hanoi {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

enum class IllegalReason {
  kNotOnSourcePeg,
  kNotTopDisk,
  kCoversSmallerDisk,
  kSamePeg,
  kOutOfRange,
};

std::string to_string(IllegalReason reason);

class IllegalMove : public Error {
 public:
  explicit IllegalMove(IllegalReason reason)
      : Error("illegal move: " + to_string(reason)), reason_(reason) {}

  IllegalReason reason() const noexcept { return reason_; }

 private:
  IllegalReason reason_;
};

// A triple list that has no legal peg-level realization at `index`.
class Unrealizable : public Error {
 public:
  Unrealizable(std::size_t index, const std::string& why)
      : Error("unrealizable triple at index " + std::to_string(index) + ": " +
              why),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class SymmetryUnavailable : public Error {
 public:
  using Error::Error;
};

// Thrown when a search runs out of its state or time budget. The lower bound
// is the smallest move count not yet ruled out.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t lower_bound, std::uint64_t explored,
                 const std::string& what)
      : Error(what), lower_bound_(lower_bound), explored_(explored) {}

  std::uint64_t lower_bound() const noexcept { return lower_bound_; }
  std::uint64_t explored() const noexcept { return explored_; }

 private:
  std::uint64_t lower_bound_;
  std::uint64_t explored_;
};

class CorruptCache : public Error {
 public:
  using Error::Error;
};

class NotAViolation : public Error {
 public:
  using Error::Error;
};

class LedgerTooShallow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hanoi
