#pragma once

#include <stdexcept>
#include <string>

namespace hanoigram {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A grammar or automaton violates its structural invariants.
class InvalidConstruction : public Error {
 public:
  using Error::Error;
};

/// Leftmost nonterminal has no production.
class NoApplicableProduction : public Error {
 public:
  using Error::Error;
};

class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// step() was asked for successors of a configuration with an empty stack.
class EmptyStack : public Error {
 public:
  using Error::Error;
};

class NondeterministicPda : public Error {
 public:
  using Error::Error;
};

/// Disc counts of zero, or a state whose disc count does not match.
class InvalidDiscCount : public Error {
 public:
  using Error::Error;
};

class DiscCountMismatch : public Error {
 public:
  using Error::Error;
};

/// Size guard on exponential work (BFS state space, materialized words).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  /// 0-based token index of the offending token.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hanoigram
