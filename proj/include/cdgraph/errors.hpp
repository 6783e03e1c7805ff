#pragma once

#include <stdexcept>
#include <string>

namespace cdgraph {

// Error categories map one-to-one onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (bad vertex, bad n, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: edge lists, graph6, KB lines.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Knowledge base is unreadable, self-contradictory, or contradicts a theorem rule.
class KnowledgeBaseError : public Error {
 public:
  using Error::Error;
};

/// A size cap (canonicalization, enumeration, factorization budget) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cdgraph
