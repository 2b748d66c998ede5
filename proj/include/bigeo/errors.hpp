#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bigeo {

// Malformed input structure: out-of-range point, repeated point inside a
// block, empty block list. Distinct from a well-formed but invalid design.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic would have exceeded its representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}

  // 1-based line (text format) or byte offset (JSON format); 0 if unknown.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraphError : public std::invalid_argument {
 public:
  DisconnectedGraphError(std::size_t from, std::size_t to)
      : std::invalid_argument("graph is disconnected: vertex " +
                              std::to_string(to) +
                              " is unreachable from vertex " +
                              std::to_string(from)),
        from_(from),
        to_(to) {}

  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

}  // namespace bigeo
