#ifndef RAMSEY_ERRORS_HPP
#define RAMSEY_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Malformed serialized input. `byte_offset` points at the first offending byte.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t byte_offset, const std::string& what)
      : std::runtime_error("parse error at byte " + std::to_string(byte_offset) + ": " + what),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

/// A request exceeds the configured in-memory or enumeration limits.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid arguments that cannot certify/produce a result
/// (e.g. a pessimistic estimator that starts at or above 1).
class ParameterError : public std::runtime_error {
public:
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// Seed enumeration ended (cap or full space) without a passing graph.
class SearchExhausted : public std::runtime_error {
public:
  SearchExhausted(std::uint64_t seeds_tried, const std::string& what)
      : std::runtime_error(what), seeds_tried_(seeds_tried) {}

  std::uint64_t seeds_tried() const noexcept { return seeds_tried_; }

private:
  std::uint64_t seeds_tried_;
};

}  // namespace ramsey

#endif
