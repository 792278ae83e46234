#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coarse {

enum class Errc {
  descriptor_mismatch,
  invalid_descriptor,
  invalid_letter,
  invalid_sequence,
  budget_exceeded,
  precondition,
  parse,
  no_filtration,
  configuration,
  no_witness,
  unsupported,
  infeasible,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown when an enumeration exceeds its element budget. `partial()` is the
// number of elements produced before the cap was hit.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t partial)
      : Error(Errc::budget_exceeded, what), partial_(partial) {}

  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

// Parse failures carry the 0-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(Errc::parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace coarse
