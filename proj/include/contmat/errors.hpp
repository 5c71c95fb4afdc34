#ifndef CONTMAT_ERRORS_HPP
#define CONTMAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contmat {

struct DeterminantError : std::domain_error {
  explicit DeterminantError(const std::string& what) : std::domain_error(what) {}
};

struct GcdError : std::domain_error {
  explicit GcdError(const std::string& what) : std::domain_error(what) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct InvalidMove : std::domain_error {
  explicit InvalidMove(const std::string& what) : std::domain_error(what) {}
};

struct NotProper : std::domain_error {
  explicit NotProper(const std::string& what) : std::domain_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with the byte offset of the offending character.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace contmat

#endif
