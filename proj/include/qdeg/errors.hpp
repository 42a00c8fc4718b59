#ifndef QDEG_ERRORS_HPP
#define QDEG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdeg {

/// Malformed textual input (polynomials, rationals, job files).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Well-formed input that violates a mathematical requirement
/// (non-monomial generator, non-positive grading, dimension mismatch, ...).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of a specific algorithm, where a more general
/// entry point exists.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdeg

#endif
