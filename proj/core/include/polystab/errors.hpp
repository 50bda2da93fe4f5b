#ifndef POLYSTAB_ERRORS_HPP
#define POLYSTAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polystab {

enum class Errc {
  ZeroPolynomial,
  NonMonic,
  BothZero,
  DegreeZero,
  DegreeTooSmall,
  IndexOutOfRange,
  ZeroDenominator,
  EndpointIsPole,
  AllRootsImaginary,
  NotApplicable,
  HypothesisViolation,
  NotSelfConjugate,
  RNonPositive,
  PrecisionExhausted,
  Undecidable,
  ParseError,
  InternalAssertion,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the byte offset of the offending token and a short
// description of what was expected there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error(Errc::ParseError,
              "at byte " + std::to_string(offset) + ", expected " + expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace polystab

#endif
