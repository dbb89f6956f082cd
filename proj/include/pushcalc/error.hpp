#pragma once

#include <stdexcept>
#include <string>

namespace pushcalc {

/// Base of every error thrown by the library. `code()` is a stable,
/// machine-readable identifier (e.g. "SignatureMismatch") that the CLI
/// prints as a prefix.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define PUSHCALC_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

PUSHCALC_DEFINE_ERROR(SignatureMismatch);
PUSHCALC_DEFINE_ERROR(SizeMismatch);
PUSHCALC_DEFINE_ERROR(SlotOutOfRange);
PUSHCALC_DEFINE_ERROR(ModelNotDefault);
PUSHCALC_DEFINE_ERROR(HypothesisViolation);
PUSHCALC_DEFINE_ERROR(TooLarge);
PUSHCALC_DEFINE_ERROR(InvalidInput);

#undef PUSHCALC_DEFINE_ERROR

/// Syntax error in a word, braid, permutation or label; `position()` is the
/// 0-based byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pushcalc
