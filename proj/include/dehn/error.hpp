#pragma once

#include <stdexcept>
#include <string>

namespace dehn {

/// Base class for all errors raised by the library. `code()` is stable and
/// machine readable; `what()` carries the human explanation.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define DEHN_DEFINE_ERROR(Name)                          \
  class Name : public Error {                            \
   public:                                               \
    explicit Name(const std::string& msg)                \
        : Error(#Name, msg) {}                           \
  }

DEHN_DEFINE_ERROR(LengthMismatch);
DEHN_DEFINE_ERROR(NotPalindrome);
DEHN_DEFINE_ERROR(BudgetExceeded);
DEHN_DEFINE_ERROR(DepthExceeded);
DEHN_DEFINE_ERROR(IndexOutOfRange);
DEHN_DEFINE_ERROR(SchemaMismatch);
DEHN_DEFINE_ERROR(NotADisk);
DEHN_DEFINE_ERROR(UnsupportedPinch);
DEHN_DEFINE_ERROR(NoBetaFound);
DEHN_DEFINE_ERROR(UsageError);
DEHN_DEFINE_ERROR(ParseError);

#undef DEHN_DEFINE_ERROR

}  // namespace dehn
