#pragma once

#include <stdexcept>
#include <string>

namespace wdiv {

// Base of every error raised by the library. Validation errors map to CLI exit 1,
// numeric ones to exit 2.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, bool numeric) : std::runtime_error(what), numeric_(numeric) {}
  bool numeric() const { return numeric_; }

 private:
  bool numeric_;
};

#define WDIV_ERROR(Name, numeric)                                        \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name ": " + what, numeric) {} \
  };

WDIV_ERROR(NonCoprime, false)
WDIV_ERROR(CapExceeded, false)
WDIV_ERROR(OutOfRange, false)
WDIV_ERROR(DomainError, false)
WDIV_ERROR(ConvergenceTooSlow, false)
WDIV_ERROR(PoleAt1, true)
WDIV_ERROR(PoleAtNonpositiveInteger, true)
WDIV_ERROR(PoleOfGamma, true)
WDIV_ERROR(CutoffTooSmall, true)
WDIV_ERROR(NumericFailure, true)

#undef WDIV_ERROR

}  // namespace wdiv
