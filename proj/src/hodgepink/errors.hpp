#pragma once

#include <stdexcept>
#include <string>

namespace hodgepink {

// Error families, aligned with the CLI exit codes and the C API status codes.
enum class ErrorKind {
  input,                  // malformed or inconsistent input data
  insufficient_precision, // a result cannot be certified within the window
  unsupported_spectrum,   // subobject enumeration outside the supported classes
  domain,                 // violated precondition or invariant
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

#define HODGEPINK_ERROR(NAME, KIND)                                                              \
  class NAME : public Error {                                                                    \
  public:                                                                                        \
    explicit NAME(const std::string& msg) : Error(ErrorKind::KIND, std::string(#NAME ": ") + msg) {} \
  }

HODGEPINK_ERROR(InputError, input);
HODGEPINK_ERROR(NotAUnit, domain);
HODGEPINK_ERROR(NonzeroConstantTerm, domain);
HODGEPINK_ERROR(InsufficientPrecision, insufficient_precision);
HODGEPINK_ERROR(RankDeficient, domain);
HODGEPINK_ERROR(ShapeMismatch, input);
HODGEPINK_ERROR(RelationViolated, domain);
HODGEPINK_ERROR(SingularFrobenius, domain);
HODGEPINK_ERROR(NotNilpotent, domain);
HODGEPINK_ERROR(UnsupportedSpectrum, unsupported_spectrum);
HODGEPINK_ERROR(InconsistentChain, domain);
HODGEPINK_ERROR(CasePreconditionViolated, domain);
HODGEPINK_ERROR(NotStable, domain);
HODGEPINK_ERROR(WindowViolated, domain);

#undef HODGEPINK_ERROR

} // namespace hodgepink
