#pragma once

#include <stdexcept>
#include <string>

namespace sipq {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SIPQ_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

SIPQ_DEFINE_ERROR(NonUnitConstantTerm);
SIPQ_DEFINE_ERROR(TruncationExceeded);
SIPQ_DEFINE_ERROR(MarkerMismatch);
SIPQ_DEFINE_ERROR(DivergentProduct);
SIPQ_DEFINE_ERROR(InvalidArgument);
SIPQ_DEFINE_ERROR(NotInClass);
SIPQ_DEFINE_ERROR(InsufficientTableDepth);
SIPQ_DEFINE_ERROR(ConstraintViolation);
SIPQ_DEFINE_ERROR(UnknownIdentity);
SIPQ_DEFINE_ERROR(NoOracle);

#undef SIPQ_DEFINE_ERROR

}  // namespace sipq
