#pragma once

#include <stdexcept>
#include <string>

namespace dspringer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DSPRINGER_DEFINE_ERROR(Name)       \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// A q-power division that should have been exact was not.
DSPRINGER_DEFINE_ERROR(NonDivisible);
DSPRINGER_DEFINE_ERROR(SingularMatrix);
DSPRINGER_DEFINE_ERROR(DomainError);  // generic precondition failure
DSPRINGER_DEFINE_ERROR(SizeMismatch);
DSPRINGER_DEFINE_ERROR(ContainmentViolation);
DSPRINGER_DEFINE_ERROR(NonPartitionContent);
DSPRINGER_DEFINE_ERROR(NotHorizontalStrip);
DSPRINGER_DEFINE_ERROR(InconsistentSystem);
DSPRINGER_DEFINE_ERROR(DenominatorResidue);
DSPRINGER_DEFINE_ERROR(DomainViolation);  // bijection input outside its domain
DSPRINGER_DEFINE_ERROR(GuardExceeded);

#undef DSPRINGER_DEFINE_ERROR

}  // namespace dspringer
