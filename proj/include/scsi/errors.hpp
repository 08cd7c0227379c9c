#ifndef SCSI_ERRORS_HPP
#define SCSI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scsi {

// Base class for all library errors so callers can catch categorically.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimitiveModulus : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NoOrderNElement : Error {
    using Error::Error;
};

struct RadiusTooLarge : Error {
    using Error::Error;
};

struct TooLargeToEnumerate : Error {
    using Error::Error;
};

// Internal contract violation in the interpolation/root-finding pipeline.
// Reaching this is a defect, not an input error.
struct InterpolationFailure : Error {
    using Error::Error;
};

struct NoFeasibleCode : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace scsi

#endif
