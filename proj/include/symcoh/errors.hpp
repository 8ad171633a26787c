#pragma once

#include <stdexcept>
#include <string>

namespace symcoh {

// Base class for every error raised by the library. Each concrete type
// corresponds to one contract violation so callers can catch precisely.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainMismatch : Error { using Error::Error; };
struct DivisionByNonUnit : Error { using Error::Error; };
struct NonFieldScalars : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct NotASubspace : Error { using Error::Error; };

struct NotAGroup : Error { using Error::Error; };
struct NotARepresentative : Error { using Error::Error; };

struct NotACocycle : Error { using Error::Error; };
struct BadRoot : Error { using Error::Error; };
struct WrongGroupShape : Error { using Error::Error; };
struct NotMultiplicative : Error { using Error::Error; };

struct TooLarge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

struct NotCentral : Error { using Error::Error; };
struct NotTrivialCocycle : Error { using Error::Error; };

struct NotSymmetric : Error { using Error::Error; };
struct SectionUndefined : Error { using Error::Error; };
struct EvenPrime : Error { using Error::Error; };

struct ConfigError : Error { using Error::Error; };

}  // namespace symcoh
