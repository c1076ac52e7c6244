#pragma once

#include <stdexcept>
#include <string>

namespace annih {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeModulus : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

struct ZeroForm : Error { using Error::Error; };
struct ZeroResult : Error { using Error::Error; };

struct AllZeroSequence : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

struct SearchSpaceTooLarge : Error { using Error::Error; };
struct InfiniteStaircase : Error { using Error::Error; };

// Internal consistency failure; raised by the engine's self-checks.
struct InvariantViolation : Error { using Error::Error; };

}  // namespace annih
