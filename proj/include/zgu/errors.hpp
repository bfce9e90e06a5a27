#pragma once

#include <stdexcept>
#include <string>

namespace zgu {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCoprimeError : Error { using Error::Error; };
struct NotInSubfieldError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct MissingPowerMapError : Error { using Error::Error; };
struct GroupTooLargeError : Error { using Error::Error; };
struct TableMismatchError : Error { using Error::Error; };
struct NotNormalizedError : Error { using Error::Error; };
struct NotTorsionError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotIdempotentError : Error { using Error::Error; };
struct UnboundedSystemError : Error { using Error::Error; };
struct UnknownExampleError : Error { using Error::Error; };

}  // namespace zgu
