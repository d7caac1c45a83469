#pragma once

#include <stdexcept>
#include <string>

namespace mdim {

// Base class for all errors raised by the library's precondition checks.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRangeError : Error { using Error::Error; };
struct LoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct EqualVerticesError : Error { using Error::Error; };
struct EqualEdgesError : Error { using Error::Error; };
struct WeightOutOfRangeError : Error { using Error::Error; };
struct NotATreeError : Error { using Error::Error; };
struct BadParameterError : Error { using Error::Error; };
struct UnknownFormError : Error { using Error::Error; };
struct EmptyRowError : Error { using Error::Error; };
struct TooSmallError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace mdim
