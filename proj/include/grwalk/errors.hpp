#pragma once

#include <stdexcept>
#include <string>

namespace grwalk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction
struct LoopEdgeError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct NotRegularError : Error { using Error::Error; };

// parameter / input validation
struct InvalidParamsError : Error { using Error::Error; };
struct InfeasibleParametersError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// resource caps (CLI maps this to its own exit code)
struct SizeLimitError : Error { using Error::Error; };

} // namespace grwalk
