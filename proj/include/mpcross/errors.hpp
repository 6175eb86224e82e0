#pragma once

#include <stdexcept>
#include <string>

namespace mpcross {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };

// combinatorics
struct OverlapError : Error { using Error::Error; };
struct MissingVertexError : Error { using Error::Error; };

// drawing model
struct UnknownEdgeError : Error { using Error::Error; };
struct UnknownVertexError : Error { using Error::Error; };
struct NotAdjacentError : Error { using Error::Error; };
struct NotABijectionError : Error { using Error::Error; };

// realizer
struct BudgetExceededError : Error { using Error::Error; };

// template engine
struct InvalidTemplateError : Error { using Error::Error; };
struct UnrealizableTemplateError : Error { using Error::Error; };

// extraction
struct SimplicityViolationError : Error { using Error::Error; };
struct TransitivityViolationError : Error { using Error::Error; };

// renderer
struct WitnessMismatchError : Error { using Error::Error; };

} // namespace mpcross
