#ifndef RTGRAPH_ERRORS_HPP
#define RTGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rtg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// graph construction and parsing
struct OutOfRangeError : Error { using Error::Error; };
struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct ParameterTooSmallError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// exact linear algebra
struct NotSquareError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct InexactDivisionError : Error { using Error::Error; };

// analysis preconditions
struct DisconnectedError : Error { using Error::Error; };
struct TooSmallError : Error { using Error::Error; };
struct NotRegularError : Error { using Error::Error; };
struct ForbiddenEvaluationPointError : Error { using Error::Error; };
struct InvalidParamsError : Error { using Error::Error; };

} // namespace rtg

#endif
