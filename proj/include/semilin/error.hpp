#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semilin {

/// Machine-readable failure tags. Contract errors carry the operation's tag;
/// ParseError is the only tag reported as an input-format failure.
enum class ErrorTag {
    ParseError,
    MalformedInterval,
    MalformedCell,
    MalformedFamily,
    InvalidArgument,
    PreconditionViolation,
    NoIsolatingShift,
    IterationCapExceeded,
    DanglingRef,
    DimensionMismatch,
    PointNotInSet,
    UnboundedFiber,
    UnknownName,
    InternalCheckFailed,
};

std::string_view to_string(ErrorTag tag);

class Error : public std::runtime_error {
public:
    Error(ErrorTag tag, const std::string& message)
        : std::runtime_error(message), tag_(tag) {}

    ErrorTag tag() const { return tag_; }

private:
    ErrorTag tag_;
};

[[noreturn]] inline void fail(ErrorTag tag, const std::string& message) {
    throw Error(tag, message);
}

}  // namespace semilin
