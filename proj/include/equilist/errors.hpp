#ifndef EQUILIST_ERRORS_HPP
#define EQUILIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equilist {

enum class ErrKind {
    InvalidInstance,
    IllegalMove,
    NotAccessible,
    UnsupportedParameter,
    HypothesisViolated,
    InternalInvariantViolation,
};

inline const char* to_string(ErrKind k)
{
    switch (k) {
    case ErrKind::InvalidInstance: return "InvalidInstance";
    case ErrKind::IllegalMove: return "IllegalMove";
    case ErrKind::NotAccessible: return "NotAccessible";
    case ErrKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrKind::HypothesisViolated: return "HypothesisViolated";
    case ErrKind::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrKind k, const std::string& msg)
        : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k)
    {
    }
    ErrKind kind;
    // Populated for InternalInvariantViolation raised inside a solve: the
    // trace recorded so far, serialized as JSON lines.
    std::string trace_jsonl;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg)
{
    throw Error(k, msg);
}

} // namespace equilist

#endif
