#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

enum class ErrorKind {
    size_too_small,
    length_mismatch,
    precondition,
    infeasible,
    size_guard,
    round_limit,
    format,
    io,
};

const char* to_string(ErrorKind kind);

// All library failures surface as this exception; `kind` lets the CLI map
// failures onto exit codes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) {
        throw Error(kind, what);
    }
}

} // namespace recolor
