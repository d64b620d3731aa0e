#pragma once

#include <stdexcept>
#include <string>

namespace sri {

/// Failure categories surfaced by the library. Each maps 1:1 onto a C API
/// status code.
enum class ErrorKind {
    parse,
    malformed_table,
    axiom_violation,
    zero_equals_one,
    size_cap_exceeded,
    hom_violation,
    parent_mismatch,
    zero_ideal,
    empty_family,
    not_prime,
    invalid_mc_set,
    improper_ideal,
    no_primary_decomposition,
    precondition,
    correspondence_failure,
    equivalence_failure,
    unknown_proposition,
    io,
    internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace sri
