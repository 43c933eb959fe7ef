#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace s4 {

enum class ErrorKind {
    // input validation
    NotSquareFree,
    DegenerateField,
    // internal consistency
    NoPatternMatch,
    NonIntegralStructure,
    ChainTooShort,
    NoMaximalIdeal,
    InconsistentFactorization,
    UnsupportedEF,
    AlphaTooSmall,
    AmbiguousSubcase,
    NoSubcase,
    CapExceeded,
};

std::string_view to_string(ErrorKind kind);

// True for errors caused by bad user input; everything else is a bug or a
// broken mathematical guarantee.
constexpr bool is_input_error(ErrorKind kind) {
    return kind == ErrorKind::NotSquareFree || kind == ErrorKind::DegenerateField;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace s4
