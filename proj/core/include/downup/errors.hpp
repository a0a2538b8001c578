#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace downup {

// Base of everything the library throws on bad input or a failed
// mathematical precondition. `kind()` is the machine-readable tag the CLI
// prints before the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("DivisionByZero", "division by the zero scalar") {}
};

struct NotInSubalgebra : Error {
    explicit NotInSubalgebra(const std::string& what)
        : Error("NotInSubalgebra", what) {}
};

struct NotClassifiable : Error {
    explicit NotClassifiable(const std::string& what)
        : Error("NotClassifiable", what) {}
};

// Raised when an endomorphism has no inverse. `center_exponent` is n in
// z -> lambda z^n, the restriction of the map to the center.
struct NotAutomorphism : Error {
    explicit NotAutomorphism(int exponent)
        : Error("NotAutomorphism", "center exponent " + std::to_string(exponent)),
          center_exponent(exponent) {}

    int center_exponent;
};

struct NotAnEndomorphism : Error {
    explicit NotAnEndomorphism(const std::string& what)
        : Error("NotAnEndomorphism", what) {}
};

struct NotADerivation : Error {
    explicit NotADerivation(const std::string& what)
        : Error("NotADerivation", what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what)
        : Error("InternalError", what) {}
};

// Parser and evaluator errors. `position` is a 1-based column, 0 when unknown.
struct InputError : Error {
    InputError(std::string kind, const std::string& what, std::size_t pos = 0)
        : Error(std::move(kind), what), position(pos) {}

    std::size_t position;
};

struct SyntaxError : InputError {
    SyntaxError(const std::string& what, std::size_t pos)
        : InputError("SyntaxError", what, pos) {}
};

struct NonIntegerExponent : InputError {
    explicit NonIntegerExponent(std::size_t pos)
        : InputError("NonIntegerExponent", "exponent must be an integer literal", pos) {}
};

struct NegativePowerOfDU : InputError {
    NegativePowerOfDU(char generator, std::size_t pos)
        : InputError("NegativePowerOfDU",
                     std::string(1, generator) + " has no inverse in the localized algebra",
                     pos) {}
};

} // namespace downup
