#ifndef PLATEAU_ERRORS_HPP
#define PLATEAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plateau {

// Invalid mathematical input (bad prime, reducible modulus, ...).
struct NonPrimeError : std::invalid_argument {
    explicit NonPrimeError(long p)
        : std::invalid_argument("not a prime: " + std::to_string(p)) {}
};

struct ReduciblePolyError : std::invalid_argument {
    explicit ReduciblePolyError(const std::string& what)
        : std::invalid_argument("reducible modulus polynomial: " + what) {}
};

// Internal invariant failure: a valid field always has a primitive element.
struct NoPrimitiveElementError : std::logic_error {
    NoPrimitiveElementError() : std::logic_error("no primitive element found") {}
};

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero field element") {}
};

struct MixedRootOrderError : std::invalid_argument {
    MixedRootOrderError(int a, int b)
        : std::invalid_argument("cyclotomic operands have different root orders: " +
                                std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct NotAUnitError : std::invalid_argument {
    explicit NotAUnitError(long a)
        : std::invalid_argument("automorphism index not a unit: " + std::to_string(a)) {}
};

struct EvenPrimeError : std::invalid_argument {
    EvenPrimeError() : std::invalid_argument("operation requires an odd prime") {}
};

struct TooLargeError : std::length_error {
    explicit TooLargeError(const std::string& what)
        : std::length_error("desk-scale cap exceeded: " + what) {}
};

struct InconsistentInputError : std::invalid_argument {
    explicit InconsistentInputError(const std::string& what)
        : std::invalid_argument(what) {}
};

struct DegenerateRowsError : std::invalid_argument {
    explicit DegenerateRowsError(const std::string& what)
        : std::invalid_argument("generator rows are linearly dependent: " + what) {}
};

struct NotSelfOrthogonalError : std::invalid_argument {
    NotSelfOrthogonalError()
        : std::invalid_argument("input code is not self-orthogonal") {}
};

}  // namespace plateau

#endif
