#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpa {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a stated precondition; the message names the failed clause.
struct PreconditionViolated : Error {
    using Error::Error;
};

// gcd condition failed where coprimality is required.
struct NotCoprime : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

// A pair of congruence constraints clashes modulo the gcd of their moduli.
struct Inconsistent : Error {
    std::size_t first_index;
    std::size_t second_index;
    Inconsistent(std::size_t i, std::size_t j)
        : Error("inconsistent congruence constraints at indices " + std::to_string(i) +
                " and " + std::to_string(j)),
          first_index(i),
          second_index(j) {}
};

// Kronecker symbol (0/0) has no value.
struct UndefinedSymbol : Error {
    using Error::Error;
};

// Factoring (or an operation that needs a factorization) ran past its budget.
struct BoundExceeded : Error {
    using Error::Error;
};

// A search hit its cap. Signals "bound too small", never nonexistence.
struct BoundExhausted : Error {
    using Error::Error;
};

// Search bound exhausted inside a construction pipeline; names the step.
struct SearchBoundExhausted : BoundExhausted {
    using BoundExhausted::BoundExhausted;
};

// g = -1 or a perfect square: the density formula excludes these.
struct InvalidG : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

// Lift exponent fails its congruence condition.
struct BadExponent : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

// None of the supplied primes sits in a qualifying residue class.
struct NoQualifyingRole : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

// A fact the construction relies on failed to hold at runtime.
// Seeing this means a bug (or a defect in the underlying argument), not bad input.
struct InternalAssertionFailed : Error {
    using Error::Error;
};

}  // namespace wpa
