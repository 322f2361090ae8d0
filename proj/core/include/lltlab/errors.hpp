#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lltlab {

// Base class for all domain errors thrown by the library.  The CLI maps these
// onto exit codes: input/shape problems -> 2, broken internal identities -> 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact division left a remainder.  Carries the failing division step and
// the scalar remainder (the value of the dividend at q = 1 at that step) so a
// violated identity can be reported with its witness.
struct NotDivisible : Error {
    NotDivisible(const std::string& context, int step_, mpz_class remainder_)
        : Error(context + ": not divisible by (q-1) at step " + std::to_string(step_) +
                ", remainder " + remainder_.get_str()),
          step(step_),
          remainder(std::move(remainder_)) {}
    int step;
    mpz_class remainder;
};

struct VarMismatch : Error {
    using Error::Error;
};
struct NotHomogeneous : Error {
    using Error::Error;
};
struct DegreeExceedsVars : Error {
    using Error::Error;
};
struct TooManyRows : Error {
    using Error::Error;
};
struct EmptySubset : Error {
    using Error::Error;
};
struct NotAPathGraph : Error {
    using Error::Error;
};
struct PatternMismatch : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// A built-in self-check failed (round-trip assertion, cache consistency).
// Like NotDivisible this signals a broken identity, never bad input.
struct InternalCheckFailed : Error {
    using Error::Error;
};

}  // namespace lltlab
