#pragma once

/*
 * Error hierarchy for the library. Every throw site uses one of these, so
 * callers (and the command-line driver) can map failures to outcomes:
 * bad input, a violated operation precondition, or an exhausted resource
 * budget where the computation is abandoned rather than wrong.
 */

#include <stdexcept>
#include <string>

namespace lpres {

/* Common base so callers can catch everything from this library at once. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Syntactically or structurally invalid input (parse errors, letters
 * outside the alphabet, non-bijective table rows, and the like). */
struct MalformedInputError : Error {
    using Error::Error;
};

/* Operation needs a presentation whose invariance flag is asserted. */
struct InvarianceRequiredError : Error {
    using Error::Error;
};

/* Reidemeister rewriting was asked for a word outside the subgroup. */
struct NotAMemberError : Error {
    using Error::Error;
};

/* An endomorphism does not map the subgroup into itself. */
struct NotInvariantError : Error {
    using Error::Error;
};

/* Conjugation data was requested for a non-normal subgroup. */
struct NormalityRequiredError : Error {
    using Error::Error;
};

/* A subgroup-presentation construction does not apply to the input. */
struct StrategyInapplicableError : Error {
    using Error::Error;
};

/* A configured cap (coset count, closure size, round limit) was hit. */
struct ResourceLimitError : Error {
    using Error::Error;
};

/* The procedure gave up without an answer; the result is unknown, not
 * wrong (for example, coset enumeration of a possibly infinite-index
 * subgroup, or a truncation that never stabilized). */
struct InconclusiveError : Error {
    using Error::Error;
};

} // namespace lpres
