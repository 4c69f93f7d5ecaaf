#pragma once

#include <stdexcept>
#include <string>

namespace padicq {

/// Malformed input or a violated precondition (bad prime, mismatched primes,
/// zero where a nonzero value is required, unparsable literal).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The value does not carry enough known digits to answer the question.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root extraction was requested for an equation the criteria declare
/// unsolvable.
class NotSolvableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The solvability criteria and the digit lifting disagree. This never
/// happens for correct code; it aborts the computation loudly.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace padicq
