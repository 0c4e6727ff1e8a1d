#pragma once

#include <stdexcept>
#include <string>

namespace chainstab {

// Malformed input: length mismatches, invalid invariants, unparsable values.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The input is well formed but outside the hypotheses of the requested
// decision (e.g. a parameter that is not strictly above alpha_Higgs).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration could not be closed into a finite certified box, or the
// box exceeds the configured size limit.
class EnumerationOverflow : public std::runtime_error {
public:
    explicit EnumerationOverflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chainstab
