#ifndef JACRING_ERRORS_HPP
#define JACRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition or interface misuse; the CLI maps these to exit code 2.
struct ContractError : Error {
    using Error::Error;
};

struct DegreeCapError : ContractError {
    explicit DegreeCapError(long degree, long cap)
        : ContractError("requested degree " + std::to_string(degree) +
                        " exceeds the configured cap " + std::to_string(cap)) {}
};

// Exact arithmetic cannot proceed (e.g. a modulus divides a denominator).
struct FieldError : Error {
    using Error::Error;
};

}  // namespace jacring

#endif
