#pragma once

#include <stdexcept>
#include <string>

namespace curvopt {

// Error taxonomy shared across modules. Everything derives from Error so
// callers can catch the library as a whole.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroPointError : Error {
    explicit ZeroPointError(const std::string& msg = "operation undefined at the origin")
        : Error(msg) {}
};

struct UnsupportedKindError : Error {
    explicit UnsupportedKindError(const std::string& msg) : Error(msg) {}
};

struct DegenerateBodyError : Error {
    explicit DegenerateBodyError(const std::string& msg) : Error(msg) {}
};

struct InvalidBodyError : Error {
    explicit InvalidBodyError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct AdversaryViolationError : Error {
    explicit AdversaryViolationError(const std::string& msg) : Error(msg) {}
};

struct InfeasibleStartError : Error {
    explicit InfeasibleStartError(const std::string& msg) : Error(msg) {}
};

struct OracleFailureError : Error {
    explicit OracleFailureError(const std::string& msg) : Error(msg) {}
};

}  // namespace curvopt
