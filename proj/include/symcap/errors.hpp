// Error hierarchy shared by all symcap components.
#pragma once

#include <stdexcept>
#include <string>

namespace symcap {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad JSON, invalid parameter ranges, dimension mismatches.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

/// Structurally valid input outside an operation's mathematical domain
/// (e.g. an energy below the minimum of the Hamiltonian, or a region
/// lacking the convexity/concavity property an operation requires).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A numerical routine failed to reach its accuracy target.
struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace symcap
