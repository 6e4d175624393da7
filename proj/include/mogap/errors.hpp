#pragma once

#include <stdexcept>
#include <string>

namespace mogap {

// Argument outside an operation's mathematical domain (negative exponent,
// non-positive Beta parameter, c outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The h-ratio denominator vanished; the scheme carries no information.
class DegenerateSchemeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested table or sum exceeds the supported size.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input (config files, CLI flags).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace mogap
