#pragma once

#include <stdexcept>
#include <string>

namespace mcap {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Program contains a conditional construct where only the
/// condition-free fragment (eps, actions, ;, +, ||) is allowed.
class NotConditionFreeError : public Error {
public:
    using Error::Error;
};

/// An action head still contains a variable after all applicable
/// substitutions, or a negated query literal is non-ground.
class UnboundVariableError : public Error {
public:
    using Error::Error;
};

/// A query uses a predicate (or arity) the domain does not register.
class UnknownPredicateError : public Error {
public:
    using Error::Error;
};

/// An action was applied in a state where it is not legal.
class IllegalActionError : public Error {
public:
    using Error::Error;
};

/// A scenario configuration cannot be instantiated (e.g. more fires
/// than unsafe positions).
class InfeasibleConfigError : public Error {
public:
    using Error::Error;
};

/// A domain implementation violated an interface contract.
class ContractViolationError : public Error {
public:
    using Error::Error;
};

/// Statistical aggregation was asked for with too little data.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A parameter failed validation.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// File/stream failure, with path context in the message.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace mcap
