#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace idb {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoopEdgeError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class VertexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class MissingEdgeError : public Error {
public:
    using Error::Error;
};

class NotInSetError : public Error {
public:
    using Error::Error;
};

class EmptyGraphError : public Error {
public:
    using Error::Error;
};

class ParamOutOfRangeError : public Error {
public:
    using Error::Error;
};

class NoEdgesError : public Error {
public:
    using Error::Error;
};

class EmptyBaseError : public Error {
public:
    using Error::Error;
};

class UnknownClaimError : public Error {
public:
    using Error::Error;
};

class BindingOutOfScopeError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

// A solve ran out of nodes; carries the best upper bound seen, if any.
class SolverBudgetExceededError : public BudgetExceededError {
public:
    SolverBudgetExceededError(const std::string& msg, std::optional<int> bound)
        : BudgetExceededError(msg), best_upper_bound(bound) {}
    std::optional<int> best_upper_bound;
};

// A bondage search ran out of nodes; carries the largest subset size k for
// which every k-subset was fully checked.
class BondageBudgetExceededError : public BudgetExceededError {
public:
    BondageBudgetExceededError(const std::string& msg, int verified_k)
        : BudgetExceededError(msg), largest_verified_k(verified_k) {}
    int largest_verified_k;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class BadHeaderError : public FormatError {
public:
    using FormatError::FormatError;
};

class TruncatedPayloadError : public FormatError {
public:
    using FormatError::FormatError;
};

class TrailingGarbageError : public FormatError {
public:
    using FormatError::FormatError;
};

class TooLargeError : public FormatError {
public:
    using FormatError::FormatError;
};

class SyntaxError : public FormatError {
public:
    SyntaxError(const std::string& msg, int line_no)
        : FormatError(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

} // namespace idb
