#pragma once

#include <stdexcept>
#include <string>

namespace kz1 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed simplex, chain, or integer text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Degenerate input, wrong layer, index out of range, dimension or complex mismatch.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A directed cycle was found in the V-boundary graph.
class AdmissibilityViolation : public Error {
public:
    using Error::Error;
};

/// Phi-iteration did not stabilize within the configured cap.
class IterationCapExceeded : public Error {
public:
    using Error::Error;
};

/// A traversal visited more nodes than its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace kz1
