#pragma once

#include <stdexcept>
#include <string>

namespace hf {

/// Raised when an operation's precondition on its arguments is violated.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed HG3C stream or pattern name.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search whose guarantee did not apply came back empty-handed.
class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An oracle ran out of its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hf
