#pragma once

#include <stdexcept>
#include <string>

namespace sumdes {

/// Base class for all recoverable library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument values: out-of-range parameters, mismatched specs.
class domain_error : public error {
public:
    using error::error;
};

/// Malformed group or curve specification.
class invalid_spec_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// An explicit budget (subset visits, DP cells, enumeration size) was exceeded.
class resource_error : public error {
public:
    using error::error;
};

/// Design-parameter arithmetic did not divide exactly; the inputs are not a
/// valid design parameter set.
class inconsistent_parameters_error : public error {
public:
    using error::error;
};

/// A theorem-based routine was invoked outside its hypotheses.
class inapplicable_error : public error {
public:
    using error::error;
};

/// A mathematical invariant that must hold for every valid input was violated;
/// always indicates a bug, never a caller mistake.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sumdes
