#pragma once

#include <stdexcept>
#include <string>

namespace wallis {

/// Input outside the mathematical domain of an operation (hypothesis violations,
/// unsupported arguments). The CLI maps it to exit code 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure did not reach its requested accuracy.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wallis
