#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wallis {

/// One closed-form-versus-oracle comparison.
struct VerifyCase {
    std::string suite;
    std::string name;
    std::string method;
    double expected = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
    /// (estimate - expected) / std_error for Monte Carlo cases; for deterministic
    /// oracles the error measured in units of the case tolerance.
    double z = 0.0;
    bool pass = false;
};

/// Suites: closed-form, fourier, series, or all. Monte Carlo cases pass at |z| <= 4.
/// Throws DomainError for an unknown suite.
std::vector<VerifyCase> run_verification(const std::string& suite, std::uint64_t seed,
                                         std::uint64_t samples);

} // namespace wallis
