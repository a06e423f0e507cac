#pragma once

#include <cmath>
#include <limits>
#include <optional>

namespace wallis {

/// Sign and natural-log magnitude of a real number. Products of many Gamma
/// values stay representable long after the plain double would overflow.
class LogSigned {
public:
    constexpr LogSigned() = default;
    constexpr LogSigned(int sign, double log_mag)
        : sign_(sign > 0 ? 1 : (sign < 0 ? -1 : 0)), log_mag_(sign == 0 ? 0.0 : log_mag)
    {
    }

    static constexpr LogSigned zero() { return {}; }
    static constexpr LogSigned one() { return {1, 0.0}; }
    static LogSigned from_log(double log_mag) { return {1, log_mag}; }
    static LogSigned from_double(double x)
    {
        if (x == 0.0) {
            return zero();
        }
        return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
    }

    [[nodiscard]] constexpr int sign() const { return sign_; }
    [[nodiscard]] constexpr double log_mag() const { return log_mag_; }
    [[nodiscard]] constexpr bool is_zero() const { return sign_ == 0; }

    /// exp of the magnitude with the sign applied; may be +-inf or 0 when the
    /// magnitude is outside the double range.
    [[nodiscard]] double value() const
    {
        return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_);
    }

    /// The value as a double when it neither overflows nor underflows to zero.
    [[nodiscard]] std::optional<double> representable() const
    {
        if (sign_ == 0) {
            return 0.0;
        }
        const double v = value();
        if (!std::isfinite(v) || v == 0.0) {
            return std::nullopt;
        }
        return v;
    }

    friend LogSigned operator*(LogSigned a, LogSigned b)
    {
        if (a.sign_ == 0 || b.sign_ == 0) {
            return zero();
        }
        return {a.sign_ * b.sign_, a.log_mag_ + b.log_mag_};
    }

    friend LogSigned operator/(LogSigned a, LogSigned b)
    {
        if (b.sign_ == 0) {
            return {a.sign_ == 0 ? 0 : a.sign_, std::numeric_limits<double>::infinity()};
        }
        if (a.sign_ == 0) {
            return zero();
        }
        return {a.sign_ * b.sign_, a.log_mag_ - b.log_mag_};
    }

    LogSigned& operator*=(LogSigned o) { return *this = *this * o; }
    LogSigned& operator/=(LogSigned o) { return *this = *this / o; }

    friend LogSigned operator-(LogSigned a) { return {-a.sign_, a.log_mag_}; }

    friend bool operator==(const LogSigned&, const LogSigned&) = default;

private:
    int sign_ = 0;
    double log_mag_ = 0.0;
};

} // namespace wallis
