#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace maxplus {

using Rational = mpq_class;

/**
 * An element of the max-plus semiring: either the null element epsilon
 * (minus infinity) or an exact rational.
 *
 * Finite values are always kept canonical (reduced, positive denominator),
 * so structural equality is value equality.
 */
class Scalar {
public:
    /// Default construction yields epsilon.
    Scalar() = default;
    Scalar(long value) : value_(Rational(value)) {}
    Scalar(int value) : value_(Rational(value)) {}
    Scalar(Rational value) : value_(std::move(value)) { value_->canonicalize(); }

    static Scalar epsilon() { return Scalar(); }
    static Scalar zero() { return Scalar(0); }

    bool is_epsilon() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }

    /// Throws NullScalar for epsilon.
    const Rational& value() const;

    /// "eps" for epsilon, "p/q" or "p" otherwise.
    std::string to_string() const;

    /// Decimal approximation for display; "-inf" for epsilon.
    std::string to_decimal(int digits = 6) const;

    friend bool operator==(const Scalar& x, const Scalar& y);
    /// Total order with epsilon below every finite value.
    friend bool operator<(const Scalar& x, const Scalar& y);
    friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

private:
    std::optional<Rational> value_;
};

/// x (+) y = max(x, y).
Scalar oplus(const Scalar& x, const Scalar& y);
/// x (x) y = x + y, epsilon absorbing.
Scalar otimes(const Scalar& x, const Scalar& y);

/// Parses one token: "eps" (any case), "p/q", or an integer/decimal literal.
/// Returns nullopt on malformed input. Decimals convert exactly.
std::optional<Scalar> parse_scalar(std::string_view token);

/// Exact rational from "p/q" or an integer/decimal literal; nullopt otherwise.
std::optional<Rational> parse_rational(std::string_view token);

std::string to_string(const Rational& q);

}  // namespace maxplus
