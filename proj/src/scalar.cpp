#include "maxplus/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "maxplus/errors.hpp"

namespace maxplus {

const Rational& Scalar::value() const {
    if (!value_) throw NullScalar("epsilon has no finite value");
    return *value_;
}

std::string Scalar::to_string() const {
    return value_ ? maxplus::to_string(*value_) : std::string("eps");
}

std::string Scalar::to_decimal(int digits) const {
    if (!value_) return "-inf";
    // Exact to `digits` places with round-half-away-from-zero.
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = *value_ * scale;
    mpz_class num = scaled.get_num();
    mpz_class den = scaled.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    mpz_class rounded = (2 * num + den) / (2 * den);
    mpz_class whole = rounded / scale;
    mpz_class frac = rounded % scale;
    std::string out = (negative && rounded != 0) ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.is_epsilon() || y.is_epsilon()) return x.is_epsilon() && y.is_epsilon();
    return *x.value_ == *y.value_;
}

bool operator<(const Scalar& x, const Scalar& y) {
    if (y.is_epsilon()) return false;
    if (x.is_epsilon()) return true;
    return *x.value_ < *y.value_;
}

Scalar oplus(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

Scalar otimes(const Scalar& x, const Scalar& y) {
    if (x.is_epsilon() || y.is_epsilon()) return Scalar::epsilon();
    return Scalar(Rational(x.value() + y.value()));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view token) {
    if (token.empty()) return std::nullopt;
    bool negative = false;
    std::string_view body = token;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        result = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            return std::nullopt;
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::string digits = std::string(whole) + std::string(frac);
        result = Rational(mpz_class(digits.empty() ? "0" : digits, 10), scale);
    } else {
        if (!all_digits(body)) return std::nullopt;
        result = Rational(mpz_class(std::string(body), 10));
    }
    result.canonicalize();
    if (negative) result = -result;
    return result;
}

std::optional<Scalar> parse_scalar(std::string_view token) {
    if (token.size() == 3) {
        std::string lower;
        for (char c : token) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower == "eps") return Scalar::epsilon();
    }
    if (auto q = parse_rational(token)) return Scalar(std::move(*q));
    return std::nullopt;
}

}  // namespace maxplus
