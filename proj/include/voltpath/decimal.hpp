#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace voltpath {

/// Exact finite decimal: value = mantissa * 10^exponent.
///
/// Edge costs and V_max values are read from decimal text and must stay
/// losslessly convertible to both double and exact rationals, so they are
/// kept in this form instead of double. Canonical form: mantissa not
/// divisible by 10 (unless the value is zero, stored as 0 * 10^0).
class Decimal {
  public:
    constexpr Decimal() = default;
    constexpr explicit Decimal(std::int64_t integer) : mantissa_(integer) { canonicalize(); }

    static constexpr Decimal from_parts(std::int64_t mantissa, int exponent) {
        Decimal d;
        d.mantissa_ = mantissa;
        d.exponent_ = exponent;
        d.canonicalize();
        return d;
    }

    /// Parse plain decimal text: [+-]? digits [ '.' digits ].
    /// Returns nullopt on malformed input or when more than 18 significant
    /// digits would be needed (not representable in the int64 mantissa).
    static std::optional<Decimal> parse(std::string_view text);

    constexpr std::int64_t mantissa() const { return mantissa_; }
    constexpr int exponent() const { return exponent_; }

    constexpr bool is_zero() const { return mantissa_ == 0; }
    constexpr bool is_positive() const { return mantissa_ > 0; }
    constexpr bool is_integer() const { return exponent_ >= 0; }

    double to_double() const;
    std::string to_string() const;

    /// Largest integer strictly below this value; nullopt when none is
    /// positive (value <= 1).
    std::optional<std::int64_t> largest_integer_below() const;

    /// Exact division by two (always a finite decimal).
    Decimal half() const { return from_parts(checked_mul(mantissa_, 5), exponent_ - 1); }

    friend Decimal operator+(const Decimal& a, const Decimal& b);
    friend Decimal operator*(const Decimal& a, std::int64_t k) {
        return from_parts(checked_mul(a.mantissa_, k), a.exponent_);
    }
    Decimal operator-() const { return from_parts(-mantissa_, exponent_); }

    friend bool operator==(const Decimal& a, const Decimal& b) = default;
    friend bool operator<(const Decimal& a, const Decimal& b) { return compare(a, b) < 0; }
    friend bool operator>(const Decimal& a, const Decimal& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Decimal& a, const Decimal& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Decimal& a, const Decimal& b) { return compare(a, b) >= 0; }

  private:
    std::int64_t mantissa_ = 0;
    int exponent_ = 0;

    constexpr void canonicalize() {
        if (mantissa_ == 0) {
            exponent_ = 0;
            return;
        }
        while (mantissa_ % 10 == 0) {
            mantissa_ /= 10;
            ++exponent_;
        }
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t out = 0;
        if (__builtin_mul_overflow(a, b, &out))
            throw std::overflow_error("decimal arithmetic overflow");
        return out;
    }

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t out = 0;
        if (__builtin_add_overflow(a, b, &out))
            throw std::overflow_error("decimal arithmetic overflow");
        return out;
    }

    static std::int64_t pow10(int k) {
        std::int64_t p = 1;
        while (k-- > 0)
            p = checked_mul(p, 10);
        return p;
    }

    // Align both mantissas to the smaller exponent.
    static void align(const Decimal& a, const Decimal& b, std::int64_t& ma, std::int64_t& mb, int& e) {
        e = a.exponent_ < b.exponent_ ? a.exponent_ : b.exponent_;
        ma = checked_mul(a.mantissa_, pow10(a.exponent_ - e));
        mb = checked_mul(b.mantissa_, pow10(b.exponent_ - e));
    }

    static int compare(const Decimal& a, const Decimal& b) {
        if (a.mantissa_ == 0 || b.mantissa_ == 0 || (a.mantissa_ < 0) != (b.mantissa_ < 0)) {
            std::int64_t sa = a.mantissa_ == 0 ? 0 : (a.mantissa_ < 0 ? -1 : 1);
            std::int64_t sb = b.mantissa_ == 0 ? 0 : (b.mantissa_ < 0 ? -1 : 1);
            return sa < sb ? -1 : (sa > sb ? 1 : 0);
        }
        std::int64_t ma = 0, mb = 0;
        int e = 0;
        align(a, b, ma, mb, e);
        return ma < mb ? -1 : (ma > mb ? 1 : 0);
    }
};

inline Decimal operator+(const Decimal& a, const Decimal& b) {
    std::int64_t ma = 0, mb = 0;
    int e = 0;
    Decimal::align(a, b, ma, mb, e);
    return Decimal::from_parts(Decimal::checked_add(ma, mb), e);
}

inline std::optional<Decimal> Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::int64_t mantissa = 0;
    int frac_digits = 0;
    bool any_int = false, any_frac = false, seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point)
                return std::nullopt;
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9')
            return std::nullopt;
        if (__builtin_mul_overflow(mantissa, std::int64_t{10}, &mantissa) ||
            __builtin_add_overflow(mantissa, std::int64_t{c - '0'}, &mantissa))
            return std::nullopt;
        if (seen_point) {
            any_frac = true;
            ++frac_digits;
        } else {
            any_int = true;
        }
    }
    if (!any_int && !any_frac)
        return std::nullopt;
    if (seen_point && !any_frac)
        return std::nullopt;
    return from_parts(negative ? -mantissa : mantissa, -frac_digits);
}

inline double Decimal::to_double() const {
    // Round-trip through text so the decimal-to-binary rounding is the
    // correctly rounded one strtod guarantees.
    return std::strtod(to_string().c_str(), nullptr);
}

inline std::string Decimal::to_string() const {
    if (mantissa_ == 0)
        return "0";
    std::string digits = std::to_string(mantissa_ < 0 ? -mantissa_ : mantissa_);
    std::string out = mantissa_ < 0 ? "-" : "";
    if (exponent_ >= 0) {
        out += digits;
        out.append(static_cast<std::size_t>(exponent_), '0');
    } else {
        std::size_t frac = static_cast<std::size_t>(-exponent_);
        if (frac >= digits.size()) {
            out += "0.";
            out.append(frac - digits.size(), '0');
            out += digits;
        } else {
            out += digits.substr(0, digits.size() - frac);
            out += '.';
            out += digits.substr(digits.size() - frac);
        }
    }
    return out;
}

inline std::optional<std::int64_t> Decimal::largest_integer_below() const {
    if (mantissa_ <= 0)
        return std::nullopt;
    std::int64_t floor_value = 0;
    bool exact = false;
    if (exponent_ >= 0) {
        floor_value = checked_mul(mantissa_, pow10(exponent_));
        exact = true;
    } else {
        floor_value = mantissa_ / pow10(-exponent_);
        exact = false; // canonical form: exponent_ < 0 implies a nonzero fraction
    }
    std::int64_t below = exact ? floor_value - 1 : floor_value;
    if (below < 1)
        return std::nullopt;
    return below;
}

} // namespace voltpath
