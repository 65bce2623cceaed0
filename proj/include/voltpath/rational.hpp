#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "voltpath/decimal.hpp"

namespace voltpath {

/// Arbitrary-precision rational with plain value semantics.
///
/// Thin wrapper over mpq_class that always returns materialized values, so
/// it can be used as the scalar of generic numeric code without gmpxx
/// expression templates leaking through `auto`.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
    Rational(std::int64_t num, std::int64_t den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        v_.canonicalize();
    }

    static Rational from_decimal(const Decimal& d) {
        Rational r(d.mantissa());
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(d.exponent() < 0 ? -d.exponent() : d.exponent()));
        if (d.exponent() >= 0)
            r.v_ *= scale;
        else
            r.v_ /= scale;
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    /// "p/q" in lowest terms, or plain "p" for integers.
    std::string fraction_str() const {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Scalar glue used by the circuit solver templates. The two number modes
/// (double, Rational) share one code path through this surface.
template <typename S>
struct NumberTraits;

template <>
struct NumberTraits<double> {
    static constexpr bool exact = false;
    static double from_decimal(const Decimal& d) { return d.to_double(); }
    static double from_int(std::int64_t n) { return static_cast<double>(n); }
    static double to_double(double x) { return x; }
    static double abs(double x) { return x < 0 ? -x : x; }
    static bool is_zero(double x) { return x == 0.0; }
    static std::string exact_str(double) { return {}; }
};

template <>
struct NumberTraits<Rational> {
    static constexpr bool exact = true;
    static Rational from_decimal(const Decimal& d) { return Rational::from_decimal(d); }
    static Rational from_int(std::int64_t n) { return Rational(n); }
    static double to_double(const Rational& x) { return x.to_double(); }
    static Rational abs(const Rational& x) { return voltpath::abs(x); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static std::string exact_str(const Rational& x) { return x.fraction_str(); }
};

} // namespace voltpath
