#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace delliptic {

using Integer = mpz_class;

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// Backed by GMP. Every constructor canonicalizes, so two Rationals compare
/// equal exactly when their numerators and denominators agree.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}                  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p" (optional leading '-').
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        r.v_.canonicalize();
        return r;
    }

    mpq_class v_{0};
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations; div by zero throws DivisionByZero.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

} // namespace delliptic
