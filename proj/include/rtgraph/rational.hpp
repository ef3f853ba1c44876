#ifndef RTGRAPH_RATIONAL_HPP
#define RTGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "rtgraph/errors.hpp"

namespace rtg {

// Arbitrary-precision rational number, always kept in canonical form:
// denominator > 0 and gcd(|num|, den) = 1. Thin wrapper over GMP's mpq_class
// that makes the canonical invariant unconditional and turns zero
// denominators into errors instead of undefined behaviour.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InvalidParamsError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p/q" or "p" (base 10).
    static Rational from_string(const std::string& s) {
        mpq_class q;
        try {
            q = mpq_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw ParseError("not a rational: '" + s + "'");
        }
        if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidParamsError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Integer exponent; negative exponents invert (error on zero base).
inline Rational pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base.is_zero()) throw InvalidParamsError("zero raised to a negative power");
        return pow(Rational(base.denominator(), base.numerator()), -exp);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den); // already coprime, ctor is a no-op reduction
}

} // namespace rtg

#endif
