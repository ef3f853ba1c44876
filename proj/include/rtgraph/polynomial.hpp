#ifndef RTGRAPH_POLYNOMIAL_HPP
#define RTGRAPH_POLYNOMIAL_HPP

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rtgraph/errors.hpp"
#include "rtgraph/rational.hpp"

namespace rtg {

// Dense univariate polynomial over Rational. Coefficients are stored in
// ascending degree with no trailing zeros; the symbol is display-only.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial

    explicit Polynomial(std::vector<Rational> coeffs, std::string symbol = "mu")
        : coeffs_(std::move(coeffs)), symbol_(std::move(symbol)) {
        trim();
    }

    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    // c * x^k
    static Polynomial monomial(int k, const Rational& c = Rational(1)) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational leading_coefficient() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    bool is_monic() const { return leading_coefficient() == Rational(1); }

    const std::string& symbol() const { return symbol_; }
    void set_symbol(std::string s) { symbol_ = std::move(s); }

    // Horner evaluation, exact.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out), a.symbol_);
    }

    friend Polynomial operator*(const Rational& c, Polynomial p) {
        if (c.is_zero()) return Polynomial();
        for (auto& x : p.coeffs_) x *= c;
        return p;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw InvalidParamsError("negative polynomial power");
        Polynomial acc = constant(Rational(1));
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        acc.symbol_ = symbol_;
        return acc;
    }

    // Exact quotient; a non-zero remainder means the caller's identity is
    // violated, so it surfaces as an error rather than being truncated.
    Polynomial divide_exact(const Polynomial& den) const {
        if (den.is_zero()) throw InexactDivisionError("polynomial division by zero");
        Polynomial rem = *this;
        std::vector<Rational> quot;
        if (degree() >= den.degree()) {
            quot.resize(static_cast<std::size_t>(degree() - den.degree()) + 1);
        }
        const Rational lead = den.leading_coefficient();
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            const int shift = rem.degree() - den.degree();
            const Rational c = rem.leading_coefficient() / lead;
            quot[static_cast<std::size_t>(shift)] = c;
            rem -= Polynomial::monomial(shift, c) * den;
        }
        if (!rem.is_zero()) {
            throw InexactDivisionError("inexact polynomial division, remainder " + rem.to_string());
        }
        return Polynomial(std::move(quot), symbol_);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Rational c = coefficient(k);
            if (c.is_zero()) continue;
            if (first) {
                if (c.sign() < 0) { os << "-"; c = -c; }
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            first = false;
            const bool unit = (c == Rational(1)) && k > 0;
            if (!unit) os << c.to_string();
            if (k > 0) {
                if (!unit) os << "*";
                os << symbol_;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    std::string symbol_ = "mu";
};

} // namespace rtg

#endif
