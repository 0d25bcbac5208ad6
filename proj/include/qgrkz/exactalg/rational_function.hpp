#pragma once

#include "qgrkz/exactalg/polynomial.hpp"

#include <stdexcept>

namespace qgrkz {

// num/den over EqPolynomial. Only syntactic cancellation: constant
// denominators are folded into the numerator and proportional num/den
// collapse to a constant. Equality is by cross-multiplication.
class EqRationalFunction {
public:
    EqRationalFunction() : den_(1) {}
    EqRationalFunction(int c) : num_(c), den_(1) {}
    EqRationalFunction(const Rational& c) : num_(c), den_(1) {}
    EqRationalFunction(const EqPolynomial& p) : num_(p), den_(1) {}
    EqRationalFunction(EqPolynomial num, EqPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    const EqPolynomial& num() const { return num_; }
    const EqPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_.constant_term() / den_.constant_term();
    }

    EqRationalFunction& operator+=(const EqRationalFunction& o) { return *this = *this + o; }
    EqRationalFunction& operator-=(const EqRationalFunction& o) { return *this = *this - o; }
    EqRationalFunction& operator*=(const EqRationalFunction& o) { return *this = *this * o; }

    friend EqRationalFunction operator+(const EqRationalFunction& a, const EqRationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend EqRationalFunction operator-(const EqRationalFunction& a) {
        EqRationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend EqRationalFunction operator-(const EqRationalFunction& a, const EqRationalFunction& b) { return a + (-b); }
    friend EqRationalFunction operator*(const EqRationalFunction& a, const EqRationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_ == b.num_ && !a.den_.is_constant()) return {a.num_, b.den_};
        if (b.den_ == a.num_ && !b.den_.is_constant()) return {b.num_, a.den_};
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend EqRationalFunction operator/(const EqRationalFunction& a, const EqRationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return a * EqRationalFunction(b.den_, b.num_);
    }

    friend bool operator==(const EqRationalFunction& a, const EqRationalFunction& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str(std::size_t r = 0) const {
        if (den_ == EqPolynomial(1)) return num_.str(r);
        return "(" + num_.str(r) + ")/(" + den_.str(r) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) { den_ = EqPolynomial(1); return; }
        if (den_.is_constant()) {
            num_ *= Rational(1) / den_.constant_term();
            den_ = EqPolynomial(1);
            return;
        }
        if (auto c = num_.ratio_to(den_)) {
            num_ = EqPolynomial(*c);
            den_ = EqPolynomial(1);
            return;
        }
        // make the first denominator coefficient 1
        Rational lead = den_.terms().begin()->second;
        if (lead != Rational(1)) {
            Rational s = Rational(1) / lead;
            num_ *= s;
            den_ *= s;
        }
    }

    EqPolynomial num_;
    EqPolynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const EqRationalFunction& f) { return os << f.str(); }

}  // namespace qgrkz
