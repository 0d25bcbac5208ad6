#pragma once

#include "qgrkz/exactalg/rational.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace qgrkz {

// Exponent vector with trailing zeros trimmed, so that the same monomial
// has one representation regardless of how many variables are in play.
using Monomial = std::vector<int>;

inline void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    trim(r);
    return r;
}

inline int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline int mono_exp(const Monomial& m, std::size_t k) { return k < m.size() ? m[k] : 0; }

// Polynomial over Q in the equivariant variables. Variable k < r is a_{k+1},
// variable r is hbar; the polynomial itself is agnostic of r.
class EqPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    EqPolynomial() = default;
    EqPolynomial(int c) : EqPolynomial(Rational(c)) {}
    EqPolynomial(const Rational& c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }

    static EqPolynomial variable(std::size_t k, const Rational& c = 1) {
        Monomial m(k + 1, 0);
        m[k] = 1;
        return monomial(std::move(m), c);
    }
    static EqPolynomial monomial(Monomial m, const Rational& c) {
        trim(m);
        EqPolynomial p;
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }
    // sum_k coeffs[k] * x_k
    static EqPolynomial linear(const std::vector<Rational>& coeffs, std::size_t offset = 0) {
        EqPolynomial p;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) p += variable(offset + k, coeffs[k]);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coeff(const Monomial& m) const {
        Monomial t = m;
        trim(t);
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }
    std::size_t variable_span() const {
        std::size_t s = 0;
        for (auto& [m, c] : terms_) s = std::max(s, m.size());
        return s;
    }

    // Drop every term containing variable k.
    EqPolynomial with_zero(std::size_t k) const {
        EqPolynomial r;
        for (auto& [m, c] : terms_)
            if (mono_exp(m, k) == 0) r.terms_.emplace(m, c);
        return r;
    }

    // If *this == c * other for a rational c, returns c.
    std::optional<Rational> ratio_to(const EqPolynomial& other) const {
        if (other.is_zero()) return std::nullopt;
        if (terms_.size() != other.terms_.size()) return std::nullopt;
        auto it = terms_.begin();
        auto jt = other.terms_.begin();
        if (it->first != jt->first) return std::nullopt;
        Rational c = it->second / jt->second;
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || it->second != c * jt->second) return std::nullopt;
        }
        return c;
    }

    EqPolynomial& operator+=(const EqPolynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    EqPolynomial& operator-=(const EqPolynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    EqPolynomial& operator*=(const Rational& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    EqPolynomial& operator*=(const EqPolynomial& o) { return *this = *this * o; }

    friend EqPolynomial operator+(EqPolynomial a, const EqPolynomial& b) { return a += b; }
    friend EqPolynomial operator-(EqPolynomial a, const EqPolynomial& b) { return a -= b; }
    friend EqPolynomial operator-(EqPolynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend EqPolynomial operator*(const EqPolynomial& a, const EqPolynomial& b) {
        EqPolynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.is_constant()) return EqPolynomial(b) *= a.constant_term();
        if (b.is_constant()) return EqPolynomial(a) *= b.constant_term();
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend EqPolynomial operator*(EqPolynomial a, const Rational& s) { return a *= s; }
    friend EqPolynomial operator*(const Rational& s, EqPolynomial a) { return a *= s; }

    friend bool operator==(const EqPolynomial& a, const EqPolynomial& b) { return a.terms_ == b.terms_; }

    // Variable names: a1..ar, h for index r. r = 0 means "unknown": x0, x1, ...
    std::string str(std::size_t r = 0) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational cc = c;
            if (!first) {
                os << (cc.sign() < 0 ? " - " : " + ");
                cc = abs(cc);
            } else if (cc.sign() < 0) {
                os << "-";
                cc = abs(cc);
            }
            first = false;
            bool unit = cc == Rational(1);
            if (!unit || m.empty()) os << cc.pretty();
            bool star = !unit || m.empty();
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                if (star) os << "*";
                star = true;
                if (r > 0 && k == r) os << "h";
                else if (r > 0) os << "a" << (k + 1);
                else os << "x" << k;
                if (m[k] > 1) os << "^" << m[k];
            }
        }
        return os.str();
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const EqPolynomial& p) { return os << p.str(); }

}  // namespace qgrkz
