#pragma once

#include "qgrkz/exactalg/polynomial.hpp"
#include "qgrkz/exactalg/rational.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace qgrkz {

// Power series in u_1..u_{l-1} (u_k = q^{e_k - e_{k+1}}) truncated at total
// degree order(). Exponent vectors reuse Monomial (trailing zeros trimmed).
// A series built from a scalar has unbounded order; mixing orders
// truncates to the smaller one.
template <class R>
class TruncatedSeries {
public:
    static constexpr int kUnbounded = std::numeric_limits<int>::max();
    using Terms = std::map<Monomial, R>;

    TruncatedSeries() = default;
    TruncatedSeries(int c) : TruncatedSeries(R(c)) {}
    TruncatedSeries(const R& c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    static TruncatedSeries zero(int order) {
        TruncatedSeries s;
        s.order_ = check_order(order);
        return s;
    }
    static TruncatedSeries constant(const R& c, int order) {
        TruncatedSeries s(c);
        s.order_ = check_order(order);
        return s;
    }
    static TruncatedSeries monomial(Monomial m, const R& c, int order) {
        trim(m);
        for (int e : m)
            if (e < 0) throw std::invalid_argument("negative exponent in series monomial");
        TruncatedSeries s = zero(order);
        if (!c.is_zero() && mono_degree(m) <= order) s.terms_.emplace(std::move(m), c);
        return s;
    }

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    R coeff(const Monomial& m) const {
        Monomial t = m;
        trim(t);
        auto it = terms_.find(t);
        return it == terms_.end() ? R() : it->second;
    }

    TruncatedSeries truncated(int order) const {
        TruncatedSeries s = zero(std::min(order, order_));
        for (auto& [m, c] : terms_)
            if (mono_degree(m) <= s.order_) s.terms_.emplace(m, c);
        return s;
    }

    template <class F>
    TruncatedSeries map_coeffs(F&& f) const {
        TruncatedSeries s = zero(order_);
        for (auto& [m, c] : terms_) {
            R v = f(m, c);
            if (!v.is_zero()) s.terms_.emplace(m, std::move(v));
        }
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        order_ = std::min(order_, o.order_);
        drop_above();
        for (auto& [m, c] : o.terms_)
            if (mono_degree(m) <= order_) add_term(m, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    TruncatedSeries& operator*=(const R& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second * s;
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = zero(std::min(a.order_, b.order_));
        for (auto& [ma, ca] : a.terms_) {
            int da = mono_degree(ma);
            if (da > r.order_) continue;
            for (auto& [mb, cb] : b.terms_) {
                if (da + mono_degree(mb) > r.order_) continue;
                r.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        return r;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const R& s) { return a *= s; }
    friend TruncatedSeries operator*(const R& s, TruncatedSeries a) { return a *= s; }

    // Equal as series up to the smaller of the two orders.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return first_difference(a, b) == std::nullopt;
    }

    // First monomial (in map order) on which a and b differ, up to min order.
    friend std::optional<Monomial> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order_, b.order_);
        std::map<Monomial, int> keys;
        for (auto& [m, c] : a.terms_)
            if (mono_degree(m) <= n) keys[m];
        for (auto& [m, c] : b.terms_)
            if (mono_degree(m) <= n) keys[m];
        for (auto& [m, unused] : keys)
            if (!(a.coeff(m) == b.coeff(m))) return m;
        return std::nullopt;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        return order;
    }
    void drop_above() {
        if (order_ == kUnbounded) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (mono_degree(it->first) > order_) it = terms_.erase(it);
            else ++it;
        }
    }
    void add_term(const Monomial& m, const R& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int order_ = kUnbounded;
    Terms terms_;
};

// sum_{j >= 1} x^j truncated at total degree N, i.e. x/(1-x).
template <class R = Rational>
TruncatedSeries<R> series_geom(const Monomial& x, int N) {
    Monomial base = x;
    trim(base);
    for (int e : base)
        if (e < 0) throw std::invalid_argument("non-effective expansion monomial");
    int d = mono_degree(base);
    if (d == 0) throw std::invalid_argument("non-effective expansion monomial");
    TruncatedSeries<R> s = TruncatedSeries<R>::zero(N);
    Monomial p = base;
    for (int j = 1; j * d <= N; ++j) {
        s += TruncatedSeries<R>::monomial(p, R(1), N);
        p = mono_mul(p, base);
    }
    return s;
}

// <c_1(E_i), d> for d = sum_k m_k (e_k - e_{k+1}); i is 1-based, 1..l.
inline int series_log_derivative(int i, const Monomial& m, int l) {
    if (i < 1 || i > l) throw std::out_of_range("divisor index out of range");
    auto at = [&](int k) { return (k >= 1 && k <= l - 1) ? mono_exp(m, static_cast<std::size_t>(k - 1)) : 0; };
    return at(i) - at(i - 1);
}

// q d/dq^{e_i} applied monomial-wise.
template <class R>
TruncatedSeries<R> log_derivative(const TruncatedSeries<R>& s, int i, int l) {
    return s.map_coeffs([&](const Monomial& m, const R& c) { return c * R(series_log_derivative(i, m, l)); });
}

inline std::string u_monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "u" + std::to_string(k + 1);
        if (m[k] != 1) s += "^" + std::to_string(m[k]);
    }
    return s.empty() ? "1" : s;
}

// Exponent vector (in u-variables) of e_a - e_b for 1 <= a < b <= l.
inline Monomial u_exponent(int a, int b) {
    if (a >= b) throw std::invalid_argument("u_exponent needs a < b");
    Monomial m(static_cast<std::size_t>(b - 1), 0);
    for (int k = a; k < b; ++k) m[static_cast<std::size_t>(k - 1)] = 1;
    trim(m);
    return m;
}

}  // namespace qgrkz
