#pragma once

#include "qgrkz/exactalg/rational_function.hpp"
#include "qgrkz/exactalg/series.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgrkz {

template <class R>
concept CoefficientRing = std::regular<R> && requires(R a, R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    R(1);
};

using SeriesRF = TruncatedSeries<EqRationalFunction>;

// Square matrix indexed by fixed points. Entry (q, p) is the coefficient
// of basis vector q in the image of basis vector p.
template <CoefficientRing R>
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(std::size_t n) : n_(n), a_(n * n) {}
    OperatorMatrix(std::size_t n, const R& fill) : n_(n), a_(n * n, fill) {}

    static OperatorMatrix identity(std::size_t n, const R& one = R(1)) {
        OperatorMatrix m(n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = one;
        return m;
    }

    std::size_t size() const { return n_; }
    R& operator()(std::size_t q, std::size_t p) { return a_[q * n_ + p]; }
    const R& operator()(std::size_t q, std::size_t p) const { return a_[q * n_ + p]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t p = 0; p < n_; ++p)
                if (q != p && !(*this)(q, p).is_zero()) return false;
        return true;
    }

    template <class F>
    auto map(F&& f) const {
        using T = std::decay_t<decltype(f(std::declval<const R&>()))>;
        OperatorMatrix<T> r(n_);
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t p = 0; p < n_; ++p) r(q, p) = f((*this)(q, p));
        return r;
    }

    OperatorMatrix transposed() const {
        OperatorMatrix r(n_);
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t p = 0; p < n_; ++p) r(p, q) = (*this)(q, p);
        return r;
    }

    OperatorMatrix& operator+=(const OperatorMatrix& o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!o.a_[k].is_zero()) a_[k] = a_[k] + o.a_[k];
        return *this;
    }
    OperatorMatrix& operator-=(const OperatorMatrix& o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!o.a_[k].is_zero()) a_[k] = a_[k] - o.a_[k];
        return *this;
    }
    OperatorMatrix& operator*=(const R& s) {
        for (auto& x : a_)
            if (!x.is_zero()) x = x * s;
        return *this;
    }

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator-(OperatorMatrix a) {
        for (auto& x : a.a_)
            if (!x.is_zero()) x = -x;
        return a;
    }
    friend OperatorMatrix operator*(OperatorMatrix a, const R& s) { return a *= s; }
    friend OperatorMatrix operator*(const R& s, OperatorMatrix a) { return a *= s; }

    // Composition; zero entries are skipped, which is where the sparsity of
    // the stable-basis operators pays off.
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        a.check(b);
        std::size_t n = a.n_;
        OperatorMatrix r(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t p = 0; p < n; ++p) {
                const R& bkp = b(k, p);
                if (bkp.is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q) {
                    const R& aqk = a(q, k);
                    if (aqk.is_zero()) continue;
                    r(q, p) = r(q, p) + aqk * bkp;
                }
            }
        return r;
    }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        return a.n_ == b.n_ && a.first_difference(b) == std::nullopt;
    }

    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const OperatorMatrix& o) const {
        check(o);
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t p = 0; p < n_; ++p)
                if (!((*this)(q, p) == o(q, p))) return std::make_pair(q, p);
        return std::nullopt;
    }

private:
    void check(const OperatorMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("operator matrix size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<R> a_;
};

template <CoefficientRing R>
OperatorMatrix<R> commutator(const OperatorMatrix<R>& a, const OperatorMatrix<R>& b) {
    return a * b - b * a;
}

// Scalar embeddings along Rational -> EqPolynomial -> EqRationalFunction -> SeriesRF.
inline OperatorMatrix<EqRationalFunction> to_rf(const OperatorMatrix<Rational>& m) {
    return m.map([](const Rational& x) { return EqRationalFunction(x); });
}
inline OperatorMatrix<EqRationalFunction> to_rf(const OperatorMatrix<EqPolynomial>& m) {
    return m.map([](const EqPolynomial& x) { return EqRationalFunction(x); });
}
inline OperatorMatrix<SeriesRF> to_series(const OperatorMatrix<EqRationalFunction>& m, int order) {
    return m.map([order](const EqRationalFunction& x) { return SeriesRF::constant(x, order); });
}

// Every entry of m multiplied by the scalar series s.
inline OperatorMatrix<SeriesRF> scale(const OperatorMatrix<EqRationalFunction>& m, const SeriesRF& s) {
    return m.map([&](const EqRationalFunction& x) { return x.is_zero() ? SeriesRF::zero(s.order()) : s * x; });
}

}  // namespace qgrkz
