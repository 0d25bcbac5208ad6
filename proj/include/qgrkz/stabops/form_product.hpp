#pragma once

#include "qgrkz/exactalg/rational_function.hpp"
#include "qgrkz/rootsys/cartan.hpp"

#include <optional>

namespace qgrkz {

// scalar * prod_k (positive root k)^{e_k}, exponents possibly negative.
// Kept factored so that ratios of Euler classes reduce to signs without
// expanding anything.
struct FormProduct {
    Rational scalar{1};
    std::map<std::size_t, int> factors;

    static FormProduct root_power(const CartanDatum& D, std::size_t k, int e) {
        FormProduct f;
        if (e == 0) return f;
        std::size_t kp = k;
        if (!D.roots.at(k).positive) {
            kp = D.negative_of(k);
            if (e % 2 != 0) f.scalar = -1;
        }
        f.factors[kp] = e;
        return f;
    }

    bool is_constant() const { return factors.empty(); }

    // +1 or -1 when the product is a unit sign.
    std::optional<int> as_sign() const {
        if (!is_constant()) return std::nullopt;
        if (scalar == Rational(1)) return 1;
        if (scalar == Rational(-1)) return -1;
        return std::nullopt;
    }

    FormProduct& operator*=(const FormProduct& o) {
        scalar *= o.scalar;
        for (auto& [k, e] : o.factors) {
            int& x = factors[k];
            x += e;
            if (x == 0) factors.erase(k);
        }
        return *this;
    }
    FormProduct inverse() const {
        FormProduct r;
        r.scalar = Rational(1) / scalar;
        for (auto& [k, e] : factors) r.factors[k] = -e;
        return r;
    }
    friend FormProduct operator*(FormProduct a, const FormProduct& b) { return a *= b; }
    friend FormProduct operator/(FormProduct a, const FormProduct& b) { return a *= b.inverse(); }
    friend bool operator==(const FormProduct&, const FormProduct&) = default;

    // Expanded as a rational function in a_1..a_r.
    EqRationalFunction to_rf(const CartanDatum& D) const {
        EqPolynomial num(scalar), den(1);
        for (auto& [k, e] : factors) {
            std::vector<Rational> c;
            for (int x : D.roots[k].coords) c.emplace_back(x);
            EqPolynomial lin = EqPolynomial::linear(c);
            for (int t = 0; t < std::abs(e); ++t) (e > 0 ? num : den) *= lin;
        }
        return {num, den};
    }

    std::string str(const CartanDatum& D) const {
        std::string s = scalar.pretty();
        for (auto& [k, e] : factors) {
            s += " * (";
            for (int i = 0; i < D.rank; ++i) s += (i ? "," : "") + std::to_string(D.roots[k].coords[i]);
            s += ")^" + std::to_string(e);
        }
        return s;
    }
};

}  // namespace qgrkz
