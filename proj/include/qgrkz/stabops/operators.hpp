#pragma once

#include "qgrkz/exactalg/matrix.hpp"
#include "qgrkz/rootsys/chamber.hpp"
#include "qgrkz/slice/fixed_points.hpp"
#include "qgrkz/stabops/form_product.hpp"

#include <tuple>

namespace qgrkz {

enum class QuantumPath { sum, closed };

// (q, p) with q = p after delta_i += gamma, delta_j -= gamma.
struct Exchange {
    std::size_t p, q;
};

// Stable-basis operators for a fixed chamber C with the canonical
// polarization eps_p = e(N^{-C}_p).
class StableOps {
public:
    StableOps(const SliceModel& M, Chamber C) : M_(M), C_(std::move(C)) {
        if (C_.datum().name() != M_.datum().name()) throw std::invalid_argument("chamber and problem use different root data");
    }

    const SliceModel& model() const { return M_; }
    const Chamber& chamber() const { return C_; }
    const CartanDatum& datum() const { return M_.datum(); }
    std::size_t size() const { return M_.size(); }
    int l() const { return M_.l(); }
    std::size_t hbar_index() const { return static_cast<std::size_t>(datum().rank); }
    EqPolynomial hbar() const { return EqPolynomial::variable(hbar_index()); }

    // prod over roots b with <xi_X, b> < 0 of b^{mult_A(b at p)}
    FormProduct euler_neg(std::size_t p, const Chamber& X) const {
        const auto& D = datum();
        FormProduct f;
        for (std::size_t k = 0; k < D.num_roots(); ++k)
            if (!X.positive(k)) f *= FormProduct::root_power(D, k, M_.a_multiplicity(p, k));
        return f;
    }
    FormProduct polarization(std::size_t p) const { return euler_neg(p, C_); }

    // Pairs (p, q) exchanged by gamma between slots i and j (1-based).
    std::vector<Exchange> exchanges(int i, int j, std::size_t gamma) const {
        check_slots(i, j);
        const auto& D = datum();
        std::vector<Exchange> out;
        for (std::size_t p = 0; p < size(); ++p) {
            const auto& dp = M_.point(p).delta;
            if (D.pair(dp[i - 1], gamma) != -1 || D.pair(dp[j - 1], gamma) != 1) continue;
            auto dq = dp;
            const auto& g = D.roots[gamma].coroot;
            for (int t = 0; t < D.rank; ++t) {
                dq[i - 1][t] += g[t];
                dq[j - 1][t] -= g[t];
            }
            auto q = M_.find(dq);
            if (!q) throw std::logic_error("exchanged path is not a fixed point");
            out.push_back({p, *q});
        }
        return out;
    }

    // If p and q differ by a root exchange between two slots, that root.
    std::optional<std::size_t> connecting_root(std::size_t p, std::size_t q) const {
        const auto& D = datum();
        const auto& a = M_.point(p).delta;
        const auto& b = M_.point(q).delta;
        std::vector<int> diff;
        for (int s = 0; s < l(); ++s)
            if (a[s] != b[s]) diff.push_back(s);
        if (diff.size() != 2) return std::nullopt;
        Coweight g(D.rank);
        for (int t = 0; t < D.rank; ++t) g[t] = b[diff[0]][t] - a[diff[0]][t];
        for (std::size_t k = 0; k < D.num_roots(); ++k)
            if (D.roots[k].coroot == g) {
                for (int t = 0; t < D.rank; ++t)
                    if (b[diff[1]][t] - a[diff[1]][t] != -g[t]) return std::nullopt;
                return k;
            }
        return std::nullopt;
    }

    // Euler-class ratio e(N^{-Ct}_p) / e(N^{-Ct}_q) for Ct adjacent to ker(gamma).
    FormProduct euler_ratio(std::size_t p, std::size_t q, std::size_t gamma, int side = 1, int salt = 0) const {
        const Chamber& Ct = adjacent(gamma, side, salt);
        return euler_neg(p, Ct) / euler_neg(q, Ct);
    }

    // Cached; not safe to share one StableOps across threads.
    const Chamber& adjacent(std::size_t gamma, int side, int salt) const {
        auto key = std::make_tuple(gamma, side, salt);
        auto it = adjacent_.find(key);
        if (it == adjacent_.end()) it = adjacent_.emplace(key, C_.adjacent(gamma, side, salt)).first;
        return it->second;
    }

    // sigma_{p,q} = [eps_p / e(N^{-Ct}_p)] [e(N^{-Ct}_q) / eps_q]
    int sigma_sign(std::size_t p, std::size_t q, std::size_t gamma, int side = 1, int salt = 0) const {
        auto r = connecting_root(p, q);
        const auto& D = datum();
        if (!r || (*r != gamma && *r != D.negative_of(gamma)))
            throw std::invalid_argument("fixed points are not related by the given root");
        FormProduct f = (polarization(p) / polarization(q)) / euler_ratio(p, q, gamma, side, salt);
        auto s = f.as_sign();
        if (!s) throw std::logic_error("sign ratio is not +-1: " + f.str(D));
        return *s * M_.conventions().sigma_flip;
    }

    OperatorMatrix<Rational> omega_root(int i, int j, std::size_t gamma) const {
        OperatorMatrix<Rational> m(size());
        Rational half = datum().roots.at(gamma).norm / Rational(2);
        for (auto [p, q] : exchanges(i, j, gamma)) m(q, p) = half * Rational(sigma_sign(p, q, gamma));
        return m;
    }

    OperatorMatrix<Rational> omega_zero(int i, int j) const {
        check_slot(i);
        check_slot(j);
        OperatorMatrix<Rational> m(size());
        for (std::size_t p = 0; p < size(); ++p) {
            const auto& d = M_.point(p).delta;
            m(p, p) = datum().form(d[i - 1], d[j - 1]);
        }
        return m;
    }

    OperatorMatrix<Rational> k_term(int i, int j) const {
        check_slot(i);
        check_slot(j);
        const auto& lam = M_.problem().lambdas;
        return OperatorMatrix<Rational>::identity(size(), datum().form(lam[i - 1], lam[j - 1]));
    }

    // (delta_i, .) + (hbar/2)(delta_i, mu), linear forms in a_1..a_r, hbar
    OperatorMatrix<EqPolynomial> h_term(int i) const {
        check_slot(i);
        const auto& D = datum();
        OperatorMatrix<EqPolynomial> m(size());
        for (std::size_t p = 0; p < size(); ++p) {
            Weight w = M_.bundle_weight(p, i, 'E');
            EqPolynomial h = EqPolynomial::linear(w.c);
            h += EqPolynomial::variable(hbar_index(), D.form(M_.point(p).delta[i - 1], M_.problem().mu) / Rational(2));
            m(p, p) = h;
        }
        return m;
    }

    // 1/2 Omega_0 + sum over S-positive gamma of Omega_gamma; signs always
    // come from the basis chamber C.
    OperatorMatrix<Rational> omega_chamber(int i, int j, const Chamber& S) const {
        check_slots(i, j);
        OperatorMatrix<Rational> m = omega_zero(i, j) * Rational(1, 2);
        for (std::size_t k = 0; k < datum().num_roots(); ++k)
            if (S.positive(k)) m += omega_root(i, j, k);
        return m;
    }
    OperatorMatrix<Rational> omega_chamber(int i, int j, bool opposite = false) const {
        return omega_chamber(i, j, opposite ? C_.opposite() : C_);
    }
    // Omega_C + Omega_{-C}
    OperatorMatrix<Rational> omega_full(int i, int j) const {
        return omega_chamber(i, j, false) + omega_chamber(i, j, true);
    }

    // Off-diagonal: sum of omega_root over roots of the kind. Diagonal at p:
    // tilde_diagonal_sign * (gamma,gamma)/2 * sum_q e(N^{-Ct}_p)/e(N^{-Ct}_q).
    OperatorMatrix<EqRationalFunction> omega_tilde(int i, int j, bool long_kind) const {
        check_slots(i, j);
        const auto& D = datum();
        OperatorMatrix<EqRationalFunction> m(size());
        int sgn = M_.conventions().tilde_diagonal_sign;
        for (std::size_t k = 0; k < D.num_roots(); ++k) {
            if (D.roots[k].long_coroot != long_kind) continue;
            Rational half = D.roots[k].norm / Rational(2);
            for (auto [p, q] : exchanges(i, j, k)) {
                m(q, p) += EqRationalFunction(half * Rational(sigma_sign(p, q, k)));
                EqRationalFunction ratio = euler_ratio(p, q, k).to_rf(D);
                m(p, p) += ratio * EqRationalFunction(half * Rational(sgn));
            }
        }
        return m;
    }

    OperatorMatrix<EqPolynomial> classical(int i) const {
        check_slot(i);
        EqPolynomial h = hbar();
        auto lift = [&](const OperatorMatrix<Rational>& a) {
            return a.map([&](const Rational& x) { return x.is_zero() ? EqPolynomial() : h * x; });
        };
        OperatorMatrix<EqPolynomial> m = h_term(i);
        for (int j = 1; j <= l(); ++j) {
            if (j < i) m += lift(omega_chamber(j, i, true));
            if (j > i) m -= lift(omega_chamber(i, j, true));
        }
        return m;
    }

    OperatorMatrix<SeriesRF> purely_quantum(int i, int N) const {
        check_slot(i);
        EqRationalFunction h(hbar());
        OperatorMatrix<SeriesRF> m(size(), SeriesRF::zero(N));
        if (N == 0) return m;
        for (int j = 1; j <= l(); ++j) {
            if (j == i) continue;
            int a = std::min(i, j), b = std::max(i, j);
            Monomial d = u_exponent(a, b);
            SeriesRF g1 = series_geom<EqRationalFunction>(d, N);
            SeriesRF g2 = series_geom<EqRationalFunction>(mono_mul(d, d), N);
            auto term = scale(omega_tilde(a, b, false), g1) + scale(omega_tilde(a, b, true), g2);
            term *= SeriesRF(j > i ? -h : h);
            m += term;
        }
        return m;
    }

    // q d_i psi for psi = -hbar sum_{a<b} (lambda_a, lambda_b) ln(1 - q^{e_a - e_b})
    SeriesRF gauge_term(int i, int N) const {
        check_slot(i);
        const auto& lam = M_.problem().lambdas;
        SeriesRF s = SeriesRF::zero(N);
        if (N == 0) return s;
        EqRationalFunction h(hbar());
        for (int j = 1; j <= l(); ++j) {
            if (j == i) continue;
            Rational K = datum().form(lam[i - 1], lam[j - 1]);
            if (K.is_zero()) continue;
            int a = std::min(i, j), b = std::max(i, j);
            SeriesRF g = series_geom<EqRationalFunction>(u_exponent(a, b), N);
            EqRationalFunction c = h * EqRationalFunction(K);
            s += g * (j < i ? -c : c);
        }
        return s;
    }

    OperatorMatrix<SeriesRF> quantum(int i, int N, QuantumPath path = QuantumPath::sum) const {
        if (path == QuantumPath::sum) return to_series(to_rf(classical(i)), N) + purely_quantum(i, N);
        return quantum_closed(i, N);
    }

    // A_i with nabla_i = q d_i - A_i; hatted subtracts q d_i psi.
    OperatorMatrix<SeriesRF> connection(int i, int N, bool hatted, QuantumPath path = QuantumPath::sum) const {
        OperatorMatrix<SeriesRF> A = quantum(i, N, path);
        if (!hatted) return A;
        SeriesRF g = gauge_term(i, N) * EqRationalFunction(Rational(M_.conventions().gauge_sign));
        for (std::size_t p = 0; p < size(); ++p) A(p, p) = A(p, p) - g;
        return A;
    }

private:
    // hbar (q^{e_i} X + q^{e_j} Y)/(q^{e_i} - q^{e_j}) - hbar K-term, each
    // fraction rewritten in the small variable before expansion.
    OperatorMatrix<SeriesRF> quantum_closed(int i, int N) const {
        if (!datum().simply_laced()) throw std::invalid_argument("KZ closed form requires simply-laced");
        check_slot(i);
        EqRationalFunction h(hbar());
        OperatorMatrix<SeriesRF> m = to_series(to_rf(h_term(i)), N);
        auto lift = [&](const OperatorMatrix<Rational>& a, const SeriesRF& s) {
            return a.map([&](const Rational& x) { return x.is_zero() ? SeriesRF::zero(N) : s * (h * EqRationalFunction(x)); });
        };
        SeriesRF one = SeriesRF::constant(EqRationalFunction(1), N);
        for (int j = 1; j <= l(); ++j) {
            if (j == i) continue;
            auto OC = omega_chamber(i, j, false);
            auto ON = omega_chamber(i, j, true);
            auto K = k_term(i, j);
            if (j > i) {
                // u = q^{e_i - e_j}: (u X + Y)/(u - 1) = -g X - (1 + g) Y; -u K/(u - 1) = g K
                SeriesRF g = series_geom<EqRationalFunction>(u_exponent(i, j), N);
                m += lift(OC, -g) + lift(ON, -(one + g)) + lift(K, g);
            } else {
                // v = q^{e_j - e_i}: (X + v Y)/(1 - v) = (1 + g) X + g Y; -v K/(1 - v) = -g K
                SeriesRF g = series_geom<EqRationalFunction>(u_exponent(j, i), N);
                m += lift(OC, one + g) + lift(ON, g) + lift(K, -g);
            }
        }
        return m;
    }

    void check_slot(int i) const {
        if (i < 1 || i > l()) throw std::out_of_range("slot index out of range: " + std::to_string(i));
    }
    void check_slots(int i, int j) const {
        check_slot(i);
        check_slot(j);
        if (i == j) throw std::invalid_argument("slot indices must differ");
    }

    const SliceModel& M_;
    Chamber C_;
    mutable std::map<std::tuple<std::size_t, int, int>, Chamber> adjacent_;
};

}  // namespace qgrkz
