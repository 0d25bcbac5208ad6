#pragma once

#include "qgrkz/exactalg/matrix.hpp"
#include "qgrkz/kzrep/minuscule_rep.hpp"
#include "qgrkz/slice/fixed_points.hpp"

namespace qgrkz {

// Trigonometric KZ operators on V(lambda_1) x ... x V(lambda_l)[mu], in the
// tensor basis v_{nu_1} x ... x v_{nu_l}. Only the weight-mu block exists.
class KZSystem {
public:
    KZSystem(SliceProblem P, Chamber C) : P_(std::move(P)), C_(std::move(C)) {
        const auto& D = *P_.datum;
        if (!D.simply_laced()) throw std::invalid_argument("KZ operators are only defined here for simply-laced types");
        basis_ = enumerate_fixed_points(P_);
        for (std::size_t b = 0; b < basis_.size(); ++b) index_[basis_[b].delta] = b;
        for (auto& lam : P_.lambdas) {
            bool have = false;
            for (auto& r : reps_) have = have || r.highest() == lam;
            if (!have) reps_.emplace_back(C_, lam);
        }
        // form on the root span: (a_i, a_j) = A_ij / d_i; its inverse gives (.,.) on weights
        detail::QMatrix Mf(D.rank, std::vector<Rational>(D.rank));
        for (int i = 0; i < D.rank; ++i)
            for (int j = 0; j < D.rank; ++j) Mf[i][j] = Rational(D.A[i][j]) / Rational(D.d[i]);
        dual_form_ = detail::inverse(Mf);
    }

    const SliceProblem& problem() const { return P_; }
    const Chamber& chamber() const { return C_; }
    const CartanDatum& datum() const { return *P_.datum; }
    std::size_t size() const { return basis_.size(); }
    int l() const { return P_.l(); }
    const std::vector<FixedPoint>& basis() const { return basis_; }

    const MinusculeRep& rep(int slot) const {
        for (auto& r : reps_)
            if (r.highest() == P_.lambdas.at(slot - 1)) return r;
        throw std::logic_error("missing representation");
    }

    // e_gamma on slot i, e_{-gamma} on slot j (simply-laced: this is Omega_gamma).
    OperatorMatrix<Rational> casimir_root(int i, int j, std::size_t gamma) const {
        check_slots(i, j);
        std::size_t neg = datum().negative_of(gamma);
        OperatorMatrix<Rational> m(size());
        for (std::size_t b = 0; b < size(); ++b) {
            const auto& nu = basis_[b].delta;
            auto x = rep(i).act(gamma, nu[i - 1]);
            if (!x) continue;
            auto y = rep(j).act(neg, nu[j - 1]);
            if (!y) continue;
            auto t = nu;
            t[i - 1] = x->first;
            t[j - 1] = y->first;
            m(index_.at(t), b) += x->second * y->second;
        }
        return m;
    }

    // (nu_i, nu_j) through the dual basis of the Cartan subalgebra
    OperatorMatrix<Rational> casimir_zero(int i, int j) const {
        check_slots(i, j);
        OperatorMatrix<Rational> m(size());
        for (std::size_t b = 0; b < size(); ++b) m(b, b) = dual_pair(basis_[b].delta[i - 1], basis_[b].delta[j - 1]);
        return m;
    }

    // sum_k [h^k + (hbar/2) <mu, h^k>] h^i_k on the weight-mu space
    OperatorMatrix<EqPolynomial> hat_h(int i) const {
        check_slot(i);
        int r = datum().rank;
        OperatorMatrix<EqPolynomial> m(size());
        for (std::size_t b = 0; b < size(); ++b) {
            const Coweight& nu = basis_[b].delta[i - 1];
            EqPolynomial h;
            for (int k = 0; k < r; ++k) {
                if (nu[k] == 0) continue;
                // h^k = sum_l dual_form[l][k] a_l
                std::vector<Rational> coeffs(r);
                Rational muk;
                for (int t = 0; t < r; ++t) {
                    coeffs[t] = dual_form_[t][k];
                    muk += dual_form_[t][k] * Rational(P_.mu[t]);
                }
                EqPolynomial hk = EqPolynomial::linear(coeffs) + EqPolynomial::variable(r, muk / Rational(2));
                h += hk * Rational(nu[k]);
            }
            m(b, b) = h;
        }
        return m;
    }

    OperatorMatrix<Rational> omega_chamber(int i, int j, const Chamber& S) const {
        OperatorMatrix<Rational> m = casimir_zero(i, j) * Rational(1, 2);
        for (std::size_t k = 0; k < datum().num_roots(); ++k)
            if (S.positive(k)) m += casimir_root(i, j, k);
        return m;
    }
    OperatorMatrix<Rational> omega_chamber(int i, int j, bool opposite = false) const {
        return omega_chamber(i, j, opposite ? C_.opposite() : C_);
    }
    OperatorMatrix<Rational> omega_full(int i, int j) const {
        return omega_chamber(i, j, false) + omega_chamber(i, j, true);
    }

    // Non-derivative part of the shifted KZ operator in direction i,
    // z_i -> q^{e_i}, fractions expanded in the u-variables.
    OperatorMatrix<SeriesRF> kz_matrix(int i, int N) const {
        check_slot(i);
        EqRationalFunction h(EqPolynomial::variable(datum().rank));
        OperatorMatrix<SeriesRF> m = to_series(to_rf(hat_h(i)), N);
        auto lift = [&](const OperatorMatrix<Rational>& a, const SeriesRF& s) {
            return a.map([&](const Rational& x) { return x.is_zero() ? SeriesRF::zero(N) : s * (h * EqRationalFunction(x)); });
        };
        SeriesRF one = SeriesRF::constant(EqRationalFunction(1), N);
        for (int j = 1; j <= l(); ++j) {
            if (j == i) continue;
            if (j < i) {
                m += lift(omega_chamber(j, i, true), one);
                if (N > 0) m += lift(omega_full(i, j), series_geom<EqRationalFunction>(u_exponent(j, i), N));
            } else {
                m -= lift(omega_chamber(i, j, true), one);
                if (N > 0) m -= lift(omega_full(i, j), series_geom<EqRationalFunction>(u_exponent(i, j), N));
            }
        }
        return m;
    }

    // Composite e_gamma (slot i) e_{-gamma} (slot j) evaluated with the
    // dense representation matrices on each basis vector.
    OperatorMatrix<Rational> casimir_root_dense(int i, int j, std::size_t gamma) const {
        check_slots(i, j);
        std::size_t neg = datum().negative_of(gamma);
        OperatorMatrix<Rational> m(size());
        const auto& Ei = rep(i).root_matrix(gamma);
        const auto& Fj = rep(j).root_matrix(neg);
        for (std::size_t b = 0; b < size(); ++b) {
            const auto& nu = basis_[b].delta;
            std::size_t ai = *rep(i).find(nu[i - 1]), aj = *rep(j).find(nu[j - 1]);
            for (std::size_t x = 0; x < rep(i).dim(); ++x) {
                if (Ei[x][ai].is_zero()) continue;
                for (std::size_t y = 0; y < rep(j).dim(); ++y) {
                    if (Fj[y][aj].is_zero()) continue;
                    auto t = nu;
                    t[i - 1] = rep(i).weights()[x];
                    t[j - 1] = rep(j).weights()[y];
                    auto it = index_.find(t);
                    if (it == index_.end()) throw std::logic_error("composite leaves the weight space");
                    m(it->second, b) += Ei[x][ai] * Fj[y][aj];
                }
            }
        }
        return m;
    }

    // Support of the orbit-shift rule: nu_i + gamma in W lambda_i and nu_j - gamma in W lambda_j.
    bool orbit_shift(int i, int j, std::size_t gamma, std::size_t b) const {
        const auto& nu = basis_.at(b).delta;
        const auto& g = datum().roots[gamma].coroot;
        Coweight a = nu[i - 1], c = nu[j - 1];
        for (int t = 0; t < datum().rank; ++t) {
            a[t] += g[t];
            c[t] -= g[t];
        }
        return rep(i).find(a) && rep(j).find(c);
    }

private:
    Rational dual_pair(const Coweight& x, const Coweight& y) const {
        Rational s;
        int r = datum().rank;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                if (x[a] != 0 && y[b] != 0) s += Rational(x[a] * y[b]) * dual_form_[a][b];
        return s;
    }
    void check_slot(int i) const {
        if (i < 1 || i > l()) throw std::out_of_range("slot index out of range: " + std::to_string(i));
    }
    void check_slots(int i, int j) const {
        check_slot(i);
        check_slot(j);
        if (i == j) throw std::invalid_argument("slot indices must differ");
    }

    SliceProblem P_;
    Chamber C_;
    std::vector<FixedPoint> basis_;
    std::map<std::vector<Coweight>, std::size_t> index_;
    std::vector<MinusculeRep> reps_;
    detail::QMatrix dual_form_;
};

}  // namespace qgrkz
