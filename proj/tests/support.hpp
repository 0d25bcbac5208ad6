#pragma once

#include "qgrkz/verify/checks.hpp"

#include <random>

namespace qgrkz::test {

// lambdas given as fundamental indices (1-based), mu in fundamental coordinates
inline SliceProblem problem(const std::string& id, std::vector<int> lambdas, Coweight mu) {
    SliceProblem P;
    P.datum = build_datum(id);
    for (int i : lambdas) P.lambdas.push_back(P.datum->fundamental(i));
    P.mu = std::move(mu);
    P.validate();
    return P;
}

inline Chamber standard(const SliceProblem& P) { return Chamber::standard(P.datum); }

// c * x_k in the equivariant ring (k = rank means hbar)
inline EqPolynomial var(std::size_t k, Rational c = 1) { return EqPolynomial::variable(k, c); }

inline EqRationalFunction rf(const EqPolynomial& p) { return EqRationalFunction(p); }

inline Monomial u(std::initializer_list<int> e) {
    Monomial m(e);
    trim(m);
    return m;
}

inline std::size_t at(const SliceModel& M, std::vector<Coweight> delta) {
    auto k = M.find(delta);
    if (!k) throw std::invalid_argument("no such fixed point");
    return *k;
}

// Random valid instance: minuscule lambdas, dominant mu reachable from the sum.
template <class Rng>
SliceProblem random_problem(Rng& rng, const std::vector<std::string>& ids, int max_l) {
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    for (;;) {
        auto D = build_datum(ids[pick(rng)]);
        std::vector<int> mins;
        for (int i = 1; i <= D->rank; ++i)
            if (D->is_minuscule(D->fundamental(i))) mins.push_back(i);
        std::uniform_int_distribution<int> len(1, max_l);
        std::uniform_int_distribution<std::size_t> which(0, mins.size() - 1);
        SliceProblem P;
        P.datum = D;
        int l = len(rng);
        for (int k = 0; k < l; ++k) P.lambdas.push_back(D->fundamental(mins[which(rng)]));
        auto doms = dominant_weights(*D, P.lambdas);
        if (doms.empty()) continue;
        std::uniform_int_distribution<std::size_t> dm(0, doms.size() - 1);
        P.mu = doms[dm(rng)];
        try {
            P.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (tensor_weight_multiplicity(P) == 0) continue;
        return P;
    }
}

}  // namespace qgrkz::test
