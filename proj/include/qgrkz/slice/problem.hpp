#pragma once

#include "qgrkz/rootsys/cartan.hpp"

#include <map>
#include <set>
#include <sstream>

namespace qgrkz {

struct SliceProblem {
    std::shared_ptr<const CartanDatum> datum;
    std::vector<Coweight> lambdas;
    Coweight mu;

    int l() const { return static_cast<int>(lambdas.size()); }

    Coweight lambda_sum() const {
        Coweight s(datum->rank, 0);
        for (auto& lam : lambdas)
            for (int k = 0; k < datum->rank; ++k) s[k] += lam[k];
        return s;
    }

    // <lambda - mu, 2 rho^vee>
    int dimension() const {
        Coweight s = lambda_sum();
        Rational d;
        for (int k = 0; k < datum->rank; ++k) d += Rational(2) * datum->rho[k] * Rational(s[k] - mu[k]);
        return static_cast<int>(d.to_long());
    }

    // Throws std::invalid_argument naming the violated condition.
    void validate() const {
        if (!datum) throw std::invalid_argument("problem has no root datum");
        if (lambdas.empty()) throw std::invalid_argument("lambdas must be nonempty");
        datum->check_coweight(mu);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            const auto& lam = lambdas[i];
            datum->check_coweight(lam);
            if (!datum->dominant(lam))
                throw std::invalid_argument("lambda_" + std::to_string(i + 1) + " is not dominant");
            if (!datum->is_minuscule(lam))
                throw std::invalid_argument("lambda_" + std::to_string(i + 1) + " is not minuscule");
        }
        if (!datum->dominant(mu)) throw std::invalid_argument("mu is not dominant");
        Coweight diff = lambda_sum();
        for (int k = 0; k < datum->rank; ++k) diff[k] -= mu[k];
        for (auto& c : datum->coroot_coordinates(diff))
            if (!c.is_integer() || c.sign() < 0)
                throw std::invalid_argument("lambda - mu is not a nonnegative integer combination of simple coroots");
        if (dimension() < 0) throw std::invalid_argument("negative dimension");
    }

    std::string str() const {
        std::ostringstream os;
        os << datum->name() << " (";
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            os << (i ? "," : "") << "[";
            for (int k = 0; k < datum->rank; ++k) os << (k ? " " : "") << lambdas[i][k];
            os << "]";
        }
        os << ")/[";
        for (int k = 0; k < datum->rank; ++k) os << (k ? " " : "") << mu[k];
        os << "]";
        return os.str();
    }
};

// dim (V(l_1) x ... x V(l_n))[mu] by convolving weight multisets. Only
// valid for minuscule lambdas, whose weight multisets are their orbits.
inline long long tensor_weight_multiplicity(const SliceProblem& P) {
    std::map<Coweight, long long> acc{{Coweight(P.datum->rank, 0), 1}};
    for (auto& lam : P.lambdas) {
        std::map<Coweight, long long> next;
        auto orbit = P.datum->weyl_orbit(lam);
        for (auto& [w, c] : acc)
            for (auto& v : orbit) {
                Coweight s = w;
                for (int k = 0; k < P.datum->rank; ++k) s[k] += v[k];
                next[s] += c;
            }
        acc = std::move(next);
    }
    auto it = acc.find(P.mu);
    return it == acc.end() ? 0 : it->second;
}

// Every dominant mu with nonzero multiplicity in V(l_1) x ... x V(l_n).
inline std::vector<Coweight> dominant_weights(const CartanDatum& D, const std::vector<Coweight>& lambdas) {
    std::set<Coweight> acc{Coweight(D.rank, 0)};
    for (auto& lam : lambdas) {
        std::set<Coweight> next;
        auto orbit = D.weyl_orbit(lam);
        for (auto& w : acc)
            for (auto& v : orbit) {
                Coweight s = w;
                for (int k = 0; k < D.rank; ++k) s[k] += v[k];
                next.insert(s);
            }
        acc = std::move(next);
    }
    std::vector<Coweight> out;
    for (auto& w : acc)
        if (D.dominant(w)) out.push_back(w);
    return out;
}

}  // namespace qgrkz
