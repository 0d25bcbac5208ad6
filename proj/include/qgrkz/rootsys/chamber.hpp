#pragma once

#include "qgrkz/rootsys/cartan.hpp"

#include <random>
#include <sstream>

namespace qgrkz {

// Weyl chamber given by a generic coweight-space vector xi.
class Chamber {
public:
    Chamber(std::shared_ptr<const CartanDatum> datum, std::vector<Rational> xi)
        : datum_(std::move(datum)), xi_(std::move(xi)) {
        if (static_cast<int>(xi_.size()) != datum_->rank)
            throw std::invalid_argument("chamber vector has wrong length");
        for (std::size_t k = 0; k < datum_->num_roots(); ++k)
            if (datum_->pair(xi_, k).is_zero())
                throw std::invalid_argument("chamber vector is not generic: it lies on a root hyperplane");
    }

    // xi_k = 1 + k/97: strictly dominant, hence generic.
    static Chamber standard(std::shared_ptr<const CartanDatum> datum) {
        std::vector<Rational> xi;
        for (int k = 0; k < datum->rank; ++k) xi.push_back(Rational(1) + Rational(k, 97));
        return Chamber(std::move(datum), std::move(xi));
    }

    // Random generic vector with small integer coordinates.
    template <class Rng>
    static Chamber random(std::shared_ptr<const CartanDatum> datum, Rng& rng) {
        std::uniform_int_distribution<int> dist(-40, 40);
        for (;;) {
            std::vector<Rational> xi;
            for (int k = 0; k < datum->rank; ++k) xi.push_back(Rational(dist(rng), 7));
            bool generic = true;
            for (std::size_t k = 0; k < datum->num_roots() && generic; ++k)
                generic = !datum->pair(xi, k).is_zero();
            if (generic) return Chamber(datum, std::move(xi));
        }
    }

    const CartanDatum& datum() const { return *datum_; }
    const std::shared_ptr<const CartanDatum>& datum_ptr() const { return datum_; }
    const std::vector<Rational>& xi() const { return xi_; }

    Rational value(std::size_t root) const { return datum_->pair(xi_, root); }
    bool positive(std::size_t root) const { return value(root).sign() > 0; }

    // Positive roots that are not sums of two positive roots.
    std::vector<std::size_t> simple_roots() const {
        const auto& D = *datum_;
        std::vector<std::size_t> pos, out;
        for (std::size_t k = 0; k < D.num_roots(); ++k)
            if (positive(k)) pos.push_back(k);
        std::set<std::vector<int>> sums;
        for (auto a : pos)
            for (auto b : pos) {
                std::vector<int> s(D.rank);
                for (int t = 0; t < D.rank; ++t) s[t] = D.roots[a].coords[t] + D.roots[b].coords[t];
                sums.insert(std::move(s));
            }
        for (auto k : pos)
            if (!sums.count(D.roots[k].coords)) out.push_back(k);
        return out;
    }

    Chamber opposite() const {
        std::vector<Rational> v = xi_;
        for (auto& x : v) x = -x;
        return Chamber(datum_, std::move(v));
    }

    // A chamber adjacent to the wall ker(root). The base point is the
    // projection of xi onto the wall plus an in-wall shift `salt`, then a
    // small push to the requested side (side > 0: root positive).
    Chamber adjacent(std::size_t root, int side, int salt = 0) const {
        const auto& D = *datum_;
        const auto& gam = D.roots.at(root).coroot;  // <gam, root> = 2
        int r = D.rank;
        std::vector<Rational> base = xi_;
        Rational t0 = value(root) / Rational(2);
        for (int i = 0; i < r; ++i) base[i] -= t0 * Rational(gam[i]);
        // in-wall perturbation keeps base generic for every other root
        for (int attempt = 0;; ++attempt) {
            std::vector<Rational> w = base;
            for (int i = 0; i < r; ++i) {
                Rational e(static_cast<long>((i + 1) * (salt + attempt + 1)), 1009L + 17 * i);
                w[i] += e;
            }
            Rational s = D.pair(w, root) / Rational(2);
            for (int i = 0; i < r; ++i) w[i] -= s * Rational(gam[i]);
            bool ok = true;
            Rational mn, mx;
            for (std::size_t k = 0; k < D.num_roots(); ++k) {
                if (k == root || k == D.negative_of(root)) continue;
                Rational v = abs(D.pair(w, k));
                if (v.is_zero()) { ok = false; break; }
                if (mn.is_zero() || v < mn) mn = v;
            }
            if (!ok) continue;
            if (mn.is_zero()) mn = 1;  // no other walls (rank one)
            for (std::size_t k = 0; k < D.num_roots(); ++k) {
                Rational v(0);
                for (int i = 0; i < r; ++i) v += Rational(D.roots[k].coords[i] * gam[i]);
                v = abs(v);
                if (v > mx) mx = v;
            }
            Rational t = mn / Rational(4) / mx;
            if (side < 0) t = -t;
            for (int i = 0; i < r; ++i) w[i] += t * Rational(gam[i]);
            return Chamber(datum_, std::move(w));
        }
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < xi_.size(); ++i) os << (i ? "," : "") << xi_[i].pretty();
        return os.str();
    }

private:
    std::shared_ptr<const CartanDatum> datum_;
    std::vector<Rational> xi_;
};

}  // namespace qgrkz
