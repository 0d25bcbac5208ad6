#pragma once

#include "qgrkz/conventions.hpp"
#include "qgrkz/slice/problem.hpp"

#include <optional>

namespace qgrkz {

struct FixedPoint {
    std::vector<Coweight> delta;  // delta_1..delta_l
    std::vector<Coweight> sigma;  // sigma_0 = 0, ..., sigma_l = mu
    friend bool operator==(const FixedPoint& a, const FixedPoint& b) { return a.delta == b.delta; }
};

// Paths 0 -> mu with steps delta_i in W lambda_i, ordered lexicographically
// by the position of each step in its (descending) orbit.
inline std::vector<FixedPoint> enumerate_fixed_points(const SliceProblem& P) {
    P.validate();
    const auto& D = *P.datum;
    int l = P.l(), r = D.rank;
    std::vector<std::vector<Coweight>> orbits;
    for (auto& lam : P.lambdas) orbits.push_back(D.weyl_orbit(lam));

    // reach[i]: partial sums sigma_i from which mu is still reachable
    std::vector<std::set<Coweight>> reach(l + 1);
    reach[l].insert(P.mu);
    for (int i = l - 1; i >= 0; --i)
        for (auto& s : reach[i + 1])
            for (auto& v : orbits[i]) {
                Coweight t = s;
                for (int k = 0; k < r; ++k) t[k] -= v[k];
                reach[i].insert(t);
            }

    std::vector<FixedPoint> out;
    FixedPoint cur;
    cur.sigma.push_back(Coweight(r, 0));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) {
            out.push_back(cur);
            return;
        }
        for (auto& v : orbits[i]) {
            Coweight s = cur.sigma.back();
            for (int k = 0; k < r; ++k) s[k] += v[k];
            if (!reach[i + 1].count(s)) continue;
            cur.delta.push_back(v);
            cur.sigma.push_back(s);
            self(self, i + 1);
            cur.delta.pop_back();
            cur.sigma.pop_back();
        }
    };
    if (reach[0].count(Coweight(r, 0))) rec(rec, 0);
    return out;
}

// One tangent weight root + n*hbar with multiplicity.
struct TangentWeight {
    std::size_t root;
    int n;
    int mult;
};

// Fixed points plus per-point tangent data. Immutable once built.
class SliceModel {
public:
    explicit SliceModel(SliceProblem P, Conventions conv = {}) : P_(std::move(P)), conv_(conv) {
        points_ = enumerate_fixed_points(P_);
        for (std::size_t k = 0; k < points_.size(); ++k) index_[points_[k].delta] = k;
        const auto& D = *P_.datum;
        for (auto& p : points_) {
            std::map<std::pair<std::size_t, int>, int> tw;
            std::vector<int> am(D.num_roots(), 0);
            for (std::size_t k = 0; k < D.num_roots(); ++k) {
                for (int s = 1; s <= P_.l(); ++s) {
                    int a = D.pair(p.sigma[s - 1], k), b = D.pair(p.sigma[s], k);
                    int n = 0;
                    bool hit = false;
                    if (conv_.crossing_toward_origin) {
                        if (b == a - 1 && b >= 0) { n = b; hit = true; }
                        if (b == a + 1 && a < 0) { n = a; hit = true; }
                    } else {
                        if (b == a + 1 && a >= 0) { n = a; hit = true; }
                        if (b == a - 1 && b < 0) { n = b; hit = true; }
                    }
                    if (hit) {
                        ++tw[{k, n}];
                        ++am[k];
                    }
                }
            }
            std::vector<TangentWeight> v;
            for (auto& [key, m] : tw) v.push_back({key.first, key.second, m});
            tangent_.push_back(std::move(v));
            amult_.push_back(std::move(am));
        }
    }

    const SliceProblem& problem() const { return P_; }
    const CartanDatum& datum() const { return *P_.datum; }
    const Conventions& conventions() const { return conv_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<FixedPoint>& points() const { return points_; }
    const FixedPoint& point(std::size_t k) const { return points_.at(k); }
    int l() const { return P_.l(); }

    std::optional<std::size_t> find(const std::vector<Coweight>& delta) const {
        auto it = index_.find(delta);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<TangentWeight>& tangent_weights(std::size_t p) const { return tangent_.at(p); }

    // Multiplicity of root k + n hbar in T_p X (crossing rule).
    int tangent_multiplicity(std::size_t p, std::size_t k, int n) const {
        for (auto& t : tangent_.at(p))
            if (t.root == k && t.n == n) return t.mult;
        return 0;
    }
    int tangent_multiplicity(std::size_t p, const Weight& chi, bool strict = false) const {
        int k = datum().find_root(chi);
        if (k < 0) {
            if (strict) throw std::invalid_argument("weight is not an affine root");
            return 0;
        }
        return tangent_multiplicity(p, static_cast<std::size_t>(k), chi.n);
    }

    // A-multiplicity of root k: crossing-rule multiplicities summed over n.
    int a_multiplicity(std::size_t p, std::size_t k) const { return amult_.at(p).at(k); }

    // #{i : <delta_i, root> = -1} for positive roots, mirrored for negative ones.
    int pairing_count(std::size_t p, std::size_t k) const {
        const auto& D = datum();
        std::size_t kp = D.roots[k].positive ? k : D.negative_of(k);
        int c = 0;
        for (auto& d : points_.at(p).delta)
            if (D.pair(d, kp) == -1) ++c;
        return c;
    }

    int tangent_dimension(std::size_t p) const {
        int s = 0;
        for (auto& t : tangent_.at(p)) s += t.mult;
        return s;
    }

    // Weight chi with <eta, chi> = (sigma_i, eta) (kind L) or (delta_i, eta) (kind E).
    Weight bundle_weight(std::size_t p, int i, char kind) const {
        const auto& D = datum();
        const auto& pt = points_.at(p);
        const Coweight* v = nullptr;
        if (kind == 'L') {
            if (i < 0 || i > l()) throw std::out_of_range("L-bundle index out of range");
            v = &pt.sigma[i];
        } else if (kind == 'E') {
            if (i < 1 || i > l()) throw std::out_of_range("E-bundle index out of range");
            v = &pt.delta[i - 1];
        } else {
            throw std::invalid_argument("bundle kind must be L or E");
        }
        Weight w;
        w.c.assign(D.rank, Rational(0));
        for (int k = 0; k < D.rank; ++k)
            for (int j = 0; j < D.rank; ++j) w.c[k] += Rational((*v)[j]) * D.G[j][k];
        return w;
    }

private:
    SliceProblem P_;
    Conventions conv_;
    std::vector<FixedPoint> points_;
    std::map<std::vector<Coweight>, std::size_t> index_;
    std::vector<std::vector<TangentWeight>> tangent_;
    std::vector<std::vector<int>> amult_;
};

}  // namespace qgrkz
