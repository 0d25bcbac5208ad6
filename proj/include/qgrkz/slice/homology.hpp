#pragma once

#include "qgrkz/rootsys/chamber.hpp"
#include "qgrkz/slice/curves.hpp"

namespace qgrkz {

// ind(p) = #{weights with n < 0} + #{weights with n = 0 and <xi, root> > 0}
inline std::vector<int> attractor_indices(const SliceModel& M, const Chamber& xi) {
    std::vector<int> out;
    for (std::size_t p = 0; p < M.size(); ++p) {
        int ind = 0;
        for (auto& t : M.tangent_weights(p))
            if (t.n < 0 || (t.n == 0 && xi.positive(t.root))) ind += t.mult;
        out.push_back(ind);
    }
    return out;
}

// k -> rank of BM_{2k}
inline std::map<int, int> betti_ranks(const SliceModel& M, const Chamber& xi) {
    std::map<int, int> r;
    for (int ind : attractor_indices(M, xi)) ++r[ind];
    return r;
}

struct WallComponent {
    std::vector<std::size_t> points;
    int m = 0;                    // number of P^1 factors
    bool has_affine_line = false; // from the enumerated curves
    bool m_constant = true;       // m computed at every member agrees
};

// Components of the fixed locus of ker(root + n hbar). Edges are projective
// lines with weight +-(root + n hbar); m at a point counts the weights
// +-(root + n hbar) there, minus the affine direction if any.
inline std::vector<WallComponent> wall_components(const SliceModel& M, std::size_t root, int n) {
    const auto& D = M.datum();
    std::size_t neg = D.negative_of(root);
    std::size_t N = M.size();
    std::vector<std::size_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> affine(N, false);
    for (std::size_t p = 0; p < N; ++p)
        for (auto& c : curves_at(M, p)) {
            bool on_wall = (c.root == root && c.n == n) || (c.root == neg && c.n == -n);
            if (!on_wall) continue;
            if (c.kind == CurveKind::affine_line) affine[p] = true;
            else parent[find(p)] = find(*c.q);
        }
    std::map<std::size_t, WallComponent> comps;
    for (std::size_t p = 0; p < N; ++p) comps[find(p)].points.push_back(p);
    std::vector<WallComponent> out;
    for (auto& [rep, comp] : comps) {
        bool first = true;
        for (std::size_t p : comp.points) {
            int m = M.tangent_multiplicity(p, root, n) + M.tangent_multiplicity(p, neg, -n) - (affine[p] ? 1 : 0);
            if (first) comp.m = m;
            else if (m != comp.m) comp.m_constant = false;
            first = false;
            comp.has_affine_line = comp.has_affine_line || affine[p];
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const WallComponent& a, const WallComponent& b) { return a.points < b.points; });
    return out;
}

// The level rule 0 <= n < <mu, root> for an affine factor.
inline bool level_rule_affine(const SliceModel& M, std::size_t root, int n) {
    return 0 <= n && n < M.datum().pair(M.problem().mu, root);
}

}  // namespace qgrkz
