#pragma once

#include "qgrkz/slice/fixed_points.hpp"

#include <numeric>

namespace qgrkz {

enum class CurveKind { projective_line, affine_line };

inline const char* kind_name(CurveKind k) { return k == CurveKind::projective_line ? "projective-line" : "affine-line"; }

// C^{ij}_{p, root + n hbar}, recorded from the end p whose tangent weight
// along the curve is root + n hbar (path strictly above level n between i and j).
struct InvariantCurve {
    int i = 0, j = 0;
    std::size_t root = 0;
    int n = 0;
    std::size_t p = 0;
    std::optional<std::size_t> q;
    CurveKind kind = CurveKind::projective_line;
};

using CurveClass = std::vector<Rational>;  // coefficients in e_1..e_l

// All (i, j, root, n) descriptions anchored at p, before de-duplication.
// Affine lines need the path to stay above n up to and including sigma_l.
inline std::vector<InvariantCurve> curves_at(const SliceModel& M, std::size_t p) {
    const auto& D = M.datum();
    const auto& pt = M.point(p);
    int l = M.l();
    std::vector<InvariantCurve> out;
    for (std::size_t k = 0; k < D.num_roots(); ++k) {
        std::vector<int> v(l + 1);
        for (int s = 0; s <= l; ++s) v[s] = D.pair(pt.sigma[s], k);
        for (int i = 0; i < l; ++i) {
            int n = v[i];
            for (int j = i + 1; j <= l; ++j) {
                if (j > i + 1 && v[j - 1] <= n) break;  // intermediates must stay above n
                InvariantCurve c{i, j, k, n, p, std::nullopt, CurveKind::projective_line};
                if (v[j] == n) {
                    if (j == i + 1) continue;  // degenerate: a point
                    std::vector<Coweight> d(pt.delta);
                    std::vector<Coweight> s(pt.sigma);
                    for (int m = i; m <= j; ++m) s[m] = D.affine_reflect(s[m], k, n);
                    for (int m = 1; m <= l; ++m)
                        for (int t = 0; t < D.rank; ++t) d[m - 1][t] = s[m][t] - s[m - 1][t];
                    auto q = M.find(d);
                    if (!q) throw std::logic_error("reflected path is not a fixed point");
                    c.q = *q;
                    out.push_back(c);
                } else if (j == l && n < 0 && v[j] > n) {
                    c.kind = CurveKind::affine_line;
                    out.push_back(c);
                }
            }
        }
    }
    return out;
}

// Each geometric curve once: projective lines keep the description with a
// positive root, affine lines have a single fixed point anyway.
inline std::vector<InvariantCurve> enumerate_curves(const SliceModel& M) {
    const auto& D = M.datum();
    std::vector<InvariantCurve> out;
    for (std::size_t p = 0; p < M.size(); ++p)
        for (auto& c : curves_at(M, p))
            if (c.kind == CurveKind::affine_line || D.roots[c.root].positive) out.push_back(c);
    return out;
}

inline CurveClass curve_class(const SliceModel& M, const InvariantCurve& c) {
    if (c.kind != CurveKind::projective_line) throw std::invalid_argument("non-compact curve has no class");
    const auto& D = M.datum();
    Rational half = D.roots[c.root].norm / Rational(2);
    CurveClass cls(M.l(), Rational(0));
    for (int k = c.i + 1; k <= c.j; ++k) cls[k - 1] = half * Rational(D.pair(M.point(c.p).delta[k - 1], c.root));
    return cls;
}

// Degree of L_k (kind 'L', 0..l) or E_k (kind 'E', 1..l) on the curve.
inline Rational curve_degree(const SliceModel& M, const InvariantCurve& c, int k, char kind = 'L') {
    if (c.kind != CurveKind::projective_line) throw std::invalid_argument("non-compact curve has no class");
    const auto& D = M.datum();
    auto degL = [&](int m) {
        if (m < 0 || m > M.l()) throw std::out_of_range("bundle index out of range");
        const Coweight& sp = M.point(c.p).sigma[m];
        const Coweight& sq = M.point(*c.q).sigma[m];
        Coweight diff(D.rank);
        for (int t = 0; t < D.rank; ++t) diff[t] = sp[t] - sq[t];
        return D.form(diff, D.roots[c.root].coroot) / Rational(2);
    };
    if (kind == 'L') return degL(k);
    if (k < 1 || k > M.l()) throw std::out_of_range("bundle index out of range");
    return degL(k) - degL(k - 1);
}

// Nonnegative integer span of e_a - e_b (a < b): all partial sums >= 0, total 0.
inline bool in_effective_cone(const CurveClass& cls) {
    Rational s;
    for (auto& x : cls) {
        if (!x.is_integer()) return false;
        s += x;
        if (s.sign() < 0) return false;
    }
    return s.is_zero();
}

}  // namespace qgrkz
