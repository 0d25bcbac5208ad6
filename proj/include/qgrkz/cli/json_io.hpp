#pragma once

#include "qgrkz/exactalg/matrix.hpp"
#include "qgrkz/slice/curves.hpp"
#include "qgrkz/slice/homology.hpp"
#include "qgrkz/verify/report.hpp"

#include <json.hpp>

namespace qgrkz::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& x) { return x.str(); }

// Terms with exponent vectors padded to a_1..a_r, hbar.
inline json to_json(const EqPolynomial& p, std::size_t r) {
    json out = json::array();
    for (auto& [m, c] : p.terms()) {
        std::vector<int> e(r + 1, 0);
        for (std::size_t k = 0; k < m.size(); ++k) e.at(k) = m[k];
        out.push_back({{"exponents", e}, {"coeff", c.str()}});
    }
    return out;
}

inline json to_json(const EqRationalFunction& f, std::size_t r) {
    return {{"num", to_json(f.num(), r)}, {"den", to_json(f.den(), r)}};
}

inline json to_json(const SeriesRF& s, std::size_t r, int l) {
    json terms = json::array();
    for (auto& [m, c] : s.terms()) {
        std::vector<int> u(static_cast<std::size_t>(std::max(l - 1, 0)), 0);
        for (std::size_t k = 0; k < m.size(); ++k) u.at(k) = m[k];
        terms.push_back({{"u", u}, {"coeff", to_json(c, r)}});
    }
    json order = s.order() == SeriesRF::kUnbounded ? json(nullptr) : json(s.order());
    return {{"order", order}, {"terms", terms}};
}

inline std::string series_str(const SeriesRF& s, std::size_t r) {
    std::string out;
    for (auto& [m, c] : s.terms()) {
        if (!out.empty()) out += " + ";
        std::string cs = "(" + c.str(r) + ")";
        out += m.empty() ? cs : cs + "*" + u_monomial_str(m);
    }
    return out.empty() ? "0" : out;
}

inline json coweight_json(const Coweight& v) { return json(v); }

inline json path_json(const FixedPoint& pt) {
    json d = json::array(), s = json::array();
    for (auto& x : pt.delta) d.push_back(x);
    for (auto& x : pt.sigma) s.push_back(x);
    return {{"delta", d}, {"sigma", s}};
}

inline json basis_json(const SliceModel& M) {
    json b = json::array();
    for (auto& pt : M.points()) {
        json d = json::array();
        for (auto& x : pt.delta) d.push_back(x);
        b.push_back(d);
    }
    return b;
}

inline json variables_json(std::size_t r) {
    json v = json::array();
    for (std::size_t k = 1; k <= r; ++k) v.push_back("a" + std::to_string(k));
    v.push_back("h");
    return v;
}

inline json root_json(const CartanDatum& D, std::size_t k) {
    const auto& e = D.roots.at(k);
    return {{"index", k}, {"coords", e.coords}, {"coroot", e.coroot}, {"positive", e.positive}, {"long", e.long_coroot}};
}

inline json weight_json(const Weight& w) {
    json c = json::array();
    for (auto& x : w.c) c.push_back(x.str());
    return {{"roots", c}, {"hbar", w.n}};
}

inline const char* ring_name(const Rational*) { return "rational"; }
inline const char* ring_name(const EqPolynomial*) { return "polynomial"; }
inline const char* ring_name(const EqRationalFunction*) { return "rational-function"; }
inline const char* ring_name(const SeriesRF*) { return "series"; }

inline json entry_json(const Rational& x, std::size_t, int) { return to_json(x); }
inline json entry_json(const EqPolynomial& x, std::size_t r, int) { return to_json(x, r); }
inline json entry_json(const EqRationalFunction& x, std::size_t r, int) { return to_json(x, r); }
inline json entry_json(const SeriesRF& x, std::size_t r, int l) { return to_json(x, r, l); }

inline std::string entry_str(const Rational& x, std::size_t) { return x.pretty(); }
inline std::string entry_str(const EqPolynomial& x, std::size_t r) { return x.str(r); }
inline std::string entry_str(const EqRationalFunction& x, std::size_t r) { return x.str(r); }
inline std::string entry_str(const SeriesRF& x, std::size_t r) { return series_str(x, r); }

// Sparse (row, col) entries: row q, column p is the coefficient of q in the image of p.
template <class R>
json matrix_json(const OperatorMatrix<R>& m, const SliceModel& M, std::optional<int> order = std::nullopt) {
    std::size_t r = M.datum().rank;
    json entries = json::array();
    for (std::size_t q = 0; q < m.size(); ++q)
        for (std::size_t p = 0; p < m.size(); ++p)
            if (!m(q, p).is_zero())
                entries.push_back({{"row", q}, {"col", p}, {"value", entry_json(m(q, p), r, M.l())}, {"text", entry_str(m(q, p), r)}});
    json out = {{"ring", ring_name(static_cast<const R*>(nullptr))}, {"size", m.size()}, {"variables", variables_json(r)}};
    if (order) out["order"] = *order;
    out["basis"] = basis_json(M);
    out["entries"] = entries;
    return out;
}

inline json report_json(const CheckReport& r) {
    json out = {{"check", r.name}, {"instance", r.instance}, {"verdict", verdict_name(r.verdict)}};
    if (!r.note.empty()) out["note"] = r.note;
    if (r.witness)
        out["witness"] = {{"where", r.witness->where}, {"monomial", r.witness->monomial}, {"expected", r.witness->expected}, {"got", r.witness->got}};
    return out;
}

inline json fixed_points_json(const SliceModel& M) {
    json out = json::array();
    for (std::size_t p = 0; p < M.size(); ++p) {
        json e = {{"index", p}};
        e.update(path_json(M.point(p)));
        out.push_back(e);
    }
    return out;
}

inline json tangent_json(const SliceModel& M) {
    const auto& D = M.datum();
    json out = json::array();
    for (std::size_t p = 0; p < M.size(); ++p) {
        json ws = json::array();
        for (auto& t : M.tangent_weights(p))
            ws.push_back({{"root", D.roots[t.root].coords}, {"hbar", t.n}, {"mult", t.mult}});
        json am = json::array();
        for (std::size_t k = 0; k < D.num_roots(); ++k)
            if (int a = M.a_multiplicity(p, k)) am.push_back({{"root", D.roots[k].coords}, {"mult", a}});
        out.push_back({{"index", p}, {"dimension", M.tangent_dimension(p)}, {"weights", ws}, {"a_weights", am}});
    }
    return out;
}

inline json curves_json(const SliceModel& M) {
    const auto& D = M.datum();
    json out = json::array();
    for (auto& c : enumerate_curves(M)) {
        json e = {{"i", c.i}, {"j", c.j}, {"root", D.roots[c.root].coords}, {"n", c.n}, {"p", c.p}};
        e["q"] = c.q ? json(*c.q) : json(nullptr);
        e["kind"] = kind_name(c.kind);
        if (c.kind == CurveKind::projective_line) {
            json cls = json::array();
            for (auto& x : curve_class(M, c)) cls.push_back(x.str());
            e["class"] = cls;
        } else {
            e["class"] = nullptr;
        }
        out.push_back(e);
    }
    return out;
}

inline json betti_json(const SliceModel& M, const Chamber& C) {
    json out = json::array();
    for (auto& [d, n] : betti_ranks(M, C)) out.push_back({{"degree", 2 * d}, {"rank", n}});
    return out;
}

// Every wall ker(root + n hbar) carrying an invariant curve, with positive root.
inline json walls_json(const SliceModel& M) {
    const auto& D = M.datum();
    std::set<std::pair<std::size_t, int>> walls;
    for (std::size_t p = 0; p < M.size(); ++p)
        for (auto& c : curves_at(M, p)) {
            if (D.roots[c.root].positive) walls.insert({c.root, c.n});
            else walls.insert({D.negative_of(c.root), -c.n});
        }
    json out = json::array();
    for (auto [k, n] : walls) {
        json comps = json::array();
        for (auto& w : wall_components(M, k, n))
            comps.push_back({{"points", w.points}, {"m", w.m}, {"m_constant", w.m_constant}, {"has_affine_line", w.has_affine_line}});
        out.push_back({{"root", D.roots[k].coords}, {"n", n}, {"level_rule_affine", level_rule_affine(M, k, n)}, {"components", comps}});
    }
    return out;
}

}  // namespace qgrkz::io
