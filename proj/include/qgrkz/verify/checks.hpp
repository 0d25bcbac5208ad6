#pragma once

#include "qgrkz/kzrep/kz.hpp"
#include "qgrkz/slice/curves.hpp"
#include "qgrkz/slice/homology.hpp"
#include "qgrkz/stabops/operators.hpp"
#include "qgrkz/verify/report.hpp"

#include <functional>
#include <future>
#include <random>

namespace qgrkz {

namespace detail {

inline std::string entry_str(const Rational& x, std::size_t) { return x.pretty(); }
inline std::string entry_str(const EqPolynomial& x, std::size_t r) { return x.str(r); }
inline std::string entry_str(const EqRationalFunction& x, std::size_t r) { return x.str(r); }

inline std::string pos_str(std::size_t q, std::size_t p) {
    return "(" + std::to_string(q) + "," + std::to_string(p) + ")";
}

template <class R>
std::optional<Witness> matrix_witness(const OperatorMatrix<R>& expected, const OperatorMatrix<R>& got, std::size_t r,
                                      const std::string& label = {}) {
    auto d = expected.first_difference(got);
    if (!d) return std::nullopt;
    auto [q, p] = *d;
    return Witness{label + pos_str(q, p), "", entry_str(expected(q, p), r), entry_str(got(q, p), r)};
}

inline std::optional<Witness> matrix_witness(const OperatorMatrix<SeriesRF>& expected, const OperatorMatrix<SeriesRF>& got,
                                             std::size_t r, const std::string& label = {}) {
    auto d = expected.first_difference(got);
    if (!d) return std::nullopt;
    auto [q, p] = *d;
    auto m = first_difference(expected(q, p), got(q, p));
    return Witness{label + pos_str(q, p), u_monomial_str(*m), expected(q, p).coeff(*m).str(r), got(q, p).coeff(*m).str(r)};
}

inline std::string path_str(const FixedPoint& pt) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < pt.delta.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t k = 0; k < pt.delta[i].size(); ++k) os << (k ? " " : "") << pt.delta[i][k];
        os << "]";
    }
    os << ")";
    return os.str();
}

}  // namespace detail

inline CheckReport check_fixed_point_count(const SliceModel& M) {
    const std::string name = "fixed-point-count", inst = M.problem().str();
    long long oracle = tensor_weight_multiplicity(M.problem());
    if (static_cast<long long>(M.size()) != oracle)
        return CheckReport::failed(name, inst, {"count", "", std::to_string(oracle), std::to_string(M.size())});
    return CheckReport::passed(name, inst);
}

// Dimension, crossing rule vs pairing count, m(a) = m(-a), and one
// invariant curve per tangent weight.
inline CheckReport check_tangent(const SliceModel& M) {
    const std::string name = "tangent", inst = M.problem().str();
    const auto& D = M.datum();
    int dim = M.problem().dimension();
    for (std::size_t p = 0; p < M.size(); ++p) {
        std::string where = detail::path_str(M.point(p));
        if (M.tangent_dimension(p) != dim)
            return CheckReport::failed(name, inst, {where + " dimension", "", std::to_string(dim), std::to_string(M.tangent_dimension(p))});
        for (std::size_t k = 0; k < D.num_roots(); ++k) {
            int a = M.a_multiplicity(p, k), b = M.pairing_count(p, k);
            if (a != b)
                return CheckReport::failed(name, inst, {where + " mult of root " + std::to_string(k), "", std::to_string(b), std::to_string(a)},
                                           "crossing rule disagrees with the pairing count");
            int c = M.a_multiplicity(p, D.negative_of(k));
            if (a != c)
                return CheckReport::failed(name, inst, {where + " root " + std::to_string(k) + " vs its negative", "", std::to_string(a), std::to_string(c)});
        }
        std::map<std::pair<std::size_t, int>, int> curves;
        for (auto& c : curves_at(M, p)) ++curves[{c.root, c.n}];
        for (auto& t : M.tangent_weights(p)) {
            int got = curves[{t.root, t.n}];
            if (got != t.mult)
                return CheckReport::failed(name, inst, {where + " curves along root " + std::to_string(t.root) + " n=" + std::to_string(t.n), "",
                                                        std::to_string(t.mult), std::to_string(got)});
        }
    }
    return CheckReport::passed(name, inst);
}

// Classes are effective with zero sum, E-degrees match the class, and every
// projective line is seen from its other end with the opposite weight.
inline CheckReport check_curves(const SliceModel& M) {
    const std::string name = "curves", inst = M.problem().str();
    const auto& D = M.datum();
    for (auto& c : enumerate_curves(M)) {
        if (c.kind != CurveKind::projective_line) continue;
        std::string where = detail::path_str(M.point(c.p)) + " i=" + std::to_string(c.i) + " j=" + std::to_string(c.j) +
                            " root=" + std::to_string(c.root) + " n=" + std::to_string(c.n);
        auto cls = curve_class(M, c);
        Rational sum;
        std::string cs;
        for (auto& x : cls) {
            sum += x;
            cs += (cs.empty() ? "" : ",") + x.pretty();
        }
        if (!sum.is_zero()) return CheckReport::failed(name, inst, {where + " class sum", "", "0", sum.pretty()});
        if (!in_effective_cone(cls)) return CheckReport::failed(name, inst, {where + " effective cone", "", "effective", cs});
        for (int k = 1; k <= M.l(); ++k) {
            Rational deg = curve_degree(M, c, k, 'E');
            if (deg != cls[k - 1])
                return CheckReport::failed(name, inst, {where + " degree of E_" + std::to_string(k), "", cls[k - 1].pretty(), deg.pretty()});
        }
        bool back = false;
        for (auto& d : curves_at(M, *c.q))
            back = back || (d.kind == CurveKind::projective_line && d.root == D.negative_of(c.root) && d.n == -c.n && d.q == c.p);
        if (!back) return CheckReport::failed(name, inst, {where + " other end", "", "opposite weight at q", "missing"});
    }
    return CheckReport::passed(name, inst);
}

inline CheckReport check_betti(const SliceModel& M, const Chamber& C, unsigned seed, int chambers = 5) {
    const std::string name = "betti", inst = M.problem().str();
    auto ranks_str = [](const std::map<int, int>& r) {
        std::string s;
        for (auto& [d, n] : r) s += (s.empty() ? "" : " ") + std::to_string(2 * d) + ":" + std::to_string(n);
        return s;
    };
    auto base = betti_ranks(M, C);
    int total = 0;
    for (auto& [d, n] : base) total += n;
    if (total != static_cast<int>(M.size()))
        return CheckReport::failed(name, inst, {"total rank", "", std::to_string(M.size()), std::to_string(total)});
    std::mt19937 rng(seed);
    for (int t = 0; t < chambers; ++t) {
        Chamber X = Chamber::random(C.datum_ptr(), rng);
        auto r = betti_ranks(M, X);
        if (r != base) return CheckReport::failed(name, inst, {"chamber " + X.str(), "", ranks_str(base), ranks_str(r)});
    }
    return CheckReport::passed(name, inst, ranks_str(base));
}

// sigma is the same from both sides of the wall and for several in-wall
// base points; C-simple connecting roots give +1.
inline CheckReport check_signs(const StableOps& S) {
    const std::string name = "sign", inst = S.model().problem().str();
    const auto& D = S.datum();
    auto simple = S.chamber().simple_roots();
    for (int i = 1; i <= S.l(); ++i)
        for (int j = 1; j <= S.l(); ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < D.num_roots(); ++k)
                for (auto [p, q] : S.exchanges(i, j, k)) {
                    std::string where = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " root=" + std::to_string(k);
                    int s0 = S.sigma_sign(p, q, k, 1, 0);
                    for (int side : {1, -1})
                        for (int salt : {0, 1, 2}) {
                            int s = S.sigma_sign(p, q, k, side, salt);
                            if (s != s0)
                                return CheckReport::failed(name, inst, {where + " side=" + std::to_string(side) + " salt=" + std::to_string(salt), "",
                                                                        std::to_string(s0), std::to_string(s)});
                        }
                    if (S.sigma_sign(q, p, k) != s0)
                        return CheckReport::failed(name, inst, {where + " reversed", "", std::to_string(s0), std::to_string(S.sigma_sign(q, p, k))});
                    bool is_simple = std::find(simple.begin(), simple.end(), k) != simple.end() ||
                                     std::find(simple.begin(), simple.end(), D.negative_of(k)) != simple.end();
                    if (is_simple && s0 != 1)
                        return CheckReport::failed(name, inst, {where + " simple root", "", "1", std::to_string(s0)});
                }
        }
    return CheckReport::passed(name, inst);
}

// Omega_S + Omega_{-S} does not depend on S, and Omega^{ij}_C = Omega^{ji}_{-C}.
inline CheckReport check_chamber_sum(const StableOps& S, unsigned seed, int chambers = 3) {
    const std::string name = "chamber-sum", inst = S.model().problem().str();
    std::size_t r = S.datum().rank;
    std::mt19937 rng(seed);
    std::vector<Chamber> xs;
    for (int t = 0; t < chambers; ++t) xs.push_back(Chamber::random(S.chamber().datum_ptr(), rng));
    for (int i = 1; i <= S.l(); ++i)
        for (int j = 1; j <= S.l(); ++j) {
            if (i == j) continue;
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            auto full = S.omega_full(i, j);
            auto direct = S.omega_zero(i, j);
            for (std::size_t k = 0; k < S.datum().num_roots(); ++k) direct += S.omega_root(i, j, k);
            if (auto w = detail::matrix_witness(direct, full, r, ij + "full ")) return CheckReport::failed(name, inst, *w);
            for (auto& X : xs) {
                auto sum = S.omega_chamber(i, j, X) + S.omega_chamber(i, j, X.opposite());
                if (auto w = detail::matrix_witness(full, sum, r, ij + "chamber " + X.str() + " "))
                    return CheckReport::failed(name, inst, *w);
            }
            if (auto w = detail::matrix_witness(S.omega_chamber(i, j, false), S.omega_chamber(j, i, true), r, ij + "transpose "))
                return CheckReport::failed(name, inst, *w);
        }
    return CheckReport::passed(name, inst);
}

// Classical matrix mod hbar is diagonal with the E_i weights, and the sum
// over i is the constant (mu, .).
inline CheckReport check_classical(const StableOps& S) {
    const std::string name = "classical", inst = S.model().problem().str();
    const auto& M = S.model();
    std::size_t r = S.hbar_index();
    OperatorMatrix<EqPolynomial> total(S.size());
    for (int i = 1; i <= S.l(); ++i) {
        auto m = S.classical(i).map([&](const EqPolynomial& x) { return x.with_zero(r); });
        OperatorMatrix<EqPolynomial> expect(S.size());
        for (std::size_t p = 0; p < S.size(); ++p) expect(p, p) = EqPolynomial::linear(M.bundle_weight(p, i, 'E').c);
        if (auto w = detail::matrix_witness(expect, m, r, "i=" + std::to_string(i) + " "))
            return CheckReport::failed(name, inst, *w, "classical part mod hbar");
        total += m;
    }
    std::vector<Rational> mu_form(S.datum().rank);
    for (int k = 0; k < S.datum().rank; ++k)
        for (int j = 0; j < S.datum().rank; ++j) mu_form[k] += Rational(M.problem().mu[j]) * S.datum().G[j][k];
    auto expect = OperatorMatrix<EqPolynomial>::identity(S.size(), EqPolynomial::linear(mu_form));
    if (auto w = detail::matrix_witness(expect, total, r, "sum over i ")) return CheckReport::failed(name, inst, *w);
    return CheckReport::passed(name, inst);
}

// Omega_0 = tilde-diagonal(short) + tilde-diagonal(long) + K, and the tilde
// operators kill (1/eps_p)_p. Exact rational functions.
inline CheckReport check_lemma_and_unit(const StableOps& S) {
    const std::string name = "lemma-unit", inst = S.model().problem().str();
    const auto& D = S.datum();
    std::size_t r = S.hbar_index();
    std::vector<EqRationalFunction> unit;
    for (std::size_t p = 0; p < S.size(); ++p) unit.push_back(EqRationalFunction(1) / S.polarization(p).to_rf(D));
    std::string diag_note;
    for (int i = 1; i <= S.l(); ++i)
        for (int j = i + 1; j <= S.l(); ++j) {
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            auto st = S.omega_tilde(i, j, false), lg = S.omega_tilde(i, j, true);
            OperatorMatrix<EqRationalFunction> rhs = to_rf(S.k_term(i, j));
            for (std::size_t p = 0; p < S.size(); ++p) rhs(p, p) = rhs(p, p) + st(p, p) + lg(p, p);
            if (auto w = detail::matrix_witness(to_rf(S.omega_zero(i, j)), rhs, r, ij + "lemma "))
                return CheckReport::failed(name, inst, *w);
            if (diag_note.empty() && S.size() > 0) diag_note = "tilde diagonal at 0: " + st(0, 0).str(r);
            for (auto* m : {&st, &lg})
                for (std::size_t q = 0; q < S.size(); ++q) {
                    EqRationalFunction s;
                    for (std::size_t p = 0; p < S.size(); ++p)
                        if (!(*m)(q, p).is_zero()) s = s + (*m)(q, p) * unit[p];
                    if (!s.is_zero())
                        return CheckReport::failed(name, inst, {ij + (m == &st ? "short" : "long") + " unit row " + std::to_string(q), "", "0", s.str(r)});
                }
        }
    return CheckReport::passed(name, inst, diag_note);
}

inline CheckReport check_quantum_paths(const StableOps& S, int N) {
    const std::string name = "quantum-paths", inst = S.model().problem().str();
    if (!S.datum().simply_laced()) return CheckReport::uncovered(name, inst, "closed form needs a simply-laced root system");
    for (int i = 1; i <= S.l(); ++i)
        if (auto w = detail::matrix_witness(S.quantum(i, N, QuantumPath::closed), S.quantum(i, N, QuantumPath::sum), S.hbar_index(),
                                            "i=" + std::to_string(i) + " "))
            return CheckReport::failed(name, inst, *w, "expected: closed form, got: classical + purely quantum");
    return CheckReport::passed(name, inst);
}

// q d_i of psi = -hbar sum_{a<b} K_ab ln(1 - q^{e_a - e_b}), expanded directly.
inline CheckReport check_gauge(const StableOps& S, int N) {
    const std::string name = "gauge", inst = S.model().problem().str();
    const auto& lam = S.model().problem().lambdas;
    int l = S.l();
    EqRationalFunction h(S.hbar());
    SeriesRF psi = SeriesRF::zero(N);
    for (int a = 1; a <= l; ++a)
        for (int b = a + 1; b <= l; ++b) {
            Rational K = S.datum().form(lam[a - 1], lam[b - 1]);
            Monomial u = u_exponent(a, b), pw = u;
            int d = mono_degree(u);
            // -ln(1 - x) = sum x^k / k
            for (int k = 1; k * d <= N; ++k) {
                psi += SeriesRF::monomial(pw, h * EqRationalFunction(K / Rational(k)), N);
                pw = mono_mul(pw, u);
            }
        }
    for (int i = 1; i <= l; ++i) {
        SeriesRF expect = log_derivative(psi, i, l), got = S.gauge_term(i, N);
        if (auto m = first_difference(expect, got))
            return CheckReport::failed(name, inst, {"i=" + std::to_string(i), u_monomial_str(*m), expect.coeff(*m).str(S.hbar_index()),
                                                    got.coeff(*m).str(S.hbar_index())});
    }
    return CheckReport::passed(name, inst);
}

// q d_j A_i - q d_i A_j + [A_i, A_j] = 0 up to order N - 1.
inline CheckReport check_flatness(const std::vector<OperatorMatrix<SeriesRF>>& A, int N, std::size_t hbar_index,
                                  std::string name = "flatness", std::string inst = {}) {
    int l = static_cast<int>(A.size());
    int top = std::max(N - 1, 0);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            auto R = A[i - 1].map([&](const SeriesRF& s) { return log_derivative(s, j, l); }) -
                     A[j - 1].map([&](const SeriesRF& s) { return log_derivative(s, i, l); }) + commutator(A[i - 1], A[j - 1]);
            for (std::size_t q = 0; q < R.size(); ++q)
                for (std::size_t p = 0; p < R.size(); ++p) {
                    SeriesRF e = R(q, p).truncated(top);
                    if (e.is_zero()) continue;
                    const auto& [m, c] = *e.terms().begin();
                    return CheckReport::failed(name, inst,
                                               {"(" + std::to_string(i) + "," + std::to_string(j) + ") " + detail::pos_str(q, p), u_monomial_str(m), "0",
                                                c.str(hbar_index)});
                }
        }
    return CheckReport::passed(name, inst);
}

inline CheckReport check_quantum_flatness(const StableOps& S, int N) {
    std::vector<OperatorMatrix<SeriesRF>> A;
    for (int i = 1; i <= S.l(); ++i) A.push_back(S.connection(i, N, false));
    return check_flatness(A, N, S.hbar_index(), "flatness-quantum", S.model().problem().str());
}

inline CheckReport check_kz_flatness(const KZSystem& K, int N) {
    std::vector<OperatorMatrix<SeriesRF>> A;
    for (int i = 1; i <= K.l(); ++i) A.push_back(K.kz_matrix(i, N));
    return check_flatness(A, N, K.datum().rank, "flatness-kz", K.problem().str());
}

// Orbit-shift rule vs the dense composite, weight preservation, and the
// two Omega_C computations agreeing.
inline CheckReport check_kz_oracle(const KZSystem& K, const StableOps& S) {
    const std::string name = "kz-oracle", inst = K.problem().str();
    const auto& D = K.datum();
    std::size_t r = D.rank;
    for (int i = 1; i <= K.l(); ++i)
        for (int j = 1; j <= K.l(); ++j) {
            if (i == j) continue;
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            for (std::size_t g = 0; g < D.num_roots(); ++g) {
                auto direct = K.casimir_root(i, j, g);
                if (auto w = detail::matrix_witness(K.casimir_root_dense(i, j, g), direct, r, ij + "root " + std::to_string(g) + " "))
                    return CheckReport::failed(name, inst, *w, "expected: dense composite, got: shift rule");
                for (std::size_t b = 0; b < K.size(); ++b) {
                    bool any = false;
                    for (std::size_t a = 0; a < K.size(); ++a) any = any || !direct(a, b).is_zero();
                    if (any != K.orbit_shift(i, j, g, b))
                        return CheckReport::failed(name, inst, {ij + "root " + std::to_string(g) + " column " + std::to_string(b), "",
                                                                K.orbit_shift(i, j, g, b) ? "shift" : "zero", any ? "shift" : "zero"});
                }
            }
            auto full = K.omega_full(i, j);
            for (int s = 0; s < D.rank; ++s) {
                OperatorMatrix<Rational> hs(K.size());
                for (std::size_t b = 0; b < K.size(); ++b) {
                    const auto& nu = K.basis()[b].delta;
                    hs(b, b) = D.pair(nu[i - 1], D.simple_root(s)) + D.pair(nu[j - 1], D.simple_root(s));
                }
                if (!commutator(full, hs).is_zero())
                    return CheckReport::failed(name, inst, {ij + "[Omega, h_" + std::to_string(s + 1) + "]", "", "0", "nonzero"});
            }
            for (bool opp : {false, true})
                if (auto w = detail::matrix_witness(S.omega_chamber(i, j, opp), K.omega_chamber(i, j, opp), r, ij + (opp ? "-C " : "C ")))
                    return CheckReport::failed(name, inst, *w, "expected: stable basis, got: representation");
        }
    return CheckReport::passed(name, inst);
}

inline CheckReport check_kz_equals_quantum(const StableOps& S, const KZSystem& K, int N) {
    const std::string name = "kz-eq", inst = S.model().problem().str();
    for (int i = 1; i <= S.l(); ++i)
        if (auto w = detail::matrix_witness(K.kz_matrix(i, N), S.connection(i, N, true), S.hbar_index(), "i=" + std::to_string(i) + " "))
            return CheckReport::failed(name, inst, *w, "expected: KZ, got: hatted quantum connection");
    return CheckReport::passed(name, inst);
}

inline CheckReport check_kz_equals_quantum(const SliceModel& M, const Chamber& C, int N) {
    if (!M.datum().simply_laced())
        return CheckReport::uncovered("kz-eq", M.problem().str(), "not covered by the theorem: root system is not simply-laced");
    StableOps S(M, C);
    KZSystem K(M.problem(), C);
    return check_kz_equals_quantum(S, K, N);
}

struct SuiteOptions {
    int order = 6;
    unsigned seed = 20261017;
    bool parallel = true;
};

// Every check in a fixed order; failures are reported, never thrown.
inline std::vector<CheckReport> run_suite(const SliceProblem& P, const Chamber& C, const SuiteOptions& opt = {},
                                          const Conventions& conv = {}) {
    const int N = opt.order;
    SliceModel M(P, conv);
    const bool sl = M.datum().simply_laced();
    const std::string inst = P.str();
    auto ops = [&] { return StableOps(M, C); };

    using Task = std::function<CheckReport()>;
    std::vector<std::pair<std::string, Task>> tasks = {
        {"fixed-point-count", [&] { return check_fixed_point_count(M); }},
        {"tangent", [&] { return check_tangent(M); }},
        {"curves", [&] { return check_curves(M); }},
        {"betti", [&] { return check_betti(M, C, opt.seed); }},
        {"sign", [&] { return check_signs(ops()); }},
        {"chamber-sum", [&] { return check_chamber_sum(ops(), opt.seed + 1); }},
        {"classical", [&] { return check_classical(ops()); }},
        {"lemma-unit", [&] { return check_lemma_and_unit(ops()); }},
        {"quantum-paths", [&] { return check_quantum_paths(ops(), N); }},
        {"gauge", [&] { return check_gauge(ops(), N); }},
        {"flatness-quantum", [&] { return check_quantum_flatness(ops(), N); }},
        {"flatness-kz", [&] {
             if (!sl) return CheckReport::uncovered("flatness-kz", inst, "KZ operators need a simply-laced root system");
             return check_kz_flatness(KZSystem(P, C), N);
         }},
        {"kz-oracle", [&] {
             if (!sl) return CheckReport::uncovered("kz-oracle", inst, "representation oracle needs a simply-laced root system");
             return check_kz_oracle(KZSystem(P, C), ops());
         }},
        {"kz-eq", [&] { return check_kz_equals_quantum(M, C, N); }},
    };

    auto guarded = [&](const std::string& name, const Task& t) {
        try {
            return t();
        } catch (const std::exception& e) {
            return CheckReport::failed(name, inst, {"exception", "", "no exception", e.what()});
        }
    };

    std::vector<CheckReport> out;
    if (opt.parallel) {
        std::vector<std::future<CheckReport>> fs;
        for (auto& [name, t] : tasks) fs.push_back(std::async(std::launch::async, guarded, name, t));
        for (auto& f : fs) out.push_back(f.get());
    } else {
        for (auto& [name, t] : tasks) out.push_back(guarded(name, t));
    }

    // kz-eq and flatness-kz passing force flatness-quantum to pass
    auto find = [&](const std::string& n) -> const CheckReport& {
        return *std::find_if(out.begin(), out.end(), [&](const CheckReport& r) { return r.name == n; });
    };
    const auto &eq = find("kz-eq"), &fk = find("flatness-kz"), &fq = find("flatness-quantum");
    if (eq.verdict == Verdict::pass && fk.verdict == Verdict::pass && fq.verdict != Verdict::pass)
        out.push_back(CheckReport::failed("consistency", inst, {"flatness-quantum", "", "pass", verdict_name(fq.verdict)}));
    else
        out.push_back(CheckReport::passed("consistency", inst));
    return out;
}

}  // namespace qgrkz
