#pragma once

#include "qgrkz/exactalg/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgrkz {

// Lattice coweight in fundamental-coweight coordinates: f_k = <nu, alpha_k^vee>.
using Coweight = std::vector<int>;

// Weight in simple-root coordinates plus the hbar coefficient n.
struct Weight {
    std::vector<Rational> c;
    int n = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

struct RootEntry {
    std::vector<int> coords;  // simple-root coordinates of the root alpha^vee
    Coweight coroot;          // the coroot alpha, fundamental-coweight coordinates
    bool positive = false;
    bool long_coroot = false;
    Rational norm;            // (alpha, alpha)
    int height = 0;
};

class CartanDatum {
public:
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<int>> A;  // A[i][j] = <alpha_i, alpha_j^vee>
    std::vector<int> d;               // (alpha_i, alpha_i)/2
    std::vector<std::vector<Rational>> G;  // Gram matrix on coweights
    std::vector<RootEntry> roots;     // positives first, then negatives in matching order
    std::vector<Rational> rho;        // half-sum of positive roots, simple-root coords

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    std::size_t num_roots() const { return roots.size(); }
    std::size_t num_positive() const { return roots.size() / 2; }
    std::size_t negative_of(std::size_t k) const {
        std::size_t h = num_positive();
        return k < h ? k + h : k - h;
    }
    bool simply_laced() const {
        return std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
    }

    // <nu, root k>
    int pair(const Coweight& nu, std::size_t k) const {
        const auto& c = roots.at(k).coords;
        int s = 0;
        for (int i = 0; i < rank; ++i) s += c[i] * nu[i];
        return s;
    }
    Rational pair(const std::vector<Rational>& xi, std::size_t k) const {
        const auto& c = roots.at(k).coords;
        Rational s;
        for (int i = 0; i < rank; ++i)
            if (c[i] != 0) s += xi[i] * Rational(c[i]);
        return s;
    }
    Rational pair(const Coweight& nu, const Weight& w) const {
        Rational s;
        for (int i = 0; i < rank; ++i) s += w.c.at(i) * Rational(nu.at(i));
        return s;
    }

    Rational form(const Coweight& a, const Coweight& b) const {
        Rational s;
        for (int i = 0; i < rank; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank; ++j)
                if (b[j] != 0) s += Rational(a[i] * b[j]) * G[i][j];
        }
        return s;
    }

    // Index of the root with the given simple-root coordinates, or -1.
    int find_root(const std::vector<int>& coords) const {
        auto it = root_index_.find(coords);
        return it == root_index_.end() ? -1 : it->second;
    }
    int find_root(const Weight& w) const {
        std::vector<int> c(rank);
        for (int i = 0; i < rank; ++i) {
            if (!w.c.at(i).is_integer()) return -1;
            c[i] = static_cast<int>(w.c[i].to_long());
        }
        return find_root(c);
    }
    Weight root_weight(std::size_t k, int n = 0) const {
        Weight w;
        for (int c : roots.at(k).coords) w.c.emplace_back(c);
        w.n = n;
        return w;
    }
    std::size_t simple_root(int i) const { return static_cast<std::size_t>(find_root(unit(i))); }

    Coweight simple_coroot(int i) const { return A.at(i); }

    Coweight reflect_simple(const Coweight& nu, int i) const {
        Coweight r = nu;
        int f = nu[i];
        for (int k = 0; k < rank; ++k) r[k] -= f * A[i][k];
        return r;
    }

    // s_{alpha^vee + n hbar} nu = nu + (n - <nu, alpha^vee>) alpha
    Coweight affine_reflect(const Coweight& nu, std::size_t k, int n) const {
        int t = n - pair(nu, k);
        Coweight r = nu;
        const auto& a = roots.at(k).coroot;
        for (int i = 0; i < rank; ++i) r[i] += t * a[i];
        return r;
    }
    Coweight affine_reflect(const Coweight& nu, const Weight& w) const {
        int k = find_root(w);
        if (k < 0) throw std::invalid_argument("affine reflection needs a root");
        return affine_reflect(nu, static_cast<std::size_t>(k), w.n);
    }

    bool dominant(const Coweight& nu) const {
        return std::all_of(nu.begin(), nu.end(), [](int x) { return x >= 0; });
    }

    // Sorted descending lexicographically; the dominant element comes first.
    std::vector<Coweight> weyl_orbit(const Coweight& lambda) const {
        check_coweight(lambda);
        if (!dominant(lambda)) throw std::invalid_argument("weyl_orbit needs a dominant coweight");
        std::set<Coweight> seen{lambda};
        std::deque<Coweight> todo{lambda};
        while (!todo.empty()) {
            Coweight v = todo.front();
            todo.pop_front();
            for (int i = 0; i < rank; ++i) {
                if (v[i] == 0) continue;
                Coweight w = reflect_simple(v, i);
                if (seen.insert(w).second) todo.push_back(w);
            }
        }
        return {seen.rbegin(), seen.rend()};
    }

    bool is_minuscule(const Coweight& lambda) const {
        for (auto& v : weyl_orbit(lambda))
            for (std::size_t k = 0; k < num_roots(); ++k)
                if (std::abs(pair(v, k)) > 1) return false;
        return true;
    }

    Coweight fundamental(int i) const {
        Coweight w(rank, 0);
        w.at(i - 1) = 1;
        return w;
    }

    void check_coweight(const Coweight& nu) const {
        if (static_cast<int>(nu.size()) != rank)
            throw std::invalid_argument("coweight has " + std::to_string(nu.size()) + " coordinates, rank is " +
                                        std::to_string(rank));
    }

    // Expresses nu as a rational combination of simple coroots.
    std::vector<Rational> coroot_coordinates(const Coweight& nu) const;

    void index_roots() {
        root_index_.clear();
        for (std::size_t k = 0; k < roots.size(); ++k) root_index_[roots[k].coords] = static_cast<int>(k);
    }

private:
    std::vector<int> unit(int i) const {
        std::vector<int> c(rank, 0);
        c.at(i) = 1;
        return c;
    }
    std::map<std::vector<int>, int> root_index_;
};

namespace detail {

using QMatrix = std::vector<std::vector<Rational>>;

inline QMatrix inverse(QMatrix m) {
    std::size_t n = m.size();
    QMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        Rational s = Rational(1) / m[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] *= s;
            inv[c][k] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

inline std::vector<std::vector<int>> cartan_matrix(char type, int r) {
    std::vector<std::vector<int>> A(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) A[i][i] = 2;
    auto link = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            A[r - 1][r - 2] = -2;
            break;
        case 'C':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            A[r - 2][r - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            break;
        case 'E':
            // Bourbaki labels: 1-3-4-5-6(-7), 2 attached to 4
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
            break;
        default:
            throw std::invalid_argument(std::string("unsupported root system type ") + type);
    }
    return A;
}

}  // namespace detail

inline std::vector<Rational> CartanDatum::coroot_coordinates(const Coweight& nu) const {
    // nu = sum_k c_k alpha_k, alpha_k = row k of A, so nu = A^T c.
    detail::QMatrix At(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) At[i][j] = A[j][i];
    auto inv = detail::inverse(At);
    std::vector<Rational> c(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i] += inv[i][j] * Rational(nu[j]);
    return c;
}

inline std::shared_ptr<const CartanDatum> build_datum(char type, int rank) {
    bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) || (type == 'C' && rank >= 2) ||
              (type == 'D' && rank >= 4) || (type == 'E' && (rank == 6 || rank == 7));
    if (!ok) {
        if (type == 'E' && rank == 8) throw std::invalid_argument("E8 has no minuscule coweights");
        if (type == 'F' || type == 'G')
            throw std::invalid_argument(std::string(1, type) + std::to_string(rank) + " has no minuscule coweights");
        throw std::invalid_argument("unsupported root system " + std::string(1, type) + std::to_string(rank));
    }
    auto D = std::make_shared<CartanDatum>();
    D->type = type;
    D->rank = rank;
    D->A = detail::cartan_matrix(type, rank);
    const auto& A = D->A;

    // symmetrizers: d_i A_ji = d_j A_ij, normalized so min d = 1
    std::vector<Rational> dq(rank);
    dq[0] = 1;
    std::vector<bool> done(rank, false);
    done[0] = true;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (done[i] && !done[j] && A[i][j] != 0) {
                    dq[j] = dq[i] * Rational(A[j][i]) / Rational(A[i][j]);
                    done[j] = grew = true;
                }
    }
    Rational mn = *std::min_element(dq.begin(), dq.end());
    for (auto& x : dq) D->d.push_back(static_cast<int>((x / mn).to_long()));

    // G = A^{-1} D
    detail::QMatrix Aq(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) Aq[i][j] = A[i][j];
    auto Ainv = detail::inverse(Aq);
    D->G.assign(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) D->G[i][j] = Ainv[i][j] * Rational(D->d[j]);

    // Roots as the W-orbit of the simple roots, coroots carried along.
    std::map<std::vector<int>, Coweight> found;
    std::deque<std::vector<int>> todo;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> c(rank, 0);
        c[i] = 1;
        found[c] = A[i];
        todo.push_back(c);
    }
    while (!todo.empty()) {
        auto c = todo.front();
        todo.pop_front();
        Coweight cor = found[c];
        for (int i = 0; i < rank; ++i) {
            int p = 0;  // <alpha_i, beta^vee>
            for (int k = 0; k < rank; ++k) p += c[k] * A[i][k];
            if (p == 0) continue;
            std::vector<int> c2 = c;
            c2[i] -= p;
            if (found.count(c2)) continue;
            Coweight cor2 = cor;
            int f = cor[i];
            for (int k = 0; k < rank; ++k) cor2[k] -= f * A[i][k];
            found[c2] = cor2;
            todo.push_back(c2);
        }
    }
    std::vector<RootEntry> pos;
    for (auto& [c, cor] : found) {
        bool positive = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
        if (!positive) continue;
        RootEntry e;
        e.coords = c;
        e.coroot = cor;
        e.positive = true;
        e.height = std::accumulate(c.begin(), c.end(), 0);
        pos.push_back(e);
    }
    std::sort(pos.begin(), pos.end(), [](const RootEntry& a, const RootEntry& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords > b.coords;
    });
    if (pos.size() * 2 != found.size()) throw std::logic_error("root system is not symmetric");
    D->roots = pos;
    for (auto e : pos) {
        for (auto& x : e.coords) x = -x;
        for (auto& x : e.coroot) x = -x;
        e.positive = false;
        e.height = -e.height;
        D->roots.push_back(e);
    }
    Rational shortest;
    for (auto& e : D->roots) {
        e.norm = D->form(e.coroot, e.coroot);
        if (shortest.is_zero() || e.norm < shortest) shortest = e.norm;
    }
    for (auto& e : D->roots) e.long_coroot = e.norm > shortest;
    D->index_roots();

    D->rho.assign(rank, Rational(0));
    for (auto& e : pos)
        for (int i = 0; i < rank; ++i) D->rho[i] += Rational(e.coords[i], 2);
    return D;
}

// "A2", "D4", ...
inline std::shared_ptr<const CartanDatum> build_datum(const std::string& id) {
    if (id.size() < 2) throw std::invalid_argument("bad datum id: " + id);
    int r = 0;
    try {
        r = std::stoi(id.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad datum id: " + id);
    }
    return build_datum(id[0], r);
}

}  // namespace qgrkz
