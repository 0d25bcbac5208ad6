#pragma once

#include "qgrkz/rootsys/chamber.hpp"

#include <optional>

namespace qgrkz {

// Minuscule representation V(lambda) of the dual algebra in the basis v_nu,
// nu in W lambda, normalized along chains of C-simple lowering operators:
// every C-simple e and f has 0/1 matrix entries. Root vectors of other
// roots are commutators, rescaled so that [e_g, e_{-g}] = h_g.
class MinusculeRep {
public:
    using Dense = std::vector<std::vector<Rational>>;  // [row][col]

    MinusculeRep(const Chamber& C, Coweight lambda) : D_(C.datum_ptr()), lambda_(std::move(lambda)) {
        const auto& D = *D_;
        if (!D.simply_laced())
            throw std::invalid_argument("representation oracle needs a simply-laced root system");
        if (!D.is_minuscule(lambda_)) throw std::invalid_argument("highest weight is not minuscule");
        weights_ = D.weyl_orbit(lambda_);
        for (std::size_t a = 0; a < weights_.size(); ++a) index_[weights_[a]] = a;
        std::size_t n = weights_.size();

        std::vector<std::size_t> pos;
        for (std::size_t k = 0; k < D.num_roots(); ++k)
            if (C.positive(k)) pos.push_back(k);
        simple_ = C.simple_roots();
        if (static_cast<int>(simple_.size()) != D.rank) throw std::logic_error("chamber has the wrong number of simple roots");

        e_.assign(D.num_roots(), Dense());
        for (auto k : simple_) {
            e_[k] = shift_matrix(k);
            e_[D.negative_of(k)] = shift_matrix(D.negative_of(k));
        }
        verify_simple_relations();

        // remaining positive roots by increasing height over the C-simple ones
        std::vector<bool> known(D.num_roots(), false);
        for (auto k : simple_) known[k] = known[D.negative_of(k)] = true;
        for (bool grew = true; grew;) {
            grew = false;
            for (auto g : pos) {
                if (known[g]) continue;
                for (auto b : simple_) {
                    std::vector<int> c(D.rank);
                    for (int t = 0; t < D.rank; ++t) c[t] = D.roots[g].coords[t] - D.roots[b].coords[t];
                    int gp = D.find_root(c);
                    if (gp < 0 || !known[gp] || !C.positive(gp)) continue;
                    std::size_t gn = D.negative_of(g), gpn = D.negative_of(gp), bn = D.negative_of(b);
                    e_[g] = bracket(e_[b], e_[gp]);
                    Dense f = bracket(e_[gpn], e_[bn]);
                    // [e_g, f] = c h_g; rescale f by 1/c
                    Dense h = bracket(e_[g], f);
                    std::optional<Rational> c0;
                    for (std::size_t a = 0; a < n; ++a) {
                        int hv = D.pair(weights_[a], g);
                        if (hv != 0) {
                            c0 = h[a][a] / Rational(hv);
                            break;
                        }
                    }
                    if (!c0 || c0->is_zero()) throw std::logic_error("root vector acts trivially");
                    for (auto& row : f)
                        for (auto& x : row) x /= *c0;
                    e_[gn] = f;
                    known[g] = known[gn] = true;
                    grew = true;
                    break;
                }
            }
        }
        for (std::size_t k = 0; k < D.num_roots(); ++k) {
            if (!known[k]) throw std::logic_error("could not build every root vector");
            check_root_pair(k);
        }
    }

    const CartanDatum& datum() const { return *D_; }
    const Coweight& highest() const { return lambda_; }
    const std::vector<Coweight>& weights() const { return weights_; }
    std::size_t dim() const { return weights_.size(); }
    const std::vector<std::size_t>& simple_roots() const { return simple_; }
    const Dense& root_matrix(std::size_t k) const { return e_.at(k); }
    std::optional<std::size_t> find(const Coweight& nu) const {
        auto it = index_.find(nu);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // e_k v_nu = c v_{nu + k}, or nothing.
    std::optional<std::pair<Coweight, Rational>> act(std::size_t k, const Coweight& nu) const {
        auto a = find(nu);
        if (!a) throw std::invalid_argument("not a weight of the representation");
        const auto& g = D_->roots.at(k).coroot;
        Coweight t = nu;
        for (int i = 0; i < D_->rank; ++i) t[i] += g[i];
        auto b = find(t);
        if (!b) return std::nullopt;
        const Rational& c = e_[k][*b][*a];
        if (c.is_zero()) return std::nullopt;
        return std::make_pair(t, c);
    }

private:
    Dense zero() const { return Dense(dim(), std::vector<Rational>(dim())); }

    Dense shift_matrix(std::size_t k) const {
        Dense m = zero();
        const auto& g = D_->roots[k].coroot;
        for (std::size_t a = 0; a < dim(); ++a) {
            Coweight t = weights_[a];
            for (int i = 0; i < D_->rank; ++i) t[i] += g[i];
            if (auto b = find(t)) m[*b][a] = 1;
        }
        return m;
    }

    Dense mul(const Dense& x, const Dense& y) const {
        Dense r = zero();
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t k = 0; k < dim(); ++k) {
                if (x[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < dim(); ++j)
                    if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
            }
        return r;
    }
    Dense bracket(const Dense& x, const Dense& y) const {
        Dense a = mul(x, y), b = mul(y, x);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) a[i][j] -= b[i][j];
        return a;
    }
    bool is_zero(const Dense& m) const {
        for (auto& row : m)
            for (auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }
    Dense h_matrix(std::size_t k) const {
        Dense m = zero();
        for (std::size_t a = 0; a < dim(); ++a) m[a][a] = D_->pair(weights_[a], k);
        return m;
    }

    // [e_k, e_{-k}] = h_k and [h_j, e_k] = <k, j> e_k
    void check_root_pair(std::size_t k) const {
        const auto& D = *D_;
        if (bracket(e_[k], e_[D.negative_of(k)]) != h_matrix(k))
            throw std::logic_error("root vectors violate [e, f] = h");
        for (auto s : simple_) {
            Dense lhs = bracket(h_matrix(s), e_[k]);
            int c = D.pair(D.roots[k].coroot, s);
            Dense rhs = e_[k];
            for (auto& row : rhs)
                for (auto& x : row) x *= Rational(c);
            if (lhs != rhs) throw std::logic_error("root vector has the wrong weight");
        }
    }

    // Chain independence of v_nu: the 0/1 matrices must satisfy the
    // defining relations, including Serre's.
    void verify_simple_relations() const {
        const auto& D = *D_;
        for (auto a : simple_)
            for (auto b : simple_) {
                Dense ef = bracket(e_[a], e_[D.negative_of(b)]);
                if (a == b ? ef != h_matrix(a) : !is_zero(ef))
                    throw std::logic_error("chain normalization is inconsistent: [e_a, f_b] != delta h_a");
                if (a == b) continue;
                int aab = D.pair(D.roots[a].coroot, b);
                for (int sgn : {1, -1}) {
                    std::size_t x = sgn > 0 ? a : D.negative_of(a), y = sgn > 0 ? b : D.negative_of(b);
                    Dense m = e_[y];
                    for (int t = 0; t < 1 - aab; ++t) m = bracket(e_[x], m);
                    if (!is_zero(m)) throw std::logic_error("chain normalization violates a Serre relation");
                }
            }
    }

    std::shared_ptr<const CartanDatum> D_;
    Coweight lambda_;
    std::vector<Coweight> weights_;
    std::map<Coweight, std::size_t> index_;
    std::vector<std::size_t> simple_;
    std::vector<Dense> e_;
};

}  // namespace qgrkz
