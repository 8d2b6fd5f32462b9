// Dg coalgebras and algebras as degreewise-finite structure-constant tables,
// with exact checks for the defining laws.  Houses the bar and cobar
// constructions and the universal twisting cochain.
//
// Sign conventions (pinned by d^2 = 0, the derivation/coderivation laws and
// the transport test against the necklace category; see README):
//   cobar:  d[c] = -[dc] + sum_(c) (-1)^{|c'|} [c'|c''],     extended as a
//           derivation with Koszul signs over the shifted degrees |c_i| - 1
//   bar:    d{a_1|..|a_n} = sum_i (-1)^{eta_{i-1}+1} {..|d a_i|..}
//                         + sum_i (-1)^{eta_i} {..|a_i a_{i+1}|..},
//           eta_i = sum_{j<=i} (|a_j| + 1)
#pragma once

#include "hocolim/complex.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hocolim {

template <Scalar K>
struct CopTerm {
    BasisRef l, r;
    K c;
};

template <Scalar K>
using Tensor2 = std::map<std::pair<BasisRef, BasisRef>, K>;
template <Scalar K>
using Tensor3 = std::map<std::tuple<BasisRef, BasisRef, BasisRef>, K>;

template <Scalar K>
struct DgCoalgebra {
    BoundedComplex<K> cx;
    std::vector<std::vector<std::vector<CopTerm<K>>>> cop;  // [deg - lo][idx]
    std::vector<K> counit0;                                 // on the degree-0 basis
    std::optional<BasisRef> coaug;

    const std::vector<CopTerm<K>>& cop_of(const BasisRef& r) const {
        return cop[r.deg - cx.lo()][r.idx];
    }
    K counit(const BasisRef& r) const { return r.deg == 0 ? counit0[r.idx] : K(0); }

    // reduced coproduct on a connected coalgebra: both factors positive degree
    std::vector<CopTerm<K>> reduced_cop(const BasisRef& r) const {
        std::vector<CopTerm<K>> out;
        for (const auto& t : cop_of(r))
            if (t.l.deg >= 1 && t.r.deg >= 1) out.push_back(t);
        return out;
    }
    bool connected() const { return cx.dim(0) == 1 && coaug.has_value(); }

    std::optional<BasisRef> coassoc_witness() const {
        for (int d = cx.lo(); d <= cx.hi(); ++d)
            for (int i = 0; i < cx.dim(d); ++i) {
                BasisRef x{d, i};
                Tensor3<K> lhs, rhs;
                for (const auto& t : cop_of(x))
                    for (const auto& u : cop_of(t.l)) add3(lhs, u.l, u.r, t.r, u.c * t.c);
                for (const auto& t : cop_of(x))
                    for (const auto& u : cop_of(t.r)) add3(rhs, t.l, u.l, u.r, t.c * u.c);
                if (lhs != rhs) return x;
            }
        return std::nullopt;
    }
    std::optional<BasisRef> counit_witness() const {
        for (int d = cx.lo(); d <= cx.hi(); ++d)
            for (int i = 0; i < cx.dim(d); ++i) {
                BasisRef x{d, i};
                Lin<K> left, right;
                for (const auto& t : cop_of(x)) {
                    lin_add(left, t.r, counit(t.l) * t.c);
                    lin_add(right, t.l, counit(t.r) * t.c);
                }
                Lin<K> self{{x, K(1)}};
                if (left != self || right != self) return x;
            }
        return std::nullopt;
    }
    // Delta d = (d (x) id + id (x) d) Delta
    std::optional<BasisRef> compat_witness() const {
        for (int d = cx.lo(); d <= cx.hi(); ++d)
            for (int i = 0; i < cx.dim(d); ++i) {
                BasisRef x{d, i};
                Tensor2<K> lhs, rhs;
                for (const auto& [y, c] : cx.apply_d(Lin<K>{{x, K(1)}}))
                    for (const auto& t : cop_of(y)) add2(lhs, t.l, t.r, t.c * c);
                for (const auto& t : cop_of(x)) {
                    for (const auto& [y, c] : cx.apply_d(Lin<K>{{t.l, K(1)}}))
                        add2(rhs, y, t.r, c * t.c);
                    for (const auto& [y, c] : cx.apply_d(Lin<K>{{t.r, K(1)}}))
                        add2(rhs, t.l, y, sign_pow<K>(t.l.deg) * c * t.c);
                }
                if (lhs != rhs) return x;
            }
        return std::nullopt;
    }

    static void add2(Tensor2<K>& t, const BasisRef& a, const BasisRef& b, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace({a, b}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    static void add3(Tensor3<K>& t, const BasisRef& a, const BasisRef& b, const BasisRef& c,
                     const K& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = t.try_emplace({a, b, c}, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) t.erase(it);
        }
    }
};

// Least n with (Delta')^n (x) = 0, iterating on the leftmost tensor slot;
// nullopt when the bound is reached first.
template <Scalar K>
std::optional<int> conilpotency_index(const DgCoalgebra<K>& c, const BasisRef& x, int bound) {
    if (x.deg == 0) return 0;
    std::map<std::vector<BasisRef>, K> cur{{{x}, K(1)}};
    for (int n = 1; n <= bound; ++n) {
        std::map<std::vector<BasisRef>, K> nxt;
        for (const auto& [word, coeff] : cur)
            for (const auto& t : c.reduced_cop(word[0])) {
                std::vector<BasisRef> w{t.l, t.r};
                w.insert(w.end(), word.begin() + 1, word.end());
                auto [it, fresh] = nxt.try_emplace(std::move(w), t.c * coeff);
                if (!fresh) {
                    it->second += t.c * coeff;
                    if (it->second.is_zero()) nxt.erase(it);
                }
            }
        if (nxt.empty()) return n;
        cur = std::move(nxt);
    }
    return std::nullopt;
}

template <Scalar K>
struct DgAlgebra {
    BoundedComplex<K> cx;
    std::function<std::optional<Lin<K>>(BasisRef, BasisRef)> mul;  // nullopt: beyond truncation
    BasisRef unit;
    std::function<K(BasisRef)> aug;

    std::optional<Lin<K>> mul_lin(const Lin<K>& a, const Lin<K>& b) const {
        Lin<K> out;
        for (const auto& [x, cx_] : a)
            for (const auto& [y, cy] : b) {
                auto p = mul(x, y);
                if (!p) return std::nullopt;
                lin_add(out, *p, cx_ * cy);
            }
        return out;
    }

    // Leibniz d(ab) = da.b + (-1)^{|a|} a.db on pairs where all products and
    // differentials are exactly stored; returns a witness pair on failure.
    std::optional<std::pair<BasisRef, BasisRef>> leibniz_witness() const {
        for (int da = cx.lo(); da <= cx.hi(); ++da)
            for (int ia = 0; ia < cx.dim(da); ++ia)
                for (int db = cx.lo(); db <= cx.hi(); ++db)
                    for (int ib = 0; ib < cx.dim(db); ++ib) {
                        BasisRef a{da, ia}, b{db, ib};
                        if (!cx.diff_exact(a) || !cx.diff_exact(b)) continue;
                        auto ab = mul(a, b);
                        if (!ab) continue;
                        bool ok = true;
                        for (const auto& [w, c] : *ab)
                            if (!cx.diff_exact(w)) ok = false;
                        if (!ok) continue;
                        Lin<K> lhs = cx.apply_d(*ab);
                        auto l1 = mul_lin(cx.apply_d(Lin<K>{{a, K(1)}}), Lin<K>{{b, K(1)}});
                        auto l2 = mul_lin(Lin<K>{{a, K(1)}}, cx.apply_d(Lin<K>{{b, K(1)}}));
                        if (!l1 || !l2) continue;
                        Lin<K> rhs = *l1;
                        lin_add(rhs, *l2, sign_pow<K>(da));
                        if (lhs != rhs) return std::pair{a, b};
                    }
        return std::nullopt;
    }

    std::optional<std::tuple<BasisRef, BasisRef, BasisRef>> assoc_witness() const {
        for (int da = cx.lo(); da <= cx.hi(); ++da)
            for (int ia = 0; ia < cx.dim(da); ++ia)
                for (int db = cx.lo(); db <= cx.hi(); ++db)
                    for (int ib = 0; ib < cx.dim(db); ++ib)
                        for (int dc = cx.lo(); dc <= cx.hi(); ++dc)
                            for (int ic = 0; ic < cx.dim(dc); ++ic) {
                                BasisRef a{da, ia}, b{db, ib}, c{dc, ic};
                                auto ab = mul(a, b);
                                auto bc = mul(b, c);
                                if (!ab || !bc) continue;
                                auto l = mul_lin(*ab, Lin<K>{{c, K(1)}});
                                auto r = mul_lin(Lin<K>{{a, K(1)}}, *bc);
                                if (!l || !r) continue;
                                if (*l != *r) return std::tuple{a, b, c};
                            }
        return std::nullopt;
    }
};

// ---------------------------------------------------------------------------
// cobar construction

template <Scalar K>
struct CobarAlgebra {
    DgAlgebra<K> alg;
    std::shared_ptr<const DgCoalgebra<K>> base;
    int max_degree = 0;
    int word_cap = 0;
    bool truncated = false;  // some degreewise basis is cut off by the word cap

    std::vector<BasisRef> letters;    // letter id -> C basis element (degree >= 1)
    std::map<BasisRef, int> letter_of;
    std::map<BasisRef, std::vector<int>> word_of;         // algebra basis -> letter word
    std::map<std::vector<int>, BasisRef> ref_of;

    int letter_degree(int l) const { return letters[l].deg - 1; }
    int word_degree(const std::vector<int>& w) const {
        int d = 0;
        for (int l : w) d += letter_degree(l);
        return d;
    }
    std::optional<BasisRef> find_word(const std::vector<int>& w) const {
        auto it = ref_of.find(w);
        return it == ref_of.end() ? std::nullopt : std::optional<BasisRef>(it->second);
    }
    const std::vector<int>& word(const BasisRef& r) const { return word_of.at(r); }

    // universal twisting cochain: positive-degree C elements to one-letter words
    Lin<K> tau(const BasisRef& c) const {
        if (c.deg == 0) return {};
        auto r = find_word({letter_of.at(c)});
        if (!r) throw std::out_of_range("tau image beyond the stored degree window");
        return {{*r, K(1)}};
    }

    std::string word_label(const std::vector<int>& w) const {
        if (w.empty()) return "1";
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "|";
            s += base->cx.label(letters[w[i]]);
        }
        return s + "]";
    }
};

template <Scalar K>
CobarAlgebra<K> cobar(std::shared_ptr<const DgCoalgebra<K>> c, int max_degree, int word_cap) {
    if (!c->connected()) throw std::invalid_argument("cobar requires a connected coalgebra");
    CobarAlgebra<K> om;
    om.base = c;
    om.max_degree = max_degree;
    om.word_cap = word_cap;
    for (int d = 1; d <= c->cx.hi(); ++d)
        for (int i = 0; i < c->cx.dim(d); ++i) {
            om.letter_of[BasisRef{d, i}] = static_cast<int>(om.letters.size());
            om.letters.push_back(BasisRef{d, i});
        }
    for (const auto& l : om.letters)
        if (l.deg == 1) om.truncated = true;

    // enumerate monomials by total degree and word length
    std::vector<std::pair<std::vector<int>, int>> words{{{}, 0}};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= word_cap; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int l = 0; l < static_cast<int>(om.letters.size()); ++l) {
                std::vector<int> w2 = w;
                w2.push_back(l);
                int deg = om.word_degree(w2);
                if (deg > max_degree) continue;
                words.push_back({w2, deg});
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }
    om.alg.cx = BoundedComplex<K>(0, max_degree);
    std::vector<std::vector<std::pair<std::string, std::vector<int>>>> per_degree(max_degree + 1);
    for (auto& [w, deg] : words) per_degree[deg].push_back({om.word_label(w), w});
    for (int d = 0; d <= max_degree; ++d) {
        std::sort(per_degree[d].begin(), per_degree[d].end());
        for (auto& [label, w] : per_degree[d]) {
            int idx = om.alg.cx.add_element(d, label);
            om.word_of[BasisRef{d, idx}] = w;
            om.ref_of[w] = BasisRef{d, idx};
        }
    }
    om.alg.cx.finalize_basis();
    om.alg.cx.set_truncated(true);
    om.alg.unit = om.ref_of.at({});
    om.alg.aug = [unit = om.alg.unit](BasisRef r) { return r == unit ? K(1) : K(0); };

    // differential of a single letter: -[dc] + sum (-1)^{|c'|}[c'|c''],
    // as letter words with coefficients
    auto letter_d = [&](int l) {
        std::vector<std::pair<std::vector<int>, K>> out;
        BasisRef cref = om.letters[l];
        for (const auto& [y, coeff] : c->cx.apply_d(Lin<K>{{cref, K(1)}}))
            if (y.deg >= 1) out.push_back({{om.letter_of.at(y)}, -coeff});
        for (const auto& t : c->reduced_cop(cref))
            out.push_back({{om.letter_of.at(t.l), om.letter_of.at(t.r)},
                           sign_pow<K>(t.l.deg) * t.c});
        return out;
    };

    for (const auto& [ref, w] : om.word_of) {
        Lin<K> dw;
        bool exact = true;
        int prefix = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [repl, coeff] : letter_d(w[i])) {
                std::vector<int> w2(w.begin(), w.begin() + i);
                w2.insert(w2.end(), repl.begin(), repl.end());
                w2.insert(w2.end(), w.begin() + i + 1, w.end());
                auto target = om.find_word(w2);
                if (!target) {
                    exact = false;
                    continue;
                }
                lin_add(dw, *target, sign_pow<K>(prefix) * coeff);
            }
            prefix += om.letter_degree(w[i]);
        }
        om.alg.cx.set_diff_column(ref, dw);
        if (!exact) om.alg.cx.mark_inexact(ref);
    }

    om.alg.mul = [om_words = om.word_of, om_refs = om.ref_of](BasisRef a,
                                                              BasisRef b) -> std::optional<Lin<K>> {
        std::vector<int> w = om_words.at(a);
        const auto& w2 = om_words.at(b);
        w.insert(w.end(), w2.begin(), w2.end());
        auto it = om_refs.find(w);
        if (it == om_refs.end()) return std::nullopt;
        return Lin<K>{{it->second, K(1)}};
    };
    return om;
}

// ---------------------------------------------------------------------------
// bar construction

template <Scalar K>
struct BarCoalgebra {
    DgCoalgebra<K> co;
    std::shared_ptr<const DgAlgebra<K>> base;
    int max_degree = 0;

    std::vector<BasisRef> letters;  // augmentation-ideal basis of A
    std::map<BasisRef, int> letter_of;
    std::map<BasisRef, std::vector<int>> word_of;
    std::map<std::vector<int>, BasisRef> ref_of;

    int letter_degree(int l) const { return letters[l].deg + 1; }
    const std::vector<int>& word(const BasisRef& r) const { return word_of.at(r); }
    std::optional<BasisRef> find_word(const std::vector<int>& w) const {
        auto it = ref_of.find(w);
        return it == ref_of.end() ? std::nullopt : std::optional<BasisRef>(it->second);
    }
    std::string word_label(const std::vector<int>& w) const {
        std::string s = "{";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "|";
            s += base->cx.label(letters[w[i]]);
        }
        return s + "}";
    }
};

template <Scalar K>
BarCoalgebra<K> bar(std::shared_ptr<const DgAlgebra<K>> a, int max_degree) {
    BarCoalgebra<K> b;
    b.base = a;
    b.max_degree = max_degree;
    for (int d = a->cx.lo(); d <= a->cx.hi(); ++d)
        for (int i = 0; i < a->cx.dim(d); ++i) {
            BasisRef r{d, i};
            if (r == a->unit) continue;
            if (!a->aug(r).is_zero())
                throw std::invalid_argument("bar: augmentation must vanish off the unit");
            if (d + 1 > max_degree) continue;
            b.letter_of[r] = static_cast<int>(b.letters.size());
            b.letters.push_back(r);
        }

    std::vector<std::pair<std::vector<int>, int>> words{{{}, 0}};
    std::vector<std::pair<std::vector<int>, int>> frontier = words;
    while (!frontier.empty()) {
        std::vector<std::pair<std::vector<int>, int>> next;
        for (const auto& [w, deg] : frontier)
            for (int l = 0; l < static_cast<int>(b.letters.size()); ++l) {
                int deg2 = deg + b.letter_degree(l);
                if (deg2 > max_degree) continue;
                std::vector<int> w2 = w;
                w2.push_back(l);
                words.push_back({w2, deg2});
                next.push_back({std::move(w2), deg2});
            }
        frontier = std::move(next);
    }
    b.co.cx = BoundedComplex<K>(0, max_degree);
    std::vector<std::vector<std::pair<std::string, std::vector<int>>>> per_degree(max_degree + 1);
    for (auto& [w, deg] : words) per_degree[deg].push_back({b.word_label(w), w});
    for (int d = 0; d <= max_degree; ++d) {
        std::sort(per_degree[d].begin(), per_degree[d].end());
        for (auto& [label, w] : per_degree[d]) {
            int idx = b.co.cx.add_element(d, label);
            b.word_of[BasisRef{d, idx}] = w;
            b.ref_of[w] = BasisRef{d, idx};
        }
    }
    b.co.cx.finalize_basis();
    b.co.cx.set_truncated(true);
    b.co.coaug = b.ref_of.at({});
    b.co.counit0.assign(b.co.cx.dim(0), K(0));
    b.co.counit0[b.co.coaug->idx] = K(1);
    b.co.cop.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) b.co.cop[d].resize(b.co.cx.dim(d));

    // differential
    for (const auto& [ref, w] : b.word_of) {
        Lin<K> dw;
        bool exact = true;
        int n = static_cast<int>(w.size());
        std::vector<int> eta(n + 1, 0);  // eta[i] = sum_{j<i} (|a_j|+1)
        for (int i = 0; i < n; ++i) eta[i + 1] = eta[i] + b.letter_degree(w[i]);
        for (int i = 0; i < n; ++i) {
            BasisRef ai = b.letters[w[i]];
            if (!a->cx.diff_exact(ai)) exact = false;
            for (const auto& [y, coeff] : a->cx.apply_d(Lin<K>{{ai, K(1)}})) {
                if (y == a->unit) continue;
                auto li = b.letter_of.find(y);
                if (li == b.letter_of.end()) {
                    exact = false;
                    continue;
                }
                std::vector<int> w2 = w;
                w2[i] = li->second;
                auto target = b.find_word(w2);
                if (!target) {
                    exact = false;
                    continue;
                }
                lin_add(dw, *target, sign_pow<K>(eta[i] + 1) * coeff);
            }
        }
        for (int i = 0; i + 1 < n; ++i) {
            auto prod = a->mul(b.letters[w[i]], b.letters[w[i + 1]]);
            if (!prod) {
                exact = false;
                continue;
            }
            for (const auto& [y, coeff] : *prod) {
                if (y == a->unit) continue;
                auto li = b.letter_of.find(y);
                if (li == b.letter_of.end()) {
                    exact = false;
                    continue;
                }
                std::vector<int> w2;
                w2.insert(w2.end(), w.begin(), w.begin() + i);
                w2.push_back(li->second);
                w2.insert(w2.end(), w.begin() + i + 2, w.end());
                auto target = b.find_word(w2);
                if (!target) {
                    exact = false;
                    continue;
                }
                lin_add(dw, *target, sign_pow<K>(eta[i + 1]) * coeff);
            }
        }
        b.co.cx.set_diff_column(ref, dw);
        if (!exact) b.co.cx.mark_inexact(ref);
    }

    // deconcatenation coproduct
    for (const auto& [ref, w] : b.word_of) {
        auto& terms = b.co.cop.at(ref.deg - b.co.cx.lo()).at(ref.idx);
        for (std::size_t i = 0; i <= w.size(); ++i) {
            std::vector<int> wl(w.begin(), w.begin() + i);
            std::vector<int> wr(w.begin() + i, w.end());
            auto lr = b.find_word(wl);
            auto rr = b.find_word(wr);
            if (!lr || !rr) throw std::logic_error("deconcatenation left the stored window");
            terms.push_back({*lr, *rr, K(1)});
        }
    }
    return b;
}

// rho: C -> B Omega C,  c |-> {[c]} + sum {[c']|[c'']} + ... (no signs);
// well defined by conilpotency, guarded by max_length.
template <Scalar K>
Lin<K> rho(const CobarAlgebra<K>& om, const BarCoalgebra<K>& b, const BasisRef& c,
           int max_length) {
    const DgCoalgebra<K>& C = *om.base;
    if (c.deg == 0) {
        if (C.coaug && c == *C.coaug) return {{*b.find_word({}), K(1)}};
        throw std::invalid_argument("rho on a degree-0 element other than the coaugmentation");
    }
    // words of cobar one-letter words
    std::map<std::vector<BasisRef>, K> acc;
    std::function<void(const BasisRef&, std::vector<BasisRef>&, const K&)> rec =
        [&](const BasisRef& x, std::vector<BasisRef>& prefix, const K& coeff) {
            if (static_cast<int>(prefix.size()) >= max_length)
                throw std::runtime_error("rho: word length exceeded max_length before terminating");
            prefix.push_back(x);
            auto [it, fresh] = acc.try_emplace(prefix, coeff);
            if (!fresh) it->second += coeff;
            for (const auto& t : C.reduced_cop(x)) {
                std::vector<BasisRef> p2 = prefix;
                p2.pop_back();
                p2.push_back(t.l);
                rec(t.r, p2, coeff * t.c);
            }
            prefix.pop_back();
        };
    std::vector<BasisRef> empty;
    rec(c, empty, K(1));
    Lin<K> out;
    for (const auto& [cword, coeff] : acc) {
        std::vector<int> barword;
        for (const auto& cref : cword) {
            auto one = om.find_word({om.letter_of.at(cref)});
            if (!one) throw std::out_of_range("rho: letter beyond cobar window");
            barword.push_back(b.letter_of.at(*one));
        }
        auto ref = b.find_word(barword);
        if (!ref) throw std::out_of_range("rho: bar word beyond stored window");
        lin_add(out, *ref, coeff);
    }
    return out;
}

}  // namespace hocolim
