// Finite simplicial sets: nondegenerate generators with face tables, canonical
// degeneracy words, structure-map normalization, standard models and binary
// products.
//
// A SimplexRef (base, word) stands for s_{i1} s_{i2} ... s_{ir} (base) with
// i1 > i2 > ... > ir.  In that canonical form the word is exactly the collapse
// set {j : u(j) = u(j+1)} of the monotone surjection u the word encodes, which
// is what makes joint canonicalization in products a set intersection.
#pragma once

#include "hocolim/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hocolim {

struct SimplexRef {
    int base = -1;
    std::vector<int> word;  // strictly decreasing degeneracy indices
    auto operator<=>(const SimplexRef&) const = default;
    bool degenerate() const { return !word.empty(); }
};

namespace detail {

// monotone surjection [n + |word|] -> [n] with the given collapse set
inline std::vector<int> word_to_map(const std::vector<int>& word, int n) {
    int m = n + static_cast<int>(word.size());
    std::set<int> w(word.begin(), word.end());
    std::vector<int> u(m + 1);
    u[0] = 0;
    for (int j = 0; j < m; ++j) u[j + 1] = u[j] + (w.count(j) ? 0 : 1);
    return u;
}

inline std::vector<int> collapse_set(const std::vector<int>& u) {
    std::vector<int> w;
    for (int j = static_cast<int>(u.size()) - 2; j >= 0; --j)
        if (u[j] == u[j + 1]) w.push_back(j);
    return w;
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

}  // namespace detail

class SimplicialSet {
public:
    struct Generator {
        std::string id;
        int dim = 0;
        std::vector<SimplexRef> faces;  // d_0 ... d_dim, set for dim >= 1
        int min_vertex = -1;
        int max_vertex = -1;
    };

    explicit SimplicialSet(std::string name = "") : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int add_generator(const std::string& id, int dim) {
        if (dim < 0) throw std::invalid_argument("negative dimension");
        if (by_id_.count(id)) throw std::invalid_argument("duplicate generator id: " + id);
        gens_.push_back({id, dim, std::vector<SimplexRef>(dim >= 1 ? dim + 1 : 0), -1, -1});
        by_id_[id] = static_cast<int>(gens_.size()) - 1;
        return static_cast<int>(gens_.size()) - 1;
    }
    void set_face(int gen, int i, SimplexRef f) { gens_.at(gen).faces.at(i) = std::move(f); }

    // Sort generators by (dim, id), remap face tables, compute end vertices.
    void finish() {
        std::vector<int> order(gens_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(gens_[a].dim, gens_[a].id) < std::pair(gens_[b].dim, gens_[b].id);
        });
        std::vector<int> newpos(gens_.size());
        for (std::size_t i = 0; i < order.size(); ++i) newpos[order[i]] = static_cast<int>(i);
        std::vector<Generator> g2;
        g2.reserve(gens_.size());
        for (int old : order) g2.push_back(std::move(gens_[old]));
        for (auto& g : g2)
            for (auto& f : g.faces) f.base = newpos[f.base];
        gens_ = std::move(g2);
        by_id_.clear();
        by_dim_.clear();
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            by_id_[gens_[i].id] = static_cast<int>(i);
            if (static_cast<int>(by_dim_.size()) <= gens_[i].dim) by_dim_.resize(gens_[i].dim + 1);
            by_dim_[gens_[i].dim].push_back(static_cast<int>(i));
        }
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            int n = gens_[i].dim;
            gens_[i].min_vertex = apply(static_cast<int>(i), {0}).base;
            gens_[i].max_vertex = apply(static_cast<int>(i), {n}).base;
        }
    }

    int size() const { return static_cast<int>(gens_.size()); }
    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int dim) const {
        return (dim >= 0 && dim < static_cast<int>(by_dim_.size()))
                   ? static_cast<int>(by_dim_[dim].size())
                   : 0;
    }
    const std::vector<int>& generators_of_dim(int dim) const {
        static const std::vector<int> empty;
        return (dim >= 0 && dim < static_cast<int>(by_dim_.size())) ? by_dim_[dim] : empty;
    }
    const Generator& gen(int i) const { return gens_.at(i); }
    std::optional<int> find(const std::string& id) const {
        auto it = by_id_.find(id);
        return it == by_id_.end() ? std::nullopt : std::optional<int>(it->second);
    }
    int require(const std::string& id) const {
        auto g = find(id);
        if (!g) throw std::out_of_range("unknown generator id: " + id);
        return *g;
    }

    int ref_dim(const SimplexRef& r) const {
        return gens_.at(r.base).dim + static_cast<int>(r.word.size());
    }
    int min_vertex(const SimplexRef& r) const { return gens_.at(r.base).min_vertex; }
    int max_vertex(const SimplexRef& r) const { return gens_.at(r.base).max_vertex; }

    std::string ref_string(const SimplexRef& r) const {
        std::string s = gens_.at(r.base).id;
        for (int k : r.word) s += ".s" + std::to_string(k);
        return s;
    }

    // K(g)(base) for an arbitrary monotone map g: [m] -> [dim base], in
    // canonical form.  Non-surjective maps walk the face table.
    SimplexRef apply(int base, std::vector<int> g) const {
        for (;;) {
            const Generator& gen = gens_.at(base);
            int n = gen.dim;
            if (g.empty()) throw std::invalid_argument("empty monotone map");
            for (std::size_t i = 0; i + 1 < g.size(); ++i)
                if (g[i] > g[i + 1]) throw std::invalid_argument("map not monotone");
            if (g.front() < 0 || g.back() > n) throw std::out_of_range("map value out of range");
            std::vector<bool> hit(n + 1, false);
            for (int v : g) hit[v] = true;
            int t = -1;
            for (int v = n; v >= 0; --v)
                if (!hit[v]) { t = v; break; }
            if (t < 0) return {base, detail::collapse_set(g)};
            // g = delta_t ∘ g' ; K(delta_t)(base) = s_{w'}(b')
            for (auto& v : g)
                if (v > t) --v;
            const SimplexRef& f = gen.faces.at(t);
            g = detail::compose(detail::word_to_map(f.word, gens_.at(f.base).dim), g);
            base = f.base;
        }
    }

    SimplexRef face(const SimplexRef& r, int i) const {
        int m = ref_dim(r);
        if (m == 0) throw std::out_of_range("face of a vertex");
        if (i < 0 || i > m) throw std::out_of_range("face index out of range");
        std::vector<int> u = detail::word_to_map(r.word, gens_.at(r.base).dim);
        u.erase(u.begin() + i);
        return apply(r.base, u);
    }
    SimplexRef degenerate(const SimplexRef& r, int j) const {
        int m = ref_dim(r);
        if (j < 0 || j > m) throw std::out_of_range("degeneracy index out of range");
        std::vector<int> u = detail::word_to_map(r.word, gens_.at(r.base).dim);
        u.insert(u.begin() + j, u[j]);
        return apply(r.base, u);
    }

    // Canonicalize an operator word applied to a generator; ops are listed
    // outermost first, e.g. {d0, s0} means d_0(s_0(x)).
    struct Op {
        char kind;  // 'd' or 's'
        int index;
    };
    SimplexRef normalize(int base, const std::vector<Op>& ops) const {
        SimplexRef r{base, {}};
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            if (it->kind == 'd')
                r = face(r, it->index);
            else if (it->kind == 's')
                r = degenerate(r, it->index);
            else
                throw std::invalid_argument("unknown structure map kind");
        }
        return r;
    }

    struct ValidationReport {
        bool ok = true;
        std::string message = "ok";
    };

    // Checks the normalized simplicial identities d_i d_j = d_{j-1} d_i (i<j)
    // on every generator, plus face-table shape.
    ValidationReport validate() const {
        for (std::size_t x = 0; x < gens_.size(); ++x) {
            const Generator& g = gens_[x];
            if (g.dim >= 1 && static_cast<int>(g.faces.size()) != g.dim + 1)
                return {false, "generator " + g.id + " has an incomplete face table"};
            for (const auto& f : g.faces) {
                if (f.base < 0 || f.base >= size())
                    return {false, "generator " + g.id + " has an unresolved face reference"};
                if (ref_dim(f) != g.dim - 1)
                    return {false, "face of " + g.id + " has wrong dimension"};
                for (std::size_t i = 0; i + 1 < f.word.size(); ++i)
                    if (f.word[i] <= f.word[i + 1])
                        return {false, "face of " + g.id + " has a non-canonical degeneracy word"};
            }
            SimplexRef r{static_cast<int>(x), {}};
            for (int j = 1; j <= g.dim; ++j)
                for (int i = 0; i < j; ++i) {
                    SimplexRef a = face(face(r, j), i);
                    SimplexRef b = face(face(r, i), j - 1);
                    if (!(a == b))
                        return {false, "identity d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                           " violated on " + g.id};
                }
        }
        return {};
    }

    std::vector<int> vertices() const { return generators_of_dim(0); }
    bool one_vertex() const { return count(0) == 1; }

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::map<std::string, int> by_id_;
    std::vector<std::vector<int>> by_dim_;
};

// ---------------------------------------------------------------------------
// standard models

inline SimplicialSet delta(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("delta(n) supports 0 <= n <= 9");
    SimplicialSet k("delta" + std::to_string(n));
    std::map<std::vector<int>, std::string> ids;
    // nonempty subsets of {0..n}, id = concatenated vertex digits
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> s;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) s.push_back(v);
        subsets.push_back(s);
    }
    for (const auto& s : subsets) {
        std::string id;
        for (int v : s) id += std::to_string(v);
        ids[s] = id;
        k.add_generator(id, static_cast<int>(s.size()) - 1);
    }
    for (const auto& s : subsets) {
        if (s.size() < 2) continue;
        int g = *k.find(ids.at(s));
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> f = s;
            f.erase(f.begin() + i);
            k.set_face(g, static_cast<int>(i), SimplexRef{*k.find(ids.at(f)), {}});
        }
    }
    k.finish();
    return k;
}

// Delta^n with the boundary collapsed to a point: one vertex, one n-cell.
inline SimplicialSet sphere_min(int n) {
    if (n < 1) throw std::invalid_argument("sphere_min(n) needs n >= 1");
    SimplicialSet k("sphere_min" + std::to_string(n));
    int v = k.add_generator("v", 0);
    int s = k.add_generator("sigma", n);
    std::vector<int> word;
    for (int j = n - 2; j >= 0; --j) word.push_back(j);
    for (int i = 0; i <= n; ++i) k.set_face(s, i, SimplexRef{v, word});
    k.finish();
    return k;
}

inline SimplicialSet circle() {
    auto k = sphere_min(1);
    k.set_name("circle");
    return k;
}

// One vertex, one edge a, one 2-simplex with all three faces a.
inline SimplicialSet pinched() {
    SimplicialSet k("pinched");
    k.add_generator("v", 0);
    int a = k.add_generator("a", 1);
    int s = k.add_generator("sigma", 2);
    int v = *k.find("v");
    k.set_face(a, 0, SimplexRef{v, {}});
    k.set_face(a, 1, SimplexRef{v, {}});
    for (int i = 0; i <= 2; ++i) k.set_face(s, i, SimplexRef{a, {}});
    k.finish();
    return k;
}

// Wedge of two one-vertex simplicial sets at their unique vertices.
inline SimplicialSet wedge(const SimplicialSet& a, const SimplicialSet& b,
                           const std::string& name = "wedge") {
    if (!a.one_vertex() || !b.one_vertex())
        throw std::invalid_argument("wedge requires one-vertex inputs");
    SimplicialSet k(name);
    int v = k.add_generator("v", 0);
    auto import = [&](const SimplicialSet& src, const std::string& prefix) {
        std::map<int, int> remap;
        remap[src.vertices()[0]] = v;
        for (int d = 1; d <= src.max_dim(); ++d)
            for (int g : src.generators_of_dim(d)) {
                std::string id = src.gen(g).id;
                if (k.find(id) || k.find(prefix + id)) id = prefix + id;
                remap[g] = k.add_generator(id, d);
            }
        for (int d = 1; d <= src.max_dim(); ++d)
            for (int g : src.generators_of_dim(d))
                for (int i = 0; i <= d; ++i) {
                    SimplexRef f = src.gen(g).faces[i];
                    k.set_face(remap[g], i, SimplexRef{remap.at(f.base), f.word});
                }
    };
    import(a, "l:");
    import(b, "r:");
    k.finish();
    return k;
}

inline SimplicialSet wedge_circles() {
    SimplicialSet k("wedge_circles");
    int v = k.add_generator("v", 0);
    for (const char* id : {"a", "b"}) {
        int e = k.add_generator(id, 1);
        k.set_face(e, 0, SimplexRef{v, {}});
        k.set_face(e, 1, SimplexRef{v, {}});
    }
    k.finish();
    return k;
}

// ---------------------------------------------------------------------------
// binary products, materialized degree by degree up to a dimension cap

class ProductSet {
public:
    ProductSet(const SimplicialSet& a, const SimplicialSet& b, int dim_cap)
        : a_(&a), b_(&b), cap_(dim_cap), set_(a.name() + "x" + b.name()) {
        build();
    }

    const SimplicialSet& set() const { return set_; }
    const SimplicialSet& left() const { return *a_; }
    const SimplicialSet& right() const { return *b_; }
    int cap() const { return cap_; }

    // Joint canonical form of a component pair of equal total dimension.
    SimplexRef pair_ref(const SimplexRef& x, const SimplexRef& y) const {
        int m = a_->ref_dim(x);
        if (m != b_->ref_dim(y)) throw std::invalid_argument("pair of unequal dimensions");
        std::vector<int> u = detail::word_to_map(x.word, a_->gen(x.base).dim);
        std::vector<int> v = detail::word_to_map(y.word, b_->gen(y.base).dim);
        std::vector<int> shared;
        for (int j = m - 1; j >= 0; --j)
            if (u[j] == u[j + 1] && v[j] == v[j + 1]) shared.push_back(j);
        if (shared.empty()) return {lookup(x, y), {}};
        std::vector<int> s = detail::word_to_map(shared, m - static_cast<int>(shared.size()));
        // section: pick the first preimage of each value of s
        int mm = m - static_cast<int>(shared.size());
        std::vector<int> u2(mm + 1), v2(mm + 1);
        for (int j = 0; j <= m; ++j) {
            u2[s[j]] = u[j];
            v2[s[j]] = v[j];
        }
        SimplexRef x2{x.base, detail::collapse_set(u2)};
        SimplexRef y2{y.base, detail::collapse_set(v2)};
        return {lookup(x2, y2), shared};
    }

    const std::pair<SimplexRef, SimplexRef>& components(int gen) const {
        return components_.at(gen);
    }

private:
    int lookup(const SimplexRef& x, const SimplexRef& y) const {
        auto it = index_.find({a_->ref_string(x), b_->ref_string(y)});
        if (it == index_.end())
            throw std::out_of_range("product simplex beyond the materialized dimension cap");
        return it->second;
    }

    void build() {
        struct Pending {
            SimplexRef x, y;
            std::string id;
        };
        std::vector<Pending> all;
        std::map<std::string, std::pair<SimplexRef, SimplexRef>> by_pid;
        for (int m = 0; m <= cap_; ++m) {
            std::vector<Pending> layer;
            for (int p = 0; p <= std::min(m, a_->max_dim()); ++p)
                for (int ga : a_->generators_of_dim(p))
                    for (int q = std::max(0, p + 0); q <= b_->max_dim(); ++q) {
                        if (std::max(p, q) > m || p + q < m) continue;
                        for (int gb : b_->generators_of_dim(q)) {
                            // choose disjoint collapse sets A (|m-p|) and B (|m-q|)
                            enumerate_pairs(m, p, q, [&](const std::vector<int>& wa,
                                                         const std::vector<int>& wb) {
                                SimplexRef x{ga, wa}, y{gb, wb};
                                layer.push_back({x, y,
                                                 "(" + a_->ref_string(x) + "," + b_->ref_string(y) +
                                                     ")"});
                            });
                        }
                    }
            std::sort(layer.begin(), layer.end(),
                      [](const Pending& l, const Pending& r) { return l.id < r.id; });
            for (auto& pnd : layer) {
                int g = set_.add_generator(pnd.id, m);
                index_[{a_->ref_string(pnd.x), b_->ref_string(pnd.y)}] = g;
                by_pid[pnd.id] = {pnd.x, pnd.y};
                all.push_back(std::move(pnd));
            }
        }
        // faces, computed componentwise then jointly canonicalized
        for (const auto& pnd : all) {
            int m = a_->ref_dim(pnd.x);
            if (m == 0) continue;
            int g = index_.at({a_->ref_string(pnd.x), b_->ref_string(pnd.y)});
            for (int i = 0; i <= m; ++i)
                set_.set_face(g, i, pair_ref(a_->face(pnd.x, i), b_->face(pnd.y, i)));
        }
        set_.finish();
        // finish() permutes generators; rebuild the lookup tables
        index_.clear();
        components_.clear();
        for (const auto& [pid, comps] : by_pid) {
            int fresh = set_.require(pid);
            index_[{a_->ref_string(comps.first), b_->ref_string(comps.second)}] = fresh;
            components_[fresh] = comps;
        }
    }

    template <class F>
    static void enumerate_pairs(int m, int p, int q, F&& emit) {
        // disjoint subsets A, B of {0..m-1}, |A| = m-p, |B| = m-q
        int na = m - p, nb = m - q;
        std::vector<int> positions(m);
        std::iota(positions.begin(), positions.end(), 0);
        std::vector<int> choiceA;
        std::function<void(int, std::vector<int>&)> recA = [&](int start, std::vector<int>& acc) {
            if (static_cast<int>(acc.size()) == na) {
                std::vector<int> rest;
                for (int j : positions)
                    if (std::find(acc.begin(), acc.end(), j) == acc.end()) rest.push_back(j);
                std::vector<int> accB;
                std::function<void(int)> recB = [&](int startB) {
                    if (static_cast<int>(accB.size()) == nb) {
                        std::vector<int> wa(acc.rbegin(), acc.rend());
                        std::vector<int> wb(accB.rbegin(), accB.rend());
                        emit(wa, wb);
                        return;
                    }
                    for (int t = startB; t < static_cast<int>(rest.size()); ++t) {
                        accB.push_back(rest[t]);
                        recB(t + 1);
                        accB.pop_back();
                    }
                };
                recB(0);
                return;
            }
            for (int t = start; t < m; ++t) {
                acc.push_back(t);
                recA(t + 1, acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        recA(0, acc);
    }

    const SimplicialSet* a_;
    const SimplicialSet* b_;
    int cap_;
    SimplicialSet set_;
    std::map<std::pair<std::string, std::string>, int> index_;
    std::map<int, std::pair<SimplexRef, SimplexRef>> components_;
};

}  // namespace hocolim
