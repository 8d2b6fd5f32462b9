// Bounded chain complexes over an ordered labelled basis, homology with
// deterministic representatives, chain maps and induced maps on homology.
#pragma once

#include "hocolim/sparse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hocolim {

struct BasisRef {
    int deg = 0;
    int idx = 0;
    auto operator<=>(const BasisRef&) const = default;
};

// Sparse linear combination of basis elements; kept sorted with no zeros.
template <Scalar K>
using Lin = std::vector<std::pair<BasisRef, K>>;

template <Scalar K>
void lin_add(Lin<K>& dst, const BasisRef& r, const K& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(dst.begin(), dst.end(), r,
                               [](const auto& p, const BasisRef& q) { return p.first < q; });
    if (it != dst.end() && it->first == r) {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    } else {
        dst.insert(it, {r, c});
    }
}

template <Scalar K>
void lin_add(Lin<K>& dst, const Lin<K>& src, const K& c) {
    for (const auto& [r, v] : src) lin_add(dst, r, v * c);
}

template <Scalar K>
class BoundedComplex {
public:
    BoundedComplex() = default;
    BoundedComplex(int lo, int hi) : lo_(lo), hi_(hi) {
        if (hi < lo) throw std::invalid_argument("empty degree range");
        labels_.resize(hi - lo + 1);
        exact_.resize(hi - lo + 1);
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool in_range(int d) const { return d >= lo_ && d <= hi_; }
    void require_range(int d) const {
        if (!in_range(d))
            throw std::out_of_range("degree " + std::to_string(d) + " outside stored range [" +
                                    std::to_string(lo_) + "," + std::to_string(hi_) + "]");
    }

    int add_element(int d, std::string label) {
        require_range(d);
        auto& v = labels_[d - lo_];
        v.push_back(std::move(label));
        exact_[d - lo_].push_back(true);
        return static_cast<int>(v.size()) - 1;
    }

    int dim(int d) const { return in_range(d) ? static_cast<int>(labels_[d - lo_].size()) : 0; }
    const std::string& label(const BasisRef& r) const { return labels_[r.deg - lo_][r.idx]; }
    const std::vector<std::string>& labels(int d) const {
        require_range(d);
        return labels_[d - lo_];
    }
    std::optional<BasisRef> find(int d, const std::string& label) const {
        if (!in_range(d)) return std::nullopt;
        const auto& v = labels_[d - lo_];
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[i] == label) return BasisRef{d, i};
        return std::nullopt;
    }

    // Differential entries must be added after all elements of the two degrees exist.
    void finalize_basis() {
        diff_.assign(hi_ - lo_ + 1, SparseMatrix<K>());
        for (int d = lo_; d <= hi_; ++d) diff_[d - lo_] = SparseMatrix<K>(dim(d - 1), dim(d));
    }
    void set_diff_column(const BasisRef& r, const Lin<K>& dr) {
        auto& m = diff_[r.deg - lo_];
        for (const auto& [t, c] : dr) {
            if (t.deg != r.deg - 1) throw std::logic_error("differential must drop degree by one");
            m.set(t.idx, r.idx, c);
        }
    }
    void mark_inexact(const BasisRef& r) { exact_[r.deg - lo_][r.idx] = false; }
    bool diff_exact(const BasisRef& r) const { return exact_[r.deg - lo_][r.idx]; }
    bool degree_exact(int d) const {
        if (!in_range(d)) return true;
        for (bool e : exact_[d - lo_])
            if (!e) return false;
        return true;
    }

    // d: C_d -> C_{d-1}; zero matrix outside the stored range.
    const SparseMatrix<K>& d(int deg) const {
        require_range(deg);
        return diff_[deg - lo_];
    }
    SparseMatrix<K> d_or_zero(int deg) const {
        if (in_range(deg)) return diff_[deg - lo_];
        return SparseMatrix<K>(dim(deg - 1), dim(deg));
    }

    Lin<K> apply_d(const Lin<K>& x) const {
        Lin<K> out;
        for (const auto& [r, c] : x) {
            if (!in_range(r.deg)) continue;
            const auto& m = diff_[r.deg - lo_];
            for (const auto& [rc, v] : m.entries())
                if (rc.second == r.idx) lin_add(out, BasisRef{r.deg - 1, rc.first}, v * c);
        }
        return out;
    }

    void set_truncated(bool t) { truncated_ = t; }
    bool truncated() const { return truncated_; }

    // first basis element witnessing d(d(x)) != 0, if any
    std::optional<BasisRef> d_squared_witness() const {
        for (int d = lo_ + 2; d <= hi_; ++d) {
            SparseMatrix<K> sq = diff_[d - 1 - lo_] * diff_[d - lo_];
            if (!sq.is_zero()) {
                int col = sq.entries().begin()->first.second;
                return BasisRef{d, col};
            }
        }
        return std::nullopt;
    }
    void validate() const {
        for (int d = lo_; d <= hi_; ++d) {
            if (diff_[d - lo_].rows() != dim(d - 1) || diff_[d - lo_].cols() != dim(d))
                throw std::logic_error("differential shape mismatch at degree " + std::to_string(d));
        }
        if (auto w = d_squared_witness())
            throw std::logic_error("d∘d != 0 at " + label(*w));
    }

    struct HomologyEntry {
        int degree;
        int rank;
        bool reliable;
    };

    int homology_rank(int d) const {
        require_range(d);
        int z = dim(d) - d_or_zero(d).rank();
        int b = d_or_zero(d + 1).rank();
        return z - b;
    }
    bool homology_reliable(int d) const {
        require_range(d);
        if (truncated_ && d >= hi_) return false;
        return degree_exact(d) && degree_exact(d + 1);
    }
    std::vector<HomologyEntry> homology_table(int dlo, int dhi) const {
        require_range(dlo);
        require_range(dhi);
        std::vector<HomologyEntry> out;
        for (int d = dlo; d <= dhi; ++d) out.push_back({d, homology_rank(d), homology_reliable(d)});
        return out;
    }

    // Deterministic homology representatives: cycle-kernel vectors inserted in
    // elimination order after the boundary span.
    std::vector<std::vector<K>> homology_reps(int d) const {
        require_range(d);
        ColumnSpan<K> span(dim(d));
        SparseMatrix<K> bd = d_or_zero(d + 1);
        for (int j = 0; j < bd.cols(); ++j) span.insert(bd.column(j));
        std::vector<std::vector<K>> reps;
        for (auto& z : d_or_zero(d).kernel_basis())
            if (span.insert(z)) reps.push_back(std::move(z));
        return reps;
    }

private:
    int lo_ = 0, hi_ = 0;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<bool>> exact_;
    std::vector<SparseMatrix<K>> diff_;
    bool truncated_ = false;
};

// Degree-preserving map of complexes given by per-degree matrices.
template <Scalar K>
struct ChainMap {
    const BoundedComplex<K>* src = nullptr;
    const BoundedComplex<K>* dst = nullptr;
    std::map<int, SparseMatrix<K>> mats;  // degree -> dim_dst(d) x dim_src(d)

    SparseMatrix<K> at(int d) const {
        auto it = mats.find(d);
        if (it != mats.end()) return it->second;
        return SparseMatrix<K>(dst->dim(d), src->dim(d));
    }

    // Verifies dst.d ∘ f = f ∘ src.d on all degrees where both sides are stored;
    // returns a witness basis element on failure.
    std::optional<BasisRef> chain_map_witness() const {
        for (int d = std::max(src->lo(), dst->lo()) + 1; d <= std::min(src->hi(), dst->hi()); ++d) {
            SparseMatrix<K> lhs = dst->d_or_zero(d) * at(d);
            SparseMatrix<K> rhs = at(d - 1) * src->d_or_zero(d);
            SparseMatrix<K> diff = lhs - rhs;
            if (!diff.is_zero()) return BasisRef{d, diff.entries().begin()->first.second};
        }
        return std::nullopt;
    }

    struct InducedMap {
        SparseMatrix<K> matrix;  // dim H_d(dst) x dim H_d(src)
        bool isomorphism;
    };

    // Matrix of the induced map on the deterministic homology bases.
    InducedMap induced_homology(int d) const {
        auto sreps = src->homology_reps(d);
        auto dreps = dst->homology_reps(d);
        // express f(z) in dst homology basis: solve [boundaries | reps] coords
        SparseMatrix<K> bd = dst->d_or_zero(d + 1);
        int nb = bd.cols();
        SparseMatrix<K> sys(dst->dim(d), nb + static_cast<int>(dreps.size()));
        for (int j = 0; j < nb; ++j) {
            auto col = bd.column(j);
            for (int r = 0; r < static_cast<int>(col.size()); ++r)
                if (!col[r].is_zero()) sys.set(r, j, col[r]);
        }
        for (std::size_t j = 0; j < dreps.size(); ++j)
            for (int r = 0; r < static_cast<int>(dreps[j].size()); ++r)
                if (!dreps[j][r].is_zero()) sys.set(r, nb + static_cast<int>(j), dreps[j][r]);
        SparseMatrix<K> out(static_cast<int>(dreps.size()), static_cast<int>(sreps.size()));
        SparseMatrix<K> fd = at(d);
        for (std::size_t j = 0; j < sreps.size(); ++j) {
            auto img = fd.apply(sreps[j]);
            auto x = sys.solve(img);
            if (!x) throw std::logic_error("induced map: image not a cycle mod boundaries");
            for (std::size_t i = 0; i < dreps.size(); ++i)
                out.set(static_cast<int>(i), static_cast<int>(j), (*x)[nb + i]);
        }
        bool iso = sreps.size() == dreps.size() &&
                   out.rank() == static_cast<int>(dreps.size());
        return {out, iso};
    }
};

}  // namespace hocolim
