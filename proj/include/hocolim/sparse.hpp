// Sparse matrices over an exact field, with deterministic elimination.
// Pivot rows are always the first nonzero row in basis order, so ranks,
// kernel bases and solved coordinates are reproducible across runs.
#pragma once

#include "hocolim/field.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hocolim {

template <Scalar K>
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, K(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, K v) {
        check(r, c);
        if (v.is_zero())
            e_.erase({r, c});
        else
            e_[{r, c}] = std::move(v);
    }
    void add(int r, int c, const K& v) {
        check(r, c);
        auto it = e_.find({r, c});
        if (it == e_.end()) {
            if (!v.is_zero()) e_[{r, c}] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    K at(int r, int c) const {
        check(r, c);
        auto it = e_.find({r, c});
        return it == e_.end() ? K(0) : it->second;
    }

    const std::map<std::pair<int, int>, K>& entries() const { return e_; }
    std::size_t nnz() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (const auto& [rc, v] : e_) t.e_[{rc.second, rc.first}] = v;
        return t;
    }

    SparseMatrix operator*(const SparseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        SparseMatrix p(rows_, o.cols_);
        for (const auto& [rc, v] : e_) {
            auto lo = o.e_.lower_bound({rc.second, 0});
            auto hi = o.e_.upper_bound({rc.second, o.cols_});
            for (auto it = lo; it != hi; ++it) p.add(rc.first, it->first.second, v * it->second);
        }
        return p;
    }
    SparseMatrix operator+(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        SparseMatrix s = *this;
        for (const auto& [rc, v] : o.e_) s.add(rc.first, rc.second, v);
        return s;
    }
    SparseMatrix operator-(const SparseMatrix& o) const { return *this + o.scaled(K(-1)); }
    SparseMatrix scaled(const K& k) const {
        SparseMatrix s(rows_, cols_);
        if (k.is_zero()) return s;
        for (const auto& [rc, v] : e_) s.e_[rc] = v * k;
        return s;
    }
    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    std::vector<K> column(int c) const {
        std::vector<K> v(rows_, K(0));
        auto lo = e_.lower_bound({0, 0});
        for (auto it = lo; it != e_.end(); ++it)
            if (it->first.second == c) v[it->first.first] = it->second;
        return v;
    }
    std::vector<K> apply(const std::vector<K>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
        std::vector<K> y(rows_, K(0));
        for (const auto& [rc, v] : e_)
            if (!x[rc.second].is_zero()) y[rc.first] += v * x[rc.second];
        return y;
    }

    int rank() const { return Eliminator(*this).rank(); }

    // Kernel basis as dense coefficient vectors over the columns, in the
    // deterministic order produced by left-to-right elimination.
    std::vector<std::vector<K>> kernel_basis() const { return Eliminator(*this).kernel(); }

    // Solve A x = b; nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        return Eliminator(*this).solve(b);
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    }

    class Eliminator {
    public:
        explicit Eliminator(const SparseMatrix& m) : m_(m) {
            for (int j = 0; j < m.cols(); ++j) {
                std::vector<K> v = m.column(j);
                std::vector<K> aug(m.cols(), K(0));
                aug[j] = K(1);
                reduce(v, aug);
                int pr = first_nonzero(v);
                if (pr < 0) {
                    kernel_.push_back(std::move(aug));
                } else {
                    K s = v[pr].inv();
                    scale(v, s);
                    scale(aug, s);
                    piv_rows_.push_back(pr);
                    piv_cols_.push_back(std::move(v));
                    piv_augs_.push_back(std::move(aug));
                }
            }
        }
        int rank() const { return static_cast<int>(piv_rows_.size()); }
        std::vector<std::vector<K>> kernel() const { return kernel_; }
        std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
            if (static_cast<int>(b.size()) != m_.rows()) throw std::invalid_argument("solve: size mismatch");
            std::vector<K> v = b;
            std::vector<K> x(m_.cols(), K(0));
            for (std::size_t i = 0; i < piv_rows_.size(); ++i) {
                K c = v[piv_rows_[i]];
                if (c.is_zero()) continue;
                axpy(v, -c, piv_cols_[i]);
                axpy(x, c, piv_augs_[i]);
            }
            if (first_nonzero(v) >= 0) return std::nullopt;
            return x;
        }

    private:
        void reduce(std::vector<K>& v, std::vector<K>& aug) const {
            for (std::size_t i = 0; i < piv_rows_.size(); ++i) {
                K c = v[piv_rows_[i]];
                if (c.is_zero()) continue;
                axpy(v, -c, piv_cols_[i]);
                axpy(aug, -c, piv_augs_[i]);
            }
        }
        static int first_nonzero(const std::vector<K>& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) return static_cast<int>(i);
            return -1;
        }
        static void scale(std::vector<K>& v, const K& s) {
            for (auto& x : v) x *= s;
        }
        static void axpy(std::vector<K>& v, const K& c, const std::vector<K>& w) {
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
        }

        const SparseMatrix& m_;
        std::vector<int> piv_rows_;
        std::vector<std::vector<K>> piv_cols_;
        std::vector<std::vector<K>> piv_augs_;
        std::vector<std::vector<K>> kernel_;
    };

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, K> e_;
};

// Incremental column span with deterministic pivots; used for homology bases.
template <Scalar K>
class ColumnSpan {
public:
    explicit ColumnSpan(int dim) : dim_(dim) {}

    // Returns true when v was independent and has been inserted.
    bool insert(std::vector<K> v) {
        reduce(v);
        int pr = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) { pr = static_cast<int>(i); break; }
        if (pr < 0) return false;
        K s = v[pr].inv();
        for (auto& x : v) x *= s;
        piv_rows_.push_back(pr);
        cols_.push_back(std::move(v));
        return true;
    }
    bool contains(std::vector<K> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    int rank() const { return static_cast<int>(cols_.size()); }
    int dim() const { return dim_; }

private:
    void reduce(std::vector<K>& v) const {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            K c = v[piv_rows_[i]];
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < v.size(); ++r) v[r] -= c * cols_[i][r];
        }
    }
    int dim_;
    std::vector<int> piv_rows_;
    std::vector<std::vector<K>> cols_;
};

}  // namespace hocolim
