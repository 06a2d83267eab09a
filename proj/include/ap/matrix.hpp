#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ap/rational.hpp"

namespace ap {

/// Dense matrix over an exact field type T (Rational or FieldElement).
/// T must provide: +, -, *, /, unary -, is_zero(), one_like(), ==.
/// A prototype zero element is kept so that T need not be default-meaningful.
template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c, const T& zero)
        : rows_(r), cols_(c), zero_(zero), d_(r * c, zero) {}

    static Mat identity(std::size_t n, const T& zero) {
        Mat m(n, n, zero);
        const T one = zero.one_like();
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transposed() const {
        Mat t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= o.d_[i];
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& x : r.d_) x = x * s;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> d_;
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

namespace detail {

/// One reduced-row-echelon pass. The row updates below a chosen pivot are
/// independent of each other, so `parallel` may fan them out across threads;
/// both paths produce bit-identical matrices.
template <typename T>
RrefResult rref_impl(Mat<T>& m, bool parallel);

}  // namespace detail

/// Serial reference elimination (kept as the comparison baseline).
template <typename T>
RrefResult rref_serial(Mat<T>& m) {
    return detail::rref_impl(m, false);
}

/// OpenMP row-parallel elimination; results are identical to rref_serial.
template <typename T>
RrefResult rref_parallel(Mat<T>& m) {
    return detail::rref_impl(m, true);
}

/// Dispatching entry point: parallel kernel for large matrices.
template <typename T>
RrefResult rref(Mat<T>& m) {
    return detail::rref_impl(m, m.rows() >= 48);
}

/// Basis of the right kernel {x : m x = 0}, as columns.
template <typename T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m);

/// Rank of m (m is copied).
template <typename T>
std::size_t rank_of(Mat<T> m) {
    return rref(m).rank;
}

/// Solves a x = b for a single column b; returns empty vector if inconsistent.
/// When the solution is underdetermined, free variables are set to zero.
template <typename T>
std::vector<T> solve_linear(const Mat<T>& a, const std::vector<T>& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
template <typename T>
Mat<T> inverse_of(const Mat<T>& a);

/// Greedily selects indices of a maximal linearly independent subset of the
/// given column vectors (deterministic, first-come order).
template <typename T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& cols, const T& zero);

// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
RrefResult rref_impl(Mat<T>& m, bool parallel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const T inv = m(r, c).one_like() / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;

        auto update_row = [&](std::size_t i) {
            if (i == r || m(i, c).is_zero()) return;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < static_cast<long long>(rows); ++i)
                update_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = 0; i < rows; ++i) update_row(i);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace detail

template <typename T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m) {
    const std::size_t cols = m.cols();
    const T zero = m.zero();
    const T one = zero.one_like();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<T> v(cols, zero);
        v[fc] = one;
        for (std::size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
            v[rr.pivot_cols[pi]] = -m(pi, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
std::vector<T> solve_linear(const Mat<T>& a, const std::vector<T>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    const T zero = a.zero();
    Mat<T> aug(a.rows(), a.cols() + 1, zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    for (auto c : rr.pivot_cols)
        if (c == a.cols()) return {};  // inconsistent
    std::vector<T> x(a.cols(), zero);
    for (std::size_t pi = 0; pi < rr.pivot_cols.size(); ++pi) x[rr.pivot_cols[pi]] = aug(pi, a.cols());
    return x;
}

template <typename T>
Mat<T> inverse_of(const Mat<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse_of: not square");
    const std::size_t n = a.rows();
    const T zero = a.zero();
    Mat<T> aug(n, 2 * n, zero);
    const T one = zero.one_like();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = one;
    }
    RrefResult rr = rref(aug);
    if (rr.rank != n) throw std::domain_error("inverse_of: singular matrix");
    Mat<T> inv(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <typename T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& cols, const T& zero) {
    std::vector<std::size_t> chosen;
    if (cols.empty()) return chosen;
    const std::size_t dim = cols[0].size();
    std::vector<std::vector<T>> reduced;  // row-echelon rows with leading positions
    std::vector<std::size_t> lead;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        std::vector<T> v = cols[idx];
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            if (v[lead[k]].is_zero()) continue;
            const T f = v[lead[k]];
            for (std::size_t j = 0; j < dim; ++j) v[j] -= f * reduced[k][j];
        }
        std::size_t l = dim;
        for (std::size_t j = 0; j < dim; ++j)
            if (!v[j].is_zero()) { l = j; break; }
        if (l == dim) continue;
        const T inv = v[l].one_like() / v[l];
        for (std::size_t j = 0; j < dim; ++j) v[j] = v[j] * inv;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            if (reduced[k][l].is_zero()) continue;
            const T f = reduced[k][l];
            for (std::size_t j = 0; j < dim; ++j) reduced[k][j] -= f * v[j];
        }
        reduced.push_back(std::move(v));
        lead.push_back(l);
        chosen.push_back(idx);
    }
    return chosen;
}

using QMat = Mat<Rational>;

}  // namespace ap
