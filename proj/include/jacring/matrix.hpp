#ifndef JACRING_MATRIX_HPP
#define JACRING_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "jacring/errors.hpp"

namespace jacring {

/// Dense row-major matrix of field elements.  Desk-scale instances stay well
/// below a few thousand columns, so no sparse machinery.
template <class K>
struct Matrix {
    using Elem = typename K::Elem;

    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(const K& k, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, k.zero()) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::vector<Elem> row(std::size_t r) const {
        return std::vector<Elem>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    }
    void set_row(std::size_t r, const std::vector<Elem>& v) {
        for (std::size_t c = 0; c < cols; ++c) at(r, c) = v[c];
    }

    Matrix transposed(const K& k) const {
        Matrix t(k, cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }
};

template <class K>
struct RrefResult {
    Matrix<K> mat;                        // reduced rows, pivot entries equal 1
    std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination with the deterministic pivot rule: walk the
/// columns left to right and take the first unused row with a nonzero entry.
/// Over Q and Q(i) rows are renormalized to primitive integer vectors after
/// each update, which keeps entries at the size of minors of the input.
template <class K>
RrefResult<K> rref(const K& k, Matrix<K> m) {
    RrefResult<K> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = m.rows;
        for (std::size_t i = r; i < m.rows; ++i) {
            if (!k.is_zero(m.at(i, c))) { sel = i; break; }
        }
        if (sel == m.rows) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        }
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || k.is_zero(m.at(i, c))) continue;
            typename K::Elem f = k.div(m.at(i, c), m.at(r, c));
            std::vector<typename K::Elem> updated = m.row(i);
            for (std::size_t j = 0; j < m.cols; ++j)
                updated[j] = k.sub(updated[j], k.mul(f, m.at(r, j)));
            k.normalize_row(updated);
            m.set_row(i, updated);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    // scale pivots to 1 and drop zero rows
    Matrix<K> reduced(k, out.pivot_cols.size(), m.cols);
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
        typename K::Elem inv = k.inv(m.at(i, out.pivot_cols[i]));
        for (std::size_t j = 0; j < m.cols; ++j) reduced.at(i, j) = k.mul(m.at(i, j), inv);
    }
    out.mat = std::move(reduced);
    return out;
}

template <class K>
std::size_t rank(const K& k, const Matrix<K>& m) {
    return rref(k, m).rank();
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <class K>
std::vector<std::vector<typename K::Elem>> nullspace(const K& k, const Matrix<K>& m) {
    RrefResult<K> rr = rref(k, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<typename K::Elem>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename K::Elem> v(m.cols, k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = k.neg(rr.mat.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduce `v` against reduced rows (pivot entries 1): afterwards every pivot
/// coordinate of `v` is zero.  Returns the reduced vector.
template <class K>
std::vector<typename K::Elem> reduce_against(const K& k, const RrefResult<K>& rr,
                                             std::vector<typename K::Elem> v) {
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        const typename K::Elem& f = v[rr.pivot_cols[i]];
        if (k.is_zero(f)) continue;
        typename K::Elem c = f;  // pivot is 1
        for (std::size_t j = 0; j < rr.mat.cols; ++j)
            v[j] = k.sub(v[j], k.mul(c, rr.mat.at(i, j)));
    }
    return v;
}

template <class K>
typename K::Elem det2(const K& k, const typename K::Elem& a, const typename K::Elem& b,
                      const typename K::Elem& c, const typename K::Elem& d) {
    return k.sub(k.mul(a, d), k.mul(b, c));
}

}  // namespace jacring

#endif
