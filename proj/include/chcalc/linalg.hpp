/*
 * linalg.hpp
 * ----------
 * Small dense exact linear algebra over Rational: RREF with a configurable
 * column order, rank, kernel bases.  Sizes here are tiny (tens of columns),
 * so plain Gaussian elimination is the right tool.
 */
#pragma once

#include "chcalc/rational.hpp"

#include <numeric>
#include <vector>

namespace chcalc {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form, processing columns in the given order.
// Returns the pivot columns (in processing order, one per pivot row).
inline std::vector<std::size_t> rref(Mat& m, const std::vector<std::size_t>& col_order) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t rows = m.size();
    std::size_t r = 0;
    for (std::size_t c : col_order) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr == rows)
            continue;
        std::swap(m[r], m[pr]);
        Rational pv = m[r][c];
        for (auto& x : m[r])
            x /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        if (++r == rows)
            break;
    }
    return pivots;
}

inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> order(m.empty() ? 0 : m[0].size());
    std::iota(order.begin(), order.end(), 0);
    return rref(m, order);
}

inline std::size_t rank(Mat m) {
    return rref(m).size();
}

// Basis of { x : m x = 0 }, one vector per free column (left-to-right order).
inline std::vector<Vec> kernel_basis(Mat m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc])
            continue;
        Vec v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Vec matvec(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            r[i] += a[i][j] * x[j];
    return r;
}

inline Vec vecmat(const Vec& u, const Mat& a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    Vec r(cols, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            r[j] += u[i] * a[i][j];
    return r;
}

inline Rational dot(const Vec& u, const Vec& v) {
    Rational r(0);
    for (std::size_t i = 0; i < u.size(); ++i)
        r += u[i] * v[i];
    return r;
}

}  // namespace chcalc
