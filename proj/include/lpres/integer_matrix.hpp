#pragma once

/*
 * Integer lattices over arbitrary-precision integers.
 *
 * Vectors are rows; an endomorphism acts by right multiplication. hnf
 * computes a row-style Hermite normal form (echelon, positive pivots,
 * entries above a pivot reduced into [0, pivot)), the canonical basis
 * used to compare lattices. smith_divisors returns the divisor chain of
 * the quotient of Z^k by a row span; smith_with_transforms additionally
 * carries unimodular row and column transforms with U * A * V = D for
 * property checks. All reductions use floor division so remainders are
 * canonical regardless of sign.
 */

#include <algorithm>
#include <cstddef>
#include <gmpxx.h>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lpres {

using Int = mpz_class;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

/* Floor quotient, like mpz_fdiv: rounds toward minus infinity. */
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline bool is_zero_row(const IntVector& r) {
    for (const Int& x : r)
        if (x != 0)
            return false;
    return true;
}

/* Row vector times matrix. */
inline IntVector vec_mat(const IntVector& v, const IntMatrix& m) {
    IntVector out(m.front().size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += v[i] * m[i][j];
    }
    return out;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size(), IntVector(b.front().size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < b.front().size(); ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

/* Hermite normal form basis of the lattice spanned by the rows; zero
 * rows vanish, so the result has one row per pivot column. */
inline IntMatrix hnf(IntMatrix m) {
    if (m.empty())
        return {};
    std::size_t k = m.front().size();
    IntMatrix basis;
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i][col] != 0)
                pool.push_back(i);
        if (pool.empty())
            continue;
        for (;;) {
            std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
                return abs(m[a][col]) < abs(m[b][col]);
            });
            std::size_t piv = pool.front();
            if (pool.size() == 1)
                break;
            bool done = true;
            for (std::size_t t = 1; t < pool.size(); ++t) {
                std::size_t i = pool[t];
                Int q = fdiv(m[i][col], m[piv][col]);
                if (q != 0)
                    for (std::size_t j = 0; j < k; ++j)
                        m[i][j] -= q * m[piv][j];
                if (m[i][col] != 0)
                    done = false;
            }
            std::vector<std::size_t> next{piv};
            for (std::size_t t = 1; t < pool.size(); ++t)
                if (m[pool[t]][col] != 0)
                    next.push_back(pool[t]);
            pool = std::move(next);
            if (done || pool.size() == 1)
                break;
        }
        std::size_t piv = pool.front();
        IntVector pivot = m[piv];
        if (pivot[col] < 0)
            for (Int& x : pivot)
                x = -x;
        IntMatrix rest;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == piv)
                continue;
            IntVector row = std::move(m[i]);
            if (row[col] != 0) {
                Int q = fdiv(row[col], pivot[col]);
                for (std::size_t j = 0; j < k; ++j)
                    row[j] -= q * pivot[j];
            }
            if (!is_zero_row(row))
                rest.push_back(std::move(row));
        }
        basis.push_back(std::move(pivot));
        m = std::move(rest);
    }
    /* Reduce the entries above each pivot into [0, pivot). Ascending
     * order matters: reducing by row i only touches columns at or after
     * its pivot, so earlier columns stay normalized. */
    for (std::size_t i = 1; i < basis.size(); ++i) {
        std::size_t piv_col = 0;
        while (basis[i][piv_col] == 0)
            ++piv_col;
        const Int& p = basis[i][piv_col];
        for (std::size_t r = 0; r < i; ++r) {
            Int q = fdiv(basis[r][piv_col], p);
            if (q != 0)
                for (std::size_t j = 0; j < basis[i].size(); ++j)
                    basis[r][j] -= q * basis[i][j];
        }
    }
    return basis;
}

namespace detail {

struct SmithState {
    IntMatrix m;
    IntMatrix u; // row transform, rows x rows
    IntMatrix v; // column transform, cols x cols
    std::vector<Int> pivots;
    bool with_transforms = false;
};

/* Shared Smith elimination: smallest-absolute-value pivoting, floor
 * reduction, divisibility repair by row addition. */
inline void smith_eliminate(SmithState& s, std::size_t k) {
    IntMatrix& m = s.m;
    std::size_t nr = m.size();
    std::size_t row0 = 0, col0 = 0;
    while (row0 < nr && col0 < k) {
        bool found = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = row0; i < nr; ++i)
            for (std::size_t j = col0; j < k; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        std::swap(m[row0], m[pi]);
        if (s.with_transforms)
            std::swap(s.u[row0], s.u[pi]);
        for (std::size_t r = 0; r < nr; ++r)
            std::swap(m[r][col0], m[r][pj]);
        if (s.with_transforms)
            for (std::size_t r = 0; r < k; ++r)
                std::swap(s.v[r][col0], s.v[r][pj]);
        bool again = false;
        for (std::size_t i = row0 + 1; i < nr; ++i) {
            Int q = fdiv(m[i][col0], m[row0][col0]);
            if (q != 0) {
                for (std::size_t j = col0; j < k; ++j)
                    m[i][j] -= q * m[row0][j];
                if (s.with_transforms)
                    for (std::size_t j = 0; j < s.u[i].size(); ++j)
                        s.u[i][j] -= q * s.u[row0][j];
            }
            if (m[i][col0] != 0)
                again = true;
        }
        for (std::size_t j = col0 + 1; j < k; ++j) {
            Int q = fdiv(m[row0][j], m[row0][col0]);
            if (q != 0) {
                for (std::size_t i = row0; i < nr; ++i)
                    m[i][j] -= q * m[i][col0];
                if (s.with_transforms)
                    for (std::size_t r = 0; r < k; ++r)
                        s.v[r][j] -= q * s.v[r][col0];
            }
            if (m[row0][j] != 0)
                again = true;
        }
        if (again)
            continue;
        Int p = abs(m[row0][col0]);
        std::size_t bad = 0;
        bool have_bad = false;
        for (std::size_t i = row0 + 1; i < nr && !have_bad; ++i)
            for (std::size_t j = col0 + 1; j < k; ++j)
                if (!mpz_divisible_p(m[i][j].get_mpz_t(), p.get_mpz_t())) {
                    bad = i;
                    have_bad = true;
                    break;
                }
        if (have_bad) {
            for (std::size_t j = col0; j < k; ++j)
                m[row0][j] += m[bad][j];
            if (s.with_transforms)
                for (std::size_t j = 0; j < s.u[row0].size(); ++j)
                    s.u[row0][j] += s.u[bad][j];
            continue;
        }
        if (s.with_transforms && m[row0][col0] < 0) {
            for (std::size_t j = col0; j < k; ++j)
                m[row0][j] = -m[row0][j];
            for (std::size_t j = 0; j < s.u[row0].size(); ++j)
                s.u[row0][j] = -s.u[row0][j];
        }
        s.pivots.push_back(p);
        ++row0;
        ++col0;
    }
}

} // namespace detail

/* Divisor chain of Z^k modulo the row span: free rank and the elementary
 * divisors greater than 1, in divisibility order. */
inline std::pair<int, std::vector<Int>> smith_divisors(const IntMatrix& rows, std::size_t k) {
    detail::SmithState s;
    for (const IntVector& r : rows)
        if (!is_zero_row(r))
            s.m.push_back(r);
    detail::smith_eliminate(s, k);
    std::vector<Int> torsion;
    for (const Int& d : s.pivots)
        if (d > 1)
            torsion.push_back(d);
    return {static_cast<int>(k) - static_cast<int>(s.pivots.size()), torsion};
}

struct SmithDecomposition {
    IntMatrix u; // unimodular, rows x rows
    IntMatrix d; // diagonal with the divisor chain
    IntMatrix v; // unimodular, cols x cols
};

/* Full decomposition U * A * V = D with |det U| = |det V| = 1. */
inline SmithDecomposition smith_with_transforms(const IntMatrix& a) {
    std::size_t rows = a.size();
    std::size_t cols = a.empty() ? 0 : a.front().size();
    detail::SmithState s;
    s.m = a;
    s.u = identity_matrix(rows);
    s.v = identity_matrix(cols);
    s.with_transforms = true;
    detail::smith_eliminate(s, cols);
    return {std::move(s.u), std::move(s.m), std::move(s.v)};
}

/* Exact integer determinant by Bareiss fraction-free elimination. */
inline Int determinant(IntMatrix m) {
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && m[swap_row][p] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i)
            for (std::size_t j = p + 1; j < n; ++j) {
                Int num = m[i][j] * m[p][p] - m[i][p] * m[p][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[p][p];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace lpres
