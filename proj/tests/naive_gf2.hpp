#pragma once

#include "gf2.hpp"

#include <random>
#include <vector>

// Unpacked reference implementations used as oracles against the
// bit-packed routines. Kept independent of src/gf2.cpp internals.

namespace naive {

using Table = std::vector<std::vector<int>>;

inline Table from_matrix(const sseq::gf2::Matrix& m)
{
    Table t(m.rows(), std::vector<int>(m.cols(), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            t[r][c] = m.get(r, c);
    return t;
}

inline int rank(Table a)
{
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][c])
                for (int j = 0; j < cols; ++j)
                    a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

inline bool in_row_space(const Table& basis, const std::vector<int>& v)
{
    Table a = basis;
    a.push_back(v);
    return rank(a) == rank(basis);
}

// all kernel vectors by exhaustive enumeration (cols <= ~20)
inline std::vector<std::vector<int>> kernel_exhaustive(const Table& a)
{
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << cols); ++mask) {
        bool ok = true;
        for (int r = 0; r < rows && ok; ++r) {
            int acc = 0;
            for (int c = 0; c < cols; ++c)
                if (mask >> c & 1)
                    acc ^= a[r][c];
            ok = acc == 0;
        }
        if (ok) {
            std::vector<int> v(cols);
            for (int c = 0; c < cols; ++c)
                v[c] = mask >> c & 1;
            out.push_back(v);
        }
    }
    return out;
}

inline sseq::gf2::Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, double density = 0.5)
{
    sseq::gf2::Matrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bit(rng))
                m.set(r, c);
    return m;
}

} // namespace naive
