#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Exact linear algebra over GF(2), bit-packed 64 columns per word.
// All operations are pure; matrices are plain values.

namespace sseq::gf2 {

class Vec {
public:
    Vec() = default;
    explicit Vec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v = true)
    {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    Vec& operator^=(const Vec& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
        return *this;
    }
    bool is_zero() const
    {
        for (uint64_t w : w_)
            if (w)
                return false;
        return true;
    }
    bool operator==(const Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

    // index of lowest set bit, -1 if zero
    int lowest_set() const;
    int popcount() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(size_t(rows) * wpr_, 0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (bits_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(int r, int c, bool v = true)
    {
        uint64_t m = uint64_t(1) << (c & 63);
        if (v)
            bits_[size_t(r) * wpr_ + (c >> 6)] |= m;
        else
            bits_[size_t(r) * wpr_ + (c >> 6)] &= ~m;
    }

    void xor_row_from(int dst, int src);
    void xor_row(int r, const Vec& v);
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;
    Vec row(int r) const;
    void set_row(int r, const Vec& v);
    void append_row(const Vec& v);

    Matrix transposed() const;
    // m * x (x indexed by columns), result indexed by rows
    Vec mul_vec(const Vec& x) const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_; }

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
    friend struct RowRef;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
    int rank = 0;
};

// Reduced row echelon form; leftmost-pivot, deterministic.
RrefResult rref(const Matrix& m);

// Rows form a basis of { x : m * x = 0 }.
Matrix kernel_basis(const Matrix& m);

// Solve m * x = b; nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Incrementally maintained reduced echelon row space.
class Span {
public:
    Span() = default;
    explicit Span(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return int(rows_.size()); }
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return reduce(v).is_zero(); }
    // returns true when v was independent (span grew)
    bool insert(Vec v);
    const std::vector<Vec>& rows() const { return rows_; }

private:
    int width_ = 0;
    std::vector<Vec> rows_;   // reduced echelon, sorted by pivot
    std::vector<int> pivots_;
};

// Express targets as combinations of a fixed list of (not necessarily
// independent) rows; coordinates returned over the original row list.
class CoordSolver {
public:
    explicit CoordSolver(int width) : width_(width) {}
    void add_row(const Vec& v);
    int width() const { return width_; }
    int nrows() const { return n_; }
    std::optional<Vec> solve(const Vec& target) const;

private:
    int width_ = 0, n_ = 0;
    std::vector<Vec> rows_;    // echelon part
    std::vector<Vec> combo_;   // matching combinations over original rows
    std::vector<int> pivots_;
};

} // namespace sseq::gf2
