#include "gf2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace sseq::gf2 {

int Vec::lowest_set() const
{
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
}

int Vec::popcount() const
{
    int c = 0;
    for (uint64_t w : w_)
        c += std::popcount(w);
    return c;
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

void Matrix::xor_row_from(int dst, int src)
{
    uint64_t* d = &bits_[size_t(dst) * wpr_];
    const uint64_t* s = &bits_[size_t(src) * wpr_];
    for (int k = 0; k < wpr_; ++k)
        d[k] ^= s[k];
}

void Matrix::xor_row(int r, const Vec& v)
{
    assert(v.size() == cols_);
    uint64_t* d = &bits_[size_t(r) * wpr_];
    const auto& w = v.words();
    for (int k = 0; k < wpr_; ++k)
        d[k] ^= w[k];
}

void Matrix::swap_rows(int a, int b)
{
    if (a == b)
        return;
    uint64_t* pa = &bits_[size_t(a) * wpr_];
    uint64_t* pb = &bits_[size_t(b) * wpr_];
    for (int k = 0; k < wpr_; ++k)
        std::swap(pa[k], pb[k]);
}

bool Matrix::row_is_zero(int r) const
{
    const uint64_t* p = &bits_[size_t(r) * wpr_];
    for (int k = 0; k < wpr_; ++k)
        if (p[k])
            return false;
    return true;
}

Vec Matrix::row(int r) const
{
    Vec v(cols_);
    const uint64_t* p = &bits_[size_t(r) * wpr_];
    for (int k = 0; k < wpr_; ++k)
        v.words()[k] = p[k];
    return v;
}

void Matrix::set_row(int r, const Vec& v)
{
    assert(v.size() == cols_);
    uint64_t* p = &bits_[size_t(r) * wpr_];
    for (int k = 0; k < wpr_; ++k)
        p[k] = v.words()[k];
}

void Matrix::append_row(const Vec& v)
{
    assert(v.size() == cols_ || rows_ == 0);
    if (rows_ == 0 && cols_ == 0) {
        cols_ = v.size();
        wpr_ = (cols_ + 63) / 64;
    }
    bits_.resize(bits_.size() + wpr_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = &bits_[size_t(r) * wpr_];
        for (int k = 0; k < wpr_; ++k) {
            uint64_t w = p[k];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                t.set(k * 64 + b, r);
            }
        }
    }
    return t;
}

Vec Matrix::mul_vec(const Vec& x) const
{
    assert(x.size() == cols_);
    Vec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = &bits_[size_t(r) * wpr_];
        uint64_t acc = 0;
        for (int k = 0; k < wpr_; ++k)
            acc ^= p[k] & x.words()[k];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    assert(cols_ == o.rows_);
    Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = &bits_[size_t(r) * wpr_];
        for (int k = 0; k < wpr_; ++k) {
            uint64_t w = p[k];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                uint64_t* d = &out.bits_[size_t(r) * out.wpr_];
                const uint64_t* s = &o.bits_[size_t(k * 64 + b) * o.wpr_];
                for (int j = 0; j < out.wpr_; ++j)
                    d[j] ^= s[j];
            }
        }
    }
    return out;
}

RrefResult rref(const Matrix& m)
{
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (a.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        a.swap_rows(r, piv);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && a.get(i, c))
                a.xor_row_from(i, r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Matrix kernel_basis(const Matrix& m)
{
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivots)
        is_pivot[c] = true;
    Matrix ker(0, m.cols());
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Vec v(m.cols());
        v.set(c);
        for (int i = 0; i < rr.rank; ++i)
            if (rr.reduced.get(i, c))
                v.set(rr.pivots[i]);
        ker.append_row(v);
    }
    return ker;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    // eliminate on [m | b]
    Matrix a(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int k = 0; k < (m.cols() + 63) / 64; ++k) {
            uint64_t w = m.row(r).words()[k];
            while (w) {
                int bpos = std::countr_zero(w);
                w &= w - 1;
                a.set(r, k * 64 + bpos);
            }
        }
        if (b.get(r))
            a.set(r, m.cols());
    }
    RrefResult rr = rref(a);
    Vec x(m.cols());
    for (int i = 0; i < rr.rank; ++i) {
        int c = rr.pivots[i];
        if (c == m.cols())
            return std::nullopt; // pivot in augmented column: inconsistent
        if (rr.reduced.get(i, m.cols()))
            x.set(c);
    }
    return x;
}

Vec Span::reduce(Vec v) const
{
    for (size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool Span::insert(Vec v)
{
    v = reduce(v);
    int p = v.lowest_set();
    if (p < 0)
        return false;
    for (auto& row : rows_)
        if (row.get(p))
            row ^= v;
    size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < p)
        ++pos;
    rows_.insert(rows_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

void CoordSolver::add_row(const Vec& v)
{
    Vec r = v;
    Vec c(n_ + 1);
    c.set(n_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            // combo vectors may be shorter; widen lazily below
            for (int k = 0; k <= n_ && k < combo_[i].size(); ++k)
                if (combo_[i].get(k))
                    c.flip(k);
        }
    }
    ++n_;
    int p = r.lowest_set();
    if (p < 0)
        return; // dependent row: nothing stored
    rows_.push_back(r);
    combo_.push_back(c);
    pivots_.push_back(p);
}

std::optional<Vec> CoordSolver::solve(const Vec& target) const
{
    Vec r = target;
    Vec out(n_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            for (int k = 0; k < combo_[i].size() && k < n_; ++k)
                if (combo_[i].get(k))
                    out.flip(k);
        }
    }
    if (!r.is_zero())
        return std::nullopt;
    return out;
}

} // namespace sseq::gf2
