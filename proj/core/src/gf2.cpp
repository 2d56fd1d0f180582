#include "dbt/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace dbt {

namespace {
constexpr std::size_t kWordBits = 64;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + kWordBits - 1) / kWordBits),
      data_(rows * ((cols + kWordBits - 1) / kWordBits), 0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("Gf2Matrix: dimensions must be positive");
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

void Gf2Matrix::check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix: index out of range");
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    check(r, c);
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    check(r, c);
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (value)
        data_[r * wpr_ + c / kWordBits] |= mask;
    else
        data_[r * wpr_ + c / kWordBits] &= ~mask;
}

BitVec Gf2Matrix::row(std::size_t r) const {
    check(r, 0);
    BitVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if ((data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1)
            v.set(c, true);
    return v;
}

void Gf2Matrix::set_row(std::size_t r, const BitVec& v) {
    check(r, 0);
    if (v.size() != cols_)
        throw std::invalid_argument("Gf2Matrix: row length mismatch");
    for (std::size_t w = 0; w < wpr_; ++w)
        data_[r * wpr_ + w] = v.words()[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    check(a, 0);
    check(b, 0);
    if (a == b)
        return;
    for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
}

void Gf2Matrix::xor_row(std::size_t a, std::size_t b) {
    check(a, 0);
    check(b, 0);
    for (std::size_t w = 0; w < wpr_; ++w)
        data_[a * wpr_ + w] ^= data_[b * wpr_ + w];
}

bool Gf2Matrix::row_dot(std::size_t r, const BitVec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Gf2Matrix: vector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w)
        acc ^= data_[r * wpr_ + w] & v.words()[w];
    return std::popcount(acc) & 1;
}

Gf2Matrix circulant(const BitVec& leader) {
    const std::size_t n = leader.size();
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set_row(i, rotate_right(leader, i));
    return m;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions differ");
    Gf2Matrix out(a.rows(), b.cols());
    // out row i is the XOR of the rows of b selected by row i of a.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BitVec acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                acc ^= b.row(k);
        out.set_row(i, acc);
    }
    return out;
}

BitVec mat_vec(const Gf2Matrix& a, const BitVec& v) {
    if (a.cols() != v.size())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    BitVec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.row_dot(i, v))
            out.set(i, true);
    return out;
}

Gf2Matrix mat_pow(const Gf2Matrix& a, std::uint64_t k) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("mat_pow: matrix must be square");
    Gf2Matrix result = Gf2Matrix::identity(a.rows());
    Gf2Matrix base = a;
    while (k) {
        if (k & 1)
            result = mat_mul(result, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return result;
}

namespace {

struct Rref {
    Gf2Matrix m;
    // (row, col) per pivot, in elimination order.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

Rref rref_of(Gf2Matrix a) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        std::size_t hit = a.rows();
        for (std::size_t r = pr; r < a.rows(); ++r)
            if (a.get(r, c)) {
                hit = r;
                break;
            }
        if (hit == a.rows())
            continue;
        a.swap_rows(pr, hit);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != pr && a.get(r, c))
                a.xor_row(r, pr);
        pivots.emplace_back(pr, c);
        ++pr;
    }
    return {std::move(a), std::move(pivots)};
}

} // namespace

std::size_t rank2(const Gf2Matrix& a) {
    return rref_of(a).pivots.size();
}

int det2(const Gf2Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("det2: matrix must be square");
    return rank2(a) == a.rows() ? 1 : 0;
}

std::vector<BitVec> kernel_basis(const Gf2Matrix& a) {
    const Rref rr = rref_of(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto [r, c] : rr.pivots)
        is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(a.cols());
        v.set(f, true);
        for (auto [r, c] : rr.pivots)
            if (rr.m.get(r, f))
                v.set(c, true);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace dbt
