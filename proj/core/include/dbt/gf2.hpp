#pragma once

#include "dbt/bitvec.hpp"

#include <cstdint>
#include <vector>

namespace dbt {

// Dense matrix over GF(2) with bit-packed rows. Operators act from the
// left on column vectors: (A v)_i = XOR_j A[i][j] v_j.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols);
    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    void swap_rows(std::size_t a, std::size_t b);
    // row a ^= row b
    void xor_row(std::size_t a, std::size_t b);
    // XOR of row r with v, reduced to a single parity bit.
    bool row_dot(std::size_t r, const BitVec& v) const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;

    void check(std::size_t r, std::size_t c) const;
};

// Circulant generated by a leader: row i is the leader cyclically shifted
// right i times.
Gf2Matrix circulant(const BitVec& leader);

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);
BitVec mat_vec(const Gf2Matrix& a, const BitVec& v);
Gf2Matrix mat_pow(const Gf2Matrix& a, std::uint64_t k);

// Gaussian elimination with the first nonzero candidate as pivot, so ranks,
// determinants and kernel bases are reproducible bit for bit.
std::size_t rank2(const Gf2Matrix& a);
// Determinant mod 2; square matrices only.
int det2(const Gf2Matrix& a);
// Basis of the right kernel, one vector per free column, ascending.
std::vector<BitVec> kernel_basis(const Gf2Matrix& a);

} // namespace dbt
