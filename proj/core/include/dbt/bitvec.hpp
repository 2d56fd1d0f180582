#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dbt {

// Fixed-length vector over GF(2), bit-packed LSB-first into 64-bit words.
// Component 0 is bit 0 of word 0; unused tail bits of the last word are
// kept zero so equality can compare whole words.
class BitVec {
public:
    explicit BitVec(std::size_t n);

    static BitVec zeros(std::size_t n) { return BitVec(n); }
    static BitVec ones(std::size_t n);
    // Unit leader [1,0,...,0], the identity of the cyclic convolution.
    static BitVec unit(std::size_t n);
    static BitVec from_string(std::string_view s);
    // LSB-first decoding: bit i of num becomes component i. Requires n <= 64.
    static BitVec from_number(std::size_t n, std::uint64_t num);

    std::size_t size() const noexcept { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    bool operator==(const BitVec&) const = default;
    // Numeric LSB-first order; shorter vectors sort first.
    bool operator<(const BitVec& other) const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool any() const noexcept;
    std::size_t count() const noexcept;

    std::string to_string() const;
    std::uint64_t to_number() const;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;

    std::uint64_t tail_mask() const noexcept;

    friend BitVec rotate_right(const BitVec&, std::size_t);
};

// Cyclic shift right: result[0] = v[n-1], result[i] = v[i-1] otherwise.
BitVec shift_right(const BitVec& v);
// result[i] = v[(i - k) mod n]; every component moves k positions up.
BitVec rotate_right(const BitVec& v, std::size_t k);
// result[i] = v[(i + k) mod n].
BitVec rotate_left(const BitVec& v, std::size_t k);
// result[i] = v[n - 1 - i].
BitVec reverse(const BitVec& v);
// XOR of all components.
int parity(const BitVec& v);

} // namespace dbt
