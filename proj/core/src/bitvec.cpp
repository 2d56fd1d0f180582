#include "dbt/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace dbt {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) {
    return (n + kWordBits - 1) / kWordBits;
}

} // namespace

BitVec::BitVec(std::size_t n) : len_(n), words_(word_count(n), 0) {
    if (n == 0)
        throw std::invalid_argument("BitVec: length must be positive");
}

BitVec BitVec::ones(std::size_t n) {
    BitVec v(n);
    for (auto& w : v.words_)
        w = ~std::uint64_t{0};
    v.words_.back() &= v.tail_mask();
    return v;
}

BitVec BitVec::unit(std::size_t n) {
    BitVec v(n);
    v.words_[0] = 1;
    return v;
}

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVec: bitstring may contain only 0 and 1");
    }
    return v;
}

BitVec BitVec::from_number(std::size_t n, std::uint64_t num) {
    if (n > 64)
        throw std::invalid_argument("BitVec: numeric encoding needs length <= 64");
    BitVec v(n);
    if (n < 64 && num >= (std::uint64_t{1} << n))
        throw std::invalid_argument("BitVec: number does not fit given length");
    v.words_[0] = num;
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= len_)
        throw std::out_of_range("BitVec: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= len_)
        throw std::out_of_range("BitVec: index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVec::flip(std::size_t i) {
    if (i >= len_)
        throw std::out_of_range("BitVec: index out of range");
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool BitVec::operator<(const BitVec& other) const {
    if (len_ != other.len_)
        return len_ < other.len_;
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i] != other.words_[i])
            return words_[i] < other.words_[i];
    return false;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

bool BitVec::any() const noexcept {
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

std::size_t BitVec::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::uint64_t BitVec::to_number() const {
    if (len_ > 64)
        throw std::length_error("BitVec: numeric encoding needs length <= 64");
    return words_[0];
}

std::uint64_t BitVec::tail_mask() const noexcept {
    const std::size_t r = len_ % kWordBits;
    return r ? ((std::uint64_t{1} << r) - 1) : ~std::uint64_t{0};
}

namespace {

// Plain (non-cyclic) shifts inside an n-bit register; bits pushed past the
// ends are dropped, the tail stays masked.
std::vector<std::uint64_t> shl_words(const std::vector<std::uint64_t>& w, std::size_t k) {
    std::vector<std::uint64_t> out(w.size(), 0);
    const std::size_t ws = k / kWordBits, bs = k % kWordBits;
    for (std::size_t i = out.size(); i-- > ws;) {
        std::uint64_t val = w[i - ws] << bs;
        if (bs && i - ws > 0)
            val |= w[i - ws - 1] >> (kWordBits - bs);
        out[i] = val;
    }
    return out;
}

std::vector<std::uint64_t> shr_words(const std::vector<std::uint64_t>& w, std::size_t k) {
    std::vector<std::uint64_t> out(w.size(), 0);
    const std::size_t ws = k / kWordBits, bs = k % kWordBits;
    for (std::size_t i = 0; i + ws < w.size(); ++i) {
        std::uint64_t val = w[i + ws] >> bs;
        if (bs && i + ws + 1 < w.size())
            val |= w[i + ws + 1] << (kWordBits - bs);
        out[i] = val;
    }
    return out;
}

} // namespace

BitVec rotate_right(const BitVec& v, std::size_t k) {
    const std::size_t n = v.size();
    k %= n;
    if (k == 0)
        return v;
    auto hi = shl_words(v.words(), k);
    auto lo = shr_words(v.words(), n - k);
    BitVec out = v;
    for (std::size_t i = 0; i < hi.size(); ++i)
        out.words_[i] = hi[i] | lo[i];
    out.words_.back() &= out.tail_mask();
    return out;
}

BitVec rotate_left(const BitVec& v, std::size_t k) {
    const std::size_t n = v.size();
    k %= n;
    return rotate_right(v, n - k);
}

BitVec shift_right(const BitVec& v) {
    return rotate_right(v, 1);
}

BitVec reverse(const BitVec& v) {
    const std::size_t n = v.size();
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i)
        if (v.get(i))
            out.set(n - 1 - i, true);
    return out;
}

int parity(const BitVec& v) {
    std::uint64_t acc = 0;
    for (auto w : v.words())
        acc ^= w;
    return std::popcount(acc) & 1;
}

} // namespace dbt
