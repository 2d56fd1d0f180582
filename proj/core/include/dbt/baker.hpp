#pragma once

#include "dbt/bitvec.hpp"
#include "dbt/gf2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dbt {

// A local rule on the cylinder of size n, stored at standard length |vec| = n.
struct Rule {
    BitVec bits;

    explicit Rule(BitVec b) : bits(std::move(b)) {}
    // Right-pads a shorter bit pattern with zeros up to length n.
    static Rule padded(std::size_t n, const BitVec& pattern);
    static Rule from_number(std::size_t n, std::uint64_t num) {
        return Rule(BitVec::from_number(n, num));
    }

    std::size_t n() const noexcept { return bits.size(); }
    std::uint64_t number() const { return bits.to_number(); }

    bool operator==(const Rule&) const = default;
};

// Cyclic convolution over GF(2): (l boxtimes m)_j = XOR_k l_k m_{(j-k) mod n}.
BitVec boxtimes(const BitVec& l, const BitVec& m);

// Baker step: component j is added into component (2j mod n).
BitVec baker(const BitVec& v);
BitVec baker_iter(const BitVec& v, std::uint64_t k);

// Matrix of the baker step: entry (i, j) = 1 iff i = 2j mod n.
Gf2Matrix baker_matrix(std::size_t n);

// Index doubling map i -> 2i mod n.
std::size_t index_baker(std::size_t i, std::size_t n);

// Exponent of the largest power of two dividing n.
unsigned two_adic_val(std::uint64_t n);
// Multiplicative order of 2 modulo an odd m; ord2(1) = 1 by convention.
std::uint64_t ord2(std::uint64_t m);
// Order of 2 modulo the odd part of n; 1 when the odd part is trivial.
std::uint64_t critical(std::uint64_t n);

// True when every component off the multiples of 2^two_adic_val(n) is zero.
bool is_swept(const BitVec& v);

// two_adic_val(n) baker steps, then restriction to the multiples of
// 2^two_adic_val(n); the result lives on the odd-length cylinder.
BitVec compress(const BitVec& v);

struct BakerProfile {
    // Steps until the orbit first becomes swept.
    std::uint32_t height = 0;
    // Period of the swept form under the baker step.
    std::uint64_t cycle_len = 1;
    BitVec swept_form;
    BitVec compression;
};

BakerProfile profile(const Rule& x);

// All rules fixed by the baker step, ascending by rule number.
std::vector<BitVec> fixed_rules(std::size_t n);

// CSV with columns n,c_of_n for n = 1..max_n.
std::string critical_csv(std::uint64_t max_n);

} // namespace dbt
