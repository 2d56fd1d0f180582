#include "dbt/baker.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dbt {

Rule Rule::padded(std::size_t n, const BitVec& pattern) {
    if (pattern.size() > n)
        throw std::invalid_argument("Rule: pattern longer than cylinder");
    BitVec b(n);
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern.get(i))
            b.set(i, true);
    return Rule(std::move(b));
}

BitVec boxtimes(const BitVec& l, const BitVec& m) {
    if (l.size() != m.size())
        throw std::invalid_argument("boxtimes: length mismatch");
    BitVec acc(l.size());
    for (std::size_t k = 0; k < l.size(); ++k)
        if (l.get(k))
            acc ^= rotate_right(m, k);
    return acc;
}

BitVec baker(const BitVec& v) {
    const std::size_t n = v.size();
    BitVec out(n);
    for (std::size_t j = 0; j < n; ++j)
        if (v.get(j))
            out.flip((2 * j) % n);
    return out;
}

BitVec baker_iter(const BitVec& v, std::uint64_t k) {
    BitVec out = v;
    for (std::uint64_t i = 0; i < k; ++i)
        out = baker(out);
    return out;
}

Gf2Matrix baker_matrix(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        m.set((2 * j) % n, j, true);
    return m;
}

std::size_t index_baker(std::size_t i, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("index_baker: n must be positive");
    if (i >= n)
        throw std::out_of_range("index_baker: index out of range");
    return (2 * i) % n;
}

unsigned two_adic_val(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("two_adic_val: argument must be positive");
    return static_cast<unsigned>(std::countr_zero(n));
}

std::uint64_t ord2(std::uint64_t m) {
    if (m == 0 || m % 2 == 0)
        throw std::invalid_argument("ord2: modulus must be odd and positive");
    if (m == 1)
        return 1;
    std::uint64_t v = 2 % m, t = 1;
    while (v != 1) {
        v = (v * 2) % m;
        ++t;
    }
    return t;
}

std::uint64_t critical(std::uint64_t n) {
    const std::uint64_t odd = n >> two_adic_val(n);
    return odd > 1 ? ord2(odd) : 1;
}

bool is_swept(const BitVec& v) {
    const std::uint64_t q = std::uint64_t{1} << two_adic_val(v.size());
    for (std::size_t j = 1; j < v.size(); ++j)
        if (j % q != 0 && v.get(j))
            return false;
    return true;
}

BitVec compress(const BitVec& v) {
    const unsigned iv = two_adic_val(v.size());
    if (iv == 0)
        return v;
    const std::size_t q = std::size_t{1} << iv;
    const BitVec y = baker_iter(v, iv);
    BitVec out(v.size() / q);
    for (std::size_t t = 0; t < out.size(); ++t)
        if (y.get(t * q))
            out.set(t, true);
    return out;
}

namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
    std::vector<std::uint64_t> d;
    for (std::uint64_t a = 1; a * a <= m; ++a) {
        if (m % a)
            continue;
        d.push_back(a);
        if (a != m / a)
            d.push_back(m / a);
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

BakerProfile profile(const Rule& x) {
    BakerProfile p{0, 1, x.bits, compress(x.bits)};
    while (!is_swept(p.swept_form)) {
        p.swept_form = baker(p.swept_form);
        ++p.height;
    }
    // Swept forms sit on baker cycles, so the period divides critical(n).
    for (std::uint64_t d : divisors_of(critical(x.n()))) {
        if (baker_iter(p.swept_form, d) == p.swept_form) {
            p.cycle_len = d;
            break;
        }
    }
    return p;
}

std::vector<BitVec> fixed_rules(std::size_t n) {
    Gf2Matrix m = baker_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, !m.get(i, i));
    const std::vector<BitVec> basis = kernel_basis(m);
    if (basis.size() > 24)
        throw std::length_error("fixed_rules: fixed space too large to enumerate");
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        BitVec v(n);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if ((mask >> b) & 1)
                v ^= basis[b];
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string critical_csv(std::uint64_t max_n) {
    std::string out = "n,c_of_n\n";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(critical(n));
        out += '\n';
    }
    return out;
}

} // namespace dbt
