#include "dbt/criteria.hpp"

#include "dbt/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace dbt {

namespace {

std::uint64_t pow2_checked(std::uint64_t e) {
    if (e >= 64)
        throw std::overflow_error("cycle divisor does not fit 64 bits");
    return std::uint64_t{1} << e;
}

// Left-to-right convolution product of the critical(n) consecutive baker
// iterates starting at two_adic_val(n).
BitVec swept_window_product(const Rule& x) {
    const std::uint64_t c = critical(x.n());
    BitVec term = baker_iter(x.bits, two_adic_val(x.n()));
    BitVec prod = term;
    for (std::uint64_t i = 1; i < c; ++i) {
        term = baker(term);
        prod = boxtimes(prod, term);
    }
    return prod;
}

// Little-endian decimal arithmetic for 2^i (2^c - 1) at any size.
std::string pow2_scaled_mersenne(std::uint64_t c, std::uint64_t i) {
    std::vector<std::uint8_t> d{1};
    const auto dbl = [&d] {
        int carry = 0;
        for (auto& x : d) {
            const int v = x * 2 + carry;
            x = static_cast<std::uint8_t>(v % 10);
            carry = v / 10;
        }
        if (carry)
            d.push_back(static_cast<std::uint8_t>(carry));
    };
    for (std::uint64_t k = 0; k < c; ++k)
        dbl();
    for (std::size_t k = 0;; ++k) {
        if (d[k]) {
            d[k]--;
            break;
        }
        d[k] = 9;
    }
    for (std::uint64_t k = 0; k < i; ++k)
        dbl();
    while (d.size() > 1 && d.back() == 0)
        d.pop_back();
    std::string s;
    for (std::size_t k = d.size(); k-- > 0;)
        s += static_cast<char>('0' + d[k]);
    return s;
}

} // namespace

std::uint64_t h_star_upper_global(std::size_t n) {
    return pow2_checked(two_adic_val(n));
}

std::uint64_t h_star_upper_rule(const Rule& x) {
    return pow2_checked(profile(x).height);
}

std::uint64_t cycle_divisor_global(std::size_t n) {
    const std::uint64_t i = two_adic_val(n), c = critical(n);
    if (i + c > 63)
        throw std::overflow_error("cycle divisor does not fit 64 bits");
    return (pow2_checked(c) - 1) << i;
}

std::string cycle_divisor_global_str(std::size_t n) {
    return pow2_scaled_mersenne(critical(n), two_adic_val(n));
}

std::uint64_t cycle_divisor_rule(const Rule& x) {
    const BakerProfile p = profile(x);
    if (p.height + p.cycle_len > 63)
        throw std::overflow_error("cycle divisor does not fit 64 bits");
    return (pow2_checked(p.cycle_len) - 1) << p.height;
}

int det2_via_boxtimes(const Rule& x) {
    return swept_window_product(x) == BitVec::unit(x.n()) ? 1 : 0;
}

bool h_star_is_one(const Rule& x) {
    const BitVec prod = swept_window_product(x);
    return boxtimes(prod, x.bits) == x.bits && prod != BitVec::unit(x.n());
}

bool fixed_point_characterization(const Rule& x) {
    return baker(x.bits) == x.bits;
}

IdempotentBounds eventually_idempotent_consequences(const Rule& x) {
    std::vector<BitVec> orbit{x.bits};
    for (;;) {
        BitVec nxt = baker(orbit.back());
        for (std::size_t r = 0; r < orbit.size(); ++r) {
            if (orbit[r] == nxt) {
                IdempotentBounds b;
                b.q = orbit.size();
                b.r = r;
                b.h_bound = pow2_checked(r);
                b.cycle_bound = (pow2_checked(b.q - b.r) - 1) << r;
                return b;
            }
        }
        orbit.push_back(std::move(nxt));
    }
}

bool zero_basin_membership(const BitVec& s, const Rule& x) {
    if (s.size() != x.n())
        throw std::invalid_argument("zero_basin_membership: length mismatch");
    const BitVec window = shift_right(reverse(baker_iter(x.bits, two_adic_val(x.n()))));
    return !boxtimes(s, window).any();
}

bool rule_in_zero_baker_basin(const Rule& x) {
    return !baker_iter(x.bits, two_adic_val(x.n())).any();
}

bool rule_in_fixed_point_basin(const Rule& x, const Rule& y) {
    if (x.n() != y.n())
        throw std::invalid_argument("rule_in_fixed_point_basin: cylinder sizes differ");
    if (baker(y.bits) != y.bits)
        throw std::invalid_argument("rule_in_fixed_point_basin: target rule is not fixed");
    return baker_iter(x.bits, two_adic_val(x.n())) == y.bits;
}

int det_reduction(const Rule& x) {
    return det2(circulant(compress(x.bits)));
}

namespace {

bool same_kernel(const BitVec& a, const BitVec& b) {
    const Gf2Matrix ca = circulant(a), cb = circulant(b);
    if (rank2(ca) != rank2(cb))
        return false;
    for (const BitVec& v : kernel_basis(ca))
        if (mat_vec(cb, v).any())
            return false;
    return true;
}

CounterexampleEntry make_entry(const Rule& r) {
    const StdReport s = std_report(r);
    return {r, profile(r).height, s.h_star, s.det2, s.cycle_spectrum};
}

} // namespace

CounterexampleReport falsify_inequality_5() {
    const Rule x(BitVec::from_string("110000001100"));
    const Rule y(BitVec::from_string("101010100000"));
    const Rule z(BitVec::from_string("000010001000"));
    CounterexampleReport rep{make_entry(x), make_entry(y), make_entry(z)};
    rep.chain_ok = baker(x.bits) == y.bits && baker(y.bits) == z.bits && baker(z.bits) == z.bits;
    rep.kernels_equal = same_kernel(x.bits, y.bits) && same_kernel(y.bits, z.bits);
    rep.lower_bound_x =
        rep.x.det2 ? 0 : (std::uint64_t{1} << (rep.x.baker_height - 1));
    rep.violated = rep.x.h_star < rep.lower_bound_x;
    return rep;
}

PredictionReport predict(const Rule& x) {
    const BakerProfile p = profile(x);
    PredictionReport r{x.n(), x};
    r.baker_height = p.height;
    r.baker_cycle_len = p.cycle_len;
    r.h_star_upper_global = h_star_upper_global(x.n());
    r.h_star_upper_rule = pow2_checked(p.height);
    r.cycle_divisor_global = cycle_divisor_global(x.n());
    r.cycle_divisor_rule = (pow2_checked(p.cycle_len) - 1) << p.height;
    r.det2_pred = det2_via_boxtimes(x);
    r.h_star_is_one_pred = h_star_is_one(x);
    r.is_baker_fixed_point = fixed_point_characterization(x);
    r.in_zero_baker_basin = rule_in_zero_baker_basin(x);
    return r;
}

} // namespace dbt
