#pragma once

#include "dbt/aca.hpp"
#include "dbt/baker.hpp"
#include "dbt/bitvec.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace dbt {

// Closed-form predictions about a rule's state transition diagram, computed
// from the baker orbit alone. The exhaustive diagram is never consulted here;
// tests compare these answers against it.

// Height bound from the cylinder size: 2^two_adic_val(n).
std::uint64_t h_star_upper_global(std::size_t n);
// Height bound from the rule's own baker height: 2^profile(x).height.
std::uint64_t h_star_upper_rule(const Rule& x);
// Every attractor length divides this: 2^two_adic_val(n) (2^critical(n) - 1).
std::uint64_t cycle_divisor_global(std::size_t n);
std::string cycle_divisor_global_str(std::size_t n);
// Per-rule refinement: 2^height (2^cycle_len - 1) from the rule's profile.
std::uint64_t cycle_divisor_rule(const Rule& x);

// Determinant of the rule's circulant, evaluated through the convolution
// product of the swept window; no elimination involved.
int det2_via_boxtimes(const Rule& x);
// True exactly when the diagram height is 1.
bool h_star_is_one(const Rule& x);
// True exactly when the rule is fixed by the baker step.
bool fixed_point_characterization(const Rule& x);

struct IdempotentBounds {
    // First repeat along the baker orbit: baker_iter(x, q) == baker_iter(x, r).
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t h_bound = 0;     // h* <= 2^r
    std::uint64_t cycle_bound = 0; // lcm of attractor lengths divides 2^r (2^(q-r) - 1)
};
IdempotentBounds eventually_idempotent_consequences(const Rule& x);

// Membership of a state in the basin of the zero fixed point, decided by one
// convolution with the reversed, shifted swept window.
bool zero_basin_membership(const BitVec& s, const Rule& x);

// True when the baker orbit of x lands on the zero rule.
bool rule_in_zero_baker_basin(const Rule& x);
// True when the baker orbit of x lands on the fixed rule y.
bool rule_in_fixed_point_basin(const Rule& x, const Rule& y);

// Determinant via compression to the odd-length cylinder.
int det_reduction(const Rule& x);

struct CounterexampleEntry {
    Rule rule;
    std::uint32_t baker_height = 0;
    std::uint32_t h_star = 0;
    int det2 = 0;
    std::map<std::uint64_t, std::uint64_t> spectrum;
};

// The n=12 chain showing that 2^(height-1)(1 - det2) does not bound the
// diagram height from below.
struct CounterexampleReport {
    CounterexampleEntry x, y, z;
    bool chain_ok = false;      // baker steps map x -> y -> z -> z
    bool kernels_equal = false; // circulant kernels of x, y, z coincide
    std::uint64_t lower_bound_x = 0;
    bool violated = false; // h*(x) < lower_bound_x
};
CounterexampleReport falsify_inequality_5();

struct PredictionReport {
    std::size_t n = 0;
    Rule rule;
    std::uint32_t baker_height = 0;
    std::uint64_t baker_cycle_len = 1;
    std::uint64_t h_star_upper_global = 0;
    std::uint64_t h_star_upper_rule = 0;
    std::uint64_t cycle_divisor_global = 0;
    std::uint64_t cycle_divisor_rule = 0;
    int det2_pred = 0;
    bool h_star_is_one_pred = false;
    bool is_baker_fixed_point = false;
    bool in_zero_baker_basin = false;
};
PredictionReport predict(const Rule& x);

} // namespace dbt
