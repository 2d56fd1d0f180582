#pragma once

#include "dbt/baker.hpp"
#include "dbt/bitvec.hpp"
#include "dbt/fungraph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace dbt {

// One synchronous step of the additive automaton:
// result_i = XOR_j x_j s_{(i+j) mod n}.
BitVec apply(const Rule& x, const BitVec& s);
// k-fold application, computed step by step.
BitVec apply_power(const Rule& x, const BitVec& s, std::uint64_t k);

// The full state transition diagram over all 2^n states, node ids LSB-first.
FunGraphReport std_diagram(const Rule& x, std::size_t cap = default_state_cap());

struct StdReport {
    std::size_t n = 0;
    Rule rule;
    // Largest distance from any state to its attractor.
    std::uint32_t h_star = 0;
    std::map<std::uint64_t, std::uint64_t> cycle_spectrum;
    std::uint64_t cyclic_state_count = 0;
    std::uint64_t zero_basin_size = 0;
    int det2 = 0;
};

StdReport std_report(const Rule& x, std::size_t cap = default_state_cap());
std::uint32_t h_star(const Rule& x, std::size_t cap = default_state_cap());

// States attracted to the zero fixed point, ascending by state number.
std::vector<BitVec> zero_basin(const Rule& x, std::size_t cap = default_state_cap());

} // namespace dbt
