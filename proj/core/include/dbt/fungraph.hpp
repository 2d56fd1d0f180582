#pragma once

#include "dbt/bitvec.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dbt {

// Raised when an operation would tabulate more nodes than the configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FunGraphCycle {
    std::uint32_t id = 0;
    std::uint64_t length = 0;
    // Starts at the smallest member and follows the map around the cycle.
    std::vector<std::uint64_t> members;
};

struct FunGraphReport {
    std::uint64_t node_count = 0;
    // "baker", "index" or "std" for the built-in maps, "custom" otherwise.
    std::string map_name = "custom";
    // Generator parameter: cylinder or segment size for the built-in maps.
    std::uint64_t n = 0;
    std::vector<std::uint32_t> next;
    // Ordered by smallest member; ids are positions in this vector.
    std::vector<FunGraphCycle> cycles;
    std::vector<std::uint32_t> height;
    std::vector<std::uint32_t> attractor;
    std::map<std::uint64_t, std::uint64_t> cycle_length_multiset;
    std::vector<std::uint64_t> basin_sizes;
    std::uint32_t max_height = 0;
};

// Full cycle/height/basin decomposition of a tabulated self-map. Iterative
// pointer chasing with memoized heights; safe for millions of nodes.
FunGraphReport analyze(std::vector<std::uint32_t> next);
FunGraphReport analyze(std::uint64_t node_count,
                       const std::function<std::uint64_t(std::uint64_t)>& f);

// Diagram of i -> 2i mod n on {0..n-1}.
FunGraphReport index_diagram(std::uint64_t n);

// Node cap exponent for the 2^n-node diagrams: value of BAKER_ACA_CAP when
// set, otherwise 22.
std::size_t default_state_cap();

// Diagram of the baker step over all 2^n rules, node ids LSB-first.
FunGraphReport baker_diagram(std::size_t n, std::size_t cap = default_state_cap());

std::string export_dot(const FunGraphReport& report,
                       const std::function<std::string(std::uint64_t)>& labeler = nullptr);
std::string export_json(const FunGraphReport& report);

} // namespace dbt
