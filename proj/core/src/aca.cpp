#include "dbt/aca.hpp"

#include "dbt/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbt {

BitVec apply(const Rule& x, const BitVec& s) {
    if (s.size() != x.n())
        throw std::invalid_argument("apply: state length differs from cylinder size");
    BitVec out(x.n());
    for (std::size_t j = 0; j < x.n(); ++j)
        if (x.bits.get(j))
            out ^= rotate_left(s, j);
    return out;
}

BitVec apply_power(const Rule& x, const BitVec& s, std::uint64_t k) {
    BitVec out = s;
    for (std::uint64_t i = 0; i < k; ++i)
        out = apply(x, out);
    return out;
}

namespace {

// State table of the rule with states packed into plain integers.
std::vector<std::uint32_t> tabulate_states(const Rule& x, std::size_t cap) {
    const std::size_t n = x.n();
    if (n > cap || n > 28)
        throw CapExceededError("state diagram: n=" + std::to_string(n) + " needs 2^" +
                               std::to_string(n) + " states, cap is 2^" + std::to_string(cap) +
                               " (raise BAKER_ACA_CAP to override)");
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t mask = count - 1;
    std::vector<unsigned> shifts;
    for (std::size_t j = 1; j < n; ++j)
        if (x.bits.get(j))
            shifts.push_back(static_cast<unsigned>(j));
    const bool keep = x.bits.get(0);
    std::vector<std::uint32_t> next(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        std::uint64_t t = keep ? s : 0;
        for (unsigned j : shifts)
            t ^= ((s >> j) | (s << (n - j))) & mask;
        next[s] = static_cast<std::uint32_t>(t);
    }
    return next;
}

} // namespace

FunGraphReport std_diagram(const Rule& x, std::size_t cap) {
    FunGraphReport rep = analyze(tabulate_states(x, cap));
    rep.map_name = "std";
    rep.n = x.n();
    return rep;
}

StdReport std_report(const Rule& x, std::size_t cap) {
    const FunGraphReport g = std_diagram(x, cap);
    StdReport r{x.n(), x, g.max_height, g.cycle_length_multiset, 0, 0, 0};
    for (auto [len, cnt] : r.cycle_spectrum)
        r.cyclic_state_count += len * cnt;
    r.zero_basin_size = g.basin_sizes[g.attractor[0]];
    r.det2 = det2(circulant(x.bits));
    return r;
}

std::uint32_t h_star(const Rule& x, std::size_t cap) {
    return std_diagram(x, cap).max_height;
}

std::vector<BitVec> zero_basin(const Rule& x, std::size_t cap) {
    const std::vector<std::uint32_t> next = tabulate_states(x, cap);
    const std::uint64_t count = next.size();
    // Reverse BFS from the zero state over a counting-sorted edge list.
    std::vector<std::uint32_t> offset(count + 1, 0);
    for (std::uint32_t t : next)
        offset[t + 1]++;
    for (std::uint64_t i = 0; i < count; ++i)
        offset[i + 1] += offset[i];
    std::vector<std::uint32_t> pred(count);
    {
        std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
        for (std::uint64_t s = 0; s < count; ++s)
            pred[cursor[next[s]]++] = static_cast<std::uint32_t>(s);
    }
    std::vector<std::uint8_t> seen(count, 0);
    std::vector<std::uint32_t> queue;
    seen[0] = 1;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t e = offset[v]; e < offset[v + 1]; ++e) {
            const std::uint32_t p = pred[e];
            if (!seen[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
        }
    }
    std::vector<BitVec> out;
    for (std::uint64_t s = 0; s < count; ++s)
        if (seen[s])
            out.push_back(BitVec::from_number(x.n(), s));
    return out;
}

} // namespace dbt
