// Acceptance gate: twelve exact-match criteria covering the diagram
// generators, the closed-form criteria and the randomized algebra suites.
// Prints one PASS/FAIL line per criterion; the exit code is the number of
// failed criteria. All counts are combinatorial, tolerance zero.

#include <dbt/aca.hpp>
#include <dbt/baker.hpp>
#include <dbt/criteria.hpp>
#include <dbt/fungraph.hpp>
#include <dbt/gf2.hpp>
#include <dbt/verify.hpp>

#include "tree_iso.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace dbt;

namespace {

using Spectrum = std::map<std::uint64_t, std::uint64_t>;

std::vector<std::string> detail;

void note(const std::string& line) { detail.push_back(line); }

BitVec rand_vec(std::mt19937_64& rng, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, (rng() & 1) != 0);
    return v;
}

std::set<std::uint64_t> member_set(const FunGraphCycle& c) {
    return std::set<std::uint64_t>(c.members.begin(), c.members.end());
}

bool index_diagram_33_cycles() {
    FunGraphReport g = index_diagram(33);
    bool ok = g.node_count == 33 && g.max_height == 0 && g.cycles.size() == 5;
    if (!ok) {
        note("33 nodes decompose into " + std::to_string(g.cycles.size()) +
             " cycles, max height " + std::to_string(g.max_height));
        return false;
    }
    const std::vector<std::set<std::uint64_t>> expect = {
        {0},
        {1, 2, 4, 8, 16, 32, 31, 29, 25, 17},
        {3, 6, 9, 12, 15, 18, 21, 24, 27, 30},
        {5, 7, 10, 13, 14, 19, 20, 23, 26, 28},
        {11, 22}};
    for (std::size_t i = 0; i < 5; ++i)
        if (member_set(g.cycles[i]) != expect[i]) {
            note("cycle " + std::to_string(i) + " has unexpected members");
            ok = false;
        }
    return ok;
}

bool index_diagram_264_trees() {
    FunGraphReport g = index_diagram(264);
    bool ok = true;
    if (g.cycle_length_multiset != Spectrum{{1, 1}, {2, 1}, {10, 3}}) {
        note("cycle multiset differs from {1,2,10,10,10}");
        ok = false;
    }
    if (g.max_height != 3) {
        note("max height is " + std::to_string(g.max_height) + ", want 3");
        ok = false;
    }
    if (!testutil::cyclic_trees_isomorphic(g)) {
        note("trees at cyclic roots are not pairwise isomorphic");
        ok = false;
    }
    return ok;
}

bool baker_diagram_9_cycles() {
    FunGraphReport g = baker_diagram(9, 28);
    bool ok = true;
    if (g.node_count != 512) {
        note("node count " + std::to_string(g.node_count) + ", want 512");
        ok = false;
    }
    if (g.cycle_length_multiset != Spectrum{{1, 8}, {2, 12}, {3, 8}, {6, 76}}) {
        note("cycle multiset differs from {1:8, 2:12, 3:8, 6:76}");
        ok = false;
    }
    if (g.max_height != 0) {
        note("some rule sits off-cycle; max height " + std::to_string(g.max_height));
        ok = false;
    }
    return ok;
}

bool baker_diagram_10_basins() {
    FunGraphReport g = baker_diagram(10, 28);
    std::map<std::uint64_t, std::uint64_t> basins_by_len;
    for (const auto& c : g.cycles)
        ++basins_by_len[c.length];
    bool ok = true;
    if (basins_by_len != Spectrum{{1, 4}, {2, 2}, {4, 6}}) {
        note("basin counts per cycle length differ from 4/2/6 at lengths 1/2/4");
        ok = false;
    }
    if (g.max_height > 1) {
        note("max height is " + std::to_string(g.max_height) + ", want <= 1");
        ok = false;
    }
    return ok;
}

bool state_diagram_goldens() {
    struct Row {
        std::size_t n;
        const char* bits;
        Spectrum spectrum;
        std::uint32_t h_star;
    };
    const std::vector<Row> rows = {
        {8, "111", {{1, 2}, {2, 1}, {4, 3}, {8, 30}}, 0},
        {10, "110101", {{1, 1}, {15, 1}, {30, 8}}, 2},
        {10, "1111", {{1, 1}, {5, 3}, {10, 24}}, 1},
        {10, "0000001111", {{1, 16}, {2, 120}}, 1},
        {10, "1001011011", {{1, 1}, {3, 5}, {6, 40}}, 2},
        {10, "1000101010", {{1, 1}, {5, 51}}, 1},
    };
    bool ok = true;
    for (const auto& row : rows) {
        StdReport r = std_report(Rule::padded(row.n, BitVec::from_string(row.bits)), 28);
        if (r.cycle_spectrum != row.spectrum || r.h_star != row.h_star) {
            note(std::string("rule ") + row.bits + " on " + std::to_string(row.n) +
                 " cells: got h*=" + std::to_string(r.h_star));
            ok = false;
        }
    }
    return ok;
}

bool nine_cell_table() {
    struct Row {
        const char* bits;
        std::uint64_t attractor_power;
        std::uint64_t divisor;
        std::set<std::uint64_t> lengths;
        std::uint32_t h_star;
    };
    const std::vector<Row> rows = {
        {"000100100", 1, 1, {1}, 1},
        {"101101101", 2, 3, {1, 3}, 1},
        {"111000011", 3, 7, {1, 7}, 0},
        {"110100101", 3, 7, {1, 7}, 1},
        {"111000010", 6, 63, {1, 3, 63}, 1},
        {"110101100", 6, 63, {1, 21}, 1},
        {"100101100", 6, 63, {1, 3, 9}, 1},
    };
    bool ok = true;
    for (const auto& row : rows) {
        Rule x(BitVec::from_string(row.bits));
        BakerProfile p = profile(x);
        StdReport r = std_report(x, 28);
        std::set<std::uint64_t> lengths;
        for (const auto& [len, cnt] : r.cycle_spectrum)
            lengths.insert(len);
        if (p.cycle_len != row.attractor_power || p.height != 0 ||
            cycle_divisor_rule(x) != row.divisor || lengths != row.lengths ||
            r.h_star != row.h_star) {
            note(std::string("row ") + row.bits + " mismatches the table");
            ok = false;
        }
    }
    return ok;
}

bool six_cell_classification() {
    const std::set<std::uint64_t> expect0 = {1,  2,  4,  8,  11, 13, 16, 19,
                                             22, 25, 26, 31, 32, 37, 38, 41,
                                             44, 47, 50, 52, 55, 59, 61, 62};
    const std::set<std::uint64_t> expect1 = {0,  5,  10, 15, 17, 20, 21, 30,
                                             34, 39, 40, 42, 51, 57, 60};
    bool ok = true;
    for (std::uint64_t v = 0; v < 64; ++v) {
        Rule x = Rule::from_number(6, v);
        std::uint32_t h = h_star(x, 28);
        std::uint32_t expected = expect0.count(v) ? 0 : expect1.count(v) ? 1 : 2;
        if (h != expected) {
            note("rule " + std::to_string(v) + ": oracle h*=" + std::to_string(h) +
                 ", list says " + std::to_string(expected));
            ok = false;
        }
        // The closed forms must classify identically.
        std::uint32_t closed = det2_via_boxtimes(x) == 1 ? 0
                               : h_star_is_one(x)       ? 1
                                                        : 2;
        if (closed != h) {
            note("rule " + std::to_string(v) + ": criterion says " +
                 std::to_string(closed) + ", oracle says " + std::to_string(h));
            ok = false;
        }
    }
    return ok;
}

bool exhaustive_prediction_sweep() {
    VerifyReport rep = run_verification(12);
    const std::vector<std::string> required = {
        "det2_boxtimes_vs_gauss", "det2_marks_height_zero", "height_one_criterion",
        "cycle_divisor_chain",    "height_bounds",          "zero_basin_equation",
    };
    bool ok = true;
    for (const auto& name : required) {
        bool found = false;
        for (const auto& c : rep.checks)
            if (c.name == name) {
                found = true;
                if (c.checked == 0 || c.failed != 0) {
                    note(name + ": checked " + std::to_string(c.checked) + ", failed " +
                         std::to_string(c.failed));
                    ok = false;
                }
            }
        if (!found) {
            note("check " + name + " missing from the verification report");
            ok = false;
        }
    }
    return ok;
}

bool operator_power_law() {
    for (std::size_t n = 1; n <= 10; ++n)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            Rule x = Rule::from_number(n, v);
            for (std::uint64_t i = 0; i <= 3; ++i) {
                Rule folded(baker_iter(x.bits, i));
                for (std::uint64_t s = 0; s < (1ull << n); ++s) {
                    BitVec state = BitVec::from_number(n, s);
                    if (apply_power(x, state, 1ull << i) != apply(folded, state)) {
                        note("n=" + std::to_string(n) + " rule " + std::to_string(v) +
                             " state " + std::to_string(s) + " i=" + std::to_string(i));
                        return false;
                    }
                }
            }
        }
    return true;
}

bool determinant_reduction() {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (std::size_t n : {6, 12, 20, 24})
        for (int t = 0; t < 10000; ++t) {
            Rule x(rand_vec(rng, n));
            if (det_reduction(x) != det2(circulant(x.bits))) {
                note("n=" + std::to_string(n) + " rule " + x.bits.to_string());
                return false;
            }
        }
    // Power-of-two cylinders collapse to the leader parity.
    for (std::size_t n : {2, 4, 8})
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            Rule x = Rule::from_number(n, v);
            if (det_reduction(x) != parity(x.bits)) {
                note("parity form fails at n=" + std::to_string(n) + " rule " +
                     std::to_string(v));
                return false;
            }
        }
    for (std::size_t n : {16, 32, 64})
        for (int t = 0; t < 1000; ++t) {
            Rule x(rand_vec(rng, n));
            if (det_reduction(x) != parity(x.bits)) {
                note("parity form fails at n=" + std::to_string(n));
                return false;
            }
        }
    return true;
}

bool twelve_cell_counterexample() {
    CounterexampleReport r = falsify_inequality_5();
    bool ok = true;
    if (!r.chain_ok) {
        note("the three rules do not form a baker chain");
        ok = false;
    }
    if (r.x.baker_height != 2 || r.y.baker_height != 1 || r.z.baker_height != 0) {
        note("baker heights are not (2, 1, 0)");
        ok = false;
    }
    if (!r.kernels_equal) {
        note("circulant kernels differ along the chain");
        ok = false;
    }
    if (r.x.spectrum != Spectrum{{1, 4}, {2, 6}, {4, 60}}) {
        note("first spectrum differs from {1:4, 2:6, 4:60}");
        ok = false;
    }
    if (r.y.spectrum != Spectrum{{1, 16}, {2, 120}}) {
        note("second spectrum differs from {1:16, 2:120}");
        ok = false;
    }
    if (r.z.spectrum != Spectrum{{1, 256}}) {
        note("third spectrum differs from {1:256}");
        ok = false;
    }
    if (r.lower_bound_x != 2 || !r.violated || r.x.h_star >= r.lower_bound_x) {
        note("height bound is not violated as expected");
        ok = false;
    }
    return ok;
}

bool randomized_property_suites() {
    std::mt19937_64 rng(0x2545f4914f6cdd1dull);
    bool ok = true;

    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + rng() % 24;
        BitVec a = rand_vec(rng, n), b = rand_vec(rng, n), c = rand_vec(rng, n);
        if (boxtimes(boxtimes(a, b), c) != boxtimes(a, boxtimes(b, c))) {
            note("associativity fails at n=" + std::to_string(n));
            ok = false;
            break;
        }
    }

    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + rng() % 16;
        BitVec l = rand_vec(rng, n), m = rand_vec(rng, n);
        if (mat_mul(circulant(l), circulant(m)) != circulant(boxtimes(l, m))) {
            note("circulant product fails at n=" + std::to_string(n));
            ok = false;
            break;
        }
    }

    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + rng() % 32;
        BitVec a = rand_vec(rng, n), b = rand_vec(rng, n);
        if (baker(a ^ b) != (baker(a) ^ baker(b))) {
            note("linearity fails at n=" + std::to_string(n));
            ok = false;
            break;
        }
    }

    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + rng() % 16;
        BitVec x = rand_vec(rng, n);
        if (det2(circulant(baker(x))) != det2(circulant(x))) {
            note("determinant conservation fails at n=" + std::to_string(n));
            ok = false;
            break;
        }
    }

    // Rank of the circulant along the baker orbit itself.
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + rng() % 16;
        BitVec x = rand_vec(rng, n);
        unsigned iota = two_adic_val(n);
        std::vector<std::size_t> ranks;
        BitVec it = x;
        for (unsigned i = 0; i <= iota + 2; ++i) {
            ranks.push_back(rank2(circulant(it)));
            it = baker(it);
        }
        std::size_t least = ranks[0];
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            if (i && ranks[i] > ranks[i - 1]) {
                note("rank series increases at n=" + std::to_string(n));
                ok = false;
            }
            least = std::min(least, ranks[i]);
        }
        if (ranks[iota] != least) {
            note("rank series minimum misses the two-adic index at n=" +
                 std::to_string(n));
            ok = false;
        }
        if (!ok)
            break;
    }

    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 4 + rng() % 21;
        BitVec l(n), m(n);
        for (int picks = 0; picks < 3; ++picks) {
            l.set(rng() % n, true);
            m.set(rng() % n, true);
        }
        if (boxtimes(l, m).count() > l.count() * m.count()) {
            note("sparsity bound fails at n=" + std::to_string(n));
            ok = false;
            break;
        }
    }

    return ok;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"index diagram on 33 residues: five exact cycles", index_diagram_33_cycles},
        {"index diagram on 264 residues: heights and isomorphic trees",
         index_diagram_264_trees},
        {"baker diagram on 9 cells: pure cycle decomposition", baker_diagram_9_cycles},
        {"baker diagram on 10 cells: basin structure", baker_diagram_10_basins},
        {"state diagram goldens on 8 and 10 cells", state_diagram_goldens},
        {"nine-cell table: attractors, divisors, lengths, heights", nine_cell_table},
        {"six-cell exhaustive height classification", six_cell_classification},
        {"exhaustive prediction sweep to 12 cells", exhaustive_prediction_sweep},
        {"operator power law across the rule space", operator_power_law},
        {"determinant reduction to the odd cylinder", determinant_reduction},
        {"twelve-cell counterexample to the height lower bound",
         twelve_cell_counterexample},
        {"randomized algebra property suites", randomized_property_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        detail.clear();
        bool ok = criteria[i].run();
        std::printf("AC%02zu  %-62s %s\n", i + 1, criteria[i].name, ok ? "PASS" : "FAIL");
        if (!ok) {
            ++failures;
            for (const auto& line : detail)
                std::printf("      - %s\n", line.c_str());
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
