#include "dbt/verify.hpp"

#include "dbt/aca.hpp"
#include "dbt/baker.hpp"
#include "dbt/criteria.hpp"
#include "dbt/fungraph.hpp"
#include "dbt/gf2.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace dbt {

namespace {

struct Tally {
    VerifyReport rep;
    std::map<std::string, std::size_t> index;

    void add(const std::string& name, bool ok) {
        auto [it, inserted] = index.try_emplace(name, rep.checks.size());
        if (inserted)
            rep.checks.push_back({name, 0, 0});
        auto& c = rep.checks[it->second];
        c.checked++;
        if (!ok)
            c.failed++;
    }
};

BitVec random_vec(std::size_t n, std::mt19937_64& rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1)
            v.set(i, true);
    return v;
}

bool divides(std::uint64_t d, std::uint64_t m) {
    return d != 0 && m % d == 0;
}

void rule_sweep(Tally& t, std::size_t n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    const FunGraphReport diag = baker_diagram(n, 28);
    const std::uint64_t cstar = cycle_divisor_global(n);
    const std::uint64_t iv = two_adic_val(n);
    const std::uint64_t cn = critical(n);
    const BitVec unit = BitVec::unit(n);
    const bool deep = n <= 10;

    std::vector<std::uint32_t> hstar(count);
    std::vector<std::uint64_t> maxlen(count);

    for (std::uint64_t r = 0; r < count; ++r) {
        const Rule x = Rule::from_number(n, r);
        const FunGraphReport g = std_diagram(x, 28);
        const int dg = det2(circulant(x.bits));
        const auto& spectrum = g.cycle_length_multiset;
        hstar[r] = g.max_height;
        maxlen[r] = spectrum.rbegin()->first;

        t.add("det2_boxtimes_vs_gauss", det2_via_boxtimes(x) == dg);
        t.add("det2_marks_height_zero", (dg == 1) == (g.max_height == 0));
        t.add("height_one_criterion", h_star_is_one(x) == (g.max_height == 1));

        const BakerProfile p = profile(x);
        const std::uint64_t cx = cycle_divisor_rule(x);
        bool chain = divides(cx, cstar);
        for (auto [len, cnt] : spectrum)
            chain = chain && divides(len, cx);
        t.add("cycle_divisor_chain", chain);

        const std::uint64_t hb_rule = std::uint64_t{1} << p.height;
        t.add("height_bounds",
              g.max_height <= hb_rule && hb_rule <= (std::uint64_t{1} << iv));

        const bool all_fixed = spectrum.size() == 1 && spectrum.begin()->first == 1;
        const bool fixed_lhs = fixed_point_characterization(x);
        const bool fixed_rhs = all_fixed && (x.bits == unit || g.max_height == 1);
        t.add("fixed_point_characterization", fixed_lhs == fixed_rhs);

        t.add("profile_matches_diagram",
              p.height == diag.height[r] &&
                  p.cycle_len == diag.cycles[diag.attractor[r]].length);

        t.add("eventual_periodicity",
              baker_iter(x.bits, iv + cn) == baker_iter(x.bits, iv));

        const IdempotentBounds b = eventually_idempotent_consequences(x);
        bool ib = g.max_height <= b.h_bound;
        for (auto [len, cnt] : spectrum)
            ib = ib && divides(len, b.cycle_bound);
        t.add("idempotent_bounds", ib);
        if (b.q == 2 && b.r == 1)
            t.add("idempotent_special_case", g.max_height == 2 || spectrum.count(2) > 0);

        t.add("conservation_det2", dg == det2(circulant(baker(x.bits))));

        if (n % 2 == 1) {
            t.add("odd_height_formula", g.max_height == static_cast<std::uint32_t>(1 - dg));
            if (parity(x.bits) == 0)
                t.add("even_parity_height_one", g.max_height == 1);
        }

        if (rule_in_zero_baker_basin(x))
            t.add("zero_rule_basin_collapse", all_fixed && spectrum.begin()->second == 1);

        if (deep) {
            const BitVec window =
                shift_right(reverse(baker_iter(x.bits, iv)));
            bool eq = true;
            for (std::uint64_t s = 0; s < count; ++s) {
                const bool member = !boxtimes(BitVec::from_number(n, s), window).any();
                const bool reached = g.attractor[s] == g.attractor[0];
                if (member != reached) {
                    eq = false;
                    break;
                }
            }
            t.add("zero_basin_equation", eq);

            std::vector<std::size_t> ranks;
            BitVec it = x.bits;
            for (std::uint64_t i = 0; i <= iv + cn; ++i) {
                ranks.push_back(rank2(circulant(it)));
                it = baker(it);
            }
            bool mono = true;
            for (std::size_t i = 1; i < ranks.size(); ++i)
                mono = mono && ranks[i] <= ranks[i - 1];
            const std::size_t rmin = *std::min_element(ranks.begin(), ranks.end());
            t.add("rank_series", mono && ranks[iv] == rmin);

            std::uint64_t cyclic = 0;
            for (auto [len, cnt] : spectrum)
                cyclic += len * cnt;
            const std::size_t rk = rank2(mat_pow(circulant(x.bits), g.max_height));
            t.add("cyclic_count_rank", cyclic == (std::uint64_t{1} << rk));

            bool power_law = true;
            std::vector<std::uint32_t> base = g.next;
            for (unsigned i = 0; i <= 3 && power_law; ++i) {
                const FunGraphReport gi =
                    std_diagram(Rule(baker_iter(x.bits, i)), 28);
                const std::uint64_t steps = std::uint64_t{1} << i;
                for (std::uint64_t s = 0; s < count; ++s) {
                    std::uint64_t v = s;
                    for (std::uint64_t k = 0; k < steps; ++k)
                        v = base[v];
                    if (v != gi.next[s]) {
                        power_law = false;
                        break;
                    }
                }
            }
            t.add("operator_power_law", power_law);
        }
    }

    if (n <= 10) {
        bool mh = true, mc = true;
        for (std::uint64_t r = 0; r < count; ++r) {
            const std::uint32_t img = diag.next[r];
            mh = mh && hstar[img] <= hstar[r];
            mc = mc && maxlen[img] <= maxlen[r];
        }
        t.add("monotonicity_height", mh);
        t.add("monotonicity_max_cycle", mc);
    }

    if (n <= 8) {
        for (std::uint64_t r = 0; r < count; ++r) {
            const Rule x = Rule::from_number(n, r);
            const FunGraphReport g = std_diagram(x, 28);
            bool same = true;
            for (std::uint64_t s = 0; s < count && same; ++s)
                same = g.next[s] == apply(x, BitVec::from_number(n, s)).to_number();
            t.add("state_table_matches_apply", same);
        }
    }
}

void index_sweep(Tally& t, std::size_t n) {
    const FunGraphReport g = index_diagram(n);
    bool hom = true;
    for (std::size_t i = 0; i < n && hom; ++i)
        for (std::size_t j = 0; j < n && hom; ++j)
            hom = index_baker((i + j) % n, n) ==
                  (index_baker(i, n) + index_baker(j, n)) % n;
    t.add("index_homomorphism", hom);

    if (n % 2 == 1) {
        std::vector<std::uint32_t> indeg(n, 0);
        for (auto v : g.next)
            indeg[v]++;
        t.add("index_odd_bijective",
              std::all_of(indeg.begin(), indeg.end(), [](std::uint32_t d) { return d == 1; }));
    } else {
        std::map<std::uint32_t, std::uint64_t> level;
        for (std::uint64_t v = 0; v < g.node_count; ++v)
            level[g.height[v]]++;
        bool shrink = true;
        for (std::uint32_t h = 1; h + 1 <= g.max_height; ++h)
            shrink = shrink && level[h + 1] == 2 * level[h];
        t.add("index_even_level_shrink", shrink && g.max_height == two_adic_val(n));
    }
}

void random_suites(Tally& t) {
    std::mt19937_64 rng(0x715c3a1fULL);
    std::uniform_int_distribution<std::size_t> pick_n(1, 16);

    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = pick_n(rng);
        const BitVec a = random_vec(n, rng), b = random_vec(n, rng), c = random_vec(n, rng);
        t.add("boxtimes_associativity",
              boxtimes(boxtimes(a, b), c) == boxtimes(a, boxtimes(b, c)));
        t.add("convolution_matches_circulant_product",
              mat_mul(circulant(a), circulant(b)) == circulant(boxtimes(a, b)));
        t.add("baker_linearity", baker(a ^ b) == (baker(a) ^ baker(b)));
        t.add("conservation_det2_random",
              det2(circulant(a)) == det2(circulant(baker(a))));
    }

    const std::size_t sparse_n[] = {8, 12, 16};
    const std::size_t sparse_q[] = {2, 4};
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = sparse_n[rng() % 3];
        const std::size_t q = sparse_q[rng() % 2];
        BitVec a(n), b(n);
        for (std::size_t i = 0; i < n; i += q) {
            if (rng() & 1)
                a.set(i, true);
            if (rng() & 1)
                b.set(i, true);
        }
        const BitVec p = boxtimes(a, b);
        bool sparse = true;
        for (std::size_t i = 0; i < n; ++i)
            if (i % q != 0 && p.get(i))
                sparse = false;
        t.add("sparsity_preservation", sparse);
    }

    const std::size_t red_n[] = {6, 12, 20, 24};
    for (int k = 0; k < 1000; ++k) {
        const Rule x(random_vec(red_n[rng() % 4], rng));
        t.add("det_reduction_random", det_reduction(x) == det2(circulant(x.bits)));
    }
}

} // namespace

VerifyReport run_verification(std::size_t n_max) {
    if (n_max == 0 || n_max > 12)
        throw std::invalid_argument("run_verification: n_max must be in 1..12");
    Tally t;
    t.rep.n_max = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        rule_sweep(t, n);
        index_sweep(t, n);
    }
    random_suites(t);
    if (n_max >= 12) {
        const CounterexampleReport c = falsify_inequality_5();
        t.add("counterexample_chain", c.chain_ok && c.kernels_equal && c.violated);
    }
    return t.rep;
}

} // namespace dbt
