#include "dbt/fungraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace dbt {

FunGraphReport analyze(std::vector<std::uint32_t> next) {
    const std::uint64_t count = next.size();
    if (count == 0)
        throw std::invalid_argument("analyze: map must have at least one node");
    for (std::uint32_t t : next)
        if (t >= count)
            throw std::invalid_argument("analyze: target outside node range");

    FunGraphReport rep;
    rep.node_count = count;
    rep.n = count;
    rep.next = std::move(next);
    rep.height.assign(count, 0);
    rep.attractor.assign(count, 0);

    // 0 unvisited, 1 on the current path, 2 resolved.
    std::vector<std::uint8_t> state(count, 0);
    std::vector<std::uint64_t> path;
    std::vector<FunGraphCycle> raw;

    for (std::uint64_t v0 = 0; v0 < count; ++v0) {
        if (state[v0] == 2)
            continue;
        path.clear();
        std::uint64_t u = v0;
        while (state[u] == 0) {
            state[u] = 1;
            path.push_back(u);
            u = rep.next[u];
        }
        if (state[u] == 1) {
            // Closed a new cycle; it is the path suffix starting at u.
            std::size_t idx = path.size() - 1;
            while (path[idx] != u)
                --idx;
            FunGraphCycle c;
            c.id = static_cast<std::uint32_t>(raw.size());
            for (std::size_t i = idx; i < path.size(); ++i) {
                const std::uint64_t m = path[i];
                state[m] = 2;
                rep.height[m] = 0;
                rep.attractor[m] = c.id;
                c.members.push_back(m);
            }
            c.length = c.members.size();
            raw.push_back(std::move(c));
            path.resize(idx);
        }
        for (std::size_t i = path.size(); i-- > 0;) {
            const std::uint64_t m = path[i];
            const std::uint64_t t = rep.next[m];
            rep.height[m] = rep.height[t] + 1;
            rep.attractor[m] = rep.attractor[t];
            state[m] = 2;
        }
    }

    // Canonical form: each cycle starts at its smallest member, cycle ids
    // ascend with that member.
    for (auto& c : raw) {
        const auto it = std::min_element(c.members.begin(), c.members.end());
        std::rotate(c.members.begin(), it, c.members.end());
    }
    std::sort(raw.begin(), raw.end(), [](const FunGraphCycle& a, const FunGraphCycle& b) {
        return a.members[0] < b.members[0];
    });
    std::vector<std::uint32_t> remap(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        remap[raw[i].id] = static_cast<std::uint32_t>(i);
        raw[i].id = static_cast<std::uint32_t>(i);
    }
    for (auto& a : rep.attractor)
        a = remap[a];
    rep.cycles = std::move(raw);

    rep.basin_sizes.assign(rep.cycles.size(), 0);
    for (std::uint64_t v = 0; v < count; ++v) {
        rep.basin_sizes[rep.attractor[v]]++;
        rep.max_height = std::max(rep.max_height, rep.height[v]);
    }
    for (const auto& c : rep.cycles)
        rep.cycle_length_multiset[c.length]++;
    return rep;
}

FunGraphReport analyze(std::uint64_t node_count,
                       const std::function<std::uint64_t(std::uint64_t)>& f) {
    if (node_count >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("analyze: node count above 2^32 unsupported");
    std::vector<std::uint32_t> next(node_count);
    for (std::uint64_t v = 0; v < node_count; ++v)
        next[v] = static_cast<std::uint32_t>(f(v));
    return analyze(std::move(next));
}

FunGraphReport index_diagram(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("index_diagram: n must be positive");
    FunGraphReport rep = analyze(n, [n](std::uint64_t i) { return (2 * i) % n; });
    rep.map_name = "index";
    rep.n = n;
    return rep;
}

std::size_t default_state_cap() {
    const char* env = std::getenv("BAKER_ACA_CAP");
    if (!env || !*env)
        return 22;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        return 22;
    return std::min<long>(v, 28);
}

FunGraphReport baker_diagram(std::size_t n, std::size_t cap) {
    if (n == 0)
        throw std::invalid_argument("baker_diagram: n must be positive");
    if (n > cap || n > 28)
        throw CapExceededError("baker_diagram: n=" + std::to_string(n) + " needs 2^" +
                               std::to_string(n) + " nodes, cap is 2^" + std::to_string(cap) +
                               " (raise BAKER_ACA_CAP to override)");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> img(n);
    for (std::size_t j = 0; j < n; ++j)
        img[j] = std::uint64_t{1} << ((2 * j) % n);
    std::vector<std::uint32_t> next(count);
    for (std::uint64_t r = 0; r < count; ++r) {
        std::uint64_t y = 0, bits = r;
        while (bits) {
            y ^= img[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        next[r] = static_cast<std::uint32_t>(y);
    }
    FunGraphReport rep = analyze(std::move(next));
    rep.map_name = "baker";
    rep.n = n;
    return rep;
}

std::string export_dot(const FunGraphReport& report,
                       const std::function<std::string(std::uint64_t)>& labeler) {
    std::string out = "digraph {\n";
    if (labeler) {
        for (std::uint64_t v = 0; v < report.node_count; ++v) {
            out += "  ";
            out += std::to_string(v);
            out += " [label=\"";
            out += labeler(v);
            out += "\"];\n";
        }
    }
    for (std::uint64_t v = 0; v < report.node_count; ++v) {
        out += "  ";
        out += std::to_string(v);
        out += " -> ";
        out += std::to_string(report.next[v]);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string export_json(const FunGraphReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["map"] = report.map_name;
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : report.cycles) {
        nlohmann::json e;
        e["id"] = c.id;
        e["length"] = c.length;
        nlohmann::json sample = nlohmann::json::array();
        for (std::size_t i = 0; i < c.members.size() && i < 8; ++i)
            sample.push_back(c.members[i]);
        e["members_sample"] = sample;
        cycles.push_back(e);
    }
    j["cycles"] = cycles;
    nlohmann::json multiset;
    for (auto [len, cnt] : report.cycle_length_multiset)
        multiset[std::to_string(len)] = cnt;
    j["cycle_length_multiset"] = multiset;
    nlohmann::json basins;
    for (std::size_t id = 0; id < report.basin_sizes.size(); ++id)
        basins[std::to_string(id)] = report.basin_sizes[id];
    j["basin_sizes"] = basins;
    j["max_height"] = report.max_height;
    return j.dump(2) + "\n";
}

} // namespace dbt
