#include "cli_commands.hpp"

#include "dbt/aca.hpp"
#include "dbt/criteria.hpp"
#include "dbt/fungraph.hpp"
#include "dbt/gf2.hpp"
#include "dbt/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

namespace dbt::cli {

namespace {

std::string spectrum_rle(const std::map<std::uint64_t, std::uint64_t>& spectrum) {
    std::string out;
    for (auto [len, cnt] : spectrum) {
        if (!out.empty())
            out += ';';
        out += std::to_string(len);
        out += ':';
        out += std::to_string(cnt);
    }
    return out;
}

nlohmann::json spectrum_json(const std::map<std::uint64_t, std::uint64_t>& spectrum) {
    nlohmann::json j = nlohmann::json::object();
    for (auto [len, cnt] : spectrum)
        j[std::to_string(len)] = cnt;
    return j;
}

} // namespace

RuleSpec parse_rule_spec(std::size_t n, const std::optional<std::string>& bits,
                         const std::optional<std::uint64_t>& number) {
    if (n == 0)
        throw UsageError("cylinder size must be positive");
    if (bits.has_value() == number.has_value())
        throw UsageError("give the rule either as --rule or as --num");
    if (bits) {
        if (bits->empty() || bits->size() > n)
            throw UsageError("rule bitstring must have between 1 and n characters");
        if (bits->find_first_not_of("01") != std::string::npos)
            throw UsageError("rule bitstring may contain only 0 and 1");
        RuleSpec spec{n, Rule::padded(n, BitVec::from_string(*bits)), "", std::nullopt};
        spec.bitstring = spec.rule.bits.to_string();
        if (n <= 64)
            spec.number = spec.rule.number();
        return spec;
    }
    if (n > 64)
        throw UsageError("numeric rules need n <= 64");
    if (n < 64 && *number >= (std::uint64_t{1} << n))
        throw UsageError("rule number must be below 2^n");
    RuleSpec spec{n, Rule::from_number(n, *number), "", *number};
    spec.bitstring = spec.rule.bits.to_string();
    return spec;
}

std::string analyze_json(const RuleSpec& spec, bool exact, std::size_t cap) {
    const Rule& x = spec.rule;
    const PredictionReport pred = predict(x);

    nlohmann::json j;
    j["n"] = spec.n;
    j["rule"] = spec.bitstring;
    if (spec.number)
        j["rule_num"] = *spec.number;
    j["det2"] = det2(circulant(x.bits));
    j["baker_height"] = pred.baker_height;
    j["baker_cycle_len"] = pred.baker_cycle_len;
    j["h_star_upper_global"] = pred.h_star_upper_global;
    j["h_star_upper_rule"] = pred.h_star_upper_rule;
    j["cycle_divisor_global"] = pred.cycle_divisor_global;
    j["cycle_divisor_rule"] = pred.cycle_divisor_rule;
    j["det2_via_boxtimes"] = pred.det2_pred;
    j["h_star_is_one"] = pred.h_star_is_one_pred;
    j["is_baker_fixed_point"] = pred.is_baker_fixed_point;
    j["in_zero_baker_basin"] = pred.in_zero_baker_basin;

    if (exact) {
        const StdReport s = std_report(x, cap);
        j["h_star"] = s.h_star;
        j["cycle_spectrum"] = spectrum_json(s.cycle_spectrum);
        j["cyclic_state_count"] = s.cyclic_state_count;
        j["zero_basin_size"] = s.zero_basin_size;
        bool respected = s.h_star <= pred.h_star_upper_rule &&
                         pred.h_star_upper_rule <= pred.h_star_upper_global;
        for (auto [len, cnt] : s.cycle_spectrum)
            respected = respected && pred.cycle_divisor_rule % len == 0;
        respected = respected && pred.cycle_divisor_global % pred.cycle_divisor_rule == 0;
        j["bounds_respected"] = respected;
    }
    return j.dump(2) + "\n";
}

std::string sweep_csv(std::size_t n, std::size_t cap) {
    if (n == 0)
        throw UsageError("cylinder size must be positive");
    if (n > 12)
        throw BudgetError("sweep covers all 2^n rules; n is limited to 12");
    std::string out = "rule_num,rule,det2,baker_height,baker_cycle_len,h_star,spectrum,"
                      "det2_via_boxtimes,h_star_is_one,is_baker_fixed_point\n";
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
        const Rule x = Rule::from_number(n, r);
        const StdReport s = std_report(x, cap);
        const BakerProfile p = profile(x);
        out += std::to_string(r);
        out += ',';
        out += x.bits.to_string();
        out += ',';
        out += std::to_string(s.det2);
        out += ',';
        out += std::to_string(p.height);
        out += ',';
        out += std::to_string(p.cycle_len);
        out += ',';
        out += std::to_string(s.h_star);
        out += ',';
        out += spectrum_rle(s.cycle_spectrum);
        out += ',';
        out += std::to_string(det2_via_boxtimes(x));
        out += ',';
        out += std::to_string(h_star_is_one(x) ? 1 : 0);
        out += ',';
        out += std::to_string(fixed_point_characterization(x) ? 1 : 0);
        out += '\n';
    }
    return out;
}

std::string critical_csv(std::uint64_t max_n) {
    if (max_n == 0)
        throw UsageError("--max must be positive");
    std::string out = "n,iota,c_of_n,c_star\n";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(two_adic_val(n));
        out += ',';
        out += std::to_string(critical(n));
        out += ',';
        out += cycle_divisor_global_str(n);
        out += '\n';
    }
    return out;
}

std::string diagram_text(DiagramKind kind, std::uint64_t n, DiagramFormat format,
                         std::size_t cap) {
    if (n == 0)
        throw UsageError("--n must be positive");
    FunGraphReport rep;
    if (kind == DiagramKind::baker) {
        rep = baker_diagram(static_cast<std::size_t>(n), cap);
    } else {
        if (n > 10'000'000)
            throw BudgetError("index diagrams are limited to n <= 10000000");
        rep = index_diagram(n);
    }
    if (format == DiagramFormat::json)
        return export_json(rep);
    if (kind == DiagramKind::baker) {
        const std::size_t size = rep.n;
        return export_dot(rep, [size](std::uint64_t v) {
            return BitVec::from_number(size, v).to_string();
        });
    }
    return export_dot(rep);
}

VerifyOutcome verify_text(std::size_t n_max) {
    if (n_max == 0)
        throw UsageError("--n-max must be positive");
    if (n_max > 12)
        throw BudgetError("exhaustive verification is limited to n <= 12");
    const VerifyReport rep = run_verification(n_max);
    VerifyOutcome out;
    out.ok = rep.ok();
    char line[128];
    for (const auto& c : rep.checks) {
        std::snprintf(line, sizeof line, "%-40s checked %10llu  failed %6llu\n",
                      c.name.c_str(), static_cast<unsigned long long>(c.checked),
                      static_cast<unsigned long long>(c.failed));
        out.text += line;
    }
    out.text += out.ok ? "VERIFY OK" : "VERIFY FAILED";
    out.text += " (n_max=" + std::to_string(n_max) + ")\n";
    return out;
}

} // namespace dbt::cli
