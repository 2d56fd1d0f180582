#include "cli_commands.hpp"

#include "dbt/fungraph.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw dbt::cli::UsageError("cannot open output file: " + out_path);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"baker-orbit analysis of additive cellular automata on cylinders"};
    app.require_subcommand(1);

    std::size_t n = 0;
    std::optional<std::string> rule_bits;
    std::optional<std::uint64_t> rule_num;
    bool exact = false;
    std::string out_path;
    std::string format = "dot";
    std::uint64_t max_n = 0;
    std::size_t n_max = 0;

    auto* analyze = app.add_subcommand(
        "analyze", "closed-form predictions for one rule, optionally exact diagram data");
    analyze->add_option("--n", n, "cylinder size")->required();
    auto* opt_rule =
        analyze->add_option("--rule", rule_bits, "rule bits, component 0 first, right-padded");
    auto* opt_num = analyze->add_option("--num", rule_num, "rule number, bit i = component i");
    opt_rule->excludes(opt_num);
    opt_num->excludes(opt_rule);
    analyze->add_flag("--exact", exact, "also build the full state diagram");
    analyze->add_option("--out", out_path, "write to file instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "CSV over all rules of one cylinder");
    sweep->add_option("--n", n, "cylinder size")->required();
    sweep->add_option("--out", out_path, "write to file instead of stdout");

    auto* bdiag = app.add_subcommand("baker-diagram", "baker-step diagram over all rules");
    bdiag->add_option("--n", n, "cylinder size")->required();
    bdiag->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    bdiag->add_option("--out", out_path, "write to file instead of stdout");

    auto* idiag = app.add_subcommand("index-diagram", "index-doubling diagram on {0..n-1}");
    idiag->add_option("--n", max_n, "segment size")->required();
    idiag->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    idiag->add_option("--out", out_path, "write to file instead of stdout");

    auto* critical = app.add_subcommand("critical", "CSV of the critical exponents for 1..N");
    critical->add_option("--max", max_n, "largest cylinder size")->required();
    critical->add_option("--out", out_path, "write to file instead of stdout");

    auto* verify = app.add_subcommand(
        "verify", "compare every closed-form criterion against brute force");
    verify->add_option("--n-max", n_max, "largest cylinder size, at most 12")->required();
    verify->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::size_t cap = dbt::default_state_cap();
    try {
        const auto fmt = format == "json" ? dbt::cli::DiagramFormat::json
                                          : dbt::cli::DiagramFormat::dot;
        if (analyze->parsed()) {
            emit(dbt::cli::analyze_json(dbt::cli::parse_rule_spec(n, rule_bits, rule_num),
                                        exact, cap),
                 out_path);
        } else if (sweep->parsed()) {
            emit(dbt::cli::sweep_csv(n, cap), out_path);
        } else if (bdiag->parsed()) {
            emit(dbt::cli::diagram_text(dbt::cli::DiagramKind::baker, n, fmt, cap), out_path);
        } else if (idiag->parsed()) {
            emit(dbt::cli::diagram_text(dbt::cli::DiagramKind::index, max_n, fmt, cap),
                 out_path);
        } else if (critical->parsed()) {
            emit(dbt::cli::critical_csv(max_n), out_path);
        } else if (verify->parsed()) {
            const auto outcome = dbt::cli::verify_text(n_max);
            emit(outcome.text, out_path);
            if (!outcome.ok)
                return 3;
        }
    } catch (const dbt::cli::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dbt::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
