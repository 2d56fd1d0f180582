#pragma once

#include "dbt/baker.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dbt::cli {

// Bad command-line input; maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request larger than the configured budget; maps to exit code 2.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rule given either as a bitstring (component 0 first, right-padded with
// zeros) or as a number whose bit i is component i.
struct RuleSpec {
    std::size_t n = 0;
    Rule rule;
    std::string bitstring;
    std::optional<std::uint64_t> number;
};

RuleSpec parse_rule_spec(std::size_t n, const std::optional<std::string>& bits,
                         const std::optional<std::uint64_t>& number);

std::string analyze_json(const RuleSpec& spec, bool exact, std::size_t cap);
std::string sweep_csv(std::size_t n, std::size_t cap);
std::string critical_csv(std::uint64_t max_n);

enum class DiagramKind { baker, index };
enum class DiagramFormat { dot, json };
std::string diagram_text(DiagramKind kind, std::uint64_t n, DiagramFormat format,
                         std::size_t cap);

struct VerifyOutcome {
    std::string text;
    bool ok = false;
};
VerifyOutcome verify_text(std::size_t n_max);

} // namespace dbt::cli
