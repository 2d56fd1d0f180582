#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dbt {

struct VerifyCheck {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
};

struct VerifyReport {
    std::size_t n_max = 0;
    std::vector<VerifyCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (c.failed)
                return false;
        return true;
    }
};

// Exhaustive comparison of every closed-form prediction against the
// brute-force diagrams for all rules on cylinders 1..n_max, plus seeded
// randomized algebra suites. State-space layers above n=10 compare only
// what stays affordable; n_max is capped at 12.
VerifyReport run_verification(std::size_t n_max);

} // namespace dbt
