#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersym/lefschetz.hpp"
#include "hypersym/oracles.hpp"
#include "hypersym/symgroup.hpp"

namespace hypersym {

enum class OutputFormat { Text, Json };

struct RunConfig {
    std::size_t window_slack = kDefaultWindowSlack;
    std::int64_t enumeration_cap = kDefaultEnumerationCap;
    std::int64_t alpha_search_cap = kDefaultAlphaCap;
    OutputFormat output = OutputFormat::Text;
    std::uint64_t seed = 20240611;

    /// Throws InvalidArgument if a cap is not positive.
    void validate() const;
};

enum class CriterionStatus { Pass, Fail, NotApplicable };

struct CriterionResult {
    int id;
    std::string name;
    std::string tolerance;
    CriterionStatus status;
    std::size_t checks = 0;
    std::string detail;               // first failure, or a summary
    std::vector<std::string> notes;   // recorded observations that do not fail
};

inline constexpr int kCriterionCount = 10;

/// Runs every criterion, or only `only` when given.
std::vector<CriterionResult> run_acceptance(const RunConfig& config, std::optional<int> only = std::nullopt);

std::string status_label(CriterionStatus s);

}  // namespace hypersym
