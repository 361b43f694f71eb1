#pragma once

#include <functional>
#include <string>
#include <vector>

namespace invnum {

/// `paper` runs every check at full size; `quick` shrinks the sweeps and
/// random samples for a fast smoke run.
enum class Suite { paper, quick };

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// First failure, or a short summary when everything passed.
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

std::string criterion_title(int id);

/// Throws InputError for an id outside 1..kCriterionCount.
CriterionResult run_criterion(int id, Suite suite);

std::vector<CriterionResult> run_acceptance(
    Suite suite, const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace invnum
