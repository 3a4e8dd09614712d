#pragma once

#include <string>
#include <vector>

namespace ql {

// One reproducible acceptance criterion; run_criterion replays it from
// scratch. The fixtures directory must contain the committed structure and
// derivation files.
struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;
};

std::vector<std::string> criterion_ids();
CriterionResult run_criterion(const std::string& id,
                              const std::string& fixtures_dir);
std::vector<CriterionResult> run_all_criteria(const std::string& fixtures_dir);

}  // namespace ql
