#pragma once

#include <string>
#include <vector>

#include "osp/numeric.hpp"

namespace osp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing, diagnostic otherwise
};

struct VerifyOptions {
    int max_n = 7;  // exhaustive enumeration depth
    int order = 7;  // series truncation order
};

// Criteria are numbered 1..10; each returns one result per sub-check.
std::vector<CheckResult> run_criterion(int number, const VerifyOptions& opt);

// Suites: "formulas" (1,2,7), "series" (3,4,5,6,10), "bijections" (8),
// "symmetries" (9), "all".
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);
std::vector<std::string> suite_names();

std::string results_json(const std::vector<CheckResult>& results);
int count_failures(const std::vector<CheckResult>& results);

}  // namespace osp
