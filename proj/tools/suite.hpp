#pragma once

#include <string>
#include <vector>

namespace twistlab::suite {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    bool pass() const;
};

constexpr int kCriteria = 10;

Criterion run_criterion(int id, unsigned seed);

// paper: worked examples and the closed period formula; props: property suites;
// all: every criterion including tables and conjecture checks.
std::vector<int> suite_ids(const std::string& suite);

}  // namespace twistlab::suite
