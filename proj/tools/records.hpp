#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "twistlab/twist.hpp"

namespace twistlab::cli {

using nlohmann::json;

struct ElementRecord {
    char family = 'A';
    int rank = 0;
    Word word;
    Vec pbw;
    Vec str;
    bool canonical = false;
    Vec frozen_shift;  // indexed by node; raw result = pbw + sum_j frozen_shift[j-1] P_j
    bool operator==(const ElementRecord&) const = default;
};

struct PeriodRecord {
    char family = 'A';
    int rank = 0;
    std::optional<std::vector<int>> J;
    Word word;
    std::optional<long> value;
    long cap = 0;
    std::vector<std::optional<long>> xi;
    bool operator==(const PeriodRecord&) const = default;
};

json to_json(const ElementRecord& r);
ElementRecord element_from_json(const json& j);  // checks str against the word

json to_json(const PeriodRecord& r);
PeriodRecord period_from_json(const json& j);

std::string inf_token(long cap);
std::string period_token(const std::optional<long>& v, long cap);

// Comma-separated integers; the empty string is the empty list.
std::vector<long> parse_list(const std::string& s);
std::string join(const std::vector<long>& v);

}  // namespace twistlab::cli
