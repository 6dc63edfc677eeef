#include "records.hpp"

#include <charconv>

namespace twistlab::cli {

namespace {

char family_of(const json& j) {
    std::string f = j.at("family").get<std::string>();
    if (f.size() != 1) throw Error("family must be a single letter");
    return f[0];
}

std::optional<long> period_value(const json& v, long cap) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string() && v.get<std::string>() == inf_token(cap)) return std::nullopt;
    throw Error("bad period value " + v.dump());
}

json period_json(const std::optional<long>& v, long cap) {
    if (v) return *v;
    return inf_token(cap);
}

}  // namespace

std::string inf_token(long cap) { return "INF(" + std::to_string(cap) + ")"; }

std::string period_token(const std::optional<long>& v, long cap) { return v ? std::to_string(*v) : inf_token(cap); }

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = s.find(',', pos);
        std::string item = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        long v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || p != item.data() + item.size()) throw Error("bad integer list '" + s + "'");
        out.push_back(v);
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return out;
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

json to_json(const ElementRecord& r) {
    return json{{"cartan", {{"family", std::string(1, r.family)}, {"rank", r.rank}}},
                {"word", r.word},
                {"pbw", r.pbw},
                {"str", r.str},
                {"canonical", r.canonical},
                {"frozen_shift", r.frozen_shift}};
}

ElementRecord element_from_json(const json& j) {
    ElementRecord r;
    try {
        r.family = family_of(j.at("cartan"));
        r.rank = j.at("cartan").at("rank").get<int>();
        r.word = j.at("word").get<Word>();
        r.pbw = j.at("pbw").get<Vec>();
        r.str = j.at("str").get<Vec>();
        r.canonical = j.at("canonical").get<bool>();
        r.frozen_shift = j.at("frozen_shift").get<Vec>();
    } catch (const json::exception& e) {
        throw Error(std::string("malformed element record: ") + e.what());
    }
    if (!valid_type(r.family, r.rank)) throw Error("invalid Cartan type in record");
    auto c = build_cartan(r.family, r.rank);
    if (r.pbw.size() != r.word.size() || r.str.size() != r.word.size()) throw Error("record vectors do not match the word length");
    if (r.frozen_shift.size() != static_cast<std::size_t>(r.rank)) throw Error("frozen_shift must have one entry per node");
    TwistContext ctx(c, r.word);
    if (ctx.psi(r.pbw) != r.str) throw Error("record str is not the string image of pbw");
    if (r.canonical && ctx.canonical(r.pbw) != r.pbw) throw Error("record marked canonical is not");
    return r;
}

json to_json(const PeriodRecord& r) {
    json xi = json::array();
    for (const auto& x : r.xi) xi.push_back(period_json(x, r.cap));
    json j{{"family", std::string(1, r.family)}, {"rank", r.rank}, {"word", r.word}, {"value", period_json(r.value, r.cap)}, {"cap", r.cap}, {"xi", xi}};
    if (r.J) j["J"] = *r.J;
    return j;
}

PeriodRecord period_from_json(const json& j) {
    PeriodRecord r;
    try {
        r.family = family_of(j);
        r.rank = j.at("rank").get<int>();
        r.word = j.at("word").get<Word>();
        r.cap = j.at("cap").get<long>();
        r.value = period_value(j.at("value"), r.cap);
        for (const auto& x : j.at("xi")) r.xi.push_back(period_value(x, r.cap));
        if (j.contains("J")) r.J = j.at("J").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw Error(std::string("malformed period record: ") + e.what());
    }
    return r;
}

}  // namespace twistlab::cli
