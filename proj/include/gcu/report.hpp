#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "decide.hpp"

namespace gcu {

struct OracleReport {
    std::size_t max_height = 0;
    std::size_t found_at = 0;  // smallest height bound with a counterexample
    std::optional<std::pair<std::string, std::string>> counterexample;
    bool agrees = true;
    bool operator==(const OracleReport&) const = default;
};

struct Report {
    bool verdict = false;
    std::string main_case;
    std::string which_total;  // E, F, both or neither
    std::size_t n = 0;
    std::size_t w = 0;  // distinct subterms of E and F
    std::size_t classes_e = 0, classes_f = 0, classes_u = 0;
    bool total_e = false, total_f = false, total_u = false;
    std::string diagnostics;
    std::optional<OracleReport> oracle;
    double millis = 0;
    bool operator==(const Report&) const = default;
};

inline Report make_report(const Verdict& v, double millis) {
    Report r;
    r.verdict = v.union_is_congruence;
    r.main_case = to_string(v.main_case.kind);
    r.which_total = to_string(v.main_case.which_total);
    r.n = v.stats.n;
    r.w = v.stats.vertices;
    r.classes_e = v.stats.classes_e;
    r.classes_f = v.stats.classes_f;
    r.classes_u = v.stats.classes_u;
    r.total_e = v.stats.total_e;
    r.total_f = v.stats.total_f;
    r.total_u = v.stats.total_u;
    r.diagnostics = v.diagnostic;
    r.millis = millis;
    return r;
}

inline void to_json(nlohmann::json& j, const OracleReport& o) {
    j = {{"max_height", o.max_height}, {"agrees", o.agrees}, {"counterexample", nullptr}};
    if (o.counterexample) {
        j["counterexample"] = {o.counterexample->first, o.counterexample->second};
        j["found_at"] = o.found_at;
    }
}

inline void from_json(const nlohmann::json& j, OracleReport& o) {
    o.max_height = j.at("max_height").get<std::size_t>();
    o.agrees = j.at("agrees").get<bool>();
    const auto& c = j.at("counterexample");
    if (c.is_null()) {
        o.counterexample.reset();
        o.found_at = 0;
    } else {
        o.counterexample = std::make_pair(c.at(0).get<std::string>(), c.at(1).get<std::string>());
        o.found_at = j.at("found_at").get<std::size_t>();
    }
}

inline void to_json(nlohmann::json& j, const Report& r) {
    j = {{"verdict", r.verdict ? "yes" : "no"},
         {"main_case", r.main_case},
         {"which_total", r.which_total},
         {"n", r.n},
         {"w", r.w},
         {"classes", {{"E", r.classes_e}, {"F", r.classes_f}, {"union", r.classes_u}}},
         {"total", {{"E", r.total_e}, {"F", r.total_f}, {"union", r.total_u}}},
         {"diagnostics", r.diagnostics},
         {"oracle", nullptr},
         {"millis", r.millis}};
    if (r.verdict) j["witness"] = "H = E ∪ F";
    if (r.oracle) j["oracle"] = *r.oracle;
}

inline void from_json(const nlohmann::json& j, Report& r) {
    auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "yes" && verdict != "no") throw nlohmann::json::other_error::create(501, "bad verdict", &j);
    r.verdict = verdict == "yes";
    r.main_case = j.at("main_case").get<std::string>();
    r.which_total = j.at("which_total").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.w = j.at("w").get<std::size_t>();
    const auto& c = j.at("classes");
    r.classes_e = c.at("E").get<std::size_t>();
    r.classes_f = c.at("F").get<std::size_t>();
    r.classes_u = c.at("union").get<std::size_t>();
    const auto& t = j.at("total");
    r.total_e = t.at("E").get<bool>();
    r.total_f = t.at("F").get<bool>();
    r.total_u = t.at("union").get<bool>();
    r.diagnostics = j.at("diagnostics").get<std::string>();
    if (j.at("oracle").is_null())
        r.oracle.reset();
    else
        r.oracle = j.at("oracle").get<OracleReport>();
    r.millis = j.at("millis").get<double>();
}

}  // namespace gcu
