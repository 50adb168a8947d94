#pragma once

#include <json.hpp>

#include "plumb/checks.hpp"

namespace plumb {

using nlohmann::json;

inline json cycle_json(const Vec& v) {
    json a = json::array();
    for (const Q& q : v) a.push_back(q.get_str());
    return a;
}

inline json poly_json(const LaurentPoly& p) {
    json a = json::array();
    for (auto& [e, c] : p.terms) a.push_back({{"exponent", cycle_json(e)}, {"coeff", c}});
    return a;
}

inline json compseq_json(const ComputationSequence& s) {
    json a = json::array();
    for (auto& st : s.steps) a.push_back({{"cycle", cycle_json(st.cycle)}, {"vertex", st.vertex}});
    return a;
}

inline json sequence_json(const EllipticSequence& seq) {
    json levels = json::array();
    for (auto& lev : seq.levels)
        levels.push_back({{"j", lev.j},
                          {"vertices", lev.B},
                          {"Z_B", cycle_json(lev.ZB)},
                          {"C", cycle_json(lev.C)},
                          {"C_prime", cycle_json(lev.Cprime)}});
    return {{"m", seq.m},
            {"numerically_gorenstein", seq.numerically_gorenstein},
            {"levels", levels}};
}

inline json checks_json(const std::vector<CheckResult>& rs) {
    json a = json::array();
    for (auto& r : rs) {
        const char* st = r.status == CheckResult::Pass
                             ? "pass"
                             : (r.status == CheckResult::Fail ? "fail" : "skipped");
        a.push_back({{"name", r.name}, {"status", st}, {"detail", r.detail}});
    }
    return a;
}

inline json extension_report_json(const ExtensionReport& rep) {
    json pe = json::array();
    for (auto& p : rep.per_exponent) {
        json exts = json::array();
        for (auto& [d, z] : p.extensions)
            exts.push_back({{"dual", cycle_json(d)}, {"coeff", z}});
        pe.push_back({{"dual", cycle_json(p.dual)},
                      {"level", p.level},
                      {"status", p.status == ExtStatus::Extendable ? "Extendable" : "NonExtendable"},
                      {"extensions", exts}});
    }
    return {{"index", rep.index},
            {"good", rep.good},
            {"identity_holds", rep.identity_holds},
            {"algorithm_agrees", rep.algorithm_agrees},
            {"per_exponent", pe}};
}

}  // namespace plumb
