#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "plumb/checks.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline plumb::PlumbingGraph load(const std::string& name) {
    return plumb::load_graph_file(fixture(name));
}

inline plumb::LatticeContext ctx_of(const std::string& name) {
    return plumb::build_context(load(name));
}

// Parse "(a, b/c, ...)" back into a cycle, the inverse of vec_str.
inline plumb::Vec vec_of(const std::string& s) {
    plumb::Vec v;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty() && tok.front() == ' ') tok.erase(0, 1);
        v.emplace_back(tok);
        v.back().canonicalize();
    }
    return v;
}

inline std::string failures(const std::vector<plumb::CheckResult>& rs) {
    std::string s;
    for (auto& r : rs)
        if (r.status == plumb::CheckResult::Fail) s += r.name + "; ";
    return s;
}

}  // namespace testutil
