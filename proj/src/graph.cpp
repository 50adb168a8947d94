#include "plumb/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace plumb {

std::vector<int> PlumbingGraph::nodes() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (adj[i].size() >= 3) out.push_back(ids[i]);
    return out;
}

std::vector<int> PlumbingGraph::ends() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (adj[i].size() == 1) out.push_back(ids[i]);
    return out;
}

PlumbingGraph make_graph(std::vector<std::pair<int, long>> vertices,
                         std::vector<std::pair<int, int>> edges) {
    PlumbingGraph g;
    if (vertices.empty()) throw GraphError("empty graph");
    for (auto& [id, e] : vertices) {
        if (g.index_of.count(id))
            throw GraphError("duplicate vertex id " + std::to_string(id));
        g.index_of[id] = g.n();
        g.ids.push_back(id);
        g.euler.push_back(e);
    }
    g.adj.assign(g.n(), {});
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
        if (!g.has_vertex(a) || !g.has_vertex(b))
            throw GraphError("edge endpoint not a declared vertex: " +
                             std::to_string(a) + "-" + std::to_string(b));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw GraphError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
        g.edges.emplace_back(a, b);
        g.adj[g.pos(a)].push_back(g.pos(b));
        g.adj[g.pos(b)].push_back(g.pos(a));
    }
    if (static_cast<int>(g.edges.size()) != g.n() - 1)
        throw GraphError("not a tree: " + std::to_string(g.edges.size()) + " edges for " +
                         std::to_string(g.n()) + " vertices");
    // connectivity (with n-1 simple edges this also rules out cycles)
    std::vector<char> vis(g.n(), 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != g.n()) throw GraphError("not a tree: graph is disconnected");
    return g;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

}  // namespace

PlumbingGraph parse_graph_text(const std::string& text) {
    std::vector<std::pair<int, long>> vertices;
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    enum { NONE, VERTS, EDGES } section = NONE;
    bool saw_verts = false, saw_edges = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::string tok;
        while (ls >> tok) {
            if (tok == "vertices:") {
                section = VERTS;
                saw_verts = true;
                continue;
            }
            if (tok == "edges:") {
                section = EDGES;
                saw_edges = true;
                continue;
            }
            if (section == VERTS) {
                auto c = tok.find(':');
                if (c == std::string::npos)
                    throw ParseError("expected id:euler token, got '" + tok + "' on line " +
                                         std::to_string(lineno),
                                     lineno);
                try {
                    size_t used;
                    int id = std::stoi(tok.substr(0, c), &used);
                    if (used != c) throw std::invalid_argument(tok);
                    std::string es = tok.substr(c + 1);
                    long e = std::stol(es, &used);
                    if (used != es.size()) throw std::invalid_argument(tok);
                    vertices.emplace_back(id, e);
                } catch (const std::logic_error&) {
                    throw ParseError("malformed vertex token '" + tok + "' on line " +
                                         std::to_string(lineno),
                                     lineno);
                }
            } else if (section == EDGES) {
                auto d = tok.find('-', 1);  // allow negative? ids are positive; '-' at 0 invalid
                if (d == std::string::npos)
                    throw ParseError("expected idA-idB token, got '" + tok + "' on line " +
                                         std::to_string(lineno),
                                     lineno);
                try {
                    size_t used;
                    int a = std::stoi(tok.substr(0, d), &used);
                    if (used != d) throw std::invalid_argument(tok);
                    std::string bs = tok.substr(d + 1);
                    int b = std::stoi(bs, &used);
                    if (used != bs.size()) throw std::invalid_argument(tok);
                    edges.emplace_back(a, b);
                } catch (const std::logic_error&) {
                    throw ParseError("malformed edge token '" + tok + "' on line " +
                                         std::to_string(lineno),
                                     lineno);
                }
            } else {
                throw ParseError("unexpected token '" + tok + "' before any section on line " +
                                     std::to_string(lineno),
                                 lineno);
            }
        }
    }
    if (!saw_verts || !saw_edges) throw ParseError("missing vertices:/edges: section");
    return make_graph(std::move(vertices), std::move(edges));
}

PlumbingGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<std::pair<int, long>> vertices;
    std::vector<std::pair<int, int>> edges;
    try {
        for (auto& v : j.at("vertices"))
            vertices.emplace_back(v.at("id").get<int>(), v.at("euler").get<long>());
        for (auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    return make_graph(std::move(vertices), std::move(edges));
}

PlumbingGraph parse_graph(const std::string& text) {
    for (char c : text) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
    }
    throw ParseError("empty input");
}

PlumbingGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_text(const PlumbingGraph& g) {
    std::string s = "vertices:";
    for (int i = 0; i < g.n(); ++i)
        s += " " + std::to_string(g.ids[i]) + ":" + std::to_string(g.euler[i]);
    s += "\nedges:";
    for (auto& [a, b] : g.edges) s += " " + std::to_string(a) + "-" + std::to_string(b);
    s += "\n";
    return s;
}

PlumbingGraph induced_subgraph(const PlumbingGraph& g, const std::vector<int>& keep_ids) {
    if (keep_ids.empty()) throw GraphError("empty vertex selection");
    std::set<int> keep(keep_ids.begin(), keep_ids.end());
    std::vector<std::pair<int, long>> vertices;
    for (int i = 0; i < g.n(); ++i)
        if (keep.count(g.ids[i])) vertices.emplace_back(g.ids[i], g.euler[i]);
    for (int id : keep)
        if (!g.has_vertex(id))
            throw GraphError("selection contains unknown vertex " + std::to_string(id));
    std::vector<std::pair<int, int>> edges;
    for (auto& [a, b] : g.edges)
        if (keep.count(a) && keep.count(b)) edges.emplace_back(a, b);
    try {
        return make_graph(std::move(vertices), std::move(edges));
    } catch (const GraphError&) {
        throw GraphError("selected vertex set does not induce a connected subtree");
    }
}

}  // namespace plumb
