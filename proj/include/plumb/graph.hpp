#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plumb/types.hpp"

namespace plumb {

// Weighted tree with Euler decorations. Vertex declaration order fixes the
// coordinate order of every cycle vector and of all printed output.
struct PlumbingGraph {
    std::vector<int> ids;                    // declaration order
    std::vector<long> euler;                 // e_v, same order
    std::vector<std::pair<int, int>> edges;  // by vertex id, as declared
    std::map<int, int> index_of;             // id -> position
    std::vector<std::vector<int>> adj;       // positions

    int n() const { return static_cast<int>(ids.size()); }
    int pos(int id) const {
        auto it = index_of.find(id);
        if (it == index_of.end())
            throw GraphError("unknown vertex id " + std::to_string(id));
        return it->second;
    }
    bool has_vertex(int id) const { return index_of.count(id) != 0; }
    int valency(int id) const { return static_cast<int>(adj[pos(id)].size()); }
    std::vector<int> nodes() const;  // delta >= 3
    std::vector<int> ends() const;   // delta == 1
};

// Build + validate (unique ids, simple edges, connected tree).
PlumbingGraph make_graph(std::vector<std::pair<int, long>> vertices,
                         std::vector<std::pair<int, int>> edges);

PlumbingGraph parse_graph_text(const std::string& text);
PlumbingGraph parse_graph_json(const std::string& text);
PlumbingGraph parse_graph(const std::string& text);  // sniffs format
PlumbingGraph load_graph_file(const std::string& path);

std::string serialize_text(const PlumbingGraph& g);

PlumbingGraph induced_subgraph(const PlumbingGraph& g, const std::vector<int>& keep_ids);

}  // namespace plumb
