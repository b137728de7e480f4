// Hypergraphs: parsing, validation, classification, family generators.
//
// Vertices are labeled 1..k. Hyperedges are kept in input order; within an
// edge, vertex ids are kept sorted and duplicate-free.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehrgraph {

struct Hypergraph {
    int k = 0;                            // number of vertices
    std::vector<std::vector<int>> edges;  // each edge sorted ascending
};

struct HypergraphProperties {
    bool is_simple = false;       // e_i ⊆ e_j implies i = j
    bool is_connected = false;
    bool is_covering = false;     // union of edges = {1..k}
    bool has_loops = false;       // some |e| = 1
    bool has_repeated_edges = false;
    std::optional<int> uniform_s; // set iff all edges have equal size
    bool is_graph = false;        // all edges of size 2, no repeats
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Accepts the line-oriented text format ("vertices:", "edge:", '#' comments)
// and the JSON equivalent {"vertices": k, "edges": [[...], ...]}; a document
// whose first non-space character is '{' is treated as JSON.
Hypergraph parse_hypergraph(const std::string& text);

HypergraphProperties validate(const Hypergraph& h);

// True for connected 2-uniform inputs with no odd cycle. Only meaningful
// when the input is a graph.
bool is_bipartite_graph(const Hypergraph& h);

enum class Family { path, cycle, complete, complete_bipartite, hypercube };

// Canonical 2-uniform families. path [n] with n=1 degenerates to the single
// loop {1} so the covering rule holds; hypercube [d] labels vertex
// 1 + (binary encoding of the coordinate vector).
Hypergraph generate_family(Family family, const std::vector<int>& params);
Family family_from_name(const std::string& name);

std::string to_text(const Hypergraph& h);
std::string to_json_text(const Hypergraph& h);

}  // namespace ehrgraph
