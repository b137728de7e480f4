#include "ehrgraph/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ehrgraph {

namespace {

std::vector<int> parse_edge_ids(const std::string& rest, int k, int line) {
    std::istringstream in(rest);
    std::vector<int> ids;
    std::string tok;
    while (in >> tok) {
        int v;
        try {
            size_t pos = 0;
            v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError(line, "bad vertex id '" + tok + "'");
        }
        if (v < 1 || v > k)
            throw ParseError(line, "vertex id " + std::to_string(v) +
                                       " out of range [1, " + std::to_string(k) + "]");
        if (std::find(ids.begin(), ids.end(), v) != ids.end())
            throw ParseError(line, "duplicate vertex id " + std::to_string(v) +
                                       " within edge");
        ids.push_back(v);
    }
    if (ids.empty()) throw ParseError(line, "empty edge");
    std::sort(ids.begin(), ids.end());
    return ids;
}

Hypergraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError(1, "JSON hypergraph needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer() || j["vertices"].get<int>() < 1)
        throw ParseError(1, "\"vertices\" must be a positive integer");
    Hypergraph h;
    h.k = j["vertices"].get<int>();
    if (!j["edges"].is_array() || j["edges"].empty())
        throw ParseError(1, "\"edges\" must be a nonempty array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.empty()) throw ParseError(1, "empty edge");
        std::vector<int> ids;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw ParseError(1, "non-integer vertex id");
            int id = v.get<int>();
            if (id < 1 || id > h.k)
                throw ParseError(1, "vertex id " + std::to_string(id) + " out of range");
            if (std::find(ids.begin(), ids.end(), id) != ids.end())
                throw ParseError(1, "duplicate vertex id within edge");
            ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        h.edges.push_back(std::move(ids));
    }
    return h;
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);

    Hypergraph h;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::string body = line.substr(start);
        if (body.rfind("vertices:", 0) == 0) {
            if (have_header) throw ParseError(lineno, "duplicate 'vertices:' header");
            std::istringstream hs(body.substr(9));
            if (!(hs >> h.k) || h.k < 1)
                throw ParseError(lineno, "'vertices:' needs a positive integer");
            std::string extra;
            if (hs >> extra) throw ParseError(lineno, "trailing tokens after vertex count");
            have_header = true;
        } else if (body.rfind("edge:", 0) == 0) {
            if (!have_header)
                throw ParseError(lineno, "'edge:' before 'vertices:' header");
            h.edges.push_back(parse_edge_ids(body.substr(5), h.k, lineno));
        } else {
            throw ParseError(lineno, "unrecognized line '" + body + "'");
        }
    }
    if (!have_header) throw ParseError(lineno ? lineno : 1, "missing 'vertices:' header");
    if (h.edges.empty()) throw ParseError(lineno, "hypergraph has no edges");
    return h;
}

HypergraphProperties validate(const Hypergraph& h) {
    HypergraphProperties p;

    std::set<std::vector<int>> seen;
    for (const auto& e : h.edges) {
        if (e.size() == 1) p.has_loops = true;
        if (!seen.insert(e).second) p.has_repeated_edges = true;
    }

    // simple: no containment between distinct positions
    p.is_simple = true;
    for (size_t i = 0; i < h.edges.size() && p.is_simple; ++i)
        for (size_t j = 0; j < h.edges.size(); ++j) {
            if (i == j) continue;
            if (std::includes(h.edges[j].begin(), h.edges[j].end(),
                              h.edges[i].begin(), h.edges[i].end())) {
                p.is_simple = false;
                break;
            }
        }

    // covering
    std::vector<bool> covered(static_cast<size_t>(h.k) + 1, false);
    for (const auto& e : h.edges)
        for (int v : e) covered[static_cast<size_t>(v)] = true;
    p.is_covering = std::all_of(covered.begin() + 1, covered.end(),
                                [](bool b) { return b; });

    // connectivity: union-find over vertices, edges glue their members
    std::vector<int> parent(static_cast<size_t>(h.k) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& e : h.edges)
        for (size_t i = 1; i < e.size(); ++i)
            parent[static_cast<size_t>(find(e[i]))] = find(e[0]);
    int root = find(1);
    p.is_connected = true;
    for (int v = 2; v <= h.k; ++v)
        if (find(v) != root) { p.is_connected = false; break; }

    size_t s0 = h.edges.front().size();
    if (std::all_of(h.edges.begin(), h.edges.end(),
                    [&](const auto& e) { return e.size() == s0; }))
        p.uniform_s = static_cast<int>(s0);

    p.is_graph = !p.has_repeated_edges &&
                 std::all_of(h.edges.begin(), h.edges.end(),
                             [](const auto& e) { return e.size() == 2; });
    return p;
}

bool is_bipartite_graph(const Hypergraph& h) {
    std::vector<int> color(static_cast<size_t>(h.k) + 1, -1);
    std::vector<std::vector<int>> adj(static_cast<size_t>(h.k) + 1);
    for (const auto& e : h.edges) {
        if (e.size() != 2) return false;
        adj[static_cast<size_t>(e[0])].push_back(e[1]);
        adj[static_cast<size_t>(e[1])].push_back(e[0]);
    }
    std::vector<int> stack;
    for (int s = 1; s <= h.k; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    stack.push_back(v);
                } else if (color[static_cast<size_t>(v)] ==
                           color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "hypercube") return Family::hypercube;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Hypergraph generate_family(Family family, const std::vector<int>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("family takes " + std::to_string(n) +
                                        " parameter(s)");
    };
    Hypergraph h;
    switch (family) {
        case Family::path: {
            need(1);
            int n = params[0];
            if (n < 1) throw std::invalid_argument("path needs n >= 1");
            h.k = n;
            if (n == 1) {
                h.edges.push_back({1});
            } else {
                for (int i = 1; i < n; ++i) h.edges.push_back({i, i + 1});
            }
            break;
        }
        case Family::cycle: {
            need(1);
            int n = params[0];
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            h.k = n;
            for (int i = 1; i < n; ++i) h.edges.push_back({i, i + 1});
            h.edges.push_back({1, n});
            break;
        }
        case Family::complete: {
            need(1);
            int n = params[0];
            if (n < 2) throw std::invalid_argument("complete needs n >= 2");
            h.k = n;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) h.edges.push_back({i, j});
            break;
        }
        case Family::complete_bipartite: {
            need(2);
            int a = params[0], b = params[1];
            if (a < 1 || b < 1)
                throw std::invalid_argument("complete_bipartite needs a,b >= 1");
            h.k = a + b;
            for (int i = 1; i <= a; ++i)
                for (int j = a + 1; j <= a + b; ++j) h.edges.push_back({i, j});
            break;
        }
        case Family::hypercube: {
            need(1);
            int d = params[0];
            if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
            h.k = 1 << d;
            for (int u = 0; u < h.k; ++u)
                for (int bit = 0; bit < d; ++bit) {
                    int v = u ^ (1 << bit);
                    if (u < v) h.edges.push_back({u + 1, v + 1});
                }
            break;
        }
    }
    return h;
}

std::string to_text(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices: " << h.k << "\n";
    for (const auto& e : h.edges) {
        out << "edge:";
        for (int v : e) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::string to_json_text(const Hypergraph& h) {
    nlohmann::json j;
    j["vertices"] = h.k;
    j["edges"] = h.edges;
    return j.dump();
}

}  // namespace ehrgraph
