#include "coloring.hpp"

#include <algorithm>

#include "json.hpp"
#include "patterns.hpp"

namespace antiramsey {

int EdgeColoring::color(int u, int v) const { return color_of[edge_index(n, u, v)]; }

EdgeColoring validate(int n, std::vector<int> raw_color_of) {
    if (n < 2) throw std::invalid_argument("validate: host order must be at least 2");
    const int m = edge_count(n);
    if (static_cast<int>(raw_color_of.size()) != m)
        throw malformed_coloring("coloring must assign all " + std::to_string(m) + " edges");
    std::vector<int> relabel;
    int next = 0;
    for (int& c : raw_color_of) {
        if (c < 0) throw malformed_coloring("edge left uncolored or negative color id");
        if (c >= static_cast<int>(relabel.size())) relabel.resize(c + 1, -1);
        if (relabel[c] < 0) relabel[c] = next++;
        c = relabel[c];
    }
    EdgeColoring out;
    out.n = n;
    out.color_of = std::move(raw_color_of);
    out.num_colors = next;
    return out;
}

EdgeColoring validate(const EdgeColoring& c) { return validate(c.n, c.color_of); }

EdgeColoring c_matching(int n) {
    if (n < 2) throw std::invalid_argument("c_matching: n must be at least 2");
    const int m = edge_count(n);
    std::vector<int> raw(m);
    const int shared = n;  // any id past the per-edge matching ids
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_from_index(n, e);
        bool matched = (u % 2 == 0) && (v == u + 1);
        raw[e] = matched ? u / 2 : shared;
    }
    return validate(n, std::move(raw));
}

EdgeColoring c_star(int n) {
    if (n < 3) throw std::invalid_argument("c_star: n must be at least 3");
    const int m = edge_count(n);
    std::vector<int> raw(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_from_index(n, e);
        raw[e] = (u == 0) ? v : n;  // star colors 1..n-1, one shared color
    }
    return validate(n, std::move(raw));
}

EdgeColoring c_min(int n) {
    if (n < 2) throw std::invalid_argument("c_min: n must be at least 2");
    const int m = edge_count(n);
    std::vector<int> raw(m);
    for (int e = 0; e < m; ++e) raw[e] = edge_from_index(n, e).first;
    return validate(n, std::move(raw));
}

EdgeColoring rainbow_clique_plus_one(int n, int k) {
    if (k < 3 || k >= n)
        throw std::invalid_argument("rainbow_clique_plus_one: need 3 <= k < n");
    const int m = edge_count(n);
    std::vector<int> raw(m);
    int next = 0;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_from_index(n, e);
        raw[e] = (v < k) ? next++ : m;  // m: safely unused rainbow id
    }
    return validate(n, std::move(raw));
}

EdgeColoring rainbow_c4_plus_one(int n) {
    if (n < 5) throw std::invalid_argument("rainbow_c4_plus_one: n must be at least 5");
    const int m = edge_count(n);
    std::vector<int> raw(m, 4);
    raw[edge_index(n, 0, 1)] = 0;
    raw[edge_index(n, 1, 2)] = 1;
    raw[edge_index(n, 2, 3)] = 2;
    raw[edge_index(n, 3, 0)] = 3;
    return validate(n, std::move(raw));
}

EdgeColoring c3p2_special_k5() {
    // vertices (u, x1, x2, y1, y2) = (0, 1, 2, 3, 4)
    const int n = 5;
    std::vector<int> raw(edge_count(n), 5);
    raw[edge_index(n, 0, 1)] = 0;
    raw[edge_index(n, 0, 2)] = 1;
    raw[edge_index(n, 0, 3)] = 2;
    raw[edge_index(n, 0, 4)] = 3;
    raw[edge_index(n, 1, 2)] = 4;
    raw[edge_index(n, 3, 4)] = 4;
    return validate(n, std::move(raw));
}

std::set<int> color_set_at(const EdgeColoring& c, int v) {
    if (v < 0 || v >= c.n) throw std::invalid_argument("color_set_at: vertex out of range");
    std::set<int> out;
    for (int w = 0; w < c.n; ++w)
        if (w != v) out.insert(c.color(v, w));
    return out;
}

int color_degree(const EdgeColoring& c, int v) { return static_cast<int>(color_set_at(c, v).size()); }

std::set<int> color_neighborhood(const EdgeColoring& c, int v, int a) {
    if (v < 0 || v >= c.n) throw std::invalid_argument("color_neighborhood: vertex out of range");
    std::set<int> out;
    for (int w = 0; w < c.n; ++w)
        if (w != v && c.color(v, w) == a) out.insert(w);
    return out;
}

EdgeColoring merge_colors(const EdgeColoring& c, int a, int b) {
    if (a == b) throw std::invalid_argument("merge_colors: colors must differ");
    if (a < 0 || b < 0 || a >= c.num_colors || b >= c.num_colors)
        throw std::invalid_argument("merge_colors: color not in use");
    std::vector<int> raw = c.color_of;
    for (int& col : raw)
        if (col == b) col = a;
    return validate(c.n, std::move(raw));
}

EdgeColoring relabel_vertices(const EdgeColoring& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.n)
        throw std::invalid_argument("relabel_vertices: permutation size mismatch");
    std::vector<bool> seen(c.n, false);
    for (int v : perm) {
        if (v < 0 || v >= c.n || seen[v])
            throw std::invalid_argument("relabel_vertices: not a permutation");
        seen[v] = true;
    }
    const int m = edge_count(c.n);
    std::vector<int> raw(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_from_index(c.n, e);
        raw[edge_index(c.n, perm[u], perm[v])] = c.color_of[e];
    }
    return validate(c.n, std::move(raw));
}

std::string coloring_to_json(const EdgeColoring& c) {
    nlohmann::json edges = nlohmann::json::array();
    for (int e = 0; e < edge_count(c.n); ++e) {
        auto [u, v] = edge_from_index(c.n, e);
        edges.push_back({u, v, c.color_of[e]});
    }
    nlohmann::json doc;
    doc["n"] = c.n;
    doc["edges"] = std::move(edges);
    return doc.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw malformed_coloring(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array())
        throw malformed_coloring("certificate must be {\"n\": int, \"edges\": [[u,v,color],...]}");
    const int n = doc["n"].get<int>();
    if (n < 2 || n > kMaxHostOrder)
        throw malformed_coloring("certificate host order out of supported range");
    std::vector<int> raw(edge_count(n), -1);
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_number_integer())
            throw malformed_coloring("each edge entry must be [u, v, color]");
        int u = entry[0].get<int>(), v = entry[1].get<int>(), col = entry[2].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw malformed_coloring("edge endpoints out of range");
        if (col < 0) throw malformed_coloring("negative color id");
        int e = edge_index(n, u, v);
        if (raw[e] != -1) throw malformed_coloring("duplicate edge entry");
        raw[e] = col;
    }
    return validate(n, std::move(raw));  // validate rejects leftover -1 entries
}

}  // namespace antiramsey
