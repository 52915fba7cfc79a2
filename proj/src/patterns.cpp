#include "patterns.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace antiramsey {

namespace {

long brute_force_aut_count(int v, const std::vector<std::pair<int, int>>& edges) {
    std::vector<uint64_t> masks;  // edge set as bitmask over pair ranks
    auto pair_rank = [v](int a, int b) {
        if (a > b) std::swap(a, b);
        return edge_index(v, a, b);
    };
    uint64_t target = 0;
    for (auto [a, b] : edges) target |= uint64_t{1} << pair_rank(a, b);

    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        uint64_t image = 0;
        for (auto [a, b] : edges) image |= uint64_t{1} << pair_rank(perm[a], perm[b]);
        if (image == target) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

PatternGraph make_pattern(std::string name, int v, std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    PatternGraph p;
    p.name = std::move(name);
    p.num_vertices = v;
    p.edges = std::move(edges);
    p.aut_count = brute_force_aut_count(v, p.edges);
    return p;
}

std::vector<PatternGraph> build_catalog() {
    std::vector<PatternGraph> c;
    c.reserve(19);
    c.push_back(make_pattern("P2", 2, {{0, 1}}));
    c.push_back(make_pattern("P3", 3, {{0, 1}, {1, 2}}));
    c.push_back(make_pattern("2P2", 4, {{0, 1}, {2, 3}}));
    c.push_back(make_pattern("P4", 4, {{0, 1}, {1, 2}, {2, 3}}));
    c.push_back(make_pattern("P3+P2", 5, {{0, 1}, {1, 2}, {3, 4}}));
    c.push_back(make_pattern("K13", 4, {{0, 1}, {0, 2}, {0, 3}}));
    // Y: star at 0, pendant edge hanging off leaf 1.
    c.push_back(make_pattern("Y", 5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}}));
    c.push_back(make_pattern("K13+P2", 6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}));
    c.push_back(make_pattern("C3", 3, {{0, 1}, {1, 2}, {0, 2}}));
    // Q: triangle 0-1-2, pendant edge attached at 0.
    c.push_back(make_pattern("Q", 4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}));
    c.push_back(make_pattern("3P2", 6, {{0, 1}, {2, 3}, {4, 5}}));
    c.push_back(make_pattern("P3+2P2", 7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}}));
    c.push_back(make_pattern("C3+P2", 5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}));
    c.push_back(make_pattern("P4+P2", 6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}}));
    c.push_back(make_pattern("P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    c.push_back(make_pattern("2P3", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
    c.push_back(make_pattern("K14", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    c.push_back(make_pattern("C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    c.push_back(make_pattern("4P2", 8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
    return c;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char ch : name) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    return out;
}

}  // namespace

const std::vector<PatternGraph>& catalog() {
    static const std::vector<PatternGraph> c = build_catalog();
    return c;
}

const PatternGraph* find_pattern(std::string_view name) {
    static const std::map<std::string, int> index = [] {
        std::map<std::string, int> m;
        const auto& c = catalog();
        for (int i = 0; i < static_cast<int>(c.size()); ++i) m[normalize_name(c[i].name)] = i;
        return m;
    }();
    auto it = index.find(normalize_name(name));
    if (it == index.end()) return nullptr;
    return &catalog()[it->second];
}

const PatternGraph& pattern_or_throw(std::string_view name) {
    const PatternGraph* p = find_pattern(name);
    if (!p) {
        std::string msg = "unknown pattern \"" + std::string(name) + "\"; known patterns:";
        for (const auto& q : catalog()) msg += " " + q.name;
        throw std::invalid_argument(msg);
    }
    return *p;
}

const std::vector<std::vector<int>>& automorphisms(const PatternGraph& p) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p.name);
    if (it != cache.end()) return it->second;

    const int v = p.num_vertices;
    std::vector<std::vector<int>> auts;
    uint64_t target = 0;
    for (auto [a, b] : p.edges) target |= uint64_t{1} << edge_index(v, a, b);
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        uint64_t image = 0;
        for (auto [a, b] : p.edges) {
            int x = perm[a], y = perm[b];
            if (x > y) std::swap(x, y);
            image |= uint64_t{1} << edge_index(v, x, y);
        }
        if (image == target) auts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(p.name, std::move(auts)).first->second;
}

int edge_count(int n) { return n * (n - 1) / 2; }

int edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v)
        throw std::invalid_argument("edge_index: vertices must be distinct and in [0, n)");
    // edges (u, u+1..n-1) start after all pairs with smaller first vertex
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_from_index(int n, int index) {
    if (index < 0 || index >= edge_count(n)) throw std::invalid_argument("edge_from_index: out of range");
    int u = 0;
    while (index >= n - 1 - u) {
        index -= n - 1 - u;
        ++u;
    }
    return {u, u + 1 + index};
}

namespace {

// Canonical relabelings of the pattern on its own index set: one permutation
// per distinct edge-set image, the lexicographically smallest in its coset
// of Aut(p). Composing these with an increasing vertex selection yields each
// copy in K_n exactly once, already in canonical-representative form.
const std::vector<std::vector<int>>& canonical_variants(const PatternGraph& p) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p.name);
    if (it != cache.end()) return it->second;

    const auto& auts = automorphisms(p);
    const int v = p.num_vertices;
    std::vector<std::vector<int>> variants;
    std::vector<int> perm(v), composed(v);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool minimal = true;
        for (const auto& alpha : auts) {
            for (int i = 0; i < v; ++i) composed[i] = perm[alpha[i]];
            if (composed < perm) {
                minimal = false;
                break;
            }
        }
        if (minimal) variants.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(variants.begin(), variants.end());
    return cache.emplace(p.name, std::move(variants)).first->second;
}

EmbeddingTable build_embedding_table(const PatternGraph& p, int n) {
    if (n < p.num_vertices)
        throw std::invalid_argument("embedding_table: host order below pattern order");
    if (n > kMaxHostOrder)
        throw std::invalid_argument("embedding_table: host order capped at n <= 12");

    EmbeddingTable table;
    table.pattern = &p;
    table.n = n;

    const int v = p.num_vertices;
    const int k = p.edge_count();
    const auto variants = canonical_variants(p);

    // choose v host vertices in increasing order, then apply each variant
    std::vector<int> subset(v);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        for (const auto& sigma : variants) {
            Embedding emb;
            emb.pattern = &p;
            emb.map.resize(v);
            for (int i = 0; i < v; ++i) emb.map[i] = subset[sigma[i]];
            emb.edge_images.resize(k);
            for (int e = 0; e < k; ++e)
                emb.edge_images[e] = edge_index(n, emb.map[p.edges[e].first], emb.map[p.edges[e].second]);
            table.embeddings.push_back(std::move(emb));
        }
        // next combination
        int i = v - 1;
        while (i >= 0 && subset[i] == n - v + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < v; ++j) subset[j] = subset[j - 1] + 1;
    }

    std::sort(table.embeddings.begin(), table.embeddings.end(),
              [](const Embedding& a, const Embedding& b) { return a.map < b.map; });

    const int m = edge_count(n);
    table.by_edge.assign(m, {});
    std::vector<std::vector<int>> by_max(m);
    for (int id = 0; id < static_cast<int>(table.embeddings.size()); ++id) {
        const auto& emb = table.embeddings[id];
        int mx = -1;
        for (int e : emb.edge_images) {
            table.by_edge[e].push_back(id);
            mx = std::max(mx, e);
        }
        by_max[mx].push_back(id);
    }

    table.max_bucket_start.assign(m + 1, 0);
    for (int e = 0; e < m; ++e)
        table.max_bucket_start[e + 1] = table.max_bucket_start[e] + static_cast<int>(by_max[e].size());
    table.max_bucket_edges.reserve(table.embeddings.size() * k);
    for (int e = 0; e < m; ++e)
        for (int id : by_max[e])
            for (int img : table.embeddings[id].edge_images)
                table.max_bucket_edges.push_back(img);
    return table;
}

}  // namespace

const EmbeddingTable& embedding_table(const PatternGraph& p, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::unique_ptr<EmbeddingTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p.name, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto table = std::make_unique<EmbeddingTable>(build_embedding_table(p, n));
        it = cache.emplace(key, std::move(table)).first;
    }
    return *it->second;
}

std::vector<Embedding> enumerate_embeddings(const PatternGraph& p, int n) {
    return embedding_table(p, n).embeddings;
}

std::vector<std::vector<int>> embeddings_by_edge(const PatternGraph& p, int n) {
    return embedding_table(p, n).by_edge;
}

}  // namespace antiramsey
