#include "rainbow.hpp"

#include <cstdint>

namespace antiramsey {

namespace {

// Pairwise distinctness of up to four colors; the search hot path.
inline bool all_distinct(const int* c, int k) {
    switch (k) {
        case 1:
            return true;
        case 2:
            return c[0] != c[1];
        case 3:
            return c[0] != c[1] && c[0] != c[2] && c[1] != c[2];
        default:
            return c[0] != c[1] && c[0] != c[2] && c[0] != c[3] && c[1] != c[2] &&
                   c[1] != c[3] && c[2] != c[3];
    }
}

}  // namespace

std::optional<RainbowWitness> find_rainbow(const EdgeColoring& c, const PatternGraph& p) {
    if (c.n < p.num_vertices)
        throw std::invalid_argument("find_rainbow: host smaller than pattern");
    const auto& table = embedding_table(p, c.n);
    const int k = p.edge_count();
    int colors[4];
    for (const auto& emb : table.embeddings) {
        for (int i = 0; i < k; ++i) colors[i] = c.color_of[emb.edge_images[i]];
        if (all_distinct(colors, k)) {
            RainbowWitness w;
            w.embedding = emb;
            w.colors.assign(colors, colors + k);
            return w;
        }
    }
    return std::nullopt;
}

long long count_rainbow(const EdgeColoring& c, const PatternGraph& p) {
    if (c.n < p.num_vertices)
        throw std::invalid_argument("count_rainbow: host smaller than pattern");
    const auto& table = embedding_table(p, c.n);
    const int k = p.edge_count();
    long long count = 0;
    int colors[4];
    for (const auto& emb : table.embeddings) {
        for (int i = 0; i < k; ++i) colors[i] = c.color_of[emb.edge_images[i]];
        if (all_distinct(colors, k)) ++count;
    }
    return count;
}

bool has_rainbow_touching(int n, std::span<const int> partial_colors, const PatternGraph& p, int e) {
    if (n < p.num_vertices)
        throw std::invalid_argument("has_rainbow_touching: host smaller than pattern");
    if (static_cast<int>(partial_colors.size()) != edge_count(n))
        throw std::invalid_argument("has_rainbow_touching: color buffer size mismatch");
    if (e < 0 || e >= edge_count(n) || partial_colors[e] < 0)
        throw std::invalid_argument("has_rainbow_touching: edge e must be colored");
    const auto& table = embedding_table(p, n);
    const int k = p.edge_count();
    int colors[4];
    for (int id : table.by_edge[e]) {
        const auto& emb = table.embeddings[id];
        bool complete = true;
        for (int i = 0; i < k; ++i) {
            colors[i] = partial_colors[emb.edge_images[i]];
            if (colors[i] < 0) {
                complete = false;
                break;
            }
        }
        if (complete && all_distinct(colors, k)) return true;
    }
    return false;
}

}  // namespace antiramsey
