#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antiramsey {

// A small target graph from the catalog. Vertices are 0..num_vertices-1 and
// every vertex is touched by at least one edge.
struct PatternGraph {
    std::string name;
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically
    long aut_count = 0;                      // |Aut|, brute-forced at catalog load

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// The 19 catalog patterns, fixed order and fixed edge lists.
const std::vector<PatternGraph>& catalog();

// Lookup by name. Matching is case-insensitive and ignores commas and spaces,
// so "K1,3", "k13" and "K13" all resolve to the same entry. Returns nullptr
// if the name is unknown.
const PatternGraph* find_pattern(std::string_view name);
const PatternGraph& pattern_or_throw(std::string_view name);

// Vertex permutations of the pattern that preserve its edge set.
const std::vector<std::vector<int>>& automorphisms(const PatternGraph& p);

// Unordered pairs {u,v} over 0..n-1 are ranked lexicographically:
// (0,1),(0,2),...,(0,n-1),(1,2),...  edge_index is symmetric in u,v.
int edge_count(int n);
int edge_index(int n, int u, int v);
std::pair<int, int> edge_from_index(int n, int index);

// Hosts are complete graphs; enumeration is capped at this order.
inline constexpr int kMaxHostOrder = 12;

// One copy of a pattern in K_n: an injective vertex map plus the host edge
// indices of the mapped pattern edges. `map` is the lexicographically
// smallest representative of the copy under pattern automorphisms.
struct Embedding {
    const PatternGraph* pattern = nullptr;
    std::vector<int> map;          // pattern vertex -> host vertex
    std::vector<int> edge_images;  // per pattern edge, host edge index
};

// All copies of `p` in K_n, one embedding per copy, sorted by `map`.
// Cached per (pattern, n); the cache is internally synchronized and the
// returned reference stays valid for the lifetime of the process.
struct EmbeddingTable {
    const PatternGraph* pattern = nullptr;
    int n = 0;
    std::vector<Embedding> embeddings;
    std::vector<std::vector<int>> by_edge;  // host edge index -> embedding ids

    // Embeddings grouped by their maximum host edge index, flattened for the
    // search inner loop: bucket e holds records of k = |edges| host edge
    // indices each, stored back to back in max_bucket_edges.
    std::vector<int> max_bucket_start;        // size edge_count(n)+1
    std::vector<int32_t> max_bucket_edges;    // record-major, k per record
};

const EmbeddingTable& embedding_table(const PatternGraph& p, int n);

std::vector<Embedding> enumerate_embeddings(const PatternGraph& p, int n);
std::vector<std::vector<int>> embeddings_by_edge(const PatternGraph& p, int n);

}  // namespace antiramsey
