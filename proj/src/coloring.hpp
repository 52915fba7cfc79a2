#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace antiramsey {

struct malformed_coloring : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A total edge coloring of K_n in restricted-growth normal form: the color
// ids used are exactly 0..num_colors-1 and first occurrences along the edge
// index order are increasing.
struct EdgeColoring {
    int n = 0;
    std::vector<int> color_of;  // indexed by edge index, size n(n-1)/2
    int num_colors = 0;

    int color(int u, int v) const;
    bool operator==(const EdgeColoring&) const = default;
};

// Renumbers colors into restricted-growth normal form and recomputes
// num_colors. Throws malformed_coloring if the assignment is not total
// (wrong size or a negative entry). Idempotent; the single ingestion point
// for colorings built edge-by-edge or read from files.
EdgeColoring validate(int n, std::vector<int> raw_color_of);
EdgeColoring validate(const EdgeColoring& c);

// The extremal colorings. Placements are canonical: the matching covers
// (0,1),(2,3),...; the star sits at vertex 0; the clique occupies {0..k-1}.
EdgeColoring c_matching(int n);                    // n >= 2
EdgeColoring c_star(int n);                        // n >= 3
EdgeColoring c_min(int n);                         // n >= 2, edge {i,j} -> min(i,j)
EdgeColoring rainbow_clique_plus_one(int n, int k); // 3 <= k < n
EdgeColoring rainbow_c4_plus_one(int n);           // n >= 5
EdgeColoring c3p2_special_k5();                    // fixed n = 5

// C(v): the set of colors on edges incident with v; d_c(v) is its size.
std::set<int> color_set_at(const EdgeColoring& c, int v);
int color_degree(const EdgeColoring& c, int v);

// N_c(v;a): vertices w with c(vw) = a. Empty when a is not in C(v).
std::set<int> color_neighborhood(const EdgeColoring& c, int v, int a);

// Recolors every edge of color b to color a and renormalizes; num_colors
// drops by exactly one. Both colors must be distinct and in use.
EdgeColoring merge_colors(const EdgeColoring& c, int a, int b);

// Applies a host vertex permutation and renormalizes.
EdgeColoring relabel_vertices(const EdgeColoring& c, const std::vector<int>& perm);

// Certificate wire format: {"n": <int>, "edges": [[u, v, color], ...]} with
// all n(n-1)/2 edges, u < v, sorted lexicographically, colors normalized.
std::string coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const std::string& text);

}  // namespace antiramsey
