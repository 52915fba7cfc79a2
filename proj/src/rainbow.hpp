#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coloring.hpp"
#include "patterns.hpp"

namespace antiramsey {

// A rainbow copy: the embedding plus the pairwise-distinct colors on its
// edge images, in pattern-edge order.
struct RainbowWitness {
    Embedding embedding;
    std::vector<int> colors;
};

// Lexicographically first rainbow embedding in enumerate_embeddings order,
// or nullopt if the coloring has no rainbow copy of the pattern.
std::optional<RainbowWitness> find_rainbow(const EdgeColoring& c, const PatternGraph& p);

long long count_rainbow(const EdgeColoring& c, const PatternGraph& p);

// Partial colorings use -1 as the uncolored sentinel. True iff some
// embedding containing host edge `e` has all of its edges colored with
// pairwise distinct colors; embeddings with any uncolored edge are skipped.
bool has_rainbow_touching(int n, std::span<const int> partial_colors, const PatternGraph& p, int e);

}  // namespace antiramsey
