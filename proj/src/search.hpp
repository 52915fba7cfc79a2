#pragma once

#include <optional>

#include "coloring.hpp"
#include "patterns.hpp"
#include "rainbow.hpp"

namespace antiramsey {

struct SearchBudget {
    long long max_nodes = 1'000'000'000;  // <= 0: unlimited
    double max_seconds = 0;               // <= 0: unlimited
    int threads = 1;                      // <= 1: sequential (the reference semantics)
    int parallel_depth = -1;              // < 0: automatic
    bool symmetry_pruning = true;         // host-vertex orbit pruning
    int symmetry_depth = -1;              // < 0: until the first two vertices are saturated
};

enum class SearchStatus { complete, budget_exhausted };

struct SearchResult {
    int max_colors = 0;                   // max r with a rainbow-free coloring; AR = max_colors + 1
    std::optional<EdgeColoring> witness;  // absent only when no rainbow-free coloring exists
    long long nodes_explored = 0;
    SearchStatus status = SearchStatus::complete;
    double elapsed_seconds = 0;
};

// Exhaustive maximization of the color count over edge colorings of K_n with
// no rainbow copy of the pattern, by branch and bound over restricted-growth
// strings in edge index order. Exact when status is complete; otherwise
// max_colors is the best incumbent (a valid lower bound). Supports n <= 8.
SearchResult max_colors_no_rainbow(int n, const PatternGraph& p, const SearchBudget& budget = {});

struct ArValue {
    int value = 0;    // max_colors + 1; an upper-bound candidate unless exact
    bool exact = false;
    SearchResult detail;
};

ArValue anti_ramsey(int n, const PatternGraph& p, const SearchBudget& budget = {});

enum class Ternary { no = 0, yes = 1, indeterminate = -1 };

// Is there a coloring of K_n with exactly r colors and no rainbow copy of p?
// Answered via r <= max_colors (merging colors preserves rainbow-freeness).
// Budget exhaustion with an incumbent below r yields indeterminate.
Ternary decide(int n, const PatternGraph& p, int r, const SearchBudget& budget = {});

struct CertificateReport {
    bool pass = false;
    int claimed_colors = 0;
    int actual_colors = 0;
    bool colors_match = false;
    bool rainbow_free = false;
    std::optional<RainbowWitness> rainbow;  // present when a rainbow copy defeats the claim
    std::string message;
};

// A passing report certifies AR(n, p) > claimed_colors.
CertificateReport verify_certificate(const EdgeColoring& c, const PatternGraph& p, int claimed_colors);

// Strongest extremal construction applicable to (n, p): the rainbow-free
// candidate with the most colors, used to seed the search incumbent.
std::optional<EdgeColoring> strongest_construction(int n, const PatternGraph& p);

}  // namespace antiramsey
