#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "patterns.hpp"

using namespace antiramsey;

namespace {

long long falling_factorial(int n, int v) {
    long long out = 1;
    for (int i = 0; i < v; ++i) out *= n - i;
    return out;
}

std::set<std::pair<int, int>> edge_set(const PatternGraph& p) {
    return {p.edges.begin(), p.edges.end()};
}

}  // namespace

TEST_CASE("catalog holds the 19 fixed patterns") {
    const auto& c = catalog();
    REQUIRE(c.size() == 19);

    const PatternGraph* two_p2 = find_pattern("2P2");
    REQUIRE(two_p2 != nullptr);
    CHECK(two_p2->num_vertices == 4);
    CHECK(edge_set(*two_p2) == std::set<std::pair<int, int>>{{0, 1}, {2, 3}});

    const PatternGraph* q = find_pattern("Q");
    REQUIRE(q != nullptr);
    CHECK(edge_set(*q) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}});

    for (const auto& p : c) {
        CAPTURE(p.name);
        CHECK(p.edge_count() >= 1);
        CHECK(p.edge_count() <= 4);
        std::set<int> touched;
        std::set<std::pair<int, int>> distinct;
        for (auto [u, v] : p.edges) {
            CHECK(u < v);
            CHECK(v < p.num_vertices);
            CHECK(u >= 0);
            touched.insert(u);
            touched.insert(v);
            distinct.insert({u, v});
        }
        CHECK(static_cast<int>(touched.size()) == p.num_vertices);  // no isolated vertices
        CHECK(distinct.size() == p.edges.size());
    }
}

TEST_CASE("catalog automorphism counts match hand values and divide |V|!") {
    struct Expected {
        const char* name;
        long aut;
    };
    // orders of the automorphism groups, verified by hand
    const Expected expected[] = {
        {"P2", 2},    {"P3", 2},     {"2P2", 8},     {"P4", 2},  {"P3+P2", 4}, {"K13", 6},
        {"Y", 2},     {"K13+P2", 12}, {"C3", 6},     {"Q", 2},   {"3P2", 48},  {"P3+2P2", 16},
        {"C3+P2", 12}, {"P4+P2", 4}, {"P5", 2},      {"2P3", 8}, {"K14", 24},  {"C4", 8},
        {"4P2", 384},
    };
    for (const auto& e : expected) {
        const PatternGraph* p = find_pattern(e.name);
        REQUIRE(p != nullptr);
        CAPTURE(e.name);
        CHECK(p->aut_count == e.aut);
        long long fact = 1;
        for (int i = 2; i <= p->num_vertices; ++i) fact *= i;
        CHECK(fact % p->aut_count == 0);
        CHECK(static_cast<long>(automorphisms(*p).size()) == p->aut_count);
    }
}

TEST_CASE("pattern lookup is case-insensitive and ignores commas") {
    CHECK(find_pattern("k1,3") == find_pattern("K13"));
    CHECK(find_pattern("p3+2p2") == find_pattern("P3+2P2"));
    CHECK(find_pattern("K1,3 + P2") == find_pattern("K13+P2"));
    CHECK(find_pattern("nosuch") == nullptr);
    CHECK_THROWS_AS(pattern_or_throw("nosuch"), std::invalid_argument);
}

TEST_CASE("edge_index ranks pairs lexicographically") {
    CHECK(edge_index(5, 0, 1) == 0);
    CHECK(edge_index(5, 1, 0) == 0);
    CHECK(edge_index(5, 3, 4) == 9);
    CHECK_THROWS_AS(edge_index(5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(5, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(5, -1, 2), std::invalid_argument);

    for (int n = 2; n <= 12; ++n) {
        int rank = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++rank) {
                CHECK(edge_index(n, u, v) == rank);
                CHECK(edge_from_index(n, rank) == std::pair<int, int>{u, v});
            }
        CHECK(rank == edge_count(n));
    }
}

TEST_CASE("embedding counts match the brute-force oracle and the identity") {
    // |embeddings| * |Aut| = n(n-1)...(n-v+1), and the list agrees with the
    // set of copies found by raw injective-map enumeration
    for (const auto& p : catalog()) {
        for (int n = p.num_vertices; n <= 8; ++n) {
            CAPTURE(p.name);
            CAPTURE(n);
            const auto& embs = embedding_table(p, n).embeddings;
            CHECK(static_cast<long long>(embs.size()) * p.aut_count ==
                  falling_factorial(n, p.num_vertices));
            if (n <= 6) CHECK(static_cast<long long>(embs.size()) == oracle::count_copies(p, n));
        }
    }
    CHECK(enumerate_embeddings(*find_pattern("2P2"), 4).size() == 3);
    CHECK(enumerate_embeddings(*find_pattern("C3"), 5).size() == 10);
    CHECK(enumerate_embeddings(*find_pattern("P3"), 4).size() == 12);
    CHECK_THROWS_AS(enumerate_embeddings(*find_pattern("P5"), 4), std::invalid_argument);
}

TEST_CASE("embeddings are deduplicated copies with valid maps") {
    for (const auto& p : catalog()) {
        for (int n = p.num_vertices; n <= 6; ++n) {
            CAPTURE(p.name);
            CAPTURE(n);
            std::set<std::vector<int>> image_sets;
            for (const auto& emb : embedding_table(p, n).embeddings) {
                std::set<int> verts(emb.map.begin(), emb.map.end());
                CHECK(verts.size() == emb.map.size());  // injective
                std::vector<int> images = emb.edge_images;
                for (int i = 0; i < p.edge_count(); ++i) {
                    auto [a, b] = p.edges[i];
                    CHECK(images[i] == edge_index(n, emb.map[a], emb.map[b]));
                }
                std::sort(images.begin(), images.end());
                CHECK(image_sets.insert(images).second);  // no duplicate copy
            }
        }
    }
}

TEST_CASE("embedding list is sorted and relabeling-equivariant") {
    std::mt19937_64 rng(20240811);
    for (const char* name : {"P3", "2P2", "C3", "Q", "Y", "C4"}) {
        const PatternGraph& p = *find_pattern(name);
        for (int n = p.num_vertices; n <= 6; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            const auto& embs = embedding_table(p, n).embeddings;
            for (size_t i = 1; i < embs.size(); ++i) CHECK(embs[i - 1].map < embs[i].map);

            // permuting host vertices permutes the embedding list
            const auto perm = oracle::random_permutation(n, rng);
            const auto& auts = automorphisms(p);
            std::set<std::vector<int>> original, permuted;
            for (const auto& emb : embs) {
                original.insert(emb.map);
                std::vector<int> mapped(p.num_vertices);
                for (int i = 0; i < p.num_vertices; ++i) mapped[i] = perm[emb.map[i]];
                // canonical representative of the permuted copy
                std::vector<int> best = mapped, candidate(p.num_vertices);
                for (const auto& alpha : auts) {
                    for (int i = 0; i < p.num_vertices; ++i) candidate[i] = mapped[alpha[i]];
                    best = std::min(best, candidate);
                }
                permuted.insert(best);
            }
            CHECK(original == permuted);
        }
    }
}

TEST_CASE("embeddings_by_edge buckets cover each embedding edge-count times") {
    const PatternGraph& two_p2 = *find_pattern("2P2");
    auto buckets = embeddings_by_edge(two_p2, 4);
    CHECK(buckets[edge_index(4, 0, 1)].size() == 1);

    const PatternGraph& c3 = *find_pattern("C3");
    auto c3_buckets = embeddings_by_edge(c3, 5);
    size_t total = 0;
    for (const auto& b : c3_buckets) total += b.size();
    CHECK(total == 30);  // 10 copies x 3 edges

    const PatternGraph& p2 = *find_pattern("P2");
    for (const auto& b : embeddings_by_edge(p2, 6)) CHECK(b.size() == 1);

    for (const auto& p : catalog()) {
        for (int n = p.num_vertices; n <= 6; ++n) {
            CAPTURE(p.name);
            CAPTURE(n);
            const auto& table = embedding_table(p, n);
            std::vector<int> appearances(table.embeddings.size(), 0);
            for (const auto& bucket : table.by_edge)
                for (int id : bucket) ++appearances[id];
            for (int count : appearances) CHECK(count == p.edge_count());
        }
    }
}

TEST_CASE("host order cap") {
    CHECK_THROWS_AS(embedding_table(*find_pattern("P2"), 13), std::invalid_argument);
    CHECK_NOTHROW(embedding_table(*find_pattern("P2"), 12));
}
