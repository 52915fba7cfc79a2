// Exercises the shared-library surface: opaque handles, error codes, JSON
// payloads, and the thread-local error message.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "antiramsey.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Str {
    char* ptr = nullptr;
    ~Str() { ar_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct Col {
    ar_coloring* ptr = nullptr;
    ~Col() { ar_coloring_free(ptr); }
};

}  // namespace

TEST_CASE("version and catalog") {
    CHECK(std::strlen(ar_version()) > 0);
    CHECK(ar_catalog_count() == 19);

    Str listing;
    REQUIRE(ar_catalog_json(&listing.ptr) == AR_OK);
    json arr = json::parse(listing.str());
    CHECK(arr.size() == 19);
    CHECK(arr[0]["name"] == "P2");

    int vertices = 0, edges = 0;
    long long aut = 0;
    REQUIRE(ar_pattern_info("K1,3", &vertices, &edges, &aut) == AR_OK);
    CHECK(vertices == 4);
    CHECK(edges == 3);
    CHECK(aut == 6);

    Str canonical;
    REQUIRE(ar_pattern_canonical_name("k1,3+p2", &canonical.ptr) == AR_OK);
    CHECK(canonical.str() == "K13+P2");

    CHECK(ar_pattern_info("K9", &vertices, &edges, &aut) == AR_ERROR_UNKNOWN_PATTERN);
    CHECK(std::strlen(ar_last_error()) > 0);
}

TEST_CASE("formula") {
    long long value = 0;
    int exact = 0;
    Str validity;
    REQUIRE(ar_formula("C4", 9, &value, &exact, &validity.ptr) == AR_OK);
    CHECK(value == 12);
    CHECK(exact == 1);
    CHECK(validity.str() == "n >= 4");

    REQUIRE(ar_formula("K1,3", 7, &value, nullptr, nullptr) == AR_OK);
    CHECK(value == 5);
    REQUIRE(ar_formula("4P2", 8, &value, nullptr, nullptr) == AR_OK);
    CHECK(value == 15);

    CHECK(ar_formula("nosuch", 5, &value, nullptr, nullptr) == AR_ERROR_UNKNOWN_PATTERN);
    CHECK(ar_formula("P5", 4, &value, nullptr, nullptr) == AR_ERROR_INVALID_ARGUMENT);
    CHECK(ar_formula(nullptr, 4, &value, nullptr, nullptr) == AR_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("cross checks") {
    int all_pass = 0;
    Str report;
    REQUIRE(ar_cross_checks_json(&all_pass, &report.ptr) == AR_OK);
    CHECK(all_pass == 1);
    json entries = json::parse(report.str());
    CHECK(entries.size() >= 8);
    for (const auto& e : entries) CHECK(e["pass"] == true);
}

TEST_CASE("construct, serialize, parse, query") {
    Col star;
    REQUIRE(ar_construct("star", 7, &star.ptr) == AR_OK);
    CHECK(ar_coloring_order(star.ptr) == 7);
    CHECK(ar_coloring_num_colors(star.ptr) == 7);

    Str text;
    REQUIRE(ar_coloring_to_json(star.ptr, &text.ptr) == AR_OK);
    json doc = json::parse(text.str());
    CHECK(doc["n"] == 7);
    CHECK(doc["edges"].size() == 21);

    Col back;
    REQUIRE(ar_coloring_from_json(text.str().c_str(), &back.ptr) == AR_OK);
    CHECK(ar_coloring_num_colors(back.ptr) == 7);
    int color_a = -1, color_b = -1;
    REQUIRE(ar_coloring_color_of(star.ptr, 0, 3, &color_a) == AR_OK);
    REQUIRE(ar_coloring_color_of(back.ptr, 3, 0, &color_b) == AR_OK);
    CHECK(color_a == color_b);

    Col merged;
    REQUIRE(ar_coloring_merge(star.ptr, 0, 1, &merged.ptr) == AR_OK);
    CHECK(ar_coloring_num_colors(merged.ptr) == 6);
    CHECK(ar_coloring_merge(star.ptr, 0, 0, &merged.ptr) == AR_ERROR_INVALID_ARGUMENT);

    Col clique;
    REQUIRE(ar_construct("clique+1:4", 6, &clique.ptr) == AR_OK);
    CHECK(ar_coloring_num_colors(clique.ptr) == 7);
    Col cmin;
    REQUIRE(ar_construct("min", 5, &cmin.ptr) == AR_OK);
    CHECK(ar_coloring_num_colors(cmin.ptr) == 4);

    Col bad;
    CHECK(ar_construct("nosuch", 6, &bad.ptr) == AR_ERROR_INVALID_ARGUMENT);
    CHECK(ar_construct("c3p2-k5", 6, &bad.ptr) == AR_ERROR_INVALID_ARGUMENT);
    CHECK(ar_construct("star", 1, &bad.ptr) == AR_ERROR_INVALID_ARGUMENT);
    CHECK(ar_coloring_from_json("{\"n\": 3}", &bad.ptr) == AR_ERROR_MALFORMED_COLORING);
    CHECK(ar_coloring_from_json("happy little accidents", &bad.ptr) ==
          AR_ERROR_MALFORMED_COLORING);
}

TEST_CASE("rainbow queries") {
    Col star;
    REQUIRE(ar_construct("star", 6, &star.ptr) == AR_OK);
    long long count = -1;
    REQUIRE(ar_count_rainbow(star.ptr, "C3", &count) == AR_OK);
    CHECK(count == 10);

    Str witness;
    REQUIRE(ar_find_rainbow_json(star.ptr, "C3", &witness.ptr) == AR_OK);
    json w = json::parse(witness.str());
    REQUIRE_FALSE(w.is_null());
    CHECK(w["vertices"].size() == 3);
    CHECK(w["edges"].size() == 3);

    Str none;
    REQUIRE(ar_find_rainbow_json(star.ptr, "C3+P2", &none.ptr) == AR_OK);
    CHECK(json::parse(none.str()).is_null());
}

TEST_CASE("verify") {
    Col star;
    REQUIRE(ar_construct("star", 8, &star.ptr) == AR_OK);
    int pass = 0;
    Str report;
    REQUIRE(ar_verify(star.ptr, "P4+P2", 8, &pass, &report.ptr) == AR_OK);
    CHECK(pass == 1);
    json doc = json::parse(report.str());
    CHECK(doc["pass"] == true);
    CHECK(doc["witness"].is_null());

    Col matching;
    REQUIRE(ar_construct("matching", 10, &matching.ptr) == AR_OK);
    Str report2;
    REQUIRE(ar_verify(matching.ptr, "K1,3", 6, &pass, &report2.ptr) == AR_OK);
    CHECK(pass == 1);

    Col star6;
    REQUIRE(ar_construct("star", 6, &star6.ptr) == AR_OK);
    Str report3;
    REQUIRE(ar_verify(star6.ptr, "C3", 6, &pass, &report3.ptr) == AR_OK);
    CHECK(pass == 0);
    json failed = json::parse(report3.str());
    CHECK(failed["pass"] == false);
    CHECK(failed["rainbowFree"] == false);
    CHECK_FALSE(failed["witness"].is_null());
}

TEST_CASE("search, anti-Ramsey, decide") {
    ar_budget budget;
    ar_budget_defaults(&budget);
    CHECK(budget.max_nodes == 1000000000);
    CHECK(budget.threads == 1);
    CHECK(budget.symmetry_pruning == 1);

    Str result;
    REQUIRE(ar_search_json("P3+P2", 5, &budget, &result.ptr) == AR_OK);
    json doc = json::parse(result.str());
    CHECK(doc["antiRamsey"] == 3);
    CHECK(doc["maxColors"] == 2);
    CHECK(doc["status"] == "complete");
    CHECK(doc["exact"] == true);
    CHECK(doc["witness"]["n"] == 5);

    int value = 0, exact = 0;
    REQUIRE(ar_anti_ramsey("C3+P2", 5, &budget, &value, &exact) == AR_OK);
    CHECK(value == 7);
    CHECK(exact == 1);
    REQUIRE(ar_anti_ramsey("P2", 6, &budget, &value, &exact) == AR_OK);
    CHECK(value == 1);

    ar_ternary verdict = AR_INDETERMINATE;
    REQUIRE(ar_decide("C3", 5, 4, &budget, &verdict) == AR_OK);
    CHECK(verdict == AR_YES);
    REQUIRE(ar_decide("C3", 5, 5, &budget, &verdict) == AR_OK);
    CHECK(verdict == AR_NO);

    ar_budget starved = budget;
    starved.max_nodes = 1;
    REQUIRE(ar_decide("C4", 6, 7, &starved, &verdict) == AR_OK);
    CHECK(verdict == AR_INDETERMINATE);

    CHECK(ar_search_json("C3", 9, &budget, &result.ptr) == AR_ERROR_INVALID_ARGUMENT);
    CHECK(ar_search_json("P5", 4, &budget, &result.ptr) == AR_ERROR_INVALID_ARGUMENT);
}
