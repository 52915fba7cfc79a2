#include "antiramsey.h"

#include <cstring>
#include <new>
#include <string>

#include "coloring.hpp"
#include "formulas.hpp"
#include "json.hpp"
#include "patterns.hpp"
#include "rainbow.hpp"
#include "search.hpp"

using nlohmann::json;

struct ar_coloring {
    antiramsey::EdgeColoring value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ar_status fail(ar_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs the body and maps C++ errors onto status codes.
template <typename Fn>
ar_status guarded(Fn&& body) {
    try {
        body();
        return AR_OK;
    } catch (const antiramsey::malformed_coloring& e) {
        return fail(AR_ERROR_MALFORMED_COLORING, e.what());
    } catch (const antiramsey::unsupported_domain& e) {
        return fail(AR_ERROR_UNSUPPORTED_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.find("unknown pattern") != std::string::npos)
            return fail(AR_ERROR_UNKNOWN_PATTERN, what);
        return fail(AR_ERROR_INVALID_ARGUMENT, what);
    } catch (const std::exception& e) {
        return fail(AR_ERROR_INTERNAL, e.what());
    }
}

ar_status require(bool ok, const char* message) {
    return ok ? AR_OK : fail(AR_ERROR_INVALID_ARGUMENT, message);
}

antiramsey::SearchBudget to_budget(const ar_budget* budget) {
    antiramsey::SearchBudget out;
    if (!budget) return out;
    out.max_nodes = budget->max_nodes;
    out.max_seconds = budget->max_seconds;
    out.threads = budget->threads;
    out.parallel_depth = budget->parallel_depth;
    out.symmetry_pruning = budget->symmetry_pruning != 0;
    out.symmetry_depth = budget->symmetry_depth;
    return out;
}

json witness_json(const antiramsey::RainbowWitness& w, const antiramsey::EdgeColoring& c) {
    json edges = json::array();
    const auto& p = *w.embedding.pattern;
    for (int i = 0; i < p.edge_count(); ++i) {
        int u = w.embedding.map[p.edges[i].first];
        int v = w.embedding.map[p.edges[i].second];
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, c.color(u, v)});
    }
    json doc;
    doc["graph"] = p.name;
    doc["vertices"] = w.embedding.map;
    doc["edges"] = std::move(edges);
    return doc;
}

json coloring_json_doc(const antiramsey::EdgeColoring& c) {
    return json::parse(antiramsey::coloring_to_json(c));
}

const char* status_name(antiramsey::SearchStatus s) {
    return s == antiramsey::SearchStatus::complete ? "complete" : "budget-exhausted";
}

}  // namespace

extern "C" {

const char* ar_version(void) { return "0.1.0"; }

const char* ar_last_error(void) { return g_last_error.c_str(); }

void ar_string_free(char* s) { ::operator delete(s); }

void ar_budget_defaults(ar_budget* budget) {
    if (!budget) return;
    antiramsey::SearchBudget d;
    budget->max_nodes = d.max_nodes;
    budget->max_seconds = d.max_seconds;
    budget->threads = d.threads;
    budget->parallel_depth = d.parallel_depth;
    budget->symmetry_pruning = d.symmetry_pruning ? 1 : 0;
    budget->symmetry_depth = d.symmetry_depth;
}

int ar_catalog_count(void) { return static_cast<int>(antiramsey::catalog().size()); }

ar_status ar_catalog_json(char** out_json) {
    if (require(out_json != nullptr, "out_json must not be null") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        json arr = json::array();
        for (const auto& p : antiramsey::catalog()) {
            json entry;
            entry["name"] = p.name;
            entry["vertices"] = p.num_vertices;
            json edges = json::array();
            for (auto [u, v] : p.edges) edges.push_back({u, v});
            entry["edges"] = std::move(edges);
            entry["autCount"] = p.aut_count;
            arr.push_back(std::move(entry));
        }
        *out_json = dup_string(arr.dump());
    });
}

ar_status ar_pattern_info(const char* name, int* out_vertices, int* out_edges,
                          long long* out_aut_count) {
    if (require(name != nullptr, "name must not be null") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(name);
        if (out_vertices) *out_vertices = p.num_vertices;
        if (out_edges) *out_edges = p.edge_count();
        if (out_aut_count) *out_aut_count = p.aut_count;
    });
}

ar_status ar_pattern_canonical_name(const char* name, char** out_name) {
    if (require(name != nullptr && out_name != nullptr, "name and out_name required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_name = dup_string(antiramsey::pattern_or_throw(name).name); });
}

ar_status ar_formula(const char* pattern, int n, long long* out_value, int* out_exact,
                     char** out_validity) {
    if (require(pattern != nullptr && out_value != nullptr, "pattern and out_value required") !=
        AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        antiramsey::FormulaValue v = antiramsey::ar_formula(p, n);
        *out_value = v.value;
        if (out_exact) *out_exact = v.exact ? 1 : 0;
        if (out_validity) *out_validity = dup_string(v.validity);
    });
}

ar_status ar_cross_checks_json(int* out_all_pass, char** out_json) {
    return guarded([&] {
        antiramsey::CrossCheckReport report = antiramsey::cross_checks();
        if (out_all_pass) *out_all_pass = report.all_pass() ? 1 : 0;
        if (out_json) {
            json arr = json::array();
            for (const auto& e : report.entries) {
                json entry;
                entry["identity"] = e.identity;
                entry["pass"] = e.pass;
                if (!e.detail.empty()) entry["detail"] = e.detail;
                arr.push_back(std::move(entry));
            }
            *out_json = dup_string(arr.dump());
        }
    });
}

ar_status ar_construct(const char* construction, int n, ar_coloring** out) {
    if (require(construction != nullptr && out != nullptr, "construction and out required") !=
        AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        std::string name(construction);
        antiramsey::EdgeColoring c;
        if (name == "matching") {
            c = antiramsey::c_matching(n);
        } else if (name == "star") {
            c = antiramsey::c_star(n);
        } else if (name == "min") {
            c = antiramsey::c_min(n);
        } else if (name.rfind("clique+1:", 0) == 0) {
            int k = std::stoi(name.substr(9));
            c = antiramsey::rainbow_clique_plus_one(n, k);
        } else if (name == "c4+1") {
            c = antiramsey::rainbow_c4_plus_one(n);
        } else if (name == "c3p2-k5") {
            if (n != 5) throw std::invalid_argument("c3p2-k5 is a fixed K_5 construction; use n = 5");
            c = antiramsey::c3p2_special_k5();
        } else {
            throw std::invalid_argument(
                "unknown construction \"" + name +
                "\"; known: matching, star, min, clique+1:K, c4+1, c3p2-k5");
        }
        *out = new ar_coloring{std::move(c)};
    });
}

ar_status ar_coloring_from_json(const char* text, ar_coloring** out) {
    if (require(text != nullptr && out != nullptr, "text and out required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = new ar_coloring{antiramsey::coloring_from_json(text)}; });
}

ar_status ar_coloring_to_json(const ar_coloring* c, char** out_json) {
    if (require(c != nullptr && out_json != nullptr, "coloring and out_json required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_json = dup_string(antiramsey::coloring_to_json(c->value)); });
}

int ar_coloring_order(const ar_coloring* c) { return c ? c->value.n : 0; }

int ar_coloring_num_colors(const ar_coloring* c) { return c ? c->value.num_colors : 0; }

ar_status ar_coloring_color_of(const ar_coloring* c, int u, int v, int* out_color) {
    if (require(c != nullptr && out_color != nullptr, "coloring and out_color required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out_color = c->value.color_of[antiramsey::edge_index(c->value.n, u, v)]; });
}

ar_status ar_coloring_merge(const ar_coloring* c, int color_a, int color_b, ar_coloring** out) {
    if (require(c != nullptr && out != nullptr, "coloring and out required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded(
        [&] { *out = new ar_coloring{antiramsey::merge_colors(c->value, color_a, color_b)}; });
}

void ar_coloring_free(ar_coloring* c) { delete c; }

ar_status ar_count_rainbow(const ar_coloring* c, const char* pattern, long long* out_count) {
    if (require(c != nullptr && pattern != nullptr && out_count != nullptr,
                "coloring, pattern and out_count required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        *out_count = antiramsey::count_rainbow(c->value, p);
    });
}

ar_status ar_find_rainbow_json(const ar_coloring* c, const char* pattern, char** out_json) {
    if (require(c != nullptr && pattern != nullptr && out_json != nullptr,
                "coloring, pattern and out_json required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        auto witness = antiramsey::find_rainbow(c->value, p);
        json doc = witness ? witness_json(*witness, c->value) : json(nullptr);
        *out_json = dup_string(doc.dump());
    });
}

ar_status ar_verify(const ar_coloring* c, const char* pattern, int claimed_colors, int* out_pass,
                    char** out_report_json) {
    if (require(c != nullptr && pattern != nullptr, "coloring and pattern required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        antiramsey::CertificateReport report =
            antiramsey::verify_certificate(c->value, p, claimed_colors);
        if (out_pass) *out_pass = report.pass ? 1 : 0;
        if (out_report_json) {
            json doc;
            doc["pass"] = report.pass;
            doc["graph"] = p.name;
            doc["n"] = c->value.n;
            doc["claimedColors"] = report.claimed_colors;
            doc["numColors"] = report.actual_colors;
            doc["rainbowFree"] = report.rainbow_free;
            doc["message"] = report.message;
            doc["witness"] = report.rainbow ? witness_json(*report.rainbow, c->value) : json(nullptr);
            *out_report_json = dup_string(doc.dump());
        }
    });
}

ar_status ar_search_json(const char* pattern, int n, const ar_budget* budget, char** out_json) {
    if (require(pattern != nullptr && out_json != nullptr, "pattern and out_json required") !=
        AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        antiramsey::SearchResult r = antiramsey::max_colors_no_rainbow(n, p, to_budget(budget));
        json doc;
        doc["graph"] = p.name;
        doc["n"] = n;
        doc["maxColors"] = r.max_colors;
        doc["antiRamsey"] = r.max_colors + 1;
        doc["status"] = status_name(r.status);
        doc["exact"] = r.status == antiramsey::SearchStatus::complete;
        doc["nodes"] = r.nodes_explored;
        doc["elapsedSeconds"] = r.elapsed_seconds;
        doc["witness"] = r.witness ? coloring_json_doc(*r.witness) : json(nullptr);
        *out_json = dup_string(doc.dump());
    });
}

ar_status ar_anti_ramsey(const char* pattern, int n, const ar_budget* budget, int* out_value,
                         int* out_exact) {
    if (require(pattern != nullptr && out_value != nullptr, "pattern and out_value required") !=
        AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        antiramsey::ArValue v = antiramsey::anti_ramsey(n, p, to_budget(budget));
        *out_value = v.value;
        if (out_exact) *out_exact = v.exact ? 1 : 0;
    });
}

ar_status ar_decide(const char* pattern, int n, int num_colors, const ar_budget* budget,
                    ar_ternary* out) {
    if (require(pattern != nullptr && out != nullptr, "pattern and out required") != AR_OK)
        return AR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto& p = antiramsey::pattern_or_throw(pattern);
        antiramsey::Ternary t = antiramsey::decide(n, p, num_colors, to_budget(budget));
        *out = t == antiramsey::Ternary::yes     ? AR_YES
               : t == antiramsey::Ternary::no    ? AR_NO
                                                 : AR_INDETERMINATE;
    });
}

}  // extern "C"
