// Command-line front end for the antiramsey shared library: catalog listing,
// closed-form evaluation, certificate construction and checking, exact
// search, and full verification reports against the formula table.
//
// Exit codes: 0 = success / all checks pass, 1 = mismatch or failed check,
// 2 = usage error, 3 = search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "antiramsey.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { ar_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedColoring {
    ar_coloring* ptr = nullptr;
    ~OwnedColoring() { ar_coloring_free(ptr); }
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int api_error(ar_status status) {
    std::cerr << "error: " << ar_last_error() << "\n";
    return status == AR_OK ? kExitOk : kExitUsage;
}

// Defaults may be overridden by the ANTIRAMSEY_BUDGET environment variable
// ("max-nodes=N,max-seconds=S,threads=T") and then by explicit flags.
ar_budget budget_from_environment() {
    ar_budget budget;
    ar_budget_defaults(&budget);
    const char* env = std::getenv("ANTIRAMSEY_BUDGET");
    if (!env) return budget;
    std::stringstream stream(env);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        try {
            if (key == "max-nodes")
                budget.max_nodes = std::stoll(value);
            else if (key == "max-seconds")
                budget.max_seconds = std::stod(value);
            else if (key == "threads")
                budget.threads = std::stoi(value);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed ANTIRAMSEY_BUDGET item \"" << item << "\"\n";
        }
    }
    return budget;
}

void add_budget_flags(CLI::App* cmd, ar_budget& budget) {
    cmd->add_option("--max-nodes", budget.max_nodes,
                    "Node budget for the search (<= 0: unlimited)")
        ->capture_default_str();
    cmd->add_option("--max-seconds", budget.max_seconds,
                    "Wall-time budget in seconds (<= 0: unlimited)")
        ->capture_default_str();
    cmd->add_option("--threads", budget.threads, "Worker threads (1: sequential)")
        ->capture_default_str();
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return usage_error("cannot write to " + path);
    out << text << "\n";
    return kExitOk;
}

int cmd_catalog(bool as_json) {
    OwnedString listing;
    if (ar_status s = ar_catalog_json(&listing.ptr); s != AR_OK) return api_error(s);
    if (as_json) {
        std::cout << json::parse(listing.str()).dump(2) << "\n";
        return kExitOk;
    }
    json arr = json::parse(listing.str());
    std::printf("%-8s %8s %6s %6s  %s\n", "name", "vertices", "edges", "aut", "edge list");
    for (const auto& p : arr) {
        std::string edges;
        for (const auto& e : p["edges"])
            edges += "(" + std::to_string(int(e[0])) + "," + std::to_string(int(e[1])) + ")";
        std::printf("%-8s %8d %6zu %6lld  %s\n", p["name"].get<std::string>().c_str(),
                    p["vertices"].get<int>(), p["edges"].size(),
                    p["autCount"].get<long long>(), edges.c_str());
    }
    return kExitOk;
}

int cmd_formula(const std::string& graph, int n) {
    long long value = 0;
    int exact = 0;
    OwnedString validity;
    if (ar_status s = ar_formula(graph.c_str(), n, &value, &exact, &validity.ptr); s != AR_OK)
        return api_error(s);
    OwnedString canonical;
    ar_pattern_canonical_name(graph.c_str(), &canonical.ptr);
    json doc;
    doc["graph"] = canonical.str();
    doc["n"] = n;
    doc["value"] = value;
    doc["exact"] = exact != 0;
    doc["validity"] = validity.str();
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_construct(const std::string& name, int n, const std::string& out_path) {
    OwnedColoring coloring;
    if (ar_status s = ar_construct(name.c_str(), n, &coloring.ptr); s != AR_OK)
        return api_error(s);
    OwnedString text;
    if (ar_status s = ar_coloring_to_json(coloring.ptr, &text.ptr); s != AR_OK)
        return api_error(s);
    return write_output(out_path, json::parse(text.str()).dump(2));
}

int cmd_check(const std::string& path, const std::string& graph, int claimed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return usage_error("cannot read certificate " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();

    OwnedColoring coloring;
    if (ar_status s = ar_coloring_from_json(buffer.str().c_str(), &coloring.ptr); s != AR_OK)
        return api_error(s);
    int pass = 0;
    OwnedString report;
    if (ar_status s = ar_verify(coloring.ptr, graph.c_str(), claimed, &pass, &report.ptr);
        s != AR_OK)
        return api_error(s);
    std::cout << json::parse(report.str()).dump(2) << "\n";
    return pass ? kExitOk : kExitFail;
}

int cmd_search(const std::string& graph, int n, const ar_budget& budget) {
    OwnedString result;
    if (ar_status s = ar_search_json(graph.c_str(), n, &budget, &result.ptr); s != AR_OK)
        return api_error(s);
    json doc = json::parse(result.str());
    std::cout << doc.dump(2) << "\n";
    return doc["status"] == "complete" ? kExitOk : kExitBudget;
}

int cmd_verify_table(int n_max, const ar_budget& budget, bool as_json,
                     const std::string& out_path) {
    if (n_max < 2) return usage_error("--n-max must be at least 2");
    if (n_max > 8) return usage_error("--n-max is capped at 8 (exact search limit)");

    OwnedString listing;
    if (ar_status s = ar_catalog_json(&listing.ptr); s != AR_OK) return api_error(s);
    json patterns = json::parse(listing.str());

    json entries = json::array();
    json summary = {{"match", 0}, {"mismatch", 0}, {"budget-exhausted", 0},
                    {"unsupported-domain", 0}};
    bool any_mismatch = false, any_budget = false;

    if (!as_json)
        std::printf("%-8s %3s %8s %8s %-17s %12s %9s\n", "graph", "n", "formula", "search",
                    "status", "nodes", "ms");

    for (const auto& p : patterns) {
        const std::string name = p["name"].get<std::string>();
        for (int n = p["vertices"].get<int>(); n <= n_max; ++n) {
            json entry;
            entry["graph"] = name;
            entry["n"] = n;
            std::string status;
            long long formula_value = -1;
            double elapsed = 0;

            int exact = 0;
            OwnedString validity;
            ar_status fs = ar_formula(name.c_str(), n, &formula_value, &exact, &validity.ptr);
            if (fs == AR_ERROR_UNSUPPORTED_DOMAIN) {
                status = "unsupported-domain";
                entry["status"] = status;
            } else if (fs != AR_OK) {
                return api_error(fs);
            } else {
                OwnedString search_text;
                if (ar_status ss = ar_search_json(name.c_str(), n, &budget, &search_text.ptr);
                    ss != AR_OK)
                    return api_error(ss);
                json search = json::parse(search_text.str());
                entry["formula"] = formula_value;
                entry["search"] = search["antiRamsey"];
                entry["nodes"] = search["nodes"];
                elapsed = search["elapsedSeconds"].get<double>();
                if (search["status"] != "complete") {
                    status = "budget-exhausted";
                    any_budget = true;
                } else if (search["antiRamsey"].get<long long>() == formula_value) {
                    status = "match";
                } else {
                    status = "mismatch";
                    any_mismatch = true;
                }
                entry["status"] = status;
            }
            summary[status] = summary[status].get<int>() + 1;
            if (!as_json)
                std::printf("%-8s %3d %8lld %8s %-17s %12s %9.1f\n", name.c_str(), n,
                            formula_value,
                            entry.contains("search") ? entry["search"].dump().c_str() : "-",
                            status.c_str(),
                            entry.contains("nodes") ? entry["nodes"].dump().c_str() : "-",
                            elapsed * 1000.0);
            entries.push_back(std::move(entry));
        }
    }

    json report;
    report["toolVersion"] = ar_version();
    report["nMax"] = n_max;
    report["budget"] = {{"maxNodes", budget.max_nodes},
                        {"maxSeconds", budget.max_seconds},
                        {"threads", budget.threads}};
    report["entries"] = std::move(entries);
    report["summary"] = summary;

    const std::string text = report.dump(2);
    if (as_json) std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return usage_error("cannot write to " + out_path);
        out << text << "\n";
    }
    if (!as_json)
        std::cout << "summary: " << summary["match"] << " match, " << summary["mismatch"]
                  << " mismatch, " << summary["budget-exhausted"] << " budget-exhausted, "
                  << summary["unsupported-domain"] << " unsupported-domain\n";

    if (any_mismatch) return kExitFail;
    if (any_budget) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey numbers of graphs with at most four edges"};
    app.set_version_flag("--version", ar_version());
    app.require_subcommand(1);
    ar_budget budget = budget_from_environment();

    auto* catalog = app.add_subcommand("catalog", "List the 19 target patterns");
    bool catalog_json = false;
    catalog->add_flag("--json", catalog_json, "Emit JSON instead of a table");

    auto* formula = app.add_subcommand("formula", "Evaluate the closed-form AR value");
    std::string formula_graph;
    int formula_n = 0;
    formula->add_option("--graph", formula_graph, "Pattern name (e.g. C4, K1,3, P3+2P2)")
        ->required();
    formula->add_option("--n", formula_n, "Host order")->required();

    auto* construct = app.add_subcommand("construct", "Write an extremal coloring certificate");
    std::string construct_name, construct_out = "-";
    int construct_n = 0;
    construct
        ->add_option("--name", construct_name,
                     "Construction: matching, star, min, clique+1:K, c4+1, c3p2-k5")
        ->required();
    construct->add_option("--n", construct_n, "Host order")->required();
    construct->add_option("--out", construct_out, "Output path (default: stdout)");

    auto* check = app.add_subcommand("check", "Verify a coloring certificate against a pattern");
    std::string check_path, check_graph;
    int check_claimed = 0;
    check->add_option("--coloring", check_path, "Certificate JSON path")->required();
    check->add_option("--graph", check_graph, "Pattern name")->required();
    check->add_option("--claimed", check_claimed, "Claimed color count")->required();

    auto* search = app.add_subcommand("search", "Exact AR(n,G) by branch-and-bound search");
    std::string search_graph;
    int search_n = 0;
    search->add_option("--graph", search_graph, "Pattern name")->required();
    search->add_option("--n", search_n, "Host order (<= 8)")->required();
    add_budget_flags(search, budget);

    auto* verify = app.add_subcommand("verify-table", "Reproduce the AR table by search");
    int verify_n_max = 0;
    bool verify_json = false;
    std::string verify_out;
    verify->add_option("--n-max", verify_n_max, "Largest host order to verify (<= 8)")
        ->required();
    verify->add_flag("--json", verify_json, "Emit the JSON report on stdout");
    verify->add_option("--out", verify_out, "Also write the JSON report to a file");
    add_budget_flags(verify, budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (catalog->parsed()) return cmd_catalog(catalog_json);
    if (formula->parsed()) return cmd_formula(formula_graph, formula_n);
    if (construct->parsed()) return cmd_construct(construct_name, construct_n, construct_out);
    if (check->parsed()) return cmd_check(check_path, check_graph, check_claimed);
    if (search->parsed()) return cmd_search(search_graph, search_n, budget);
    if (verify->parsed()) return cmd_verify_table(verify_n_max, budget, verify_json, verify_out);
    return usage_error("no subcommand given");
}
