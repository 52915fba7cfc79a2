#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace antiramsey {

namespace {

constexpr int kMaxSearchOrder = 8;

// Position permutations induced on the first d edge slots by host vertex
// permutations that map the prefix edge set onto itself, deduplicated and
// with the identity dropped; index 0 is unused (depth counts colored edges).
using PosMaps = std::vector<std::vector<std::vector<int>>>;

const PosMaps& prefix_stabilizer_posmaps(int n, int max_depth) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<PosMaps>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, max_depth);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;

    auto maps = std::make_unique<PosMaps>(max_depth + 1);
    std::vector<std::set<std::vector<int>>> seen(max_depth + 1);
    std::vector<std::pair<int, int>> prefix_edges(max_depth);
    for (int e = 0; e < max_depth; ++e) prefix_edges[e] = edge_from_index(n, e);

    std::vector<int> perm(n), eimg(max_depth);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int prefix_max = -1;
        for (int i = 0; i < max_depth; ++i) {
            eimg[i] = edge_index(n, perm[prefix_edges[i].first], perm[prefix_edges[i].second]);
            prefix_max = std::max(prefix_max, eimg[i]);
            const int d = i + 1;
            if (prefix_max < d) {
                std::vector<int> posmap(eimg.begin(), eimg.begin() + d);
                bool identity = true;
                for (int j = 0; j < d && identity; ++j) identity = (posmap[j] == j);
                if (!identity && seen[d].insert(posmap).second)
                    (*maps)[d].push_back(std::move(posmap));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto& slot = cache[key];
    slot = std::move(maps);
    return *slot;
}

class Searcher {
  public:
    Searcher(int n, const PatternGraph& p, const SearchBudget& budget)
        : n_(n),
          m_(edge_count(n)),
          k_(p.edge_count()),
          pattern_(p),
          table_(embedding_table(p, n)),
          budget_(budget) {
        sym_limit_ = 0;
        if (budget_.symmetry_pruning) {
            sym_limit_ = budget_.symmetry_depth >= 0 ? budget_.symmetry_depth : 2 * n - 3;
            sym_limit_ = std::min(sym_limit_, m_);
            if (sym_limit_ > 0) posmaps_ = &prefix_stabilizer_posmaps(n, sym_limit_);
        }
    }

    SearchResult run() {
        start_ = std::chrono::steady_clock::now();
        SearchResult result;

        if (auto seed = strongest_construction(n_, pattern_)) {
            best_.store(seed->num_colors, std::memory_order_relaxed);
            seed_witness_ = std::move(*seed);
        }

        if (budget_.threads > 1 && m_ > 4)
            run_parallel();
        else
            run_sequential();

        result.max_colors = best_.load(std::memory_order_relaxed);
        result.nodes_explored = nodes_.load(std::memory_order_relaxed);
        result.status =
            out_of_budget_.load(std::memory_order_relaxed) ? SearchStatus::budget_exhausted
                                                           : SearchStatus::complete;
        if (!best_string_.empty())
            result.witness = validate(n_, best_string_);
        else if (seed_witness_)
            result.witness = std::move(seed_witness_);
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result;
    }

  private:
    struct Worker {
        Searcher* owner;
        std::vector<int> colors;
        std::vector<int> permuted;  // symmetry scratch
        std::vector<int> relabel;   // symmetry scratch
        long long pending_nodes = 0;
        int local_best = 0;  // improvements over the seed found by this worker
        std::vector<int> local_witness;

        explicit Worker(Searcher* s)
            : owner(s), colors(s->m_, -1), permuted(s->m_), relabel(s->m_ + 1) {}

        void flush_nodes() {
            owner->nodes_.fetch_add(pending_nodes, std::memory_order_relaxed);
            pending_nodes = 0;
        }

        bool over_budget() {
            flush_nodes();
            if (owner->budget_.max_nodes > 0 &&
                owner->nodes_.load(std::memory_order_relaxed) >= owner->budget_.max_nodes) {
                owner->out_of_budget_.store(true, std::memory_order_relaxed);
            } else if (owner->budget_.max_seconds > 0) {
                double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                               owner->start_)
                                     .count();
                if (elapsed >= owner->budget_.max_seconds)
                    owner->out_of_budget_.store(true, std::memory_order_relaxed);
            }
            return owner->out_of_budget_.load(std::memory_order_relaxed);
        }

        bool stopped() {
            if ((pending_nodes & 0xFFF) == 0 && pending_nodes > 0) return over_budget();
            return owner->out_of_budget_.load(std::memory_order_relaxed);
        }

        // True iff assigning edge e completed a rainbow copy: only embeddings
        // whose maximum edge index is e can have become fully colored.
        bool completes_rainbow(int e) const {
            const auto& table = owner->table_;
            const int k = owner->k_;
            const int32_t* rec = table.max_bucket_edges.data() +
                                 static_cast<size_t>(table.max_bucket_start[e]) * k;
            const int32_t* end = table.max_bucket_edges.data() +
                                 static_cast<size_t>(table.max_bucket_start[e + 1]) * k;
            const int* col = colors.data();
            for (; rec != end; rec += k) {
                switch (k) {
                    case 1:
                        return true;
                    case 2:
                        if (col[rec[0]] != col[rec[1]]) return true;
                        break;
                    case 3: {
                        int a = col[rec[0]], b = col[rec[1]], c = col[rec[2]];
                        if (a != b && a != c && b != c) return true;
                        break;
                    }
                    default: {
                        int a = col[rec[0]], b = col[rec[1]], c = col[rec[2]], d = col[rec[3]];
                        if (a != b && a != c && a != d && b != c && b != d && c != d) return true;
                        break;
                    }
                }
            }
            return false;
        }

        // Lex-leader check: reject the prefix of length d if relabeling host
        // vertices by any prefix-stabilizing permutation yields a strictly
        // smaller restricted-growth string.
        bool symmetry_rejected(int d) {
            if (d > owner->sym_limit_) return false;
            const auto& maps = (*owner->posmaps_)[d];
            if (maps.empty()) return false;
            for (const auto& posmap : maps) {
                for (int i = 0; i < d; ++i) permuted[posmap[i]] = colors[i];
                // renormalize on the fly and compare against the current prefix
                int next = 0;
                std::fill(relabel.begin(), relabel.begin() + d, -1);
                bool smaller = false;
                for (int i = 0; i < d; ++i) {
                    int c = permuted[i];
                    if (relabel[c] < 0) relabel[c] = next++;
                    if (relabel[c] != colors[i]) {
                        smaller = relabel[c] < colors[i];
                        break;
                    }
                }
                if (smaller) return true;
            }
            return false;
        }

        void record_leaf(int used) {
            if (used > local_best) {
                local_best = used;
                local_witness.assign(colors.begin(), colors.end());
            }
            std::lock_guard<std::mutex> lock(owner->result_mu_);
            if (used > owner->best_.load(std::memory_order_relaxed)) {
                owner->best_.store(used, std::memory_order_relaxed);
                owner->best_string_.assign(colors.begin(), colors.end());
            }
        }

        void dfs(int depth, int used) {
            if (used + (owner->m_ - depth) <= owner->best_.load(std::memory_order_relaxed))
                return;
            if (depth == owner->m_) {
                record_leaf(used);
                return;
            }
            for (int col = 0; col <= used; ++col) {
                ++pending_nodes;
                if (stopped()) return;
                colors[depth] = col;
                if (!completes_rainbow(depth) && !symmetry_rejected(depth + 1))
                    dfs(depth + 1, used + (col == used ? 1 : 0));
            }
            colors[depth] = -1;
        }

        // Frontier collection for the parallel mode: identical pruning, but
        // stops at the split depth and emits surviving prefixes.
        void collect(int depth, int used, int split_depth,
                     std::vector<std::pair<std::vector<int>, int>>& out) {
            if (used + (owner->m_ - depth) <= owner->best_.load(std::memory_order_relaxed))
                return;
            if (depth == split_depth) {
                out.emplace_back(std::vector<int>(colors.begin(), colors.begin() + depth), used);
                return;
            }
            for (int col = 0; col <= used; ++col) {
                ++pending_nodes;
                if (stopped()) return;
                colors[depth] = col;
                if (!completes_rainbow(depth) && !symmetry_rejected(depth + 1))
                    collect(depth + 1, used + (col == used ? 1 : 0), split_depth, out);
            }
            colors[depth] = -1;
        }
    };

    void run_sequential() {
        Worker w(this);
        w.dfs(0, 0);
        w.flush_nodes();
        if (w.local_best > 0 && w.local_best == best_.load(std::memory_order_relaxed))
            best_string_ = std::move(w.local_witness);
    }

    void run_parallel() {
        const int split = std::min(budget_.parallel_depth > 0 ? budget_.parallel_depth : 6, m_ - 1);
        std::vector<std::pair<std::vector<int>, int>> frontier;
        {
            Worker w(this);
            w.collect(0, 0, split, frontier);
            w.flush_nodes();
        }
        if (out_of_budget_.load(std::memory_order_relaxed)) return;

        std::atomic<size_t> pos{0};
        const int nthreads = std::min<int>(budget_.threads, std::max<size_t>(frontier.size(), 1));
        std::vector<std::thread> pool;
        std::mutex merge_mu;
        struct Optimum {
            int value;
            std::vector<int> witness;
        };
        std::vector<Optimum> collected;
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                Worker w(this);
                while (true) {
                    size_t i = pos.fetch_add(1, std::memory_order_relaxed);
                    if (i >= frontier.size()) break;
                    const auto& [prefix, used] = frontier[i];
                    std::copy(prefix.begin(), prefix.end(), w.colors.begin());
                    w.dfs(split, used);
                    std::fill(w.colors.begin(), w.colors.begin() + split, -1);
                    if (w.stopped()) break;
                }
                w.flush_nodes();
                if (w.local_best > 0) {
                    std::lock_guard<std::mutex> lock(merge_mu);
                    collected.push_back({w.local_best, std::move(w.local_witness)});
                }
            });
        }
        for (auto& th : pool) th.join();

        // canonical-first witness among the collected optima
        const int final_best = best_.load(std::memory_order_relaxed);
        best_string_.clear();
        for (auto& opt : collected)
            if (opt.value == final_best &&
                (best_string_.empty() || opt.witness < best_string_))
                best_string_ = std::move(opt.witness);
    }

    const int n_;
    const int m_;
    const int k_;
    const PatternGraph& pattern_;
    const EmbeddingTable& table_;
    SearchBudget budget_;
    int sym_limit_ = 0;
    const PosMaps* posmaps_ = nullptr;
    std::chrono::steady_clock::time_point start_;

    std::atomic<int> best_{0};
    std::atomic<bool> out_of_budget_{false};
    std::atomic<long long> nodes_{0};
    std::mutex result_mu_;
    std::vector<int> best_string_;
    std::optional<EdgeColoring> seed_witness_;
};

}  // namespace

std::optional<EdgeColoring> strongest_construction(int n, const PatternGraph& p) {
    std::vector<EdgeColoring> candidates;
    candidates.push_back(c_min(n));
    candidates.push_back(c_matching(n));
    if (n >= 3) candidates.push_back(c_star(n));
    for (int k = 3; k <= 4 && k < n; ++k) candidates.push_back(rainbow_clique_plus_one(n, k));
    if (n >= 5) candidates.push_back(rainbow_c4_plus_one(n));
    if (n == 5) candidates.push_back(c3p2_special_k5());

    std::optional<EdgeColoring> best;
    for (auto& c : candidates) {
        if (count_rainbow(c, p) != 0) continue;
        if (!best || c.num_colors > best->num_colors) best = std::move(c);
    }
    return best;
}

SearchResult max_colors_no_rainbow(int n, const PatternGraph& p, const SearchBudget& budget) {
    if (n < p.num_vertices)
        throw std::invalid_argument("max_colors_no_rainbow: host order below pattern order");
    if (n > kMaxSearchOrder)
        throw std::invalid_argument("max_colors_no_rainbow: exact search supports n <= 8");
    return Searcher(n, p, budget).run();
}

ArValue anti_ramsey(int n, const PatternGraph& p, const SearchBudget& budget) {
    SearchResult r = max_colors_no_rainbow(n, p, budget);
    ArValue out;
    out.value = r.max_colors + 1;
    out.exact = r.status == SearchStatus::complete;
    out.detail = std::move(r);
    return out;
}

Ternary decide(int n, const PatternGraph& p, int r, const SearchBudget& budget) {
    if (r < 1) throw std::invalid_argument("decide: color count must be positive");
    SearchResult res = max_colors_no_rainbow(n, p, budget);
    if (r <= res.max_colors) return Ternary::yes;
    if (res.status == SearchStatus::complete) return Ternary::no;
    return Ternary::indeterminate;
}

CertificateReport verify_certificate(const EdgeColoring& c, const PatternGraph& p, int claimed_colors) {
    CertificateReport report;
    report.claimed_colors = claimed_colors;
    report.actual_colors = c.num_colors;
    report.colors_match = (c.num_colors == claimed_colors);
    auto rainbow = find_rainbow(c, p);
    report.rainbow_free = !rainbow.has_value();
    report.rainbow = std::move(rainbow);
    report.pass = report.colors_match && report.rainbow_free;
    if (report.pass) {
        report.message = "certifies AR(" + std::to_string(c.n) + "," + p.name + ") > " +
                         std::to_string(claimed_colors);
    } else if (!report.colors_match) {
        report.message = "color count mismatch: coloring uses " + std::to_string(c.num_colors) +
                         " colors, claimed " + std::to_string(claimed_colors);
    } else {
        report.message = "coloring contains a rainbow copy of " + p.name;
    }
    return report;
}

}  // namespace antiramsey
