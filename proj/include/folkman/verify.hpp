// Corpus sweeps: run a named invariant check over a stream of graphs with
// bounded parallelism, aggregating results deterministically in input order.
#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "folkman/enumerate.hpp"
#include "folkman/families.hpp"
#include "folkman/invariants.hpp"
#include "folkman/io.hpp"
#include "folkman/proof.hpp"

namespace folkman {

struct Violation {
    int record = 0;  // 1-based position in the corpus
    std::string graph6;
    std::string invariant;
    std::string details;
};

struct VerificationReport {
    std::string corpus;
    std::string invariant;
    int checked = 0;
    int skipped = 0;  // budget exhaustions
    std::vector<Violation> violations;
    std::vector<std::string> input_errors;
    double elapsed_seconds = 0.0;

    bool pass() const { return violations.empty(); }
};

// A checker returns a violation description, or an empty string on pass.
using InvariantChecker = std::function<std::string(const Graph&, const SolverBudget&)>;

namespace checkers {

inline std::string folkman_bound(const Graph& g, const SolverBudget& budget) {
    FolkmanBoundReport r = check_folkman_bound(g, budget);
    if (r.holds) return {};
    return "chi=" + std::to_string(r.chi) + " exceeds f=" + std::to_string(r.f);
}

inline std::string hajnal(const Graph& g, const SolverBudget&) {
    const int n = g.vertex_count();
    if (n == 0 || 2 * independence_number(g).alpha <= n) return {};  // vacuous
    VertexSet intersection = g.vertices();
    for (VertexSet s : all_maximum_independent_sets(g)) intersection &= s;
    if (intersection.empty()) return "maximum independent sets have empty intersection";
    int v = hajnal_common_vertex(g);
    if (!intersection.contains(v))
        return "reported vertex " + std::to_string(v) + " is not common";
    int c = hajnal_constructive_vertex(g);
    if (!intersection.contains(c))
        return "constructive vertex " + std::to_string(c) + " is not common";
    return {};
}

inline std::string half_stable_deletion(const Graph& g, const SolverBudget& budget) {
    const int k = min_deletion_to_half_stable(g).k;
    const int rho = potential(g, budget);
    const int expected = std::max(0, rho - 2);
    if (k == expected) return {};
    return "deletion number " + std::to_string(k) + " != max(0, rho-2) = " +
           std::to_string(expected);
}

// Three routes to k-near-bipartiteness for k in {0,1,2}: the operation,
// f <= k+2, and the definition (every induced subgraph H has a Y of size
// <= k with H-Y half-stable) evaluated by a direct double-subset sweep.
inline std::string near_bipartite_equivalence(const Graph& g, const SolverBudget&) {
    const int n = g.vertex_count();
    const auto alpha = independence_numbers_all_subsets(g);
    const int f = folkman_number(g).f;

    int worst_deletion = 0;  // max over induced H of min |Y| making H-Y half-stable
    for (Mask h = 0; h < (Mask{1} << n); ++h) {
        int best_kept = 0;  // largest half-stable induced subgraph of G[h]
        for (Mask t = h;; t = (t - 1) & h) {
            if (2 * static_cast<int>(alpha[t]) >= std::popcount(t))
                best_kept = std::max(best_kept, std::popcount(t));
            if (t == 0) break;
        }
        worst_deletion = std::max(worst_deletion, std::popcount(h) - best_kept);
    }

    for (int k = 0; k <= 2; ++k) {
        const bool via_op = is_k_near_bipartite(g, k).holds;
        const bool via_f = f <= k + 2;
        const bool via_def = worst_deletion <= k;
        if (via_op != via_f || via_f != via_def)
            return "k=" + std::to_string(k) + ": op=" + std::to_string(via_op) +
                   " f-route=" + std::to_string(via_f) +
                   " definition-route=" + std::to_string(via_def);
    }
    return {};
}

inline std::string mycielski_chi(const Graph& g, const SolverBudget& budget) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return {};  // vacuous
    const int chi = chromatic_number(g, budget).chi;
    const int chi_mu = chromatic_number(mycielski(g), budget).chi;
    if (chi_mu == chi + 1) return {};
    return "chi(mu(g)) = " + std::to_string(chi_mu) + " but chi(g)+1 = " +
           std::to_string(chi + 1);
}

inline std::string graph6_roundtrip(const Graph& g, const SolverBudget&) {
    const std::string record = write_graph6(g);
    if (parse_graph6(record) == g) return {};
    return "parse(write(g)) differs from g for record " + record;
}

}  // namespace checkers

inline InvariantChecker invariant_checker(const std::string& name) {
    if (name == "folkman") return checkers::folkman_bound;
    if (name == "hajnal") return checkers::hajnal;
    if (name == "half-stable-deletion") return checkers::half_stable_deletion;
    if (name == "near-bipartite-equiv") return checkers::near_bipartite_equivalence;
    if (name == "mycielski-chi") return checkers::mycielski_chi;
    if (name == "roundtrip" || name == "graph6-roundtrip") return checkers::graph6_roundtrip;
    throw MalformedInput("unknown invariant: " + name);
}

// Pulls records from `source` (nullopt = end), fans work out over
// `parallelism` threads in fixed-size chunks, and aggregates in input order
// so reports are byte-identical at any parallelism level.
inline VerificationReport batch_verify_with(const std::function<std::optional<StreamRecord>()>& source,
                                            const InvariantChecker& checker,
                                            const std::string& invariant, int parallelism,
                                            const SolverBudget& budget = {},
                                            const std::string& corpus_name = {}) {
    if (parallelism < 1) parallelism = 1;

    VerificationReport report;
    report.corpus = corpus_name;
    report.invariant = invariant;
    const auto t0 = std::chrono::steady_clock::now();

    struct Item {
        int record;
        Graph graph;
    };
    enum class Outcome { pass, fail, skip, error };
    struct Result {
        Outcome outcome;
        std::string details;
        std::string graph6;
    };

    int record_no = 0;
    bool done = false;
    constexpr int kChunk = 2048;
    while (!done) {
        std::vector<Item> chunk;
        chunk.reserve(kChunk);
        while (static_cast<int>(chunk.size()) < kChunk) {
            auto rec = source();
            if (!rec) {
                done = true;
                break;
            }
            ++record_no;
            if (!rec->graph) {
                report.input_errors.push_back(rec->error);
                continue;
            }
            chunk.push_back(Item{record_no, std::move(*rec->graph)});
        }
        if (chunk.empty()) continue;

        std::vector<Result> results(chunk.size());
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= chunk.size()) return;
                try {
                    std::string details = checker(chunk[i].graph, budget);
                    results[i] = details.empty()
                                     ? Result{Outcome::pass, {}, {}}
                                     : Result{Outcome::fail, std::move(details),
                                              write_graph6(chunk[i].graph)};
                } catch (const BudgetExceeded& e) {
                    results[i] = Result{Outcome::skip, e.what(), {}};
                } catch (const std::exception& e) {
                    // e.g. a corpus graph above this checker's size cap
                    results[i] = Result{Outcome::error, e.what(), {}};
                }
            }
        };
        if (parallelism == 1 || chunk.size() == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            const int threads = std::min<int>(parallelism, static_cast<int>(chunk.size()));
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            switch (results[i].outcome) {
                case Outcome::pass:
                    ++report.checked;
                    break;
                case Outcome::fail:
                    ++report.checked;
                    report.violations.push_back(Violation{chunk[i].record, results[i].graph6,
                                                          invariant, results[i].details});
                    break;
                case Outcome::skip:
                    ++report.skipped;
                    break;
                case Outcome::error:
                    report.input_errors.push_back("record " + std::to_string(chunk[i].record) +
                                                  ": " + results[i].details);
                    break;
            }
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

inline VerificationReport batch_verify(const std::function<std::optional<StreamRecord>()>& source,
                                       const std::string& invariant, int parallelism,
                                       const SolverBudget& budget = {},
                                       const std::string& corpus_name = {}) {
    return batch_verify_with(source, invariant_checker(invariant), invariant, parallelism,
                             budget, corpus_name);
}

// Adapts a GraphEnumerator to the batch_verify source interface.
inline std::function<std::optional<StreamRecord>()> enumerator_source(GraphEnumerator& en) {
    return [&en]() -> std::optional<StreamRecord> {
        auto g = en.next();
        if (!g) return std::nullopt;
        return StreamRecord{0, std::move(*g), {}};
    };
}

inline std::function<std::optional<StreamRecord>()> stream_source(GraphStream& stream) {
    return [&stream] { return stream.next(); };
}

}  // namespace folkman
