// Command-line workbench: invariant computation, corpus verification,
// constructions, proof reductions and conclusion audits over graph6,
// DIMACS and edge-list inputs. Text or line-delimited JSON records.
//
// Exit status: 0 success/pass, 1 violations found, 2 usage or input
// errors, 3 budget exhaustion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "folkman/folkman.hpp"

using json = nlohmann::ordered_json;
using namespace folkman;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string input = "-";
    std::string format = "g6";
    bool json_output = false;
    bool strict = false;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    int max_n = 0;  // 0 = per-operation defaults
    std::optional<std::uint64_t> budget_ms;
    std::optional<std::uint64_t> budget_nodes;
};

SolverBudget budget_of(const Options& opt) {
    return SolverBudget{opt.budget_nodes, opt.budget_ms};
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw MalformedInput("bad rational: " + text);
    }
}

std::string vertex_set_str(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

json vertex_set_json(VertexSet s) {
    json arr = json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

// ------------------------------------------------------------- input ----

struct InputSource {
    std::unique_ptr<std::ifstream> file;
    std::unique_ptr<GraphStream> stream;
};

InputSource open_stream(const Options& opt) {
    auto format = graph_format_from_name(opt.format);
    if (!format) throw MalformedInput("unknown format: " + opt.format);
    InputSource src;
    const int cap = opt.max_n > 0 ? opt.max_n : kMaxVertices;
    if (opt.input == "-") {
        src.stream = std::make_unique<GraphStream>(std::cin, *format, opt.strict, cap);
    } else {
        src.file = std::make_unique<std::ifstream>(opt.input);
        if (!*src.file) throw MalformedInput("cannot open " + opt.input);
        src.stream = std::make_unique<GraphStream>(*src.file, *format, opt.strict, cap);
    }
    return src;
}

Graph read_single_graph(const Options& opt) {
    Options strict_opt = opt;
    strict_opt.strict = true;
    InputSource src = open_stream(strict_opt);
    auto rec = src.stream->next();
    if (!rec || !rec->graph) throw MalformedInput("no graph in input");
    return std::move(*rec->graph);
}

void emit_graph(const Graph& g, const std::string& construction, const Options& opt) {
    if (opt.json_output) {
        json rec;
        rec["type"] = "graph";
        rec["construction"] = construction;
        rec["n"] = g.vertex_count();
        rec["m"] = g.edge_count();
        rec["graph6"] = write_graph6(g);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << write_graph6(g) << "\n";
    }
}

// ------------------------------------------------------------ compute ----

const std::vector<std::string> kInvariantOrder = {
    "alpha", "omega", "chi", "rho", "f", "mir", "hall", "girth", "oct", "deletion"};

int run_compute(const Options& opt, const std::string& invariants_csv) {
    std::vector<std::string> requested;
    {
        std::stringstream ss(invariants_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) requested.push_back(item);
    }
    for (const auto& name : requested)
        if (std::find(kInvariantOrder.begin(), kInvariantOrder.end(), name) ==
            kInvariantOrder.end())
            throw MalformedInput("unknown invariant: " + name);
    auto wanted = [&](const std::string& name) {
        return std::find(requested.begin(), requested.end(), name) != requested.end();
    };

    const SolverBudget budget = budget_of(opt);
    InputSource src = open_stream(opt);
    int errors = 0, budget_hits = 0, record = 0;
    while (auto rec = src.stream->next()) {
        ++record;
        if (!rec->graph) {
            std::cerr << "error: " << rec->error << "\n";
            ++errors;
            continue;
        }
        const Graph& g = *rec->graph;
        json out;
        out["type"] = "invariants";
        out["record"] = record;
        out["n"] = g.vertex_count();
        out["m"] = g.edge_count();
        try {
            for (const auto& name : kInvariantOrder) {
                if (!wanted(name)) continue;
                if (name == "alpha") out["alpha"] = independence_number(g, budget).alpha;
                if (name == "omega") out["omega"] = clique_number(g, budget).omega;
                if (name == "chi") out["chi"] = chromatic_number(g, budget).chi;
                if (name == "rho") out["rho"] = potential(g, budget);
                if (name == "f") out["f"] = folkman_number(g, budget).f;
                if (name == "mir") out["mir"] = min_independence_ratio(g).mir.str();
                if (name == "hall") out["hall"] = min_independence_ratio(g).hall_ratio.str();
                if (name == "girth") {
                    auto c = shortest_cycle(g);
                    out["girth"] = c ? json(c->girth) : json(nullptr);
                }
                if (name == "oct") out["oct"] = odd_cycle_transversal(g, budget).size;
                if (name == "deletion") out["deletion"] = min_deletion_to_half_stable(g).k;
            }
        } catch (const BudgetExceeded& e) {
            out["budget_exhausted"] = e.what();
            ++budget_hits;
        }
        if (opt.json_output) {
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "record " << record;
            for (auto& [key, value] : out.items()) {
                if (key == "type" || key == "record") continue;
                std::cout << " " << key << "="
                          << (value.is_string() ? value.get<std::string>() : value.dump());
            }
            std::cout << "\n";
        }
    }
    if (errors > 0) return kExitUsage;
    if (budget_hits > 0) return kExitBudget;
    return kExitPass;
}

// ------------------------------------------------------------- verify ----

int run_verify(const Options& opt, const std::string& invariant, int corpus_n, bool dedup,
               bool use_file) {
    const SolverBudget budget = budget_of(opt);
    VerificationReport report;
    if (use_file) {
        InputSource src = open_stream(opt);
        report = batch_verify(stream_source(*src.stream), invariant, opt.jobs, budget,
                              "file:" + opt.input);
    } else {
        if (corpus_n < 0) throw MalformedInput("verify: need --n or --in");
        const int labeled_cap = opt.max_n > 0 ? opt.max_n : kLabeledEnumerationCap;
        const int dedup_cap = opt.max_n > 0 ? opt.max_n : kDedupEnumerationCap;
        GraphEnumerator en(corpus_n, dedup, labeled_cap, dedup_cap);
        std::string descriptor =
            (dedup ? "canonical n=" : "labeled n=") + std::to_string(corpus_n);
        report = batch_verify(enumerator_source(en), invariant, opt.jobs, budget, descriptor);
    }

    for (const auto& v : report.violations) {
        if (opt.json_output) {
            json rec;
            rec["type"] = "violation";
            rec["record"] = v.record;
            rec["graph6"] = v.graph6;
            rec["invariant"] = v.invariant;
            rec["details"] = v.details;
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << "violation record " << v.record << " graph6=" << v.graph6
                      << " details: " << v.details << "\n";
        }
    }
    for (const auto& e : report.input_errors) std::cerr << "error: " << e << "\n";

    if (opt.json_output) {
        json rec;
        rec["type"] = "summary";
        rec["invariant"] = report.invariant;
        rec["corpus"] = report.corpus;
        rec["checked"] = report.checked;
        rec["skipped"] = report.skipped;
        rec["violations"] = static_cast<int>(report.violations.size());
        rec["input_errors"] = static_cast<int>(report.input_errors.size());
        rec["pass"] = report.pass();
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << report.invariant << ": corpus '" << report.corpus << "': "
                  << report.checked << " checked, " << report.skipped << " skipped, "
                  << report.violations.size() << " violations, "
                  << report.input_errors.size() << " input errors -> "
                  << (report.pass() ? "PASS" : "FAIL") << "\n";
    }
    std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";

    if (!report.input_errors.empty()) return kExitUsage;
    if (!report.violations.empty()) return kExitViolations;
    if (report.skipped > 0) return kExitBudget;
    return kExitPass;
}

// -------------------------------------------------------------- reduce ----

json trace_json(const ReductionTrace& trace) {
    json rec;
    rec["kind"] = reduction_kind_name(trace.kind);
    rec["parameters"] = trace.parameters;
    rec["removed"] = vertex_set_json(trace.removed);
    json parts = json::array();
    for (VertexSet p : trace.merged_parts) parts.push_back(vertex_set_json(p));
    rec["merged_parts"] = parts;
    rec["old_to_new"] = trace.old_to_new;
    if (trace.merged_a >= 0) rec["merged_a"] = trace.merged_a;
    if (trace.merged_b >= 0) rec["merged_b"] = trace.merged_b;
    if (trace.new_vertex >= 0) rec["new_vertex"] = trace.new_vertex;
    return rec;
}

int run_reduce(const Options& opt, const std::string& kind, const std::string& cycle_arg,
               int x, int y, int u, int v) {
    Graph g = read_single_graph(opt);
    ReductionResult result;
    if (kind == "even-cycle") {
        std::vector<int> cycle;
        if (!cycle_arg.empty()) {
            cycle = parse_vertex_list(cycle_arg);
        } else {
            auto found = find_induced_even_cycle(g);
            if (!found) throw MalformedInput("reduce even-cycle: no induced even cycle");
            cycle = *found;
        }
        result = even_cycle_contraction(g, cycle);
    } else if (kind == "diamond") {
        if (x < 0) {
            auto found = find_diamond(g);
            if (!found) throw MalformedInput("reduce diamond: no diamond configuration");
            x = found->x;
            y = found->y;
            u = found->u;
            v = found->v;
        }
        result = diamond_reduction(g, x, y, u, v);
    } else {  // apex
        if (x < 0) {
            auto edges = g.edges();
            if (edges.empty()) throw MalformedInput("reduce apex: graph has no edge");
            x = edges.front().first;
            y = edges.front().second;
        }
        result = apex_replacement(g, x, y);
    }

    if (opt.json_output) {
        json rec;
        rec["type"] = "reduction";
        rec["trace"] = trace_json(result.trace);
        rec["n"] = result.graph.vertex_count();
        rec["m"] = result.graph.edge_count();
        rec["graph6"] = write_graph6(result.graph);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "kind: " << reduction_kind_name(result.trace.kind) << "\n";
        std::cout << "parameters:";
        for (int p : result.trace.parameters) std::cout << " " << p;
        std::cout << "\n";
        if (!result.trace.removed.empty())
            std::cout << "removed: " << vertex_set_str(result.trace.removed) << "\n";
        for (VertexSet p : result.trace.merged_parts)
            std::cout << "merged: " << vertex_set_str(p) << "\n";
        std::cout << "map:";
        for (int m : result.trace.old_to_new) std::cout << " " << m;
        std::cout << "\n";
        std::cout << "result: " << write_graph6(result.graph) << " (n="
                  << result.graph.vertex_count() << ", m=" << result.graph.edge_count()
                  << ")\n";
    }
    return kExitPass;
}

// --------------------------------------------------------------- audit ----

int run_audit_inequalities(const Options& opt) {
    Graph g = read_single_graph(opt);
    ProofInequalityReport report = audit_proof_inequalities(g);
    if (opt.json_output) {
        json rec;
        rec["type"] = "inequality-audit";
        rec["chi"] = report.chi;
        rec["subset_chi_inequality_holds"] = report.subset_chi_inequality_holds;
        if (report.violating_subset)
            rec["violating_subset"] = vertex_set_json(*report.violating_subset);
        rec["diamond_free"] = report.diamond_free;
        rec["even_hole_free"] = report.even_hole_free;
        json chains = json::array();
        for (const auto& c : report.even_cycle_chains) {
            json entry;
            entry["cycle"] = c.cycle;
            entry["rho_h_prime"] = c.rho_h_prime;
            entry["alpha_h"] = c.alpha_h;
            entry["alpha_h_prime"] = c.alpha_h_prime;
            entry["p"] = c.half_length;
            entry["alpha_step_within_bound"] = c.alpha_step_within_bound;
            chains.push_back(entry);
        }
        rec["even_cycle_chains"] = chains;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "chi: " << report.chi << "\n";
        std::cout << "chi(G) >= chi(G[X]) + chi(G-X) - 1 for all X: "
                  << (report.subset_chi_inequality_holds ? "holds" : "fails") << "\n";
        if (report.violating_subset)
            std::cout << "violating X: " << vertex_set_str(*report.violating_subset) << "\n";
        std::cout << "diamond-free: " << (report.diamond_free ? "yes" : "no") << "\n";
        std::cout << "even-hole-free: " << (report.even_hole_free ? "yes" : "no") << "\n";
        for (const auto& c : report.even_cycle_chains) {
            std::cout << "even cycle";
            for (int w : c.cycle) std::cout << " " << w;
            std::cout << ": rho(H')=" << c.rho_h_prime << " alpha(H)=" << c.alpha_h
                      << " alpha(H')=" << c.alpha_h_prime << " p=" << c.half_length
                      << " alpha-step<=p-1: " << (c.alpha_step_within_bound ? "yes" : "no")
                      << "\n";
        }
    }
    return kExitPass;
}

int run_audit_conclusion(const Options& opt, int k, int ell, const std::string& c_text) {
    GenMycielskiAudit audit = audit_generalized_mycielski(k, ell, parse_rational(c_text));
    if (opt.json_output) {
        json rec;
        rec["type"] = "conclusion-audit";
        rec["k"] = audit.k;
        rec["ell"] = audit.ell;
        rec["c"] = audit.c.str();
        rec["formula_vertices"] = audit.formula_vertices;
        rec["formula_alpha2"] = audit.formula_alpha2;
        rec["exact_vertices"] = audit.exact_vertices ? json(*audit.exact_vertices) : json(nullptr);
        rec["exact_alpha2"] = audit.exact_alpha2 ? json(*audit.exact_alpha2) : json(nullptr);
        rec["exact_chi"] = audit.exact_chi ? json(*audit.exact_chi) : json(nullptr);
        rec["f2_expression"] = audit.f2_expression.str();
        rec["expression_reaches_chi"] = audit.expression_reaches_chi;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "M'_{" << k << "," << ell << "}: formula |V|=" << audit.formula_vertices
                  << " alpha_2=" << audit.formula_alpha2;
        if (audit.exact_vertices) std::cout << " | exact |V|=" << *audit.exact_vertices;
        if (audit.exact_alpha2) std::cout << " alpha_2=" << *audit.exact_alpha2;
        if (audit.exact_chi) std::cout << " chi=" << *audit.exact_chi;
        std::cout << "\n";
        std::cout << "f_2 expression at c=" << audit.c.str() << ": " << audit.f2_expression.str()
                  << (audit.expression_reaches_chi ? " >= " : " < ") << k + 1
                  << (audit.expression_reaches_chi ? " (inequality holds)"
                                                   : " (inequality fails)")
                  << "\n";
    }
    return kExitPass;
}

int run_audit_mir(const Options& opt, int k_max) {
    auto entries = mycielski_mir_report(k_max);
    bool all_meet = true;
    for (const auto& e : entries) {
        if (e.bound_claimed && !e.meets_bound) all_meet = false;
        if (opt.json_output) {
            json rec;
            rec["type"] = "mir-mycielski";
            rec["k"] = e.k;
            rec["n"] = e.vertices;
            rec["mir"] = e.mir.str();
            rec["argmin"] = vertex_set_json(e.argmin);
            rec["bound"] = e.bound.str();
            rec["bound_claimed"] = e.bound_claimed;
            rec["meets_bound"] = e.meets_bound;
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << "M_" << e.k << " (n=" << e.vertices << "): mir=" << e.mir.str()
                      << " argmin=" << vertex_set_str(e.argmin) << " bound 1/" << e.k << ": "
                      << (!e.bound_claimed ? "not claimed for k < 3"
                                           : (e.meets_bound ? "meets" : "fails"))
                      << "\n";
        }
    }
    return all_meet ? kExitPass : kExitViolations;
}

int run_audit_reed_gap(const Options& opt, int n_max, int k) {
    ReedGapReport report = reed_gap(n_max, k);
    if (opt.json_output) {
        json rec;
        rec["type"] = "reed-gap";
        rec["n_max"] = report.n_max;
        rec["k"] = report.k;
        rec["graphs_considered"] = report.graphs_considered;
        rec["near_bipartite"] = report.near_bipartite_count;
        rec["max_transversal"] = report.max_transversal;
        rec["extremal_graph6"] = report.extremal_graph6;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "k=" << k << ", n<=" << n_max << ": " << report.near_bipartite_count
                  << " of " << report.graphs_considered
                  << " graphs are k-near-bipartite; max odd cycle transversal = "
                  << report.max_transversal << "\n";
        for (const auto& g6 : report.extremal_graph6) std::cout << "extremal: " << g6 << "\n";
    }
    return kExitPass;
}

// ------------------------------------------------------------- explore ----

int run_explore_alpha_p(const Options& opt, int p) {
    Graph g = read_single_graph(opt);
    AlphaPResult r = alpha_p(g, p);
    if (opt.json_output) {
        json rec;
        rec["type"] = "alpha-p";
        rec["p"] = p;
        rec["size"] = r.size;
        rec["witness"] = vertex_set_json(r.witness);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "alpha_" << p << " = " << r.size << " witness "
                  << vertex_set_str(r.witness) << "\n";
    }
    return kExitPass;
}

int run_explore_f_p(const Options& opt, int p, const std::string& c_text) {
    Graph g = read_single_graph(opt);
    FpResult r = f_p_objective(g, p, parse_rational(c_text));
    if (opt.json_output) {
        json rec;
        rec["type"] = "f-p";
        rec["p"] = p;
        rec["c"] = parse_rational(c_text).str();
        rec["value"] = r.value.str();
        rec["witness"] = vertex_set_json(r.witness);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "f_" << p << " = " << r.value.str() << " witness "
                  << vertex_set_str(r.witness) << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for the Folkman bound chi(G) <= f(G) and its proof machinery"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    if (const char* env = std::getenv("FOLKMAN_MAX_N")) opt.max_n = std::atoi(env);
    if (const char* env = std::getenv("FOLKMAN_TIME_LIMIT_MS"))
        opt.budget_ms = static_cast<std::uint64_t>(std::atoll(env));
    if (opt.jobs < 1) opt.jobs = 1;

    app.add_flag("--json", opt.json_output, "line-delimited JSON records");
    app.add_option("--max-n", opt.max_n, "size cap override (env FOLKMAN_MAX_N)");
    auto* budget_flag =
        app.add_option("--budget-ms", "wall-time budget per solver call (env FOLKMAN_TIME_LIMIT_MS)");
    app.add_option("--budget-nodes", "search-node budget per solver call");

    // compute
    auto* compute = app.add_subcommand("compute", "invariants of each input graph");
    std::string invariants = "alpha,chi,rho,f";
    compute->add_option("--in", opt.input, "input path or - for stdin");
    compute->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    compute->add_option("--invariants", invariants, "comma-separated invariant names");
    compute->add_flag("--strict", opt.strict, "abort on the first malformed record");

    // verify
    auto* verify = app.add_subcommand("verify", "sweep an invariant over a corpus");
    std::string verify_invariant;
    int verify_n = -1;
    bool verify_dedup = false;
    bool verify_file = false;
    verify->add_option("invariant", verify_invariant,
                       "folkman | hajnal | half-stable-deletion | near-bipartite-equiv | "
                       "mycielski-chi | roundtrip")
        ->required();
    verify->add_option("--n", verify_n, "enumerate graphs on exactly n vertices");
    verify->add_flag("--dedup", verify_dedup, "one representative per isomorphism class");
    verify->add_option("--in", opt.input, "verify a graph6 corpus file instead")
        ->each([&](const std::string&) { verify_file = true; });
    verify->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    verify->add_option("--jobs", opt.jobs, "worker threads");
    verify->add_flag("--strict", opt.strict, "abort on the first malformed record");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named graph as graph6");
    construct->require_subcommand(1);
    int c_n = 5, c_a = 2, c_b = 3, c_k = 3, c_ell = 2;
    std::string c_in;
    auto* c_cycle = construct->add_subcommand("cycle", "cycle C_n");
    c_cycle->add_option("--n", c_n, "length")->required();
    auto* c_complete = construct->add_subcommand("complete", "complete graph K_n");
    c_complete->add_option("--n", c_n, "order")->required();
    auto* c_kbip = construct->add_subcommand("kbipartite", "complete bipartite K_{a,b}");
    c_kbip->add_option("--a", c_a, "left side")->required();
    c_kbip->add_option("--b", c_b, "right side")->required();
    construct->add_subcommand("fig1", "hexagon plus triangle gadget");
    auto* c_myc = construct->add_subcommand("mycielski",
                                            "iterated Mycielski graph M_k, or mu(G) with --in");
    c_myc->add_option("--k", c_k, "iteration count (M_k)");
    c_myc->add_option("--in", c_in, "apply one Mycielski step to this graph instead");
    c_myc->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    auto* c_gen = construct->add_subcommand("gen-mycielski", "generalized Mycielski M'_{k,ell}");
    c_gen->add_option("--k", c_k, "iteration parameter")->required();
    c_gen->add_option("--ell", c_ell, "base odd cycle C_{2 ell + 1}")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "apply one proof reduction");
    reduce->require_subcommand(1);
    std::string r_cycle;
    int r_x = -1, r_y = -1, r_u = -1, r_v = -1;
    auto* r_even = reduce->add_subcommand("even-cycle", "contract an induced even cycle");
    r_even->add_option("--in", opt.input, "input path or - for stdin");
    r_even->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    r_even->add_option("--cycle", r_cycle, "comma-separated cycle vertices (default: search)");
    auto* r_diamond = reduce->add_subcommand("diamond", "delete xy, merge common neighbours u,v");
    r_diamond->add_option("--in", opt.input, "input path or - for stdin");
    r_diamond->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    r_diamond->add_option("--x", r_x, "x (default: search)");
    r_diamond->add_option("--y", r_y, "y");
    r_diamond->add_option("--u", r_u, "u");
    r_diamond->add_option("--v", r_v, "v");
    auto* r_apex = reduce->add_subcommand("apex", "delete xy, add apex over their common neighbours");
    r_apex->add_option("--in", opt.input, "input path or - for stdin");
    r_apex->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    r_apex->add_option("--x", r_x, "x (default: first edge)");
    r_apex->add_option("--y", r_y, "y");

    // audit
    auto* audit = app.add_subcommand("audit", "proof and conclusion reports");
    audit->require_subcommand(1);
    int a_k = 3, a_ell = 2, a_kmax = 4, a_nmax = 6, a_gapk = 1;
    std::string a_c = "3/2";
    auto* a_ineq = audit->add_subcommand("inequalities", "per-subset chromatic inequality audit");
    a_ineq->add_option("--in", opt.input, "input path or - for stdin");
    a_ineq->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    auto* a_conc = audit->add_subcommand("conclusion", "generalized Mycielski arithmetic");
    a_conc->add_option("--k", a_k, "iteration parameter")->required();
    a_conc->add_option("--ell", a_ell, "base cycle parameter")->required();
    a_conc->add_option("--c", a_c, "coefficient c as a rational, e.g. 3/2");
    auto* a_mir = audit->add_subcommand("mir-mycielski", "exact mir(M_k) against the 1/k bound");
    a_mir->add_option("--k-max", a_kmax, "largest k (<= 4)");
    auto* a_gap = audit->add_subcommand("reed-gap", "bipartization gap of k-near-bipartite graphs");
    a_gap->add_option("--n-max", a_nmax, "largest vertex count (<= 8)");
    a_gap->add_option("--k", a_gapk, "near-bipartiteness parameter");

    // explore
    auto* explore = app.add_subcommand("explore", "alpha_p and the f_p objective");
    explore->require_subcommand(1);
    int e_p = 2;
    std::string e_c = "1";
    auto* e_alpha = explore->add_subcommand("alpha-p", "largest p-colourable induced subgraph");
    e_alpha->add_option("--in", opt.input, "input path or - for stdin");
    e_alpha->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    e_alpha->add_option("--p", e_p, "chromatic bound p")->required();
    auto* e_fp = explore->add_subcommand("f-p", "max |S| - c (alpha_p(S) - p)");
    e_fp->add_option("--in", opt.input, "input path or - for stdin");
    e_fp->add_option("--format", opt.format, "g6 | dimacs | edgelist");
    e_fp->add_option("--p", e_p, "chromatic bound p")->required();
    e_fp->add_option("--c", e_c, "coefficient c as a rational");

    try {
        app.parse(argc, argv);
        if (budget_flag->count()) opt.budget_ms = budget_flag->as<std::uint64_t>();
        if (app.get_option("--budget-nodes")->count())
            opt.budget_nodes = app.get_option("--budget-nodes")->as<std::uint64_t>();

        if (*compute) return run_compute(opt, invariants);
        if (*verify)
            return run_verify(opt, verify_invariant, verify_n, verify_dedup, verify_file);
        if (*construct) {
            if (*c_cycle) emit_graph(cycle_graph(c_n), "cycle", opt);
            if (*c_complete) emit_graph(complete_graph(c_n), "complete", opt);
            if (*c_kbip) emit_graph(complete_bipartite_graph(c_a, c_b), "kbipartite", opt);
            if (*construct->get_subcommand("fig1")) emit_graph(fig1_gadget(), "fig1", opt);
            if (*c_myc) {
                if (!c_in.empty()) {
                    Options in_opt = opt;
                    in_opt.input = c_in;
                    emit_graph(mycielski(read_single_graph(in_opt)), "mycielski", opt);
                } else {
                    emit_graph(mycielski_iterated(c_k), "mycielski", opt);
                }
            }
            if (*c_gen) emit_graph(generalized_mycielski(c_k, c_ell), "gen-mycielski", opt);
            return kExitPass;
        }
        if (*reduce) {
            if (*r_even) return run_reduce(opt, "even-cycle", r_cycle, -1, -1, -1, -1);
            if (*r_diamond) return run_reduce(opt, "diamond", "", r_x, r_y, r_u, r_v);
            if (*r_apex) return run_reduce(opt, "apex", "", r_x, r_y, -1, -1);
        }
        if (*audit) {
            if (*a_ineq) return run_audit_inequalities(opt);
            if (*a_conc) return run_audit_conclusion(opt, a_k, a_ell, a_c);
            if (*a_mir) return run_audit_mir(opt, a_kmax);
            if (*a_gap) return run_audit_reed_gap(opt, a_nmax, a_gapk);
        }
        if (*explore) {
            if (*e_alpha) return run_explore_alpha_p(opt, e_p);
            if (*e_fp) return run_explore_f_p(opt, e_p, e_c);
        }
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
