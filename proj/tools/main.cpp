#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "closedgraph/closedness.hpp"
#include "closedgraph/error.hpp"
#include "closedgraph/graph.hpp"
#include "closedgraph/groebner.hpp"
#include "closedgraph/intervals.hpp"
#include "closedgraph/recognition.hpp"

using json = nlohmann::json;

namespace {

// exit codes: 0 closed, 1 not closed, 2 error
constexpr int exit_closed = 0;
constexpr int exit_not_closed = 1;
constexpr int exit_error = 2;

cg::Graph read_graph(const std::string &path) {
    if (path.empty() || path == "-")
        return cg::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in)
        throw cg::error("cannot open " + path);
    return cg::parse_edge_list(in);
}

std::string join(const std::vector<int> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

// labels listed per vertex: vertex v gets label pos(v)
std::vector<int> labels_of(const cg::VertexOrdering &sigma) {
    std::vector<int> labels(sigma.order.size());
    for (std::size_t v = 1; v <= sigma.order.size(); ++v)
        labels[v - 1] = sigma.pos[v];
    return labels;
}

json violation_json(const cg::UmbrellaViolation &v) {
    return {{"u", v.u},
            {"v", v.v},
            {"w", v.w},
            {"present_edge", {v.present_edge.first, v.present_edge.second}},
            {"missing_edge", {v.missing_edge.first, v.missing_edge.second}}};
}

void print_violation(const cg::UmbrellaViolation &v) {
    std::cout << "status: not closed\n";
    std::cout << "violation: u=" << v.u << " v=" << v.v << " w=" << v.w << "\n";
    std::cout << "present edge: " << v.present_edge.first << " "
              << v.present_edge.second << "\n";
    std::cout << "missing edge: " << v.missing_edge.first << " "
              << v.missing_edge.second << "\n";
}

// shared entry for the commands that need a closed labeling first
struct Relabeled {
    cg::LabeledGraph lg;
    bool assumed; // labels taken from the input as-is
};

std::optional<Relabeled> obtain_closed(const cg::Graph &g, bool assume_closed,
                                       bool use_json, int &exit_code) {
    if (assume_closed) {
        if (auto viol = cg::find_closedness_violation(g)) {
            if (use_json) {
                json j{{"status", "not_closed"},
                       {"closedness_violation",
                        {{"edge1", {viol->edge1.first, viol->edge1.second}},
                         {"edge2", {viol->edge2.first, viol->edge2.second}},
                         {"missing_edge",
                          {viol->missing_edge.first, viol->missing_edge.second}}}}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "status: not closed\n";
                std::cout << "edges: (" << viol->edge1.first << ","
                          << viol->edge1.second << ") (" << viol->edge2.first
                          << "," << viol->edge2.second << ")\n";
                std::cout << "missing edge: " << viol->missing_edge.first << " "
                          << viol->missing_edge.second << "\n";
            }
            exit_code = exit_not_closed;
            return std::nullopt;
        }
        return Relabeled{{g, cg::VertexOrdering::identity(g.n)}, true};
    }

    auto r = cg::recognize_proper_interval(g);
    if (!r.recognized()) {
        if (use_json)
            std::cout << json{{"status", "not_closed"},
                              {"violation", violation_json(r.violation())}}
                             .dump()
                      << "\n";
        else
            print_violation(r.violation());
        exit_code = exit_not_closed;
        return std::nullopt;
    }
    return Relabeled{cg::ordering_to_closed_labeling(g, r.ordering()), false};
}

int cmd_recognize(const std::string &input, bool use_json, bool verify) {
    cg::Graph g = read_graph(input);
    auto r = cg::recognize_proper_interval(g);

    if (!r.recognized()) {
        const auto &v = r.violation();
        bool edges_ok = g.has_edge(v.present_edge.first, v.present_edge.second) &&
                        !g.has_edge(v.missing_edge.first, v.missing_edge.second);
        std::optional<bool> oracle_agrees;
        if (verify && g.n <= 9)
            oracle_agrees = !cg::brute_force_closed(g).has_value();
        if (verify && (!edges_ok || (oracle_agrees && !*oracle_agrees))) {
            std::cerr << "error: verification disagreed with the recognizer\n";
            return exit_error;
        }
        if (use_json) {
            json j{{"status", "not_closed"}, {"violation", violation_json(v)}};
            if (verify)
                j["verify"] = {{"violation_edges", edges_ok},
                               {"oracle", oracle_agrees ? json(*oracle_agrees)
                                                        : json(nullptr)}};
            std::cout << j.dump() << "\n";
        } else {
            print_violation(v);
            if (verify) {
                std::cout << "verify: violation edges ok\n";
                std::cout << (oracle_agrees ? "verify: oracle agrees\n"
                                            : "verify: oracle skipped (n > 9)\n");
            }
        }
        return exit_not_closed;
    }

    const auto &sigma = r.ordering();
    cg::Graph relabeled = cg::apply_labeling(g, sigma);
    bool closed_ok = true;
    std::optional<bool> gb_ok;
    if (verify) {
        closed_ok = cg::is_closed_labeling(relabeled);
        if (g.n <= 12 && g.m <= 40)
            gb_ok = cg::is_quadratic_groebner(relabeled);
        if (!closed_ok || (gb_ok && !*gb_ok)) {
            std::cerr << "error: verification disagreed with the recognizer\n";
            return exit_error;
        }
    }

    if (use_json) {
        json j{{"status", "closed"},
               {"ordering", sigma.order},
               {"labeling", labels_of(sigma)}};
        if (verify)
            j["verify"] = {{"closed_labeling", closed_ok},
                           {"groebner", gb_ok ? json(*gb_ok) : json(nullptr)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "status: closed\n";
        std::cout << "ordering: " << join(sigma.order) << "\n";
        std::cout << "labeling: " << join(labels_of(sigma)) << "\n";
        if (verify) {
            std::cout << "verify: closed labeling ok\n";
            std::cout << (gb_ok ? "verify: groebner ok\n"
                                : "verify: groebner skipped (out of range)\n");
        }
    }
    return exit_closed;
}

int cmd_intervals(const std::string &input, bool use_json, bool assume_closed,
                  bool check) {
    cg::Graph g = read_graph(input);
    int code = exit_error;
    auto got = obtain_closed(g, assume_closed, use_json, code);
    if (!got)
        return code;

    cg::IntervalRep rep = cg::build_representation(got->lg);
    if (check &&
        (cg::intersection_graph(rep) != got->lg.graph || !cg::is_proper(rep))) {
        std::cerr << "error: representation failed its round-trip check\n";
        return exit_error;
    }

    const int n = rep.n;
    if (use_json) {
        json rows = json::array();
        json approx = json::array();
        for (const auto &iv : rep.intervals) {
            rows.push_back({iv.left, iv.right});
            approx.push_back({static_cast<double>(iv.left) / n,
                              static_cast<double>(iv.right) / n});
        }
        json j{{"status", "closed"},
               {"labeling", labels_of(got->lg.labeling)},
               {"denominator", n},
               {"intervals", rows},
               {"approx", approx}};
        if (check)
            j["check"] = "ok";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "labeling: " << join(labels_of(got->lg.labeling)) << "\n";
        std::cout << cg::write_intervals(rep);
        char buf[96];
        for (int k = 1; k <= n; ++k) {
            const auto &iv = rep.intervals[k - 1];
            std::snprintf(buf, sizeof buf, "# approx %d [%.6f, %.6f]", k,
                          static_cast<double>(iv.left) / n,
                          static_cast<double>(iv.right) / n);
            std::cout << buf << "\n";
        }
        if (check)
            std::cout << "check: ok\n";
    }
    return exit_closed;
}

int cmd_facets(const std::string &input, bool use_json, bool assume_closed) {
    cg::Graph g = read_graph(input);
    int code = exit_error;
    auto got = obtain_closed(g, assume_closed, use_json, code);
    if (!got)
        return code;

    cg::FacetList facets = cg::facets_of_closed(got->lg);
    if (use_json) {
        json rows = json::array();
        for (const auto &f : facets)
            rows.push_back({f.a, f.b});
        std::cout << json{{"status", "closed"},
                          {"labeling", labels_of(got->lg.labeling)},
                          {"facets", rows}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "labeling: " << join(labels_of(got->lg.labeling)) << "\n";
        for (const auto &f : facets)
            std::cout << f.a << " " << f.b << "\n";
    }
    return exit_closed;
}

int cmd_c1p(const std::string &input, bool use_json, bool assume_closed) {
    cg::Graph g = read_graph(input);
    int code = exit_error;
    auto got = obtain_closed(g, assume_closed, use_json, code);
    if (!got)
        return code;

    cg::FacetList facets = cg::facets_of_closed(got->lg);
    bool ok = cg::consecutive_ones(cg::incidence_matrix(facets, g.n));
    if (use_json)
        std::cout << json{{"status", "closed"},
                          {"labeling", labels_of(got->lg.labeling)},
                          {"c1p", ok}}
                         .dump()
                  << "\n";
    else {
        std::cout << "labeling: " << join(labels_of(got->lg.labeling)) << "\n";
        std::cout << (ok ? "c1p: true\n" : "c1p: false\n");
    }
    return exit_closed;
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<unsigned long long>(i);
    return f;
}

int cmd_oracle(const std::string &input, bool use_json, int limit) {
    cg::Graph g = read_graph(input);
    auto sigma = cg::brute_force_closed(g, limit);
    if (sigma) {
        if (use_json)
            std::cout << json{{"status", "closed"},
                              {"labeling", labels_of(*sigma)}}
                             .dump()
                      << "\n";
        else {
            std::cout << "closed\n";
            std::cout << "labeling: " << join(labels_of(*sigma)) << "\n";
        }
        return exit_closed;
    }
    unsigned long long count = factorial(g.n);
    if (use_json)
        std::cout << json{{"status", "not_closed"}, {"labelings", count}}.dump()
                  << "\n";
    else
        std::cout << "not closed (" << count << "/" << count
                  << " labelings fail)\n";
    return exit_not_closed;
}

int cmd_gb(const std::string &input, bool use_json) {
    cg::Graph g = read_graph(input);
    auto witness = cg::find_groebner_failure(g);
    long long pairs = g.m * (g.m - 1) / 2;
    if (!witness) {
        if (use_json)
            std::cout << json{{"status", "closed"},
                              {"quadratic_gb", true},
                              {"s_pairs", pairs}}
                             .dump()
                      << "\n";
        else
            std::cout << "quadratic GB: yes (" << pairs
                      << (pairs == 1 ? " S-pair" : " S-pairs")
                      << ", all reduce to 0)\n";
        return exit_closed;
    }
    std::string remainder = cg::to_string(witness->remainder, g.n);
    if (use_json) {
        json j{{"status", "not_closed"},
               {"quadratic_gb", false},
               {"failing_pair",
                {{witness->edge1.first, witness->edge1.second},
                 {witness->edge2.first, witness->edge2.second}}},
               {"remainder", remainder}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "quadratic GB: no\n";
        std::cout << "failing pair: (" << witness->edge1.first << ","
                  << witness->edge1.second << "),(" << witness->edge2.first
                  << "," << witness->edge2.second << ")\n";
        std::cout << "remainder: " << remainder << "\n";
    }
    return exit_not_closed;
}

int cmd_gen(const std::string &kind_name, std::optional<int> n,
            std::optional<long long> edges, std::optional<double> length,
            std::uint64_t seed) {
    static const std::map<std::string, cg::GenKind> kinds{
        {"path", cg::GenKind::path},
        {"cycle", cg::GenKind::cycle},
        {"complete", cg::GenKind::complete},
        {"claw", cg::GenKind::claw},
        {"star", cg::GenKind::star},
        {"random_unit_interval", cg::GenKind::random_unit_interval},
        {"random_gnm", cg::GenKind::random_gnm}};
    auto it = kinds.find(kind_name);
    if (it == kinds.end())
        throw cg::error("unknown generator kind: " + kind_name);
    cg::GenKind kind = it->second;

    if (kind == cg::GenKind::claw) {
        if (n)
            throw cg::error("claw takes no vertex count");
    } else if (!n) {
        throw cg::error("generator needs a vertex count");
    }
    if (kind == cg::GenKind::random_gnm && !edges)
        throw cg::error("random_gnm needs --edges");
    if (kind == cg::GenKind::random_unit_interval && !length)
        throw cg::error("random_unit_interval needs --length");

    cg::GenParams params;
    params.n = n.value_or(0);
    params.edges = edges.value_or(0);
    params.length = length.value_or(0.0);
    std::cout << cg::write_edge_list(cg::generate(kind, params, seed));
    return exit_closed;
}

int cmd_bench(const std::vector<int> &sizes, double density,
              std::uint64_t seed) {
    if (density <= 0)
        throw cg::error("density must be positive");
    for (int n : sizes)
        if (n < 1)
            throw cg::error("sizes must be positive");
    std::cout << "n,m,recognize_ms\n";
    for (int n : sizes) {
        double length = std::min(1.0, density / (2.0 * n));
        cg::Graph g = cg::generate(cg::GenKind::random_unit_interval,
                                   {.n = n, .length = length}, seed);
        auto t0 = std::chrono::steady_clock::now();
        auto r = cg::recognize_proper_interval(g);
        auto t1 = std::chrono::steady_clock::now();
        if (!r.recognized())
            throw cg::error("benchmark graph was not recognized");
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d,%lld,%.3f", n, g.m, ms);
        std::cout << buf << "\n";
    }
    return exit_closed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"closed graph recognition and certificates"};
    app.require_subcommand(1);

    std::string input = "-";
    bool use_json = false, verify = false, assume_closed = false, check = false;
    int limit = 9;
    std::uint64_t seed = 0;

    auto *recognize = app.add_subcommand(
        "recognize", "decide closedness and emit an ordering or a violation");
    recognize->add_option("input", input, "edge list file, - for stdin");
    recognize->add_flag("--json", use_json, "machine readable output");
    recognize->add_flag("--verify", verify,
                        "re-check the verdict against independent oracles");

    auto *intervals = app.add_subcommand(
        "intervals", "exact interval representation of the closed relabeling");
    intervals->add_option("input", input, "edge list file, - for stdin");
    intervals->add_flag("--json", use_json, "machine readable output");
    intervals->add_flag("--assume-closed", assume_closed,
                        "trust the input labels instead of relabeling");
    intervals->add_flag("--check", check,
                        "verify the round-trip and properness before printing");

    auto *facets = app.add_subcommand(
        "facets", "maximal cliques of the closed relabeling as label intervals");
    facets->add_option("input", input, "edge list file, - for stdin");
    facets->add_flag("--json", use_json, "machine readable output");
    facets->add_flag("--assume-closed", assume_closed,
                     "trust the input labels instead of relabeling");

    auto *c1p = app.add_subcommand(
        "c1p", "consecutive-ones verdict for the facet incidence matrix");
    c1p->add_option("input", input, "edge list file, - for stdin");
    c1p->add_flag("--json", use_json, "machine readable output");
    c1p->add_flag("--assume-closed", assume_closed,
                  "trust the input labels instead of relabeling");

    auto *oracle = app.add_subcommand(
        "oracle", "exhaustive all-labelings verdict (small graphs only)");
    oracle->add_option("input", input, "edge list file, - for stdin");
    oracle->add_flag("--json", use_json, "machine readable output");
    oracle->add_option("--limit", limit, "largest allowed vertex count")
        ->capture_default_str();

    auto *gb = app.add_subcommand(
        "gb", "quadratic Groebner basis test for the edge binomials");
    gb->add_option("input", input, "edge list file, - for stdin");
    gb->add_flag("--json", use_json, "machine readable output");

    std::string kind;
    std::optional<int> gen_n;
    std::optional<long long> gen_edges;
    std::optional<double> gen_length;
    auto *gen = app.add_subcommand("gen", "write a generated edge list");
    gen->add_option("kind", kind,
                    "path|cycle|complete|claw|star|random_unit_interval|random_gnm")
        ->required();
    gen->add_option("n", gen_n, "vertex count");
    gen->add_option("--edges", gen_edges, "edge count (random_gnm)");
    gen->add_option("--length", gen_length, "interval length (random_unit_interval)");
    gen->add_option("--seed", seed, "random seed");

    std::vector<int> sizes;
    double density = 20.0;
    auto *bench = app.add_subcommand(
        "bench", "time recognition on random unit-interval graphs (CSV)");
    bench->add_option("--sizes", sizes, "vertex counts to run")
        ->required()
        ->delimiter(',');
    bench->add_option("--density", density, "average degree of the test graphs")
        ->capture_default_str();
    bench->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (*recognize)
            return cmd_recognize(input, use_json, verify);
        if (*intervals)
            return cmd_intervals(input, use_json, assume_closed, check);
        if (*facets)
            return cmd_facets(input, use_json, assume_closed);
        if (*c1p)
            return cmd_c1p(input, use_json, assume_closed);
        if (*oracle)
            return cmd_oracle(input, use_json, limit);
        if (*gb)
            return cmd_gb(input, use_json);
        if (*gen)
            return cmd_gen(kind, gen_n, gen_edges, gen_length, seed);
        if (*bench)
            return cmd_bench(sizes, density, seed);
    } catch (const cg::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
