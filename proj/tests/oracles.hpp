#pragma once

// Deliberately naive reference implementations used to cross-check the
// library.  Everything here favours being obviously correct over speed.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "closedgraph/closedness.hpp"
#include "closedgraph/graph.hpp"
#include "closedgraph/intervals.hpp"
#include "closedgraph/recognition.hpp"

namespace oracles {

/// Literal label-comparison LexBFS: labels are the position sequences of
/// visited neighbours, compared lexicographically (earlier positions
/// dominate, prefixes lose to extensions).
cg::VertexOrdering lexbfs_naive(const cg::Graph &g,
                                const cg::VertexOrdering &tie_break);

/// Cubic triple scan in (pos(u), pos(w), pos(v)) key order.
std::optional<cg::UmbrellaViolation>
umbrella_violation_naive(const cg::Graph &g, const cg::VertexOrdering &sigma);

/// Quadruple loop over edge pairs straight from the closedness definition,
/// scanning ordered pairs of edges lexicographically.
std::optional<cg::ClosednessViolation>
closedness_violation_naive(const cg::Graph &g);

/// Whole-graph permutation sweep (no per-component splitting); first
/// ordering in lexicographic order whose relabeling is closed.
std::optional<cg::VertexOrdering> brute_force_naive(const cg::Graph &g);

/// Bron-Kerbosch; each clique sorted, cliques sorted lexicographically.
std::vector<std::vector<int>> max_cliques_naive(const cg::Graph &g);

cg::Graph intersection_graph_naive(const cg::IntervalRep &rep);
bool is_proper_naive(const cg::IntervalRep &rep);

bool is_connected(const cg::Graph &g);

/// All graphs on exactly n labeled vertices, one per edge-subset mask.
void all_graphs(int n, const std::function<void(const cg::Graph &)> &fn);

/// Seeded helpers with engine-only randomness (reproducible everywhere).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t bound);
    cg::Graph graph(int n);                 // each edge present with odds 1/2
    cg::Graph graph_with_edges(int n, long long m);
    cg::Graph connected_graph(int n);       // rejection sampled
    cg::VertexOrdering ordering(int n);
};

} // namespace oracles
