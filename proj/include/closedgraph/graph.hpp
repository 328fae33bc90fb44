#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cg {

/// Finite simple undirected graph on vertices 1..n.
/// Adjacency lists are strictly increasing and symmetric; m counts
/// undirected edges.  Vertex slot 0 is unused.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    /// Builds a graph from an edge list, collapsing duplicates.
    /// Throws contract_error on out-of-range endpoints or self-loops.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    /// Full invariant check (sortedness, symmetry, edge count); throws
    /// contract_error.  Construction paths already guarantee these, so this
    /// is only called from tests and debugging.
    void validate() const;

    bool operator==(const Graph &) const = default;
};

/// A bijection between positions 1..n and vertices 1..n.
/// order[i] is the vertex at position i+1; pos[v] is the 1-based position
/// of vertex v (pos[0] unused).  pos(order(i)) = i.
struct VertexOrdering {
    std::vector<int> order;
    std::vector<int> pos;

    static VertexOrdering identity(int n);
    /// Validates that order is a permutation of 1..n; throws contract_error.
    static VertexOrdering from_order(std::vector<int> order);

    VertexOrdering inverse() const;
    VertexOrdering reversed() const;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const VertexOrdering &) const = default;
};

/// A graph whose vertex names are the labels under which closedness is
/// asserted, together with the ordering that produced them.
struct LabeledGraph {
    Graph graph;
    VertexOrdering labeling;
};

/// Reads a whitespace-separated edge list: one "u v" pair per line, blank
/// lines and lines starting with '#' ignored, optional "n <k>" header
/// before the first edge.  Without a header n is the largest endpoint.
/// Throws parse_error (with line number) on malformed tokens, self-loops
/// and endpoints exceeding a declared header.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(const std::string &text);

/// Canonical form: "n <k>" header, then edges "u v" (u < v) in
/// lexicographic order.
std::string write_edge_list(const Graph &g);

/// Relabels: the image has an edge {pos(u), pos(v)} for every edge {u, v}.
Graph apply_labeling(const Graph &g, const VertexOrdering &sigma);

enum class GenKind {
    path,
    cycle,
    complete,
    claw,
    star,
    random_unit_interval,
    random_gnm,
};

struct GenParams {
    int n = 0;           // vertex count (all kinds except claw)
    long long edges = 0; // random_gnm only
    double length = 0.0; // random_unit_interval only
};

/// Deterministic family generator; equal (kind, params, seed) give equal
/// graphs.  random_unit_interval draws n left endpoints uniformly from
/// [0,1) and intersects closed intervals of the given length; random_gnm
/// picks `edges` distinct edges uniformly.
Graph generate(GenKind kind, const GenParams &params, std::uint64_t seed = 0);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph &g);

/// Subgraph induced by a sorted vertex set; vertices[i] becomes local
/// vertex i+1.
Graph induced_subgraph(const Graph &g, const std::vector<int> &vertices);

} // namespace cg
