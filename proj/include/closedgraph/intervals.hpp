#pragma once

#include <string>
#include <vector>

#include "closedgraph/cliques.hpp"
#include "closedgraph/graph.hpp"

namespace cg {

/// b(k) = largest right endpoint over the facets containing k.  Values are
/// >= k and nondecreasing.
struct BFunction {
    std::vector<int> values; // values[k-1] = b(k)

    int at(int k) const { return values[k - 1]; }
    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const BFunction &) const = default;
};

/// Interval endpoints scaled by the common denominator n, so that vertex k
/// receives the exact rational interval [left/n, right/n].
struct ScaledInterval {
    long long left, right;
    bool operator==(const ScaledInterval &) const = default;
};

struct IntervalRep {
    int n = 0; // vertex count and denominator
    std::vector<ScaledInterval> intervals; // intervals[k-1] belongs to vertex k
    bool operator==(const IntervalRep &) const = default;
};

/// Throws contract_error when facets is not a valid decomposition for n
/// (same shape checks as validate_facets, which cover coverage of every k).
BFunction compute_b(const FacetList &facets, int n);

/// Representation of a closed labeled graph: vertex k gets
/// [k, b(k) + k/n], stored scaled by n as left = k*n, right = b(k)*n + k.
/// Distinct vertices are adjacent iff their intervals intersect, and no
/// interval contains another.  Throws contract_error when g is not closed
/// or has label-interleaved components.
IntervalRep build_representation(const LabeledGraph &g);

/// Graph on 1..rep.n with an edge wherever two intervals intersect
/// (endpoints inclusive).  Works on arbitrary left <= right intervals via
/// a sweep, O(n log n + m).
Graph intersection_graph(const IntervalRep &rep);

/// True iff no interval properly contains another.
bool is_proper(const IntervalRep &rep);

/// One line per vertex: "k left right denom" with denom = rep.n.
std::string write_intervals(const IntervalRep &rep);

} // namespace cg
