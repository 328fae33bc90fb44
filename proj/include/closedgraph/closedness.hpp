#pragma once

#include <optional>
#include <utility>

#include "closedgraph/graph.hpp"

namespace cg {

/// Witness that the current labels are not closed: two edges sharing their
/// lower endpoints (shared_lower, edge1 = (i,j), edge2 = (i,l), j < l,
/// missing {j,l}) or their upper endpoints (shared_upper, edge1 = (i,l),
/// edge2 = (k,l), i < k, missing {i,k}).  Edges are written (low, high).
struct ClosednessViolation {
    enum class Kind { shared_lower, shared_upper };
    Kind kind;
    std::pair<int, int> edge1;
    std::pair<int, int> edge2;
    std::pair<int, int> missing_edge;

    bool operator==(const ClosednessViolation &) const = default;
};

/// The graph is closed under its current labels iff every set of upper
/// neighbours {w > v : {v,w} in E} and every set of lower neighbours is a
/// clique.  Returns the lexicographically smallest witnessing edge pair
/// otherwise (compared as the 4-tuple edge1,edge2).
std::optional<ClosednessViolation> find_closedness_violation(const Graph &g);

bool is_closed_labeling(const Graph &g);

/// Exhaustive search for a closed labeling, run independently per connected
/// component (labels of the component containing the smallest original
/// vertex come first).  Within a component, permutations are enumerated in
/// lexicographic order and the first closed one is kept.  Returns nothing
/// when some component admits no closed labeling.
/// Throws limit_error when g.n > limit.
std::optional<VertexOrdering> brute_force_closed(const Graph &g, int limit = 9);

struct ClawWitness {
    int center;
    int leaf1, leaf2, leaf3; // pairwise non-adjacent neighbours of center
    bool operator==(const ClawWitness &) const = default;
};

/// Smallest center, then lexicographically smallest non-adjacent leaf
/// triple; nothing if the graph has no induced K_{1,3}.
std::optional<ClawWitness> find_induced_claw(const Graph &g);

} // namespace cg
