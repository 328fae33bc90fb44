#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "closedgraph/error.hpp"
#include "closedgraph/graph.hpp"

namespace cg {

/// Ordered triple u, v, w with pos(u) < pos(v) < pos(w), {u,w} present but
/// {u,v} or {v,w} missing.
struct UmbrellaViolation {
    int u, v, w;
    std::pair<int, int> present_edge; // (u, w)
    std::pair<int, int> missing_edge; // (u, v) or (v, w)

    bool operator==(const UmbrellaViolation &) const = default;
};

/// Lexicographic breadth-first search by partition refinement, O(n + m).
/// Repeatedly visits the unvisited vertex whose label (the sequence of
/// positions at which its visited neighbours were numbered) is largest;
/// ties go to the vertex earliest in tie_break.
VertexOrdering lexbfs(const Graph &g, const VertexOrdering &tie_break);

/// The "+" sweep: starts from the last vertex of prev and breaks ties by
/// preferring the vertex appearing latest in prev.
VertexOrdering lexbfs_plus(const Graph &g, const VertexOrdering &prev);

/// sigma has the umbrella property iff for all u, v, w with
/// pos(u) < pos(v) < pos(w) and {u,w} in E, both {u,v} and {v,w} are in E;
/// equivalently the positions of every closed neighbourhood N[v] form a
/// contiguous block.  Checked in O(n + m); on failure the reported triple
/// is the one with lexicographically smallest (pos(u), pos(w), pos(v)),
/// naming (u,v) as the missing edge when both candidates are absent.
std::optional<UmbrellaViolation> umbrella_check(const Graph &g,
                                                const VertexOrdering &sigma);

struct RecognitionResult {
    std::variant<VertexOrdering, UmbrellaViolation> outcome;

    bool recognized() const { return outcome.index() == 0; }
    const VertexOrdering &ordering() const { return std::get<0>(outcome); }
    const UmbrellaViolation &violation() const { return std::get<1>(outcome); }
};

/// Three-sweep recognition, run per component and concatenated in
/// component order: sigma1 = lexbfs (identity ties), sigma2 and sigma3 by
/// "+" sweeps, then the umbrella check on sigma3.  The returned ordering
/// always passes umbrella_check; on failure the violation comes from the
/// first failing component.
RecognitionResult recognize_proper_interval(const Graph &g);

/// Thrown by ordering_to_closed_labeling when sigma lacks the umbrella
/// property.
struct umbrella_error : contract_error {
    UmbrellaViolation violation;
    umbrella_error(const UmbrellaViolation &v, const std::string &what)
        : contract_error(what), violation(v) {}
};

/// Relabels each vertex with its position.  The result is closed under the
/// new labels (checked; never fails for an ordering with the umbrella
/// property).
LabeledGraph ordering_to_closed_labeling(const Graph &g,
                                         const VertexOrdering &sigma);

} // namespace cg
