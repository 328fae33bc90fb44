#include "closedgraph/intervals.hpp"

#include <algorithm>
#include <set>

#include "closedgraph/error.hpp"

namespace cg {

BFunction compute_b(const FacetList &facets, int n) {
    validate_facets(facets, n);
    BFunction b;
    b.values.resize(n);
    std::size_t i = 0;
    for (int k = 1; k <= n; ++k) {
        // right endpoints increase, so the last facet starting at or
        // before k carries the maximum over all facets containing k
        while (i + 1 < facets.size() && facets[i + 1].a <= k)
            ++i;
        if (facets[i].a > k || facets[i].b < k)
            throw contract_error("facet list leaves vertex " +
                                 std::to_string(k) + " uncovered");
        b.values[k - 1] = facets[i].b;
    }
    return b;
}

IntervalRep build_representation(const LabeledGraph &g) {
    const int n = g.graph.n;
    FacetList facets = facets_of_closed(g); // checks the closedness contract
    BFunction b = compute_b(facets, n);

    IntervalRep rep;
    rep.n = n;
    rep.intervals.resize(n);
    for (int k = 1; k <= n; ++k) {
        // vertex k covers [k, b(k) + k/n]; the k/n tail breaks right-end
        // ties without ever reaching the next integer
        rep.intervals[k - 1] = {static_cast<long long>(k) * n,
                                static_cast<long long>(b.at(k)) * n + k};
    }
    return rep;
}

Graph intersection_graph(const IntervalRep &rep) {
    const int n = rep.n;
    if (static_cast<int>(rep.intervals.size()) != n)
        throw contract_error("interval count disagrees with n");
    for (const auto &iv : rep.intervals)
        if (iv.left > iv.right)
            throw contract_error("interval with left > right");

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i + 1;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const auto &ia = rep.intervals[a - 1], &ib = rep.intervals[b - 1];
        return ia.left < ib.left ||
               (ia.left == ib.left && (ia.right < ib.right ||
                                       (ia.right == ib.right && a < b)));
    });

    // sweep by left endpoint; everything still active intersects
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<long long, int>> active; // (right, vertex)
    for (int k : idx) {
        const auto &iv = rep.intervals[k - 1];
        while (!active.empty() && active.begin()->first < iv.left)
            active.erase(active.begin());
        for (const auto &[right, other] : active)
            edges.emplace_back(std::min(other, k), std::max(other, k));
        active.emplace(iv.right, k);
    }
    return Graph::from_edges(n, edges);
}

bool is_proper(const IntervalRep &rep) {
    const int n = rep.n;
    if (static_cast<int>(rep.intervals.size()) != n)
        throw contract_error("interval count disagrees with n");
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i + 1;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const auto &ia = rep.intervals[a - 1], &ib = rep.intervals[b - 1];
        return ia.left < ib.left || (ia.left == ib.left && ia.right < ib.right);
    });

    long long prev_max_right = 0;
    bool have_prev = false;
    for (int i = 0; i < n;) {
        int j = i;
        long long left = rep.intervals[idx[i] - 1].left;
        long long right = rep.intervals[idx[i] - 1].right;
        while (j < n && rep.intervals[idx[j] - 1].left == left) {
            // equal lefts with different rights nest
            if (rep.intervals[idx[j] - 1].right != right)
                return false;
            ++j;
        }
        if (have_prev && prev_max_right >= right)
            return false;
        prev_max_right = std::max(prev_max_right, right);
        have_prev = true;
        i = j;
    }
    return true;
}

std::string write_intervals(const IntervalRep &rep) {
    std::string out;
    for (int k = 1; k <= rep.n; ++k) {
        const auto &iv = rep.intervals[k - 1];
        out += std::to_string(k) + " " + std::to_string(iv.left) + " " +
               std::to_string(iv.right) + " " + std::to_string(rep.n) + "\n";
    }
    return out;
}

} // namespace cg
