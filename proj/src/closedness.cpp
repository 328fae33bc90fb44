#include "closedgraph/closedness.hpp"

#include <algorithm>

#include "closedgraph/error.hpp"

namespace cg {

namespace {

// {set begin..end} \subseteq adj(w), both ranges strictly increasing
bool subset_of_adj(const Graph &g, std::vector<int>::const_iterator b,
                   std::vector<int>::const_iterator e, int w) {
    const auto &a = g.adj[w];
    auto it = a.begin();
    for (; b != e; ++b) {
        while (it != a.end() && *it < *b)
            ++it;
        if (it == a.end() || *it != *b)
            return false;
    }
    return true;
}

// Every upper neighbourhood is a clique iff for every v the upper
// neighbours above the smallest one all lie in its adjacency; the
// remaining pairs are pairs of upper neighbours of that smallest vertex,
// so induction over decreasing v covers them.  Lower neighbourhoods are
// the mirror image with the largest lower neighbour.
bool closed_ok(const Graph &g) {
    for (int v = 1; v <= g.n; ++v) {
        const auto &a = g.adj[v];
        auto up = std::upper_bound(a.begin(), a.end(), v);
        if (a.end() - up >= 2 && !subset_of_adj(g, up + 1, a.end(), *up))
            return false;
        if (up - a.begin() >= 2 && !subset_of_adj(g, a.begin(), up - 1, *(up - 1)))
            return false;
    }
    return true;
}

// Scans candidate edge pairs in lexicographic order; for a fixed first
// edge (a, b), any shared-lower partner (a, c) sorts before every
// shared-upper partner (c', b) since c' > a.
ClosednessViolation witness_scan(const Graph &g) {
    for (int a = 1; a <= g.n; ++a) {
        const auto &na = g.adj[a];
        for (auto itb = std::upper_bound(na.begin(), na.end(), a);
             itb != na.end(); ++itb) {
            int b = *itb;
            for (auto itc = itb + 1; itc != na.end(); ++itc)
                if (!g.has_edge(b, *itc))
                    return {ClosednessViolation::Kind::shared_lower,
                            {a, b},
                            {a, *itc},
                            {b, *itc}};
            const auto &nb = g.adj[b];
            for (auto itc = std::upper_bound(nb.begin(), nb.end(), a);
                 itc != nb.end() && *itc < b; ++itc)
                if (!g.has_edge(a, *itc))
                    return {ClosednessViolation::Kind::shared_upper,
                            {a, b},
                            {*itc, b},
                            {a, *itc}};
        }
    }
    throw contract_error("witness scan on a closed graph");
}

} // namespace

std::optional<ClosednessViolation> find_closedness_violation(const Graph &g) {
    if (closed_ok(g))
        return std::nullopt;
    return witness_scan(g);
}

bool is_closed_labeling(const Graph &g) { return closed_ok(g); }

namespace {

// Induced path w1 - v - w2: any closed labeling must place w1 and w2 on
// opposite sides of v.
struct Cherry {
    int v, w1, w2;
};

std::vector<Cherry> collect_cherries(const Graph &g,
                                     const std::vector<int> &vertices) {
    std::vector<Cherry> cherries;
    for (int v : vertices) {
        const auto &a = g.adj[v];
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (!g.has_edge(a[i], a[j]))
                    cherries.push_back({v, a[i], a[j]});
    }
    return cherries;
}

bool closed_under(const std::vector<Cherry> &cherries,
                  const std::vector<int> &pos) {
    for (const auto &c : cherries) {
        bool w1_above = pos[c.w1] > pos[c.v];
        bool w2_above = pos[c.w2] > pos[c.v];
        if (w1_above == w2_above)
            return false;
    }
    return true;
}

} // namespace

std::optional<VertexOrdering> brute_force_closed(const Graph &g, int limit) {
    if (g.n > limit)
        throw limit_error("brute force refused: n = " + std::to_string(g.n) +
                          " exceeds limit " + std::to_string(limit));

    std::vector<int> label_of(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> pos(static_cast<std::size_t>(g.n) + 1, 0);
    int next_label = 1;

    for (const auto &comp : connected_components(g)) {
        auto cherries = collect_cherries(g, comp);
        std::vector<int> perm = comp; // sorted: enumeration starts lex-first
        bool found = false;
        do {
            for (std::size_t i = 0; i < perm.size(); ++i)
                pos[perm[i]] = static_cast<int>(i) + 1;
            if (closed_under(cherries, pos)) {
                found = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!found)
            return std::nullopt;
        for (std::size_t i = 0; i < perm.size(); ++i)
            label_of[perm[i]] = next_label + static_cast<int>(i);
        next_label += static_cast<int>(perm.size());
    }

    std::vector<int> order(g.n);
    for (int v = 1; v <= g.n; ++v)
        order[label_of[v] - 1] = v;
    auto sigma = VertexOrdering::from_order(std::move(order));
    if (!is_closed_labeling(apply_labeling(g, sigma)))
        throw contract_error("brute force produced a non-closed labeling");
    return sigma;
}

std::optional<ClawWitness> find_induced_claw(const Graph &g) {
    for (int c = 1; c <= g.n; ++c) {
        const auto &a = g.adj[c];
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) {
                if (g.has_edge(a[i], a[j]))
                    continue;
                for (std::size_t k = j + 1; k < a.size(); ++k)
                    if (!g.has_edge(a[i], a[k]) && !g.has_edge(a[j], a[k]))
                        return ClawWitness{c, a[i], a[j], a[k]};
            }
    }
    return std::nullopt;
}

} // namespace cg
