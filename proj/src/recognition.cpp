#include "closedgraph/recognition.hpp"

#include <algorithm>

#include "closedgraph/closedness.hpp"

namespace cg {

// Partition refinement after Habib et al.: unvisited vertices live in a
// list of blocks ordered by label, each block internally ordered by
// tie-break priority.  Visiting v splits every block holding a neighbour
// of v by moving those neighbours into a fresh block placed directly in
// front; appending them in tie-break order keeps the internal order
// intact.  The head vertex of the head block is always the next pivot.
VertexOrdering lexbfs(const Graph &g, const VertexOrdering &tie_break) {
    const int n = g.n;
    if (tie_break.size() != n)
        throw contract_error("tie_break size disagrees with graph");
    if (n == 0)
        return VertexOrdering::from_order({});

    // adjacency re-bucketed so each vertex sees neighbours in tie-break order
    std::vector<int> off(static_cast<std::size_t>(n) + 2, 0);
    for (int v = 1; v <= n; ++v)
        off[v + 1] = off[v] + g.degree(v);
    std::vector<int> nbr(off[n + 1]);
    {
        std::vector<int> cur(off.begin(), off.begin() + n + 1);
        for (int p = 0; p < n; ++p) {
            int u = tie_break.order[p];
            for (int w : g.adj[u])
                nbr[cur[w]++] = u;
        }
    }

    // vertex 0 and block 0 act as null; block 0 is also the list sentinel
    std::vector<int> vprev(n + 1), vnext(n + 1), vblock(n + 1);
    const int cap = n + 3;
    std::vector<int> bhead(cap, 0), btail(cap, 0), bprev(cap, 0), bnext(cap, 0);
    std::vector<int> bstamp(cap, 0), bsub(cap, 0);
    std::vector<int> free_blocks;
    int next_block = 1;

    auto alloc_block = [&]() {
        int b;
        if (!free_blocks.empty()) {
            b = free_blocks.back();
            free_blocks.pop_back();
        } else {
            b = next_block++;
        }
        bhead[b] = btail[b] = 0;
        bstamp[b] = bsub[b] = 0;
        return b;
    };
    auto insert_before = [&](int nb, int b) {
        bprev[nb] = bprev[b];
        bnext[nb] = b;
        bnext[bprev[b]] = nb;
        bprev[b] = nb;
    };
    auto drop_block = [&](int b) {
        bnext[bprev[b]] = bnext[b];
        bprev[bnext[b]] = bprev[b];
        free_blocks.push_back(b);
    };

    int b0 = alloc_block();
    insert_before(b0, 0);
    for (int p = 0; p < n; ++p) {
        int v = tie_break.order[p];
        vprev[v] = btail[b0];
        vnext[v] = 0;
        if (btail[b0])
            vnext[btail[b0]] = v;
        else
            bhead[b0] = v;
        btail[b0] = v;
        vblock[v] = b0;
    }

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);

    for (int step = 0; step < n; ++step) {
        int b = bnext[0];
        int v = bhead[b];
        bhead[b] = vnext[v];
        if (bhead[b])
            vprev[bhead[b]] = 0;
        else
            drop_block(b);
        visited[v] = 1;
        order.push_back(v);

        for (int i = off[v]; i < off[v + 1]; ++i) {
            int u = nbr[i];
            if (visited[u])
                continue;
            int bu = vblock[u];
            if (bstamp[bu] != v) {
                int nb = alloc_block();
                insert_before(nb, bu);
                bstamp[bu] = v;
                bsub[bu] = nb;
            }
            int nb = bsub[bu];
            if (vprev[u])
                vnext[vprev[u]] = vnext[u];
            else
                bhead[bu] = vnext[u];
            if (vnext[u])
                vprev[vnext[u]] = vprev[u];
            else
                btail[bu] = vprev[u];
            vprev[u] = btail[nb];
            vnext[u] = 0;
            if (btail[nb])
                vnext[btail[nb]] = u;
            else
                bhead[nb] = u;
            btail[nb] = u;
            vblock[u] = nb;
            if (!bhead[bu])
                drop_block(bu);
        }
    }
    return VertexOrdering::from_order(std::move(order));
}

VertexOrdering lexbfs_plus(const Graph &g, const VertexOrdering &prev) {
    if (prev.size() != g.n)
        throw contract_error("prev ordering size disagrees with graph");
    // preferring the vertex latest in prev = earliest in reversed prev
    return lexbfs(g, prev.reversed());
}

namespace {

// Exhaustive scan in key order (pos(u), pos(w), pos(v)); only entered when
// some closed neighbourhood is known to be non-contiguous, so it always
// finds a triple.
UmbrellaViolation violation_scan(const Graph &g, const VertexOrdering &sigma) {
    std::vector<int> by_pos;
    for (int pu = 1; pu <= g.n; ++pu) {
        int u = sigma.order[pu - 1];
        by_pos.clear();
        for (int w : g.adj[u])
            if (sigma.pos[w] > pu + 1)
                by_pos.push_back(sigma.pos[w]);
        std::sort(by_pos.begin(), by_pos.end());
        for (int pw : by_pos) {
            int w = sigma.order[pw - 1];
            for (int pv = pu + 1; pv < pw; ++pv) {
                int v = sigma.order[pv - 1];
                if (!g.has_edge(u, v))
                    return {u, v, w, {u, w}, {u, v}};
                if (!g.has_edge(v, w))
                    return {u, v, w, {u, w}, {v, w}};
            }
        }
    }
    throw contract_error("violation scan on an umbrella ordering");
}

} // namespace

std::optional<UmbrellaViolation> umbrella_check(const Graph &g,
                                                const VertexOrdering &sigma) {
    if (sigma.size() != g.n)
        throw contract_error("ordering size disagrees with graph");
    for (int v = 1; v <= g.n; ++v) {
        int lo = sigma.pos[v], hi = sigma.pos[v];
        for (int w : g.adj[v]) {
            lo = std::min(lo, sigma.pos[w]);
            hi = std::max(hi, sigma.pos[w]);
        }
        if (hi - lo != g.degree(v))
            return violation_scan(g, sigma);
    }
    return std::nullopt;
}

namespace {

struct SweepOutcome {
    VertexOrdering sigma3;
    std::optional<UmbrellaViolation> violation;
};

SweepOutcome three_sweeps(const Graph &g) {
    auto s1 = lexbfs(g, VertexOrdering::identity(g.n));
    auto s2 = lexbfs_plus(g, s1);
    auto s3 = lexbfs_plus(g, s2);
    auto v = umbrella_check(g, s3);
    return {std::move(s3), v};
}

} // namespace

RecognitionResult recognize_proper_interval(const Graph &g) {
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        auto out = three_sweeps(g);
        if (out.violation)
            return {*out.violation};
        return {std::move(out.sigma3)};
    }

    std::vector<int> order;
    order.reserve(g.n);
    for (const auto &comp : comps) {
        Graph h = induced_subgraph(g, comp);
        auto out = three_sweeps(h);
        if (out.violation) {
            const auto &lv = *out.violation;
            auto back = [&](int v) { return comp[v - 1]; };
            auto back_edge = [&](std::pair<int, int> e) {
                return std::pair<int, int>{back(e.first), back(e.second)};
            };
            return {UmbrellaViolation{back(lv.u), back(lv.v), back(lv.w),
                                      back_edge(lv.present_edge),
                                      back_edge(lv.missing_edge)}};
        }
        for (int local : out.sigma3.order)
            order.push_back(comp[local - 1]);
    }
    return {VertexOrdering::from_order(std::move(order))};
}

LabeledGraph ordering_to_closed_labeling(const Graph &g,
                                         const VertexOrdering &sigma) {
    if (auto viol = umbrella_check(g, sigma))
        throw umbrella_error(*viol, "ordering lacks the umbrella property");
    LabeledGraph lg{apply_labeling(g, sigma), sigma};
    if (!is_closed_labeling(lg.graph))
        throw contract_error("internal error: relabeled graph is not closed");
    return lg;
}

} // namespace cg
