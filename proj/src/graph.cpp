#include "closedgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "closedgraph/error.hpp"

namespace cg {

namespace {

// Largest vertex id accepted anywhere; keeps adjacency allocation sane.
constexpr long long max_vertex_id = 100'000'000;
// Memory guard for the random generators.
constexpr long long max_generated_edges = 200'000'000;

} // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    if (n < 0 || n > max_vertex_id)
        throw contract_error("vertex count out of range: " + std::to_string(n));
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n) + 1, {});

    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw contract_error("edge endpoint out of range: " +
                                 std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw contract_error("self-loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }
    for (int v = 1; v <= n; ++v)
        g.adj[v].reserve(deg[v]);
    for (auto [u, v] : edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 1; v <= n; ++v) {
        auto &a = g.adj[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<long long>(a.size());
    }
    g.m /= 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto &a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::validate() const {
    if (adj.size() != static_cast<std::size_t>(n) + 1)
        throw contract_error("adjacency size disagrees with n");
    long long half_edges = 0;
    for (int v = 1; v <= n; ++v) {
        const auto &a = adj[v];
        for (std::size_t i = 0; i < a.size(); ++i) {
            int w = a[i];
            if (w < 1 || w > n)
                throw contract_error("neighbour out of range");
            if (w == v)
                throw contract_error("self-loop at vertex " + std::to_string(v));
            if (i > 0 && a[i - 1] >= w)
                throw contract_error("adjacency list not strictly increasing");
            if (!has_edge(w, v))
                throw contract_error("asymmetric edge " + std::to_string(v) +
                                     " " + std::to_string(w));
        }
        half_edges += static_cast<long long>(a.size());
    }
    if (half_edges != 2 * m)
        throw contract_error("edge count disagrees with adjacency lists");
}

VertexOrdering VertexOrdering::identity(int n) {
    VertexOrdering s;
    s.order.resize(n);
    s.pos.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        s.order[i] = i + 1;
        s.pos[i + 1] = i + 1;
    }
    return s;
}

VertexOrdering VertexOrdering::from_order(std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    VertexOrdering s;
    s.pos.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 1 || v > n || s.pos[v] != 0)
            throw contract_error("order is not a permutation of 1.." +
                                 std::to_string(n));
        s.pos[v] = i + 1;
    }
    s.order = std::move(order);
    return s;
}

VertexOrdering VertexOrdering::inverse() const {
    std::vector<int> inv(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        inv[i] = pos[i + 1];
    return from_order(std::move(inv));
}

VertexOrdering VertexOrdering::reversed() const {
    std::vector<int> rev(order.rbegin(), order.rend());
    return from_order(std::move(rev));
}

namespace {

bool parse_int(const std::string &tok, long long &out) {
    const char *b = tok.data();
    const char *e = b + tok.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

} // namespace

Graph parse_edge_list(std::istream &in) {
    std::vector<std::pair<int, int>> edges;
    long long declared_n = -1;
    long long max_id = 0;
    bool saw_edge = false;
    int lineno = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t)
            tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#')
            continue;

        if (tok[0] == "n") {
            if (saw_edge)
                throw parse_error(lineno, "header after edges");
            if (declared_n >= 0)
                throw parse_error(lineno, "duplicate header");
            long long k;
            if (tok.size() != 2 || !parse_int(tok[1], k) || k < 1)
                throw parse_error(lineno, "malformed header, expected 'n <k>'");
            if (k > max_vertex_id)
                throw parse_error(lineno, "vertex count too large");
            declared_n = k;
            continue;
        }

        long long u, v;
        if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
            throw parse_error(lineno, "malformed edge, expected 'u v'");
        if (u < 1 || v < 1)
            throw parse_error(lineno, "vertex ids are positive integers");
        if (u > max_vertex_id || v > max_vertex_id)
            throw parse_error(lineno, "vertex id too large");
        if (u == v)
            throw parse_error(lineno, "self-loop at vertex " + std::to_string(u));
        if (declared_n >= 0 && (u > declared_n || v > declared_n))
            throw parse_error(lineno, "vertex id exceeds declared n");
        saw_edge = true;
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    long long n = declared_n >= 0 ? declared_n : max_id;
    if (n == 0)
        throw parse_error(lineno, "input declares no vertices");
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string &text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph &g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (int u = 1; u <= g.n; ++u)
        for (int w : g.adj[u])
            if (w > u)
                out += std::to_string(u) + " " + std::to_string(w) + "\n";
    return out;
}

Graph apply_labeling(const Graph &g, const VertexOrdering &sigma) {
    if (sigma.size() != g.n)
        throw contract_error("labeling size disagrees with graph");
    Graph h;
    h.n = g.n;
    h.m = g.m;
    h.adj.assign(static_cast<std::size_t>(g.n) + 1, {});
    for (int v = 1; v <= g.n; ++v) {
        auto &a = h.adj[sigma.pos[v]];
        a.reserve(g.adj[v].size());
        for (int w : g.adj[v])
            a.push_back(sigma.pos[w]);
        std::sort(a.begin(), a.end());
    }
    return h;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    // rejection sampling keeps the draw exactly uniform and reproducible
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x >= threshold)
            return x % bound;
    }
}

double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gen_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph gen_cycle(int n) {
    if (n < 3)
        throw contract_error("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph::from_edges(n, e);
}

Graph gen_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph gen_star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= n; ++i)
        e.emplace_back(1, i);
    return Graph::from_edges(n, e);
}

Graph gen_random_unit_interval(int n, double length, std::uint64_t seed) {
    if (length <= 0.0)
        throw contract_error("interval length must be positive");
    std::mt19937_64 rng(seed);
    std::vector<double> left(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v)
        left[v] = uniform_unit(rng);

    double expected =
        0.5 * static_cast<double>(n) * (n - 1) *
        std::min(1.0, 2.0 * length - length * length);
    if (expected > static_cast<double>(max_generated_edges))
        throw contract_error("requested unit-interval graph is too dense");

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i + 1;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return left[a] < left[b] || (left[a] == left[b] && a < b);
    });

    std::vector<std::pair<int, int>> e;
    std::size_t lo = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        while (lo < j && left[idx[lo]] < left[idx[j]] - length)
            ++lo;
        for (std::size_t i = lo; i < j; ++i)
            e.emplace_back(std::min(idx[i], idx[j]), std::max(idx[i], idx[j]));
        if (static_cast<long long>(e.size()) > max_generated_edges)
            throw contract_error("requested unit-interval graph is too dense");
    }
    return Graph::from_edges(n, e);
}

Graph gen_random_gnm(int n, long long m, std::uint64_t seed) {
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > total)
        throw contract_error("edge count out of range for n");
    if (m > max_generated_edges)
        throw contract_error("requested random graph is too dense");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;

    if (total <= 10'000'000) {
        // small pair space: partial Fisher-Yates over all pairs
        std::vector<std::pair<int, int>> pool;
        pool.reserve(total);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                pool.emplace_back(i, j);
        for (long long k = 0; k < m; ++k) {
            std::size_t r = k + uniform_below(rng, pool.size() - k);
            std::swap(pool[k], pool[r]);
        }
        e.assign(pool.begin(), pool.begin() + m);
    } else {
        if (m > total / 4)
            throw contract_error("density too high for sparse sampling");
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(m) * 2);
        while (static_cast<long long>(e.size()) < m) {
            int u = static_cast<int>(uniform_below(rng, n)) + 1;
            int v = static_cast<int>(uniform_below(rng, n)) + 1;
            if (u == v)
                continue;
            if (u > v)
                std::swap(u, v);
            std::uint64_t key =
                static_cast<std::uint64_t>(u) * (static_cast<std::uint64_t>(n) + 1) + v;
            if (seen.insert(key).second)
                e.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, e);
}

} // namespace

Graph generate(GenKind kind, const GenParams &params, std::uint64_t seed) {
    const int n = params.n;
    if (kind != GenKind::claw && (n < 1 || n > max_vertex_id))
        throw contract_error("vertex count out of range");
    switch (kind) {
    case GenKind::path:
        return gen_path(n);
    case GenKind::cycle:
        return gen_cycle(n);
    case GenKind::complete:
        return gen_complete(n);
    case GenKind::claw:
        return gen_star(4);
    case GenKind::star:
        return gen_star(n);
    case GenKind::random_unit_interval:
        return gen_random_unit_interval(n, params.length, seed);
    case GenKind::random_gnm:
        return gen_random_gnm(n, params.edges, seed);
    }
    throw contract_error("unknown generator kind");
}

std::vector<std::vector<int>> connected_components(const Graph &g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> queue;
    for (int s = 1; s <= g.n; ++s) {
        if (seen[s])
            continue;
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(queue.begin(), queue.end());
        comps.push_back(queue);
    }
    return comps;
}

Graph induced_subgraph(const Graph &g, const std::vector<int> &vertices) {
    Graph h;
    h.n = static_cast<int>(vertices.size());
    h.adj.assign(static_cast<std::size_t>(h.n) + 1, {});
    for (int i = 0; i < h.n; ++i) {
        int v = vertices[i];
        auto &a = h.adj[i + 1];
        for (int w : g.adj[v]) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
            if (it != vertices.end() && *it == w)
                a.push_back(static_cast<int>(it - vertices.begin()) + 1);
        }
        // source lists are sorted and the id map is monotone
        h.m += static_cast<long long>(a.size());
    }
    h.m /= 2;
    return h;
}

} // namespace cg
