#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "closedgraph/closedness.hpp"
#include "closedgraph/error.hpp"
#include "closedgraph/groebner.hpp"
#include "oracles.hpp"

using cg::Binomial;
using cg::Graph;
using cg::Monomial;

namespace {

Monomial mono(std::vector<std::uint8_t> exp) { return Monomial{std::move(exp)}; }

Graph path3() { return Graph::from_edges(3, {{1, 2}, {2, 3}}); }

} // namespace

TEST_CASE("lexicographic comparison runs x1 > ... > xn > y1 > ... > yn") {
    CHECK(cg::compare_lex(mono({1, 0, 0, 0}), mono({0, 1, 0, 0})) > 0); // x1 > x2
    CHECK(cg::compare_lex(mono({0, 1, 0, 0}), mono({0, 0, 1, 0})) > 0); // x2 > y1
    CHECK(cg::compare_lex(mono({0, 0, 1, 0}), mono({0, 0, 0, 1})) > 0); // y1 > y2
    CHECK(cg::compare_lex(mono({0, 2, 0, 0}), mono({0, 1, 5, 5})) > 0); // x2^2 > x2*...
    CHECK(cg::compare_lex(mono({1, 1, 0, 0}), mono({1, 1, 0, 0})) == 0);
    CHECK(cg::compare_lex(mono({0, 1, 0, 0}), mono({1, 0, 0, 0})) < 0);
    CHECK_THROWS_AS(cg::compare_lex(mono({1, 0}), mono({1, 0, 0, 0})),
                    cg::contract_error);
}

TEST_CASE("divisibility, lcm, quotient and product work exponent-wise") {
    CHECK(cg::divides(mono({1, 0, 1, 0}), mono({2, 1, 1, 0})));
    CHECK(!cg::divides(mono({1, 0, 2, 0}), mono({2, 1, 1, 0})));
    CHECK(cg::lcm(mono({2, 0, 1, 0}), mono({1, 1, 0, 0})) == mono({2, 1, 1, 0}));
    CHECK(cg::quotient(mono({2, 1, 1, 0}), mono({1, 1, 0, 0})) == mono({1, 0, 1, 0}));
    CHECK_THROWS_AS(cg::quotient(mono({1, 0, 0, 0}), mono({0, 1, 0, 0})),
                    cg::contract_error);
    CHECK(cg::product(mono({1, 0, 1, 0}), mono({0, 1, 0, 1})) == mono({1, 1, 1, 1}));
    CHECK_THROWS_AS(cg::divides(mono({1, 0}), mono({1, 0, 0, 0})),
                    cg::contract_error);
}

TEST_CASE("binomial normalization orders terms and cancels equal ones") {
    Monomial hi = mono({1, 0, 0, 0}), lo = mono({0, 1, 0, 0});
    Binomial b = Binomial::make(lo, hi); // given backwards on purpose
    CHECK(b.is_binomial());
    CHECK(b.lead() == hi);
    CHECK(b.trail() == lo);
    CHECK(Binomial::make(hi, hi).is_zero());
    CHECK(Binomial::monomial(hi).is_monomial());
}

TEST_CASE("edge generators are xi*yj - xj*yi with the stated lead") {
    Binomial f = cg::edge_binomial(1, 2, 2);
    CHECK(f.lead() == mono({1, 0, 0, 1}));
    CHECK(f.trail() == mono({0, 1, 1, 0}));
    CHECK(cg::to_string(f, 2) == "x1*y2 - x2*y1");

    CHECK_THROWS_AS(cg::edge_binomial(2, 2, 3), cg::contract_error);
    CHECK_THROWS_AS(cg::edge_binomial(0, 1, 3), cg::contract_error);
    CHECK_THROWS_AS(cg::edge_binomial(1, 4, 3), cg::contract_error);

    auto gens = cg::edge_binomials(path3());
    REQUIRE(gens.size() == 2);
    CHECK(cg::to_string(gens[0], 3) == "x1*y2 - x2*y1");
    CHECK(cg::to_string(gens[1], 3) == "x2*y3 - x3*y2");
    CHECK(cg::edge_binomials(Graph::from_edges(3, {})).empty());
}

TEST_CASE("S-polynomials of the fixed examples") {
    auto gens = cg::edge_binomials(path3());
    CHECK(cg::to_string(cg::s_polynomial(gens[0], gens[1]), 3) ==
          "x1*x3*y2^2 - x2^2*y1*y3");
    CHECK(cg::s_polynomial(gens[0], gens[0]).is_zero());

    auto cherry = cg::edge_binomials(Graph::from_edges(3, {{1, 2}, {1, 3}}));
    CHECK(cg::to_string(cg::s_polynomial(cherry[0], cherry[1]), 3) ==
          "x2*y1*y3 - x3*y1*y2");
}

TEST_CASE("S-polynomials are antisymmetric up to normalization") {
    oracles::Rng rng(501);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = rng.graph(n);
        auto gens = cg::edge_binomials(g);
        if (gens.size() < 2)
            continue;
        std::size_t i = rng.below(gens.size());
        std::size_t j = rng.below(gens.size());
        CHECK(cg::s_polynomial(gens[i], gens[j]) ==
              cg::s_polynomial(gens[j], gens[i]));
    }
}

TEST_CASE("reduction of the fixed examples") {
    auto gens = cg::edge_binomials(path3());
    CHECK(cg::reduce(cg::s_polynomial(gens[0], gens[1]), gens).is_zero());
    CHECK(cg::reduce(gens[0], {gens[0]}).is_zero());

    auto cherry = cg::edge_binomials(Graph::from_edges(3, {{1, 2}, {1, 3}}));
    Binomial s = cg::s_polynomial(cherry[0], cherry[1]);
    CHECK(cg::reduce(s, cherry) == s); // both basis leads carry x1, s has none
}

TEST_CASE("reduced remainders admit no further division") {
    oracles::Rng rng(502);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        Graph g = rng.graph(n);
        auto gens = cg::edge_binomials(g);
        if (gens.size() < 2)
            continue;
        std::size_t i = rng.below(gens.size());
        std::size_t j = rng.below(gens.size());
        Binomial r = cg::reduce(cg::s_polynomial(gens[i], gens[j]), gens);
        if (r.is_zero())
            continue;
        for (const auto &b : gens) {
            CHECK(!cg::divides(b.lead(), r.lead()));
            if (r.is_binomial())
                CHECK(!cg::divides(b.lead(), r.trail()));
        }
    }
}

TEST_CASE("coprime leads always reduce their S-pair to zero") {
    oracles::Rng rng(503);
    int seen = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 3 + static_cast<int>(rng.below(6));
        Graph g = rng.graph(n);
        auto gens = cg::edge_binomials(g);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= g.n; ++u)
            for (int w : g.adj[u])
                if (w > u)
                    edges.emplace_back(u, w);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                if (a == c || b == d)
                    continue; // leads share xa or yb
                ++seen;
                CHECK(cg::reduce(cg::s_polynomial(gens[i], gens[j]),
                                 {gens[i], gens[j]})
                          .is_zero());
            }
    }
    CHECK(seen > 100);
}

TEST_CASE("the generator set of fixed graphs passes or fails as expected") {
    CHECK(cg::is_quadratic_groebner(path3()));
    CHECK(cg::is_quadratic_groebner(Graph::from_edges(2, {{1, 2}})));
    CHECK(cg::is_quadratic_groebner(Graph::from_edges(3, {})));

    auto w = cg::find_groebner_failure(Graph::from_edges(3, {{1, 2}, {1, 3}}));
    REQUIRE(w.has_value());
    CHECK(w->edge1 == std::pair{1, 2});
    CHECK(w->edge2 == std::pair{1, 3});
    CHECK(cg::to_string(w->remainder, 3) == "x2*y1*y3 - x3*y1*y2");
}

TEST_CASE("the oracle refuses graphs beyond desk scale") {
    CHECK_THROWS_AS(
        cg::is_quadratic_groebner(cg::generate(cg::GenKind::path, {.n = 13})),
        cg::limit_error);
    CHECK_THROWS_AS(
        cg::is_quadratic_groebner(cg::generate(cg::GenKind::complete, {.n = 12})),
        cg::limit_error);
    CHECK(cg::is_quadratic_groebner(cg::generate(cg::GenKind::path, {.n = 12})));
}

TEST_CASE("quadratic basis membership equals closedness for every labeling, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        oracles::all_graphs(n, [](const Graph &g) {
            if (!oracles::is_connected(g))
                return;
            std::vector<int> order(g.n);
            for (int i = 0; i < g.n; ++i)
                order[i] = i + 1;
            do {
                Graph h = cg::apply_labeling(
                    g, cg::VertexOrdering::from_order(order));
                CHECK(cg::is_closed_labeling(h) == cg::is_quadratic_groebner(h));
            } while (std::next_permutation(order.begin(), order.end()));
        });
}

TEST_CASE("quadratic basis membership equals closedness on random n = 6 labelings") {
    oracles::Rng rng(504);
    for (int t = 0; t < 500; ++t) {
        Graph g = rng.connected_graph(6);
        Graph h = cg::apply_labeling(g, rng.ordering(6));
        CHECK(cg::is_closed_labeling(h) == cg::is_quadratic_groebner(h));
    }
}

TEST_CASE("monomial and binomial rendering") {
    CHECK(cg::to_string(mono({0, 0, 0, 0}), 2) == "1");
    CHECK(cg::to_string(mono({2, 0, 1, 3}), 2) == "x1^2*y1*y2^3");
    CHECK(cg::to_string(Binomial::zero(), 2) == "0");
    CHECK(cg::to_string(Binomial::monomial(mono({0, 1, 0, 0})), 2) == "x2");
}
