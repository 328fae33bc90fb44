#include "closedgraph/groebner.hpp"

#include <algorithm>

#include "closedgraph/error.hpp"

namespace cg {

int compare_lex(const Monomial &a, const Monomial &b) {
    if (a.vars() != b.vars())
        throw contract_error("monomials over different variable counts");
    for (int i = 0; i < a.vars(); ++i)
        if (a.exp[i] != b.exp[i])
            return a.exp[i] > b.exp[i] ? 1 : -1;
    return 0;
}

bool divides(const Monomial &d, const Monomial &m) {
    if (d.vars() != m.vars())
        throw contract_error("monomials over different variable counts");
    for (int i = 0; i < d.vars(); ++i)
        if (d.exp[i] > m.exp[i])
            return false;
    return true;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
    Monomial r = a;
    for (int i = 0; i < r.vars(); ++i)
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

Monomial quotient(const Monomial &m, const Monomial &d) {
    Monomial r = m;
    for (int i = 0; i < r.vars(); ++i) {
        if (d.exp[i] > m.exp[i])
            throw contract_error("quotient of non-divisible monomials");
        r.exp[i] = static_cast<std::uint8_t>(m.exp[i] - d.exp[i]);
    }
    return r;
}

Monomial product(const Monomial &a, const Monomial &b) {
    Monomial r = a;
    for (int i = 0; i < r.vars(); ++i)
        r.exp[i] = static_cast<std::uint8_t>(a.exp[i] + b.exp[i]);
    return r;
}

Binomial Binomial::monomial(Monomial m) {
    Binomial b;
    b.lead_ = std::move(m);
    return b;
}

Binomial Binomial::make(Monomial lhs, Monomial rhs) {
    int c = compare_lex(lhs, rhs);
    if (c == 0)
        return zero();
    Binomial b;
    if (c > 0) {
        b.lead_ = std::move(lhs);
        b.trail_ = std::move(rhs);
    } else {
        b.lead_ = std::move(rhs);
        b.trail_ = std::move(lhs);
    }
    return b;
}

Binomial edge_binomial(int i, int j, int n) {
    if (i < 1 || j <= i || j > n)
        throw contract_error("edge binomial needs 1 <= i < j <= n");
    Monomial lead, trail;
    lead.exp.assign(2 * n, 0);
    trail.exp.assign(2 * n, 0);
    lead.exp[i - 1] = 1;
    lead.exp[n + j - 1] = 1; // x_i y_j
    trail.exp[j - 1] = 1;
    trail.exp[n + i - 1] = 1; // x_j y_i
    return Binomial::make(std::move(lead), std::move(trail));
}

std::vector<Binomial> edge_binomials(const Graph &g) {
    std::vector<Binomial> gens;
    for (int i = 1; i <= g.n; ++i)
        for (int j : g.adj[i])
            if (j > i)
                gens.push_back(edge_binomial(i, j, g.n));
    return gens;
}

Binomial s_polynomial(const Binomial &f, const Binomial &g) {
    if (f.is_zero() || g.is_zero())
        throw contract_error("S-polynomial of a zero input");
    Monomial l = lcm(f.lead(), g.lead());
    // S = (l / lead f) f - (l / lead g) g; the lcm terms cancel, leaving
    // (l / lead g) trail g - (l / lead f) trail f
    std::optional<Monomial> pos, neg;
    if (g.is_binomial())
        pos = product(quotient(l, g.lead()), g.trail());
    if (f.is_binomial())
        neg = product(quotient(l, f.lead()), f.trail());
    if (pos && neg)
        return Binomial::make(std::move(*pos), std::move(*neg));
    if (pos)
        return Binomial::monomial(std::move(*pos));
    if (neg)
        return Binomial::monomial(std::move(*neg));
    return Binomial::zero();
}

Binomial reduce(Binomial p, const std::vector<Binomial> &basis) {
    auto divisor = [&](const Monomial &m) -> const Binomial * {
        for (const auto &b : basis)
            if (!b.is_zero() && divides(b.lead(), m))
                return &b;
        return nullptr;
    };

    for (;;) {
        if (p.is_zero())
            return p;
        if (const Binomial *d = divisor(p.lead())) {
            Monomial q = quotient(p.lead(), d->lead());
            // p - q d replaces the lead by q * trail(d)
            if (d->is_binomial()) {
                Monomial repl = product(q, d->trail());
                p = p.is_binomial()
                        ? Binomial::make(std::move(repl), p.trail())
                        : Binomial::monomial(std::move(repl));
            } else {
                p = p.is_binomial() ? Binomial::monomial(p.trail())
                                    : Binomial::zero();
            }
            continue;
        }
        if (!p.is_binomial())
            return p;
        if (const Binomial *d = divisor(p.trail())) {
            Monomial q = quotient(p.trail(), d->lead());
            if (d->is_binomial())
                p = Binomial::make(p.lead(), product(q, d->trail()));
            else
                p = Binomial::monomial(p.lead());
            continue;
        }
        return p;
    }
}

std::optional<SpairWitness> find_groebner_failure(const Graph &g) {
    if (g.n > 12)
        throw limit_error("groebner oracle refused: n = " + std::to_string(g.n) +
                          " exceeds 12");
    if (g.m > 40)
        throw limit_error("groebner oracle refused: m = " + std::to_string(g.m) +
                          " exceeds 40");

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= g.n; ++i)
        for (int j : g.adj[i])
            if (j > i)
                edges.emplace_back(i, j);
    std::vector<Binomial> gens = edge_binomials(g);

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Binomial r = reduce(s_polynomial(gens[i], gens[j]), gens);
            if (!r.is_zero())
                return SpairWitness{edges[i], edges[j], std::move(r)};
        }
    return std::nullopt;
}

bool is_quadratic_groebner(const Graph &g) {
    return !find_groebner_failure(g).has_value();
}

std::string to_string(const Monomial &m, int n) {
    if (m.vars() != 2 * n)
        throw contract_error("monomial variable count disagrees with n");
    std::string out;
    for (int i = 0; i < 2 * n; ++i) {
        if (m.exp[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += (i < n ? "x" : "y") + std::to_string(i < n ? i + 1 : i - n + 1);
        if (m.exp[i] > 1)
            out += "^" + std::to_string(static_cast<int>(m.exp[i]));
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Binomial &b, int n) {
    if (b.is_zero())
        return "0";
    if (b.is_monomial())
        return to_string(b.lead(), n);
    return to_string(b.lead(), n) + " - " + to_string(b.trail(), n);
}

} // namespace cg
