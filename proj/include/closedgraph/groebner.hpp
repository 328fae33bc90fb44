#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closedgraph/graph.hpp"

namespace cg {

/// Monomial in K[x_1..x_n, y_1..y_n]: exponents for x_1..x_n followed by
/// y_1..y_n.  The fixed term order everywhere in this module is pure
/// lexicographic with x_1 > ... > x_n > y_1 > ... > y_n.
struct Monomial {
    std::vector<std::uint8_t> exp;

    int vars() const { return static_cast<int>(exp.size()); }
    bool operator==(const Monomial &) const = default;
};

/// -1, 0, +1 as a is below, equal to, above b in the term order.
int compare_lex(const Monomial &a, const Monomial &b);
bool divides(const Monomial &d, const Monomial &m);
Monomial lcm(const Monomial &a, const Monomial &b);
Monomial quotient(const Monomial &m, const Monomial &d); // requires d | m
Monomial product(const Monomial &a, const Monomial &b);

/// Difference of two monomials with implicit coefficients +1/-1, kept
/// normalized with lead strictly above trail; equal monomials cancel to
/// zero.  A single surviving monomial is stored with an empty trail.
class Binomial {
  public:
    static Binomial zero() { return Binomial(); }
    static Binomial monomial(Monomial m);
    static Binomial make(Monomial lhs, Monomial rhs); // lhs - rhs, normalized

    bool is_zero() const { return !lead_.has_value(); }
    bool is_monomial() const { return lead_.has_value() && !trail_.has_value(); }
    bool is_binomial() const { return trail_.has_value(); }
    const Monomial &lead() const { return *lead_; }
    const Monomial &trail() const { return *trail_; }

    bool operator==(const Binomial &) const = default;

  private:
    std::optional<Monomial> lead_, trail_;
};

/// x_i y_j - x_j y_i for an edge {i, j} with i < j; lead is x_i y_j.
Binomial edge_binomial(int i, int j, int n);

/// One generator per edge, in lexicographic edge order.
std::vector<Binomial> edge_binomials(const Graph &g);

/// S(f, g) = (lcm/lead f) f - (lcm/lead g) g, normalized (a sign flip is
/// absorbed by the representation).  f and g must be nonzero.
Binomial s_polynomial(const Binomial &f, const Binomial &g);

/// Deterministic full reduction: repeatedly cancels the lead against the
/// first basis element whose lead divides it, then does the same for the
/// trail once the lead is irreducible.  Each step strictly decreases the
/// rewritten term, so this terminates.
Binomial reduce(Binomial p, const std::vector<Binomial> &basis);

struct SpairWitness {
    std::pair<int, int> edge1, edge2;
    Binomial remainder;
};

/// The edge generators form a quadratic Groebner basis under the fixed
/// order iff every S-pair of distinct generators reduces to zero against
/// the full generator list.  Pairs are scanned in lexicographic edge-pair
/// order and the first failure is returned.  Desk-scale oracle: throws
/// limit_error when n > 12 or m > 40.
std::optional<SpairWitness> find_groebner_failure(const Graph &g);

bool is_quadratic_groebner(const Graph &g);

/// "x1*y2", "x2^2*y1*y3", "1" for the empty monomial; n fixes the x/y
/// split of the variable block.
std::string to_string(const Monomial &m, int n);

/// "x1*y2 - x2*y1", single monomials as-is, "0" for zero.
std::string to_string(const Binomial &b, int n);

} // namespace cg
