#pragma once

#include <string>
#include <vector>

#include "closedgraph/graph.hpp"

namespace cg {

/// Maximal clique occupying the label interval [a, b].
struct Facet {
    int a, b;
    bool operator==(const Facet &) const = default;
};

/// Facets of a closed labeled graph, sorted so that a_1 = 1, b_r = n, both
/// endpoint sequences strictly increase, a_i <= b_i and a_{i+1} <= b_i + 1
/// (equality of the last only across component boundaries).
using FacetList = std::vector<Facet>;

/// Throws contract_error unless facets satisfies the shape above.
void validate_facets(const FacetList &facets, int n);

/// Maximal cliques of a closed labeled graph as label intervals: vertex a
/// contributes [a, maxreach(a)] where maxreach is the largest neighbour
/// (or a itself), and candidates contained in the previous facet are
/// dropped.  Requires every component to occupy a contiguous label range;
/// throws contract_error otherwise or when the graph is not closed.
FacetList facets_of_closed(const LabeledGraph &g);

/// Facet-vertex incidence: entry (i, k) = 1 iff k is in facet i.  Stored
/// densely for up to 10^4 columns, as interval rows beyond that.
class IncidenceMatrix {
  public:
    static IncidenceMatrix from_facets(const FacetList &facets, int n);
    /// Arbitrary 0/1 matrix from explicit rows (always dense).
    static IncidenceMatrix from_grid(const std::vector<std::vector<int>> &rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool dense() const { return dense_; }
    bool at(int row, int col) const; // 1-based

    friend bool consecutive_ones(const IncidenceMatrix &m);
    friend std::string to_text(const IncidenceMatrix &m);

  private:
    int rows_ = 0, cols_ = 0;
    bool dense_ = true;
    std::vector<std::vector<bool>> cells_;  // dense form
    std::vector<Facet> row_intervals_;      // implicit form
};

IncidenceMatrix incidence_matrix(const FacetList &facets, int n);

/// True iff the ones in every row and every column are consecutive.
bool consecutive_ones(const IncidenceMatrix &m);

/// 0/1 grid, one row per line; dense form only (throws contract_error on
/// implicit matrices).
std::string to_text(const IncidenceMatrix &m);

} // namespace cg
