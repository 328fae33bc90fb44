#include "closedgraph/cliques.hpp"

#include <algorithm>
#include <set>

#include "closedgraph/closedness.hpp"
#include "closedgraph/error.hpp"

namespace cg {

namespace {

// Columns beyond this are kept as interval rows instead of bits.
constexpr int dense_col_limit = 10'000;

} // namespace

void validate_facets(const FacetList &facets, int n) {
    if (facets.empty())
        throw contract_error("facet list is empty");
    if (facets.front().a != 1)
        throw contract_error("first facet must start at 1");
    if (facets.back().b != n)
        throw contract_error("last facet must end at n");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].a > facets[i].b)
            throw contract_error("facet with empty interval");
        if (i > 0) {
            if (facets[i - 1].a >= facets[i].a || facets[i - 1].b >= facets[i].b)
                throw contract_error("facet endpoints must strictly increase");
            if (facets[i].a > facets[i - 1].b + 1)
                throw contract_error("facet list leaves a vertex uncovered");
        }
    }
}

FacetList facets_of_closed(const LabeledGraph &g) {
    const Graph &h = g.graph;
    if (auto viol = find_closedness_violation(h))
        throw contract_error("graph is not closed under its labels (edges (" +
                             std::to_string(viol->edge1.first) + "," +
                             std::to_string(viol->edge1.second) + ") and (" +
                             std::to_string(viol->edge2.first) + "," +
                             std::to_string(viol->edge2.second) + "))");
    for (const auto &comp : connected_components(h))
        if (comp.back() - comp.front() + 1 != static_cast<int>(comp.size()))
            throw contract_error(
                "components do not occupy contiguous label ranges");

    // Within a closed component the upper neighbourhood of a is exactly
    // the label interval (a, maxreach(a)], so candidate facets are
    // [a, maxreach(a)]; a candidate inside the previous facet is not
    // maximal and is dropped.
    FacetList facets;
    for (int a = 1; a <= h.n; ++a) {
        int reach = a;
        if (!h.adj[a].empty())
            reach = std::max(reach, h.adj[a].back());
        if (facets.empty() || reach > facets.back().b)
            facets.push_back({a, reach});
    }
    if (h.n > 0)
        validate_facets(facets, h.n);
    return facets;
}

IncidenceMatrix IncidenceMatrix::from_facets(const FacetList &facets, int n) {
    validate_facets(facets, n);
    IncidenceMatrix m;
    m.rows_ = static_cast<int>(facets.size());
    m.cols_ = n;
    if (n <= dense_col_limit) {
        m.dense_ = true;
        m.cells_.assign(m.rows_, std::vector<bool>(n, false));
        for (int i = 0; i < m.rows_; ++i)
            for (int k = facets[i].a; k <= facets[i].b; ++k)
                m.cells_[i][k - 1] = true;
    } else {
        m.dense_ = false;
        m.row_intervals_ = facets;
    }
    return m;
}

IncidenceMatrix
IncidenceMatrix::from_grid(const std::vector<std::vector<int>> &rows) {
    IncidenceMatrix m;
    m.rows_ = static_cast<int>(rows.size());
    m.cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    m.dense_ = true;
    m.cells_.assign(m.rows_, std::vector<bool>(m.cols_, false));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_)
            throw contract_error("ragged grid");
        for (int k = 0; k < m.cols_; ++k)
            m.cells_[i][k] = rows[i][k] != 0;
    }
    return m;
}

bool IncidenceMatrix::at(int row, int col) const {
    if (dense_)
        return cells_[row - 1][col - 1];
    const Facet &f = row_intervals_[row - 1];
    return f.a <= col && col <= f.b;
}

IncidenceMatrix incidence_matrix(const FacetList &facets, int n) {
    return IncidenceMatrix::from_facets(facets, n);
}

namespace {

bool run_is_consecutive(const std::vector<bool> &bits) {
    int first = -1, last = -1, count = 0;
    for (int i = 0; i < static_cast<int>(bits.size()); ++i)
        if (bits[i]) {
            if (first < 0)
                first = i;
            last = i;
            ++count;
        }
    return count == 0 || last - first + 1 == count;
}

} // namespace

bool consecutive_ones(const IncidenceMatrix &m) {
    if (m.dense_) {
        for (const auto &row : m.cells_)
            if (!run_is_consecutive(row))
                return false;
        std::vector<bool> col(m.rows_);
        for (int k = 0; k < m.cols_; ++k) {
            for (int i = 0; i < m.rows_; ++i)
                col[i] = m.cells_[i][k];
            if (!run_is_consecutive(col))
                return false;
        }
        return true;
    }

    // interval rows are consecutive by definition; sweep the columns and
    // keep the active row set, which must stay an index range
    std::vector<std::vector<int>> opening(m.cols_ + 2), closing(m.cols_ + 2);
    for (int i = 0; i < m.rows_; ++i) {
        const Facet &f = m.row_intervals_[i];
        opening[f.a].push_back(i);
        closing[f.b + 1].push_back(i);
    }
    std::set<int> active;
    for (int k = 1; k <= m.cols_; ++k) {
        for (int i : closing[k])
            active.erase(i);
        for (int i : opening[k])
            active.insert(i);
        if (!active.empty() &&
            *active.rbegin() - *active.begin() + 1 !=
                static_cast<int>(active.size()))
            return false;
    }
    return true;
}

std::string to_text(const IncidenceMatrix &m) {
    if (!m.dense_)
        throw contract_error("text rendering requires the dense form");
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows_) * (m.cols_ + 1));
    for (const auto &row : m.cells_) {
        for (bool bit : row)
            out.push_back(bit ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

} // namespace cg
