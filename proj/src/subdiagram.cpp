#include "gapq/subdiagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gapq/series.hpp"

namespace gapq {

Subdiagram::Subdiagram(const GapDiagram& parent, std::vector<int> row_lengths)
    : parent_(&parent), rows_(std::move(row_lengths))
{
    while (!rows_.empty() && rows_.back() == 0)
        rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r] < 0)
            throw std::invalid_argument("subdiagram shape error: negative length in row " +
                                        std::to_string(r + 1));
        if (rows_[r] == 0)
            throw std::invalid_argument("subdiagram shape error: empty row " + std::to_string(r + 1) +
                                        " below an occupied row");
        if (r > 0 && rows_[r] > rows_[r - 1])
            throw std::invalid_argument("subdiagram shape error: rows " + std::to_string(r) + "," +
                                        std::to_string(r + 1) + " are not weakly decreasing (" +
                                        std::to_string(rows_[r - 1]) + " < " + std::to_string(rows_[r]) + ")");
        if (rows_[r] > parent.row_length(static_cast<int>(r) + 1))
            throw std::invalid_argument("subdiagram shape error: row " + std::to_string(r + 1) +
                                        " exceeds the gap diagram (length " + std::to_string(rows_[r]) +
                                        " > " + std::to_string(parent.row_length(static_cast<int>(r) + 1)) + ")");
    }
}

Int Subdiagram::size() const
{
    return std::accumulate(rows_.begin(), rows_.end(), Int{0});
}

int Subdiagram::column_height(int x) const
{
    if (x < 1 || rows_.empty() || x > rows_[0])
        return 0;
    int h = 0;
    while (h < row_count() && rows_[h] >= x)
        ++h;
    return h;
}

std::vector<Cell> Subdiagram::cells() const
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int r = 1; r <= row_count(); ++r)
        for (int x = 1; x <= rows_[r - 1]; ++x)
            out.push_back(Cell{x, r});
    return out;
}

std::optional<Cell> Subdiagram::min_value_cell() const
{
    // Values decrease to the east and to the north, so the minimum over D is
    // attained at the east end of some row; scan those.
    std::optional<Cell> best;
    for (int r = 1; r <= row_count(); ++r) {
        Cell c{rows_[r - 1], r};
        if (!best || parent_->value(c) < parent_->value(*best))
            best = c;
    }
    return best;
}

bool Subdiagram::contains_subdiagram(const Subdiagram& other) const
{
    if (other.row_count() > row_count())
        return false;
    for (int r = 1; r <= other.row_count(); ++r)
        if (other.row_length(r) > row_length(r))
            return false;
    return true;
}

int arm(const Subdiagram& d, Cell c)
{
    if (!d.contains(c))
        throw std::invalid_argument("arm: cell not in the subdiagram");
    return d.row_length(c.y) - c.x;
}

int leg(const Subdiagram& d, Cell c)
{
    if (!d.contains(c))
        throw std::invalid_argument("leg: cell not in the subdiagram");
    return d.column_height(c.x) - c.y;
}

std::vector<Cell> upper_boundary(const Subdiagram& d)
{
    std::vector<Cell> out;
    int window = d.parent().b() - 1;
    out.reserve(static_cast<std::size_t>(window));
    for (int x = 1; x <= window; ++x)
        out.push_back(Cell{x, d.column_height(x) + 1});
    return out;
}

namespace {

bool descend(const GapDiagram& g, std::vector<int>& prefix,
             const std::function<bool(const Subdiagram&)>& visit)
{
    if (!visit(Subdiagram(g, prefix)))
        return false;
    int depth = static_cast<int>(prefix.size());
    if (depth >= g.row_count())
        return true;
    int bound = g.row_length(depth + 1);
    if (depth > 0)
        bound = std::min(bound, prefix.back());
    for (int len = 1; len <= bound; ++len) {
        prefix.push_back(len);
        bool keep_going = descend(g, prefix, visit);
        prefix.pop_back();
        if (!keep_going)
            return false;
    }
    return true;
}

} // namespace

bool for_each_subdiagram(const GapDiagram& g, const std::function<bool(const Subdiagram&)>& visit)
{
    std::vector<int> prefix;

    // Lexicographic order with shorter prefixes first: emit the empty tuple,
    // then extend by first-row length 1..width, recursing per row.
    if (!visit(Subdiagram(g, prefix)))
        return false;
    int bound = g.row_length(1);
    for (int len = 1; len <= bound; ++len) {
        prefix.assign(1, len);
        if (!descend(g, prefix, visit))
            return false;
    }
    return true;
}

std::vector<Subdiagram> all_subdiagrams(const GapDiagram& g, Int path_cap)
{
    BigInt total = catalan_count(g);
    if (total > path_cap)
        throw std::invalid_argument("subdiagram enumeration refused: " + total.str() +
                                    " paths exceed the cap of " + std::to_string(path_cap));
    std::vector<Subdiagram> out;
    out.reserve(static_cast<std::size_t>(total));
    for_each_subdiagram(g, [&](const Subdiagram& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

Subdiagram subdiagram_from_values(const GapDiagram& g, const std::vector<Int>& values)
{
    std::vector<int> rows(static_cast<std::size_t>(g.row_count()), 0);
    for (Int v : values) {
        Cell c = g.cell_of_value(v); // rejects non-gap values
        rows[static_cast<std::size_t>(c.y - 1)] += 1;
    }
    // Cells of an upward closed set are left-justified, so per-row counts
    // must reproduce the set exactly; verify after shape validation.
    Subdiagram d(g, rows);
    for (Int v : values)
        if (!d.contains(g.cell_of_value(v)))
            throw std::invalid_argument("value set is not upward closed in the gap poset (value " +
                                        std::to_string(v) + " has a gap below or west of it missing)");
    return d;
}

Subdiagram diagram_union(const Subdiagram& lhs, const Subdiagram& rhs)
{
    if (lhs.parent().a() != rhs.parent().a() || lhs.parent().b() != rhs.parent().b())
        throw std::invalid_argument("diagram_union: mismatched parent diagrams");
    std::vector<int> rows(static_cast<std::size_t>(std::max(lhs.row_count(), rhs.row_count())));
    for (int r = 1; r <= static_cast<int>(rows.size()); ++r)
        rows[static_cast<std::size_t>(r - 1)] = std::max(lhs.row_length(r), rhs.row_length(r));
    return Subdiagram(lhs.parent(), std::move(rows));
}

} // namespace gapq
