#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gapq/semigroup.hpp"

namespace gapq {

// An upward closed subset of the gap poset, stored canonically as its
// weakly decreasing row lengths (bottom row first, trailing zeros absent).
// Holds a pointer to the parent diagram; the parent must outlive it.
class Subdiagram {
public:
    // Validates shape: weakly decreasing, within the parent's profile.
    Subdiagram(const GapDiagram& parent, std::vector<int> row_lengths);

    const GapDiagram& parent() const { return *parent_; }
    const std::vector<int>& row_lengths() const { return rows_; }

    Int size() const;
    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const { return (r >= 1 && r <= row_count()) ? rows_[r - 1] : 0; }
    int column_height(int x) const;

    bool contains(Cell c) const
    {
        return c.y >= 1 && c.y <= row_count() && c.x >= 1 && c.x <= rows_[c.y - 1];
    }

    // Cells bottom row first, west to east.
    std::vector<Cell> cells() const;

    // The cell of minimal gap value (well-defined: g is injective on G).
    // Empty diagrams have no minimal cell.
    std::optional<Cell> min_value_cell() const;

    bool contains_subdiagram(const Subdiagram& other) const;

    friend bool operator==(const Subdiagram& lhs, const Subdiagram& rhs)
    {
        return lhs.parent_->a() == rhs.parent_->a() && lhs.parent_->b() == rhs.parent_->b() &&
               lhs.rows_ == rhs.rows_;
    }

private:
    const GapDiagram* parent_;
    std::vector<int> rows_;
};

// Number of cells of D strictly east of c in its row. c must be in D.
int arm(const Subdiagram& d, Cell c);

// Number of cells of D strictly north of c in its column. c must be in D.
int leg(const Subdiagram& d, Cell c);

// The upper boundary U_D: the unique cell just above D (or above the bottom
// edge) in each column, materialized for columns 1..b-1. Every arrow from a
// cell of G lands at value > 0, hence strictly west of column b, so this
// window is complete for all arrow computations.
std::vector<Cell> upper_boundary(const Subdiagram& d);

// Streams every subdiagram of G exactly once, in lexicographic order of
// row-length tuples (shorter prefixes first). The visitor returns false to
// stop early; the function returns false iff stopped.
bool for_each_subdiagram(const GapDiagram& g, const std::function<bool(const Subdiagram&)>& visit);

// Materializes the full list, in the same order. Refuses (throws
// std::invalid_argument) when the closed-form count exceeds path_cap.
std::vector<Subdiagram> all_subdiagrams(const GapDiagram& g, Int path_cap = 1'000'000);

// Builds the subdiagram whose cell set is {cells of the given gap values};
// rejects value sets that are not upward closed.
Subdiagram subdiagram_from_values(const GapDiagram& g, const std::vector<Int>& values);

// Union of two subdiagrams over the same parent (row-wise max); always a
// valid subdiagram.
Subdiagram diagram_union(const Subdiagram& lhs, const Subdiagram& rhs);

} // namespace gapq

template <>
struct std::hash<gapq::Subdiagram> {
    std::size_t operator()(const gapq::Subdiagram& d) const noexcept
    {
        std::size_t h = std::hash<long long>()((static_cast<long long>(d.parent().a()) << 32) ^
                                               static_cast<unsigned>(d.parent().b()));
        for (int len : d.row_lengths())
            h = h * 1'000'003u + static_cast<std::size_t>(len);
        return h;
    }
};
