#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gapq/rational.hpp"

namespace gapq {

// A lattice cell on the ambient grid Z^2. x grows to the east, y to the
// north. Rows are 1-based with row 1 at the bottom; cells of the gap diagram
// itself always have x,y >= 1, but projections may leave that quadrant.
struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// The coprime pair 1 < a < b together with the derived constants used
// everywhere else: cell values, semigroup membership, arrows, projections.
//
// The value of a cell is g(x,y) = a*b - a*x - b*y. One step east lowers the
// value by a, one step north lowers it by b.
class SemigroupParams {
public:
    SemigroupParams(int a, int b);

    int a() const { return a_; }
    int b() const { return b_; }
    Int genus() const { return genus_; }
    Int frobenius() const { return static_cast<Int>(a_) * b_ - a_ - b_; }

    Int value(Cell c) const
    {
        return static_cast<Int>(a_) * b_ - static_cast<Int>(a_) * c.x - static_cast<Int>(b_) * c.y;
    }

    // d is representable as x*a + y*b with x,y >= 0. O(1) via the table of
    // minimal semigroup elements per residue class mod a.
    bool semigroup_contains(Int d) const
    {
        if (d < 0)
            return false;
        return d >= min_by_residue_[static_cast<std::size_t>(d % a_)];
    }

    // i -> j  iff  0 <= g(j) - g(i) < a.
    bool arrow(Cell i, Cell j) const
    {
        Int d = value(j) - value(i);
        return 0 <= d && d < a_;
    }

    // The unique cell j in row r with i -> j: the lowest-valued cell of row r
    // whose value is >= g(i). Computed by division with remainder, never by
    // scanning.
    Cell proj_row(Cell i, int r) const;

    // The unique cell k in row r with k -> i: the highest-valued cell of row
    // r whose value is <= g(i).
    Cell antiproj_row(Cell i, int r) const;

    // The cell in row r with the given value, which must be attained there.
    Cell cell_in_row(Int value, int r) const;

private:
    int a_;
    int b_;
    Int genus_;
    std::vector<Int> min_by_residue_; // min semigroup element in each class mod a
};

// The gap set G of <a,b> realized as a value-labeled Young diagram:
// G = {(x,y) : x,y >= 1, g(x,y) > 0}, with a - 1 rows of weakly decreasing
// length. Immutable after construction.
class GapDiagram {
public:
    static GapDiagram build(int a, int b);

    const SemigroupParams& params() const { return params_; }
    int a() const { return params_.a(); }
    int b() const { return params_.b(); }
    Int genus() const { return params_.genus(); }

    int row_count() const { return static_cast<int>(row_lengths_.size()); }
    int row_length(int r) const; // 1-based, 0 outside [1, row_count]
    int column_height(int x) const;
    int width() const { return row_lengths_.empty() ? 0 : row_lengths_[0]; }

    bool contains(Cell c) const
    {
        return c.y >= 1 && c.y <= row_count() && c.x >= 1 && c.x <= row_lengths_[c.y - 1];
    }

    // Cells in deterministic order: bottom row first, west to east.
    std::span<const Cell> cells() const { return cells_; }

    // Value lookup is defined only inside G, where g is injective.
    bool has_value(Int v) const { return cell_by_value_.count(v) != 0; }
    Cell cell_of_value(Int v) const;

    Int value(Cell c) const { return params_.value(c); }

    // Gap-poset order: i <= j iff g(j) - g(i) is in <a,b>. Both cells must
    // belong to G.
    bool poset_leq(Cell i, Cell j) const;

    // Projection of a diagram cell onto a row of G at or below it. The
    // result is guaranteed to stay inside G; a landing outside G would be an
    // implementation bug and throws std::logic_error.
    Cell proj_within(Cell c, int r) const;

private:
    explicit GapDiagram(SemigroupParams params);

    SemigroupParams params_;
    std::vector<int> row_lengths_;
    std::vector<Cell> cells_;
    std::unordered_map<Int, Cell> cell_by_value_;
};

} // namespace gapq

template <>
struct std::hash<gapq::Cell> {
    std::size_t operator()(const gapq::Cell& c) const noexcept
    {
        return std::hash<long long>()((static_cast<long long>(c.x) << 32) ^ static_cast<unsigned>(c.y));
    }
};
