#include "gapq/semigroup.hpp"

#include <numeric>
#include <string>

namespace gapq {

namespace {

// Euclidean remainder, in [0, m) for m > 0.
Int floor_mod(Int v, Int m)
{
    Int r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

SemigroupParams::SemigroupParams(int a, int b) : a_(a), b_(b)
{
    if (a <= 1)
        throw std::invalid_argument("parameter error: a must be at least 2 (got a=" + std::to_string(a) + ")");
    if (b <= a)
        throw std::invalid_argument("parameter error: require a < b (got a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("parameter error: a and b must be coprime (got gcd=" +
                                    std::to_string(std::gcd(a, b)) + ")");
    genus_ = static_cast<Int>(a - 1) * (b - 1) / 2;

    // k*b for k = 0..a-1 hits every residue class mod a exactly once and is
    // the minimal semigroup element of its class.
    min_by_residue_.assign(static_cast<std::size_t>(a_), 0);
    for (Int k = 0; k < a_; ++k)
        min_by_residue_[static_cast<std::size_t>((k * b_) % a_)] = k * b_;
}

Cell SemigroupParams::cell_in_row(Int value, int r) const
{
    // g(x, r) = a*b - a*x - b*r  =>  x = (a*b - b*r - value) / a.
    Int numer = static_cast<Int>(a_) * b_ - static_cast<Int>(b_) * r - value;
    if (numer % a_ != 0)
        throw std::logic_error("cell_in_row: value not attained in requested row");
    return Cell{static_cast<int>(numer / a_), r};
}

Cell SemigroupParams::proj_row(Cell i, int r) const
{
    Int v = value(i);
    // Values in row r form the residue class of -b*r mod a; take the least
    // member >= v.
    Int target = v + floor_mod(-static_cast<Int>(b_) * r - v, a_);
    return cell_in_row(target, r);
}

Cell SemigroupParams::antiproj_row(Cell i, int r) const
{
    Int v = value(i);
    Int target = v - floor_mod(v + static_cast<Int>(b_) * r, a_);
    return cell_in_row(target, r);
}

GapDiagram::GapDiagram(SemigroupParams params) : params_(params) {}

GapDiagram GapDiagram::build(int a, int b)
{
    SemigroupParams params(a, b);
    if (params.genus() > 50'000'000)
        throw std::invalid_argument("parameter error: gap diagram too large to materialize (genus " +
                                    std::to_string(params.genus()) + ")");
    GapDiagram g(params);
    // Row r has floor(b*(a-r)/a) cells; the fraction is never an integer for
    // 1 <= r < a because gcd(a,b) = 1.
    for (int r = 1; r < a; ++r) {
        Int len = static_cast<Int>(b) * (a - r) / a;
        g.row_lengths_.push_back(static_cast<int>(len));
    }
    for (int r = 1; r <= g.row_count(); ++r) {
        for (int x = 1; x <= g.row_lengths_[r - 1]; ++x) {
            Cell c{x, r};
            g.cells_.push_back(c);
            g.cell_by_value_.emplace(params.value(c), c);
        }
    }
    if (static_cast<Int>(g.cells_.size()) != params.genus())
        throw std::logic_error("gap diagram size disagrees with (a-1)(b-1)/2");
    return g;
}

int GapDiagram::row_length(int r) const
{
    if (r < 1 || r > row_count())
        return 0;
    return row_lengths_[r - 1];
}

int GapDiagram::column_height(int x) const
{
    if (x < 1 || x > width())
        return 0;
    int h = 0;
    while (h < row_count() && row_lengths_[h] >= x)
        ++h;
    return h;
}

Cell GapDiagram::cell_of_value(Int v) const
{
    auto it = cell_by_value_.find(v);
    if (it == cell_by_value_.end())
        throw std::invalid_argument("value " + std::to_string(v) + " is not a gap of <" +
                                    std::to_string(a()) + "," + std::to_string(b()) + ">");
    return it->second;
}

bool GapDiagram::poset_leq(Cell i, Cell j) const
{
    if (!contains(i) || !contains(j))
        throw std::invalid_argument("poset_leq: cell outside the gap diagram");
    return params_.semigroup_contains(value(j) - value(i));
}

Cell GapDiagram::proj_within(Cell c, int r) const
{
    if (!contains(c))
        throw std::invalid_argument("proj_within: cell outside the gap diagram");
    if (r < 1 || r > c.y)
        throw std::invalid_argument("proj_within: target row must satisfy 1 <= r <= row(c)");
    Cell j = params_.proj_row(c, r);
    if (!contains(j))
        throw std::logic_error("projection onto a lower row of G left G");
    return j;
}

} // namespace gapq
