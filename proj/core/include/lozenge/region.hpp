#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lozenge {

// Triangular-lattice cells. Row b is the horizontal strip between lattice
// lines b and b+1, counted downward from the top side; columns count
// rightward. An up-pointing cell U(col,row) has its apex on line `row`; a
// down-pointing cell D(col,row) has its horizontal edge on line `row`.
//
// Adjacency (shared lattice edge):
//   U(a,b) <-> D(a,b), D(a-1,b), D(a-1,b+1)
//   D(a,b) <-> U(a,b), U(a+1,b), U(a+1,b-1)

enum class CellKind : std::uint8_t { up = 0, down = 1 };

struct Cell {
    int row = 0;
    int col = 0;
    CellKind kind = CellKind::up;
    auto operator<=>(const Cell&) const = default;
};

/// The three lattice neighbors of a cell (always the opposite orientation).
std::array<Cell, 3> cell_neighbors(const Cell& c);

// Parametric region families. All are bounded by a horizontal top side of
// length x, a north-eastern zig-zag boundary carrying n "bumps" (notches
// each holding one up-pointing cell), a straight south-eastern side, a
// bottom side and a western zig-zag. The families differ in how deep the
// western zig-zag runs relative to the north-eastern one.
struct GSpec {
    int n = 0, x = 0;  // n <= 0 yields the empty region
};
struct FSpec {
    int n = 1, x = 0, i = 1;  // dent at bump i; F(1,x,1) is empty
};
struct DSpec {
    int n = 2, x = 0;  // two more up cells than down cells; not tileable itself
};
struct DZeroSpec {
    int n = 2, x = 0;  // D with the bump-1 and bump-3 cells removed
};
struct DGapSpec {
    int n = 2, x = 1, r = 1, v = 1;  // D minus a side-2 up-pointing triangle
};
struct ESpec {
    int n = 2, x = 0, i = 1, j = 2;  // D with dents at bumps i < j
};

using RegionSpec = std::variant<GSpec, FSpec, DSpec, DZeroSpec, DGapSpec, ESpec>;

class Region {
public:
    Region() = default;
    Region(std::vector<Cell> cells, RegionSpec spec);

    const std::vector<Cell>& cells() const { return cells_; }  // sorted
    const RegionSpec& spec() const { return spec_; }
    bool contains(const Cell& c) const;
    std::size_t size() const { return cells_.size(); }

private:
    std::vector<Cell> cells_;
    RegionSpec spec_;
};

/// Builds the cell set of a parametric region.
/// Throws std::invalid_argument for parameters outside the family's domain
/// (including a gap that does not fit inside its host region).
Region build(const RegionSpec& spec);

/// (#up cells, #down cells). Equality is necessary for a tiling to exist.
struct Balance {
    std::int64_t up = 0;
    std::int64_t down = 0;
    bool operator==(const Balance&) const = default;
};
Balance balance(const Region& region);

/// The up-pointing cell sitting in bump i (1-based, counted from the top)
/// of a region with top side x.
Cell bump_cell(int x, int i);

/// The four cells of the side-2 up-pointing gap triangle for given (x, r, v).
std::array<Cell, 4> gap_cells(int x, int r, int v);

std::string spec_name(const RegionSpec& spec);

// Line-oriented serialization: one "row col U|D" line per cell, sorted.
std::string to_text(const Region& region);
std::vector<Cell> cells_from_text(const std::string& text);

}  // namespace lozenge
