#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/region.hpp"

namespace lozenge {

/// Bipartite planar dual of a region: one vertex per cell, edges between
/// cells sharing a lattice edge. Up cells and down cells form the two
/// classes. Edge list is sorted for deterministic traversal.
struct DualGraph {
    std::vector<Cell> ups;    // sorted
    std::vector<Cell> downs;  // sorted
    std::vector<std::array<int, 3>> up_adj;    // indices into downs, -1 if absent
    std::vector<std::array<int, 3>> down_adj;  // indices into ups, -1 if absent
    std::vector<std::pair<int, int>> edges;    // (up index, down index), sorted
};
DualGraph dual_graph(const Region& region);

inline constexpr std::size_t kDefaultOracleCellCap = 120;

/// Exhaustive tiling count: the number of perfect matchings of the dual
/// graph, via recursive deletion/contraction with forced-edge propagation
/// and memoization on canonical cell-subset keys. M(empty) = 1.
/// Throws std::length_error when the region exceeds cell_cap.
Integer count_matchings(const Region& region, std::size_t cell_cap = kDefaultOracleCellCap);

// Monotone-lattice-path model of tilings. Each tiling corresponds to a
// family of non-intersecting paths with unit north/east steps between fixed
// termini on the boundary; single-path counts are binomials.
struct PathPoint {
    long u = 0;
    long w = 0;
};
/// Number of north/east paths between two points (0 if unreachable).
Integer path_count(PathPoint from, PathPoint to);

PathPoint west_start(int t);         // t-th western boundary start, t = 0,1,... from top
PathPoint bump_end(int x, int j);    // terminus at bump j (1-based)
PathPoint gap_start(int x, int r, int v, int which);  // which in {0, 1}

/// Path-count matrix for the two-dent family: rows are the n-2 western
/// starts (top to bottom), columns the n bump termini.
ExactMatrix lgv_matrix_e(int n, int x);

/// Full n x n path-count matrix for the gapped family at x = 1: rows 1-2
/// start on the gap, rows 3..n on the western boundary.
ExactMatrix lgv_matrix_gapped(int n, int r, int v);

/// |det| of the selected square minor; asserts integrality.
Integer lgv_count(const ExactMatrix& m, std::span<const int> row_idx,
                  std::span<const int> col_idx);

/// 2x2 gap-row minor det [[C(r+a-1,2a), C(r+b-1,2b)], [C(r+a-1,2a-1), C(r+b-1,2b-1)]],
/// evaluated both as a determinant and in closed form; the two must agree.
Rational gap_minor(int r, int a, int b);
Rational gap_minor_closed(int r, int a, int b);

/// Factorial weight (r+a-1)! / ((2a)! (r-a)!) appearing in the gap expansion.
Rational gap_weight(int r, int a);

using ECountFn = std::function<Integer(int i, int j)>;

/// Gapped-region tiling count by Laplace expansion along the two gap rows:
/// |2r * sum_{0<=a<b<=r} (-1)^{a+b} (b-a) w(a) w(b) M(E_{n,1}(2v-r+a, 2v-r+b))|.
/// Terms whose endpoint labels fall outside 1..n contribute zero.
Integer count_gapped(int n, int r, int v, const ECountFn& e_count);

}  // namespace lozenge
