#include "lozenge/region.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lozenge {

std::array<Cell, 3> cell_neighbors(const Cell& c) {
    if (c.kind == CellKind::up) {
        return {Cell{c.row, c.col, CellKind::down}, Cell{c.row, c.col - 1, CellKind::down},
                Cell{c.row + 1, c.col - 1, CellKind::down}};
    }
    return {Cell{c.row, c.col, CellKind::up}, Cell{c.row, c.col + 1, CellKind::up},
            Cell{c.row - 1, c.col + 1, CellKind::up}};
}

Region::Region(std::vector<Cell> cells, RegionSpec spec)
    : cells_(std::move(cells)), spec_(spec) {
    std::sort(cells_.begin(), cells_.end());
}

bool Region::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

namespace {

// Strip-by-strip column spans of the common pentagonal template: top side of
// length x, q north-eastern zig-zag periods (one SE + one E step each),
// p western zig-zag periods (one SW + one SE step each), bottom on line 2p.
// Requires q <= 2p; rows with empty spans are allowed.
void append_family_cells(std::vector<Cell>& cells, int x, int q, int p) {
    for (int b = 0; b < 2 * p; ++b) {
        const int u_lo = (b % 2 == 0) ? -(b / 2) : (1 - b) / 2;
        const int d_lo = (b % 2 == 0) ? -(b / 2) : -((b + 1) / 2);
        const int u_hi = (b < q) ? x + b : x + 2 * q - b - 1;
        const int d_hi = (b < q) ? x + b - 1 : x + 2 * q - b - 1;
        for (int a = u_lo; a <= u_hi; ++a) cells.push_back(Cell{b, a, CellKind::up});
        for (int a = d_lo; a <= d_hi; ++a) cells.push_back(Cell{b, a, CellKind::down});
    }
}

std::vector<Cell> family_cells(int x, int q, int p) {
    std::vector<Cell> cells;
    if (p > 0) append_family_cells(cells, x, q, p);
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Cell> g_cells(int n, int x) {
    if (n <= 0) return {};
    return family_cells(x, n, n);
}

// F-family shape with the bump cell still in place (one extra up cell).
std::vector<Cell> f_capped_cells(int n, int x) {
    if (n <= 1) return {};
    return family_cells(x, n, n - 1);
}

void remove_cell(std::vector<Cell>& cells, const Cell& c, const char* what) {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) {
        throw std::invalid_argument(std::string("build: ") + what + " cell not inside region");
    }
    cells.erase(it);
}

std::vector<Cell> d_cells(int n, int x) {
    if (n >= 4) return family_cells(x, n, n - 2);
    // For n = 2, 3 the pentagon degenerates (south-eastern side length n-4);
    // the capped F shape minus its bottom-left down cell realizes the same
    // counting contract.
    std::vector<Cell> cells = f_capped_cells(n, x);
    const int b = 2 * (n - 1) - 1;
    remove_cell(cells, Cell{b, -((b + 1) / 2), CellKind::down}, "corner");
    return cells;
}

void check_common(int n, int x, int n_min, const char* family) {
    if (n < n_min)
        throw std::invalid_argument(std::string("build: ") + family + " requires n >= " +
                                    std::to_string(n_min));
    if (x < 0) throw std::invalid_argument("build: x must be non-negative");
}

}  // namespace

Cell bump_cell(int x, int i) { return Cell{i - 1, x + i - 1, CellKind::up}; }

std::array<Cell, 4> gap_cells(int x, int r, int v) {
    const int g = 2 * v - 2 * r + x;
    const int h = 2 * v - 2;
    return {Cell{h, g, CellKind::up}, Cell{h + 1, g - 1, CellKind::up},
            Cell{h + 1, g, CellKind::up}, Cell{h + 1, g - 1, CellKind::down}};
}

Region build(const RegionSpec& spec) {
    return std::visit(
        [&](const auto& s) -> Region {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, GSpec>) {
                if (s.x < 0) throw std::invalid_argument("build: x must be non-negative");
                return Region(g_cells(s.n, s.x), spec);
            } else if constexpr (std::is_same_v<S, FSpec>) {
                check_common(s.n, s.x, 1, "F");
                if (s.i < 1 || s.i > s.n)
                    throw std::invalid_argument("build: F requires 1 <= i <= n");
                if (s.n == 1) return Region({}, spec);
                auto cells = f_capped_cells(s.n, s.x);
                remove_cell(cells, bump_cell(s.x, s.i), "bump");
                return Region(std::move(cells), spec);
            } else if constexpr (std::is_same_v<S, DSpec>) {
                check_common(s.n, s.x, 2, "D");
                return Region(d_cells(s.n, s.x), spec);
            } else if constexpr (std::is_same_v<S, DZeroSpec>) {
                check_common(s.n, s.x, 3, "DZero");
                return build(RegionSpec(ESpec{s.n, s.x, 1, 3}));
            } else if constexpr (std::is_same_v<S, ESpec>) {
                check_common(s.n, s.x, 2, "E");
                if (!(1 <= s.i && s.i < s.j && s.j <= s.n))
                    throw std::invalid_argument("build: E requires 1 <= i < j <= n");
                auto cells = d_cells(s.n, s.x);
                remove_cell(cells, bump_cell(s.x, s.i), "bump");
                remove_cell(cells, bump_cell(s.x, s.j), "bump");
                return Region(std::move(cells), spec);
            } else {
                static_assert(std::is_same_v<S, DGapSpec>);
                check_common(s.n, s.x, 2, "DGap");
                if (s.r < 1 || s.v < 1)
                    throw std::invalid_argument("build: DGap requires r, v >= 1");
                auto cells = d_cells(s.n, s.x);
                for (const Cell& c : gap_cells(s.x, s.r, s.v)) remove_cell(cells, c, "gap");
                return Region(std::move(cells), spec);
            }
        },
        spec);
}

Balance balance(const Region& region) {
    Balance b;
    for (const Cell& c : region.cells()) {
        (c.kind == CellKind::up ? b.up : b.down) += 1;
    }
    return b;
}

std::string spec_name(const RegionSpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, GSpec>)
                os << "G(" << s.n << "," << s.x << ")";
            else if constexpr (std::is_same_v<S, FSpec>)
                os << "F(" << s.n << "," << s.x << "," << s.i << ")";
            else if constexpr (std::is_same_v<S, DSpec>)
                os << "D(" << s.n << "," << s.x << ")";
            else if constexpr (std::is_same_v<S, DZeroSpec>)
                os << "D0(" << s.n << "," << s.x << ")";
            else if constexpr (std::is_same_v<S, ESpec>)
                os << "E(" << s.n << "," << s.x << "," << s.i << "," << s.j << ")";
            else
                os << "DGap(" << s.n << "," << s.x << "," << s.r << "," << s.v << ")";
        },
        spec);
    return os.str();
}

std::string to_text(const Region& region) {
    std::ostringstream os;
    for (const Cell& c : region.cells()) {
        os << c.row << ' ' << c.col << ' ' << (c.kind == CellKind::up ? 'U' : 'D') << '\n';
    }
    return os.str();
}

std::vector<Cell> cells_from_text(const std::string& text) {
    std::vector<Cell> cells;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int row, col;
        char kind;
        if (!(ls >> row >> col >> kind) || (kind != 'U' && kind != 'D'))
            throw std::invalid_argument("cells_from_text: malformed line '" + line + "'");
        cells.push_back(Cell{row, col, kind == 'U' ? CellKind::up : CellKind::down});
    }
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("cells_from_text: duplicate cell");
    return cells;
}

}  // namespace lozenge
