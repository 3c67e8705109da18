#include "lozenge/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lozenge {

DualGraph dual_graph(const Region& region) {
    DualGraph g;
    for (const Cell& c : region.cells()) {
        (c.kind == CellKind::up ? g.ups : g.downs).push_back(c);
    }
    auto down_index = [&](const Cell& c) -> int {
        auto it = std::lower_bound(g.downs.begin(), g.downs.end(), c);
        if (it == g.downs.end() || *it != c) return -1;
        return static_cast<int>(it - g.downs.begin());
    };
    auto up_index = [&](const Cell& c) -> int {
        auto it = std::lower_bound(g.ups.begin(), g.ups.end(), c);
        if (it == g.ups.end() || *it != c) return -1;
        return static_cast<int>(it - g.ups.begin());
    };
    g.up_adj.resize(g.ups.size());
    g.down_adj.resize(g.downs.size());
    for (std::size_t i = 0; i < g.ups.size(); ++i) {
        const auto nbrs = cell_neighbors(g.ups[i]);
        for (int k = 0; k < 3; ++k) {
            const int j = down_index(nbrs[static_cast<std::size_t>(k)]);
            g.up_adj[i][static_cast<std::size_t>(k)] = j;
            if (j >= 0) g.edges.emplace_back(static_cast<int>(i), j);
        }
    }
    for (std::size_t i = 0; i < g.downs.size(); ++i) {
        const auto nbrs = cell_neighbors(g.downs[i]);
        for (int k = 0; k < 3; ++k) {
            g.down_adj[i][static_cast<std::size_t>(k)] =
                up_index(nbrs[static_cast<std::size_t>(k)]);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

struct StateKey {
    std::vector<std::uint64_t> words;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t w : k.words) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Deletion/contraction matcher over the dual graph. State = bitset of alive
// up cells followed by alive down cells. Forced pairs (alive degree 1) are
// contracted eagerly; cells with no partner kill the branch.
class Matcher {
public:
    explicit Matcher(const DualGraph& g)
        : g_(g),
          nu_(g.ups.size()),
          nd_(g.downs.size()),
          uw_((nu_ + 63) / 64),
          dw_((nd_ + 63) / 64) {}

    Integer count() {
        StateKey all;
        all.words.assign(uw_ + dw_, 0);
        for (std::size_t i = 0; i < nu_; ++i) all.words[i / 64] |= 1ULL << (i % 64);
        for (std::size_t i = 0; i < nd_; ++i) all.words[uw_ + i / 64] |= 1ULL << (i % 64);
        return rec(all);
    }

private:
    bool up_alive(const StateKey& s, int i) const {
        return (s.words[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
    }
    bool down_alive(const StateKey& s, int i) const {
        return (s.words[uw_ + static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
    }
    static void clear_bit(std::vector<std::uint64_t>& w, std::size_t word, int bit) {
        w[word] &= ~(1ULL << bit);
    }
    void kill_up(StateKey& s, int i) const {
        clear_bit(s.words, static_cast<std::size_t>(i) / 64, i % 64);
    }
    void kill_down(StateKey& s, int i) const {
        clear_bit(s.words, uw_ + static_cast<std::size_t>(i) / 64, i % 64);
    }

    Integer rec(const StateKey& key) {
        bool empty = true;
        for (std::uint64_t w : key.words)
            if (w) {
                empty = false;
                break;
            }
        if (empty) return Integer(1);

        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        StateKey s = key;
        // Forced propagation to a fixed point.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < static_cast<int>(nu_); ++i) {
                if (!up_alive(s, i)) continue;
                int deg = 0, last = -1;
                for (int j : g_.up_adj[static_cast<std::size_t>(i)]) {
                    if (j >= 0 && down_alive(s, j)) {
                        ++deg;
                        last = j;
                    }
                }
                if (deg == 0) {
                    memo_.emplace(key, Integer(0));
                    return Integer(0);
                }
                if (deg == 1) {
                    kill_up(s, i);
                    kill_down(s, last);
                    changed = true;
                }
            }
            for (int i = 0; i < static_cast<int>(nd_); ++i) {
                if (!down_alive(s, i)) continue;
                int deg = 0, last = -1;
                for (int j : g_.down_adj[static_cast<std::size_t>(i)]) {
                    if (j >= 0 && up_alive(s, j)) {
                        ++deg;
                        last = j;
                    }
                }
                if (deg == 0) {
                    memo_.emplace(key, Integer(0));
                    return Integer(0);
                }
                if (deg == 1) {
                    kill_down(s, i);
                    kill_up(s, last);
                    changed = true;
                }
            }
        }

        // Pivot: first alive down cell (canonical order keeps the frontier
        // compact and the recursion deterministic).
        int pivot = -1;
        for (int i = 0; i < static_cast<int>(nd_); ++i) {
            if (down_alive(s, i)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            // Ups alive with no downs left: dead branch (caught above unless
            // the state became empty during propagation).
            bool any = false;
            for (std::size_t w = 0; w < uw_; ++w)
                if (s.words[w]) any = true;
            const Integer result = any ? Integer(0) : Integer(1);
            memo_.emplace(key, result);
            return result;
        }

        Integer total(0);
        for (int j : g_.down_adj[static_cast<std::size_t>(pivot)]) {
            if (j < 0 || !up_alive(s, j)) continue;
            StateKey child = s;
            kill_down(child, pivot);
            kill_up(child, j);
            total += rec(child);
        }
        memo_.emplace(key, total);
        return total;
    }

    const DualGraph& g_;
    std::size_t nu_, nd_, uw_, dw_;
    std::unordered_map<StateKey, Integer, StateKeyHash> memo_;
};

}  // namespace

Integer count_matchings(const Region& region, std::size_t cell_cap) {
    if (region.size() > cell_cap) {
        throw std::length_error("count_matchings: region has " + std::to_string(region.size()) +
                                " cells, cap is " + std::to_string(cell_cap));
    }
    if (region.size() == 0) return Integer(1);
    const Balance b = balance(region);
    if (b.up != b.down) return Integer(0);
    DualGraph g = dual_graph(region);
    Matcher m(g);
    return m.count();
}

Integer path_count(PathPoint from, PathPoint to) {
    const long du = to.u - from.u;
    const long dw = to.w - from.w;
    if (du < 0 || dw < 0) return Integer(0);
    return binomial(du + dw, du);
}

PathPoint west_start(int t) { return PathPoint{-2L * t - 1, t}; }

PathPoint bump_end(int x, int j) { return PathPoint{-(j - 1L), x + 2L * (j - 1)}; }

PathPoint gap_start(int x, int r, int v, int which) {
    // The two starts sit on the gap's south-eastern side, upper one first.
    const long g = 2L * v - 2 * r + x;
    const long h = 2L * v - 2;
    if (which == 0) return PathPoint{-h, g + h};
    return PathPoint{-h - 1, g + h + 1};
}

ExactMatrix lgv_matrix_e(int n, int x) {
    if (n < 2) throw std::invalid_argument("lgv_matrix_e: n >= 2 required");
    ExactMatrix m(static_cast<std::size_t>(n - 2), static_cast<std::size_t>(n));
    for (int t = 0; t < n - 2; ++t) {
        for (int j = 1; j <= n; ++j) {
            m.at(static_cast<std::size_t>(t), static_cast<std::size_t>(j - 1)) =
                Rational(path_count(west_start(t), bump_end(x, j)));
        }
    }
    return m;
}

ExactMatrix lgv_matrix_gapped(int n, int r, int v) {
    if (n < 2) throw std::invalid_argument("lgv_matrix_gapped: n >= 2 required");
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        m.at(0, static_cast<std::size_t>(j - 1)) =
            Rational(path_count(gap_start(1, r, v, 0), bump_end(1, j)));
        m.at(1, static_cast<std::size_t>(j - 1)) =
            Rational(path_count(gap_start(1, r, v, 1), bump_end(1, j)));
        for (int t = 0; t < n - 2; ++t) {
            m.at(static_cast<std::size_t>(t + 2), static_cast<std::size_t>(j - 1)) =
                Rational(path_count(west_start(t), bump_end(1, j)));
        }
    }
    return m;
}

Integer lgv_count(const ExactMatrix& m, std::span<const int> row_idx,
                  std::span<const int> col_idx) {
    if (row_idx.size() != col_idx.size())
        throw std::invalid_argument("lgv_count: selection not square");
    const Rational det = submatrix(m, row_idx, col_idx).determinant();
    if (det.get_den() != 1) throw std::logic_error("lgv_count: non-integral determinant");
    Integer result = det.get_num();
    return abs(result);
}

Rational gap_weight(int r, int a) {
    if (a < 0 || a > r) throw std::invalid_argument("gap_weight: need 0 <= a <= r");
    return Rational(factorial(r + a - 1)) /
           Rational(factorial(2 * a) * factorial(r - a));
}

Rational gap_minor(int r, int a, int b) {
    const Integer det = binomial(static_cast<long>(r) + a - 1, 2L * a) *
                            binomial(static_cast<long>(r) + b - 1, 2L * b - 1) -
                        binomial(static_cast<long>(r) + b - 1, 2L * b) *
                            binomial(static_cast<long>(r) + a - 1, 2L * a - 1);
    const Rational value(det);
    const Rational closed = gap_minor_closed(r, a, b);
    if (value != closed) throw std::logic_error("gap_minor: determinant/closed-form mismatch");
    return value;
}

Rational gap_minor_closed(int r, int a, int b) {
    return Rational(2 * r) * Rational(b - a) * gap_weight(r, a) * gap_weight(r, b);
}

Integer count_gapped(int n, int r, int v, const ECountFn& e_count) {
    if (n < 2 || r < 1 || v < 1)
        throw std::invalid_argument("count_gapped: need n >= 2, r >= 1, v >= 1");
    Rational total(0);
    for (int a = 0; a <= r; ++a) {
        for (int b = a + 1; b <= r; ++b) {
            const int ia = 2 * v - r + a;
            const int jb = 2 * v - r + b;
            if (ia < 1 || jb > n) continue;  // zero column in the gap rows
            Rational term = gap_weight(r, a) * gap_weight(r, b) * Rational(b - a);
            term *= Rational(e_count(ia, jb));
            if ((a + b) % 2 != 0) term = -term;
            total += term;
        }
    }
    total *= Rational(2 * r);
    Rational result = abs(total);
    if (result.get_den() != 1) throw std::logic_error("count_gapped: non-integral count");
    return result.get_num();
}

}  // namespace lozenge
