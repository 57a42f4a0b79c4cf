#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vpg/errors.hpp"
#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"
#include "vpg/representation.hpp"

namespace vpg {

struct GridSearchBudget {
    int width = 0;
    int height = 0;
    int max_bends = 0;
    std::uint64_t node_limit = 1'000'000;
};

struct OracleResult {
    std::optional<VpgRepresentation> witness;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;  // false with no witness: the grid was searched completely
};

namespace detail::grid {

struct ISeg {
    int x0, y0, x1, y1;  // x0 <= x1, y0 <= y1
    bool h;
};

struct IPath {
    std::vector<std::pair<int, int>> corners;
    std::vector<ISeg> segs;
    int bx0, by0, bx1, by1;
};

inline IPath make_path(std::vector<std::pair<int, int>> c) {
    IPath p{std::move(c), {}, 0, 0, 0, 0};
    p.bx0 = p.bx1 = p.corners[0].first;
    p.by0 = p.by1 = p.corners[0].second;
    for (std::size_t i = 0; i + 1 < p.corners.size(); ++i) {
        auto [ax, ay] = p.corners[i];
        auto [bx, by] = p.corners[i + 1];
        p.segs.push_back({std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by), ay == by});
    }
    for (auto [x, y] : p.corners) {
        p.bx0 = std::min(p.bx0, x);
        p.bx1 = std::max(p.bx1, x);
        p.by0 = std::min(p.by0, y);
        p.by1 = std::max(p.by1, y);
    }
    return p;
}

inline bool is_corner(const IPath& p, int x, int y) {
    for (auto [cx, cy] : p.corners)
        if (cx == x && cy == y) return true;
    return false;
}

inline bool on_path(const IPath& p, int x, int y) {
    for (const auto& s : p.segs)
        if (s.x0 <= x && x <= s.x1 && s.y0 <= y && y <= s.y1) return true;
    return false;
}

struct Meet {
    bool any = false;
    bool improper = false;  // overlap or non-crossing contact
    std::vector<std::pair<int, int>> points;
};

inline Meet meet(const IPath& p, const IPath& q, bool proper) {
    Meet m;
    if (p.bx1 < q.bx0 || q.bx1 < p.bx0 || p.by1 < q.by0 || q.by1 < p.by0) return m;
    for (const auto& s : p.segs) {
        for (const auto& t : q.segs) {
            if (s.h != t.h) {
                const ISeg& hs = s.h ? s : t;
                const ISeg& vs = s.h ? t : s;
                const int x = vs.x0, y = hs.y0;
                if (hs.x0 <= x && x <= hs.x1 && vs.y0 <= y && y <= vs.y1) {
                    m.any = true;
                    if (proper) {
                        const bool interior = hs.x0 < x && x < hs.x1 && vs.y0 < y && y < vs.y1;
                        if (!interior || is_corner(p, x, y) || is_corner(q, x, y)) m.improper = true;
                        m.points.emplace_back(x, y);
                    }
                }
            } else if (s.h && s.y0 == t.y0 && std::max(s.x0, t.x0) <= std::min(s.x1, t.x1)) {
                m.any = true;
                m.improper = true;
            } else if (!s.h && s.x0 == t.x0 && std::max(s.y0, t.y0) <= std::min(s.y1, t.y1)) {
                m.any = true;
                m.improper = true;
            }
            if (m.any && !proper) return m;
        }
    }
    return m;
}

inline std::vector<IPath> enumerate_paths(int W, int H, int max_bends) {
    std::vector<IPath> out;
    std::vector<std::pair<int, int>> cur;
    // Extend with alternating moves; a path is kept in the orientation whose
    // corner list is lexicographically smaller than its reverse.
    auto rec = [&](auto&& self, bool horizontal_next, int bends_left) -> void {
        auto [x, y] = cur.back();
        const int lim = horizontal_next ? W : H;
        for (int v = 0; v < lim; ++v) {
            if (v == (horizontal_next ? x : y)) continue;
            cur.emplace_back(horizontal_next ? v : x, horizontal_next ? y : v);
            auto rev = std::vector<std::pair<int, int>>(cur.rbegin(), cur.rend());
            if (cur < rev) {
                IPath p = make_path(cur);
                bool simple = true;
                for (std::size_t i = 0; i < p.segs.size() && simple; ++i)
                    for (std::size_t j = i + 2; j < p.segs.size() && simple; ++j) {
                        IPath a = make_path({p.corners[i], p.corners[i + 1]});
                        IPath b = make_path({p.corners[j], p.corners[j + 1]});
                        if (meet(a, b, false).any) simple = false;
                    }
                if (simple) out.push_back(std::move(p));
            }
            if (bends_left > 0) self(self, !horizontal_next, bends_left - 1);
            cur.pop_back();
        }
    };
    for (int x = 0; x < W; ++x)
        for (int y = 0; y < H; ++y)
            for (bool h : {true, false}) {
                cur.assign(1, {x, y});
                rec(rec, h, max_bends);
            }
    std::stable_sort(out.begin(), out.end(), [](const IPath& a, const IPath& b) { return a.segs.size() < b.segs.size(); });
    return out;
}

}  // namespace detail::grid

// Backtracking over grid paths with forward checking of pairwise constraints.
// Vertices are taken in descending-degree order. A witness is returned only
// after verify_realizes (and is_proper when asked) accept it.
inline OracleResult search_representation(const Graph& g, const GridSearchBudget& budget, bool require_proper) {
    using namespace detail::grid;
    if (budget.width <= 0 || budget.height <= 0 || budget.max_bends < 0 || budget.node_limit == 0)
        throw ParameterError("grid budget must be positive");
    OracleResult res;
    const std::size_t n = g.order();
    if (n == 0) {
        res.witness = VpgRepresentation{};
        return res;
    }
    const auto cand = enumerate_paths(budget.width, budget.height, budget.max_bends);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });

    std::vector<std::vector<std::uint32_t>> domain(n);
    std::vector<std::uint32_t> all(cand.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::optional<std::uint32_t>> chosen(n);

    auto to_rep = [&]() {
        VpgRepresentation R;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<Point> pts;
            for (auto [x, y] : cand[*chosen[v]].corners) pts.emplace_back(Rational(x), Rational(y));
            R.add(g.label(v), RectPath::from_corners(std::move(pts)));
        }
        return R;
    };

    auto compatible = [&](std::size_t u, const IPath& pu, std::size_t v, const IPath& pv) {
        Meet m = meet(pu, pv, require_proper);
        if (m.any != g.adjacent(u, v)) return false;
        return !(require_proper && m.improper);
    };

    // In proper mode no intersection point may lie on a third path.
    auto multiplicity_ok = [&](std::size_t v, const IPath& pv) {
        if (!require_proper) return true;
        for (std::size_t a = 0; a < n; ++a) {
            if (a == v || !chosen[a]) continue;
            const IPath& pa = cand[*chosen[a]];
            for (auto [x, y] : meet(pv, pa, true).points)
                for (std::size_t b = 0; b < n; ++b)
                    if (b != v && b != a && chosen[b] && on_path(cand[*chosen[b]], x, y)) return false;
        }
        return true;
    };

    for (auto& d : domain) d = all;
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) {
            auto R = to_rep();
            if (!verify_realizes(R, g).ok) return false;
            if (require_proper && !is_proper(R).ok) return false;
            res.witness = std::move(R);
            return true;
        }
        const std::size_t v = order[depth];
        const auto dom = domain[v];
        for (auto ci : dom) {
            if (++res.nodes > budget.node_limit) {
                res.budget_exhausted = true;
                return false;
            }
            const IPath& pv = cand[ci];
            if (!multiplicity_ok(v, pv)) continue;
            chosen[v] = ci;
            std::vector<std::vector<std::uint32_t>> saved;
            bool wiped = false;
            for (std::size_t d = depth + 1; d < n && !wiped; ++d) {
                const std::size_t w = order[d];
                std::vector<std::uint32_t> kept;
                for (auto cj : domain[w])
                    if (compatible(v, pv, w, cand[cj])) kept.push_back(cj);
                saved.push_back(std::move(domain[w]));
                domain[w] = std::move(kept);
                wiped = domain[w].empty();
            }
            bool found = !wiped && self(self, depth + 1);
            for (std::size_t i = 0; i < saved.size(); ++i) domain[order[depth + 1 + i]] = std::move(saved[i]);
            if (found) return true;
            chosen[v].reset();
            if (res.budget_exhausted) return false;
        }
        return false;
    };
    search(search, 0);
    return res;
}

}  // namespace vpg
