#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vpg/errors.hpp"
#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"
#include "vpg/representation.hpp"
#include "vpg/subsets.hpp"

namespace vpg {

// ---------------------------------------------------------------------------
// Split graphs: one staircase per clique vertex threading its label segments.

inline VpgRepresentation construct_split_upper(const Graph& g, const SplitPartition& part) {
    validate_split(g, part);
    VpgRepresentation R;
    const auto& indep = part.independent;
    for (auto v : part.clique) {
        std::vector<long> js;  // 1-based positions of independent neighbours
        for (std::size_t j = 0; j < indep.size(); ++j)
            if (g.adjacent(v, indep[j])) js.push_back(static_cast<long>(j) + 1);
        if (js.empty()) {
            R.add(g.label(v), RectPath::segment(Point(-1, 0), Point(0, 0)));
            continue;
        }
        std::vector<Point> c{Point(0, 0), Point(0, 2 * js[0]), Point(2 * js[0] + 1, 2 * js[0])};
        for (std::size_t t = 1; t < js.size(); ++t) {
            c.emplace_back(2 * js[t - 1] + 1, 2 * js[t]);
            c.emplace_back(2 * js[t] + 1, 2 * js[t]);
        }
        R.add(g.label(v), RectPath::from_corners(std::move(c)));
    }
    for (std::size_t j = 0; j < indep.size(); ++j) {
        const long jj = static_cast<long>(j) + 1;
        R.add(g.label(indep[j]), RectPath::segment(Point(make_rational(4 * jj + 1, 2), make_rational(4 * jj - 1, 2)),
                                                   Point(make_rational(4 * jj + 1, 2), make_rational(4 * jj + 1, 2))));
    }
    return R;
}

// ---------------------------------------------------------------------------
// Hamiltonian decomposition of K_{4s+1}.

struct HamiltonianDecomposition {
    int vertex_count = 0;
    std::vector<std::vector<int>> cycles;  // vertices 1..vertex_count, closing edge implied
};

// Walecki: hub plus Z_{2m} (m = 2s), zig-zag 0,1,-1,2,-2,...,m rotated by j.
// Vertices are renamed so that the first cycle reads 1,2,...,4s+1.
inline HamiltonianDecomposition hamiltonian_decomposition(int s) {
    if (s < 1) throw ParameterError("hamiltonian_decomposition needs s >= 1");
    const int m = 2 * s;
    const int hub = 2 * m;  // raw id of the hub; ring vertices are 0..2m-1
    std::vector<int> zig{0};
    for (int i = 1; i < m; ++i) {
        zig.push_back(i);
        zig.push_back((2 * m - i) % (2 * m));
    }
    zig.push_back(m);
    std::vector<std::vector<int>> raw;
    for (int j = 0; j < m; ++j) {
        std::vector<int> c{hub};
        for (int z : zig) c.push_back((z + j) % (2 * m));
        raw.push_back(std::move(c));
    }
    std::vector<int> rename(static_cast<std::size_t>(2 * m + 1));
    for (std::size_t p = 0; p < raw[0].size(); ++p) rename[static_cast<std::size_t>(raw[0][p])] = static_cast<int>(p) + 1;
    HamiltonianDecomposition d{2 * m + 1, {}};
    for (const auto& c : raw) {
        std::vector<int> cyc;
        for (int v : c) cyc.push_back(rename[static_cast<std::size_t>(v)]);
        d.cycles.push_back(std::move(cyc));
    }
    return d;
}

inline bool is_valid_decomposition(const HamiltonianDecomposition& d) {
    const int N = d.vertex_count;
    std::set<std::pair<int, int>> used;
    for (const auto& c : d.cycles) {
        if (static_cast<int>(c.size()) != N) return false;
        std::set<int> vs(c.begin(), c.end());
        if (static_cast<int>(vs.size()) != N || *vs.begin() != 1 || *vs.rbegin() != N) return false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto e = std::minmax(c[i], c[(i + 1) % c.size()]);
            if (!used.insert(e).second) return false;
        }
    }
    return static_cast<long>(used.size()) == static_cast<long>(N) * (N - 1) / 2;
}

// S_i walks cycle i from vertex i (or, if i is a dummy, from the smallest real
// label on the cycle), drops labels > n, and closes back at its start.
inline std::vector<std::vector<int>> sequences_from_cycles(const HamiltonianDecomposition& d, int n) {
    if (n < 2 || n > d.vertex_count) throw ParameterError("sequences_from_cycles needs 2 <= n <= 4s+1");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        const auto& c = d.cycles[i];
        int start = static_cast<int>(i) + 1;
        if (start > n) start = 1;
        const auto at = static_cast<std::size_t>(std::find(c.begin(), c.end(), start) - c.begin());
        std::vector<int> seq;
        for (std::size_t k = 0; k < c.size(); ++k) {
            int v = c[(at + k) % c.size()];
            if (v <= n) seq.push_back(v);
        }
        seq.push_back(start);
        out.push_back(std::move(seq));
    }
    return out;
}

inline bool all_pairs_consecutive(const std::vector<std::vector<int>>& seqs, int n) {
    std::set<std::pair<int, int>> seen;
    for (const auto& s : seqs)
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] != s[i + 1]) seen.insert(std::minmax(s[i], s[i + 1]));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (!seen.count({a, b})) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Proper representation of K^3_n from s square regions.

struct SquareRegionLayout {
    int index = 0;  // 1-based
    Point origin;
    std::vector<int> horizontal;  // S_{s+i}: label of row 1..n+1 (bottom to top)
    std::vector<int> vertical;    // S_i: label of column 1..n+1 (left to right)
};

namespace detail {

inline int position_of(const std::vector<int>& seq, int label) {
    for (std::size_t p = 0; p < seq.size(); ++p)
        if (seq[p] == label) return static_cast<int>(p) + 1;
    throw DomainError("label missing from square sequence");
}

struct K3nGeometry {
    int n = 0, s = 0;
    std::vector<std::vector<int>> seqs;
    std::vector<SquareRegionLayout> squares;
};

inline K3nGeometry k3n_geometry(int n) {
    K3nGeometry g;
    g.n = n;
    g.s = (n - 1 + 3) / 4;
    g.seqs = sequences_from_cycles(hamiltonian_decomposition(g.s), n);
    for (int i = 1; i <= g.s; ++i) {
        SquareRegionLayout sq;
        sq.index = i;
        sq.origin = Point(Rational(2 * n * i), i % 2 == 0 ? make_rational(1, 2) : Rational(0));
        sq.vertical = g.seqs[static_cast<std::size_t>(i - 1)];
        sq.horizontal = g.seqs[static_cast<std::size_t>(g.s + i - 1)];
        g.squares.push_back(std::move(sq));
    }
    return g;
}

}  // namespace detail

inline std::vector<SquareRegionLayout> k3n_squares(int n) {
    if (n < 3) throw ParameterError("K^3_n construction needs n >= 3");
    return detail::k3n_geometry(n).squares;
}

// Target graph of construct_k3n_proper; unlike build_split_knk it admits n = 3.
inline Graph k3n_target(int n) {
    if (n < 3) throw ParameterError("K^3_n construction needs n >= 3");
    return detail::split_knk(n, 3).graph;
}

// Square i spans [0, n+2]^2 in local coordinates; column j sits at x = j and
// row j at y = j. Operation 1 merges the two end columns of label i with its
// row, operation 2 merges the two end rows of label s+i with its column, and
// every other label joins its row and column with two jogs of width 1/4.
// Independent paths are L's of size about one grid unit at margin 1/32, drawn
// as a checkerboard so that neighbouring L's never touch.
inline VpgRepresentation construct_k3n_proper(int n) {
    if (n < 3) throw ParameterError("K^3_n construction needs n >= 3");
    const auto geo = detail::k3n_geometry(n);
    const int s = geo.s;
    const Rational T(n + 2), delta(1, 4), u(1, 32);
    const Rational half(1, 2);

    VpgRepresentation R;
    for (int l = 1; l <= n; ++l) {
        std::vector<Point> c;
        Rational exit_y;
        for (const auto& sq : geo.squares) {
            const int i = sq.index;
            const Rational& X0 = sq.origin.x;
            const Rational& Y0 = sq.origin.y;
            auto at = [&](const Rational& x, const Rational& y) { return Point(X0 + x, Y0 + y); };
            std::vector<Point> local;
            Rational entry_y;
            if (l == sq.vertical.front()) {
                const Rational h(detail::position_of(sq.horizontal, l));
                const Rational r1(1), rn(n + 1);
                local = {at(r1, T), at(r1, 0), at(r1 + delta, 0), at(r1 + delta, h),
                         at(rn - delta, h), at(rn - delta, T), at(rn, T), at(rn, 0)};
                entry_y = Y0 + T;
                exit_y = Y0;
            } else if (l == sq.horizontal.front()) {
                const Rational v(detail::position_of(sq.vertical, l));
                const Rational rn(n + 1);
                local = {at(T, rn), at(T, rn - delta), at(v, rn - delta), at(v, 1 + delta), at(0, 1 + delta), at(0, 1)};
                entry_y = Y0 + rn;
                exit_y = Y0 + 1;
            } else {
                const Rational v(detail::position_of(sq.vertical, l));
                const Rational h(detail::position_of(sq.horizontal, l));
                local = {at(v - delta, h), at(v - delta, T), at(v, T), at(v, 0), at(v + delta, 0), at(v + delta, h)};
                entry_y = Y0 + h;
                exit_y = Y0 + h;
            }
            if (i == 1) {
                c.emplace_back(X0 - half, entry_y);
            } else {
                // Connector in the gap left of this square, x spaced by label.
                const Rational gap_left = X0 - Rational(2 * n) + T;
                const Rational xc = gap_left + make_rational(l, n + 1) * (n - 2);
                const Rational prev_y = c.back().y;
                c.emplace_back(xc, prev_y);
                c.emplace_back(xc, entry_y);
            }
            c.insert(c.end(), local.begin(), local.end());
        }
        const auto& last = geo.squares.back();
        c.emplace_back(last.origin.x + T + half, exit_y);
        R.add(std::to_string(l), RectPath::from_corners(std::move(c)));
    }

    const Rational aL = u, aR = u, beta = 3 * u, rho = u, gam = 2 * u, kap = u / 2, etaB = u, etaT = 2 * u;
    for (const auto& triple : k_subsets(n, 3)) {
        const int p = triple[0], q = triple[1], r = triple[2];
        bool placed = false;
        for (int idx = 0; idx < 2 * s && !placed; ++idx) {
            const auto& seq = geo.seqs[static_cast<std::size_t>(idx)];
            for (std::size_t j = 0; j + 1 < seq.size() && !placed; ++j) {
                if (std::min(seq[j], seq[j + 1]) != p || std::max(seq[j], seq[j + 1]) != q) continue;
                const bool vertical_pair = idx < s;
                const auto& sq = geo.squares[static_cast<std::size_t>(vertical_pair ? idx : idx - s)];
                const Rational& X0 = sq.origin.x;
                const Rational& Y0 = sq.origin.y;
                std::vector<Point> c;
                if (vertical_pair) {
                    // Row L across columns a, a+1 at r's row b.
                    const int a = static_cast<int>(j) + 1;
                    const int b = detail::position_of(sq.horizontal, r);
                    const int sgn = (a + b) % 2 == 0 ? 1 : -1;
                    const Rational y = Rational(b) + sgn * beta;
                    c = {Point(X0 + a - aL, Y0 + y), Point(X0 + a + 1 + aR, Y0 + y),
                         Point(X0 + a + 1 + aR, Y0 + b - sgn * rho)};
                } else {
                    // Column L across rows b, b+1 at r's column a.
                    const int b = static_cast<int>(j) + 1;
                    const int a = detail::position_of(sq.vertical, r);
                    const bool left = (a + b) % 2 == 0;
                    const Rational x = left ? Rational(a - gam) : Rational(a + gam);
                    const Rational other = left ? Rational(a + kap) : Rational(a - kap);
                    c = {Point(X0 + x, Y0 + b - etaB), Point(X0 + x, Y0 + b + 1 + etaT),
                         Point(X0 + other, Y0 + b + 1 + etaT)};
                }
                R.add(subset_label(triple), RectPath::from_corners(std::move(c)));
                placed = true;
            }
        }
        if (!placed) throw DomainError("no sequence has " + std::to_string(p) + "," + std::to_string(q) + " adjacent");
    }
    return R;
}

// ---------------------------------------------------------------------------
// Staircase representation of H_{n,k} with all Q-pairs adjacent.

namespace detail {

// Bottom-anchored strip [lo, top) of a vertical segment whose leftward rays miss
// every clique path, capped at height cap.
inline Rational exposed_zone_top(const VpgRepresentation& clique, const Segment& seg, const Rational& cap) {
    const Rational& X = seg.level();
    const Rational& lo = seg.lo();
    Rational top = std::min<Rational>(lo + cap, seg.hi());
    for (const auto& [l, p] : clique.entries()) {
        for (const auto& t : p.segments()) {
            if (t.horizontal()) {
                if (t.lo() >= X) continue;
                const Rational& y = t.level();
                if (y == lo) throw DomainError("exposed zone is empty");
                if (y > lo && y < top) top = y;
            } else {
                if (t.level() >= X) continue;
                if (t.lo() <= lo && lo <= t.hi()) throw DomainError("exposed zone is empty");
                if (t.lo() > lo && t.lo() < top) top = t.lo();
            }
        }
    }
    if (top <= lo) throw DomainError("exposed zone is empty");
    return top;
}

}  // namespace detail

inline VpgRepresentation construct_gtm_stairs(int n, int k) {
    if (k < 2) throw ParameterError("staircase construction needs k >= 2");
    if (n <= k) throw ParameterError("staircase construction needs n > k");
    const Rational eps0(1, n + 1);
    VpgRepresentation clique;
    for (int i = 1; i <= n; ++i) {
        const Rational d = eps0 * (i - 1);
        clique.add(std::to_string(i), RectPath::from_corners({Point(d, -d), Point(1 + d, -d), Point(1 + d, -1 - d),
                                                             Point(2 + d, -1 - d), Point(2 + d, -2 - d)}));
    }
    // Zone tops of the second and fourth segments of every clique stair.
    std::vector<Rational> top2(static_cast<std::size_t>(n) + 1), top4(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const auto& p = clique.at(std::to_string(i));
        top2[static_cast<std::size_t>(i)] = detail::exposed_zone_top(clique, p.segment_at(1), eps0);
        top4[static_cast<std::size_t>(i)] = detail::exposed_zone_top(clique, p.segment_at(3), eps0);
    }

    VpgRepresentation R = clique;
    const auto q = k_subsets(n, k);
    const auto M = static_cast<long>(q.size());
    for (std::size_t rank = 0; rank < q.size(); ++rank) {
        const auto& S = q[rank];
        const Rational eps = eps0 * make_rational(static_cast<long>(rank) + 1, M + 1);
        auto d = [&](int i) { return eps0 * (i - 1); };
        std::vector<Point> c;
        Rational x = d(S[0]) + eps;
        c.emplace_back(x, -d(S[0]) + eps);
        Rational y = top2[static_cast<std::size_t>(S[1])] - eps;
        c.emplace_back(x, y);
        x = 1 + d(S[1]) + eps;
        c.emplace_back(x, y);
        for (std::size_t r = 2; r < S.size(); ++r) {
            y = top4[static_cast<std::size_t>(S[r])] - eps;
            c.emplace_back(x, y);
            x = 2 + d(S[r]) + eps;
            c.emplace_back(x, y);
        }
        R.add(subset_label(S), RectPath::from_corners(std::move(c)));
    }
    return R;
}

// ---------------------------------------------------------------------------
// Proper 1-bend representation of K^2_n: nested L's plus one hook per pair.

inline VpgRepresentation construct_k2n_proper(int n) {
    if (n < 2) throw ParameterError("K^2_n construction needs n >= 2");
    VpgRepresentation R;
    const Rational half = make_rational(1, 2), right = make_rational(n, 2);
    for (int j = 0; j < n; ++j) {
        const Rational x = make_rational(j, 2), y = make_rational(-j, 2);
        R.add(std::to_string(j + 1), RectPath::from_corners({Point(x, half), Point(x, y), Point(right, y)}));
    }
    for (const auto& pr : k_subsets(n, 2)) {
        const int i = pr[0] - 1, j = pr[1] - 1;
        const Rational x = make_rational(j, 2) - make_rational(1, 4);
        const Rational y0 = make_rational(-i, 2) + make_rational(1, 4);
        const Rational y1 = make_rational(-i, 2) - make_rational(1, 5);
        R.add(subset_label(pr), RectPath::from_corners({Point(x, y0), Point(x, y1), Point(make_rational(j, 2) + make_rational(1, 10), y1)}));
    }
    return R;
}

}  // namespace vpg
