#pragma once

#include <gmp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "vpg/errors.hpp"
#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"
#include "vpg/representation.hpp"
#include "vpg/subsets.hpp"

namespace vpg {

// ---------------------------------------------------------------------------
// Grid induced by the clique paths and good k-sets.

struct InducedGrid {
    std::vector<Rational> x_lines;
    std::vector<Rational> y_lines;
};

namespace detail {

inline void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Lines plus midpoints plus one value beyond each end.
inline std::vector<Rational> refine(const std::vector<Rational>& lines) {
    std::vector<Rational> out;
    if (lines.empty()) return {Rational(0)};
    out.push_back(lines.front() - 1);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out.push_back(lines[i]);
        if (i + 1 < lines.size()) out.push_back((lines[i] + lines[i + 1]) / 2);
    }
    out.push_back(lines.back() + 1);
    return out;
}

}  // namespace detail

inline InducedGrid induced_grid(const VpgRepresentation& RA) {
    if (RA.empty()) throw DomainError("induced_grid of an empty representation");
    InducedGrid g;
    for (const auto& [l, p] : RA.entries()) {
        for (const auto& s : p.segments()) (s.horizontal() ? g.y_lines : g.x_lines).push_back(s.level());
        for (const Point* e : {&p.front(), &p.back()}) {
            g.x_lines.push_back(e->x);
            g.y_lines.push_back(e->y);
        }
    }
    detail::sort_unique(g.x_lines);
    detail::sort_unique(g.y_lines);
    return g;
}

struct GoodKSet {
    Subset members;  // 1-based positions of clique paths in RA
    Orientation orientation = Orientation::Vertical;
    Segment witness{Point(0, 0), Point(0, 1)};
};

// Clique labels of a member set, in RA order.
inline std::vector<std::string> member_labels(const VpgRepresentation& RA, const Subset& members) {
    std::vector<std::string> out;
    for (int m : members) out.push_back(RA.label(static_cast<std::size_t>(m - 1)));
    return out;
}

struct StripSet {
    Orientation orientation;  // orientation of probes inside the strip
    Rational lo, hi;          // bounding grid lines
    Subset labels;            // every path crossing the strip
    bool has_good_kset = false;
};

struct GoodSetAnalysis {
    std::vector<GoodKSet> good;  // sorted by members, one witness each
    std::vector<StripSet> strips;
};

namespace detail {

struct LineItem {
    int label;  // 1-based
    Rational lo, hi;
};

// Sweep probes along one line; along = coordinate on the line, Y* = refined values.
// Emits each probe hit set of size exactly k as (set, probe lo, probe hi).
template <class Emit>
void sweep_line(std::vector<LineItem> items, const std::vector<Rational>& ystar, int n_labels, int k, Emit&& emit) {
    std::sort(items.begin(), items.end(), [](const LineItem& a, const LineItem& b) { return a.lo < b.lo; });
    std::vector<int> count(static_cast<std::size_t>(n_labels) + 1);
    for (std::size_t yi = 0; yi + 1 < ystar.size(); ++yi) {
        const Rational& y1 = ystar[yi];
        std::fill(count.begin(), count.end(), 0);
        int distinct = 0;
        auto add = [&](const LineItem& it) {
            if (count[static_cast<std::size_t>(it.label)]++ == 0) ++distinct;
        };
        auto snapshot = [&](const Rational& y2) {
            if (distinct != k) return;
            Subset s;
            for (int l = 1; l <= n_labels; ++l)
                if (count[static_cast<std::size_t>(l)]) s.push_back(l);
            emit(s, y1, y2);
        };
        std::size_t i = 0;
        while (i < items.size() && items[i].lo <= y1) {
            if (items[i].hi >= y1) add(items[i]);
            ++i;
        }
        snapshot((y1 + ystar[yi + 1]) / 2);  // stops short of the next grid line
        while (i < items.size()) {
            const Rational lo = items[i].lo;
            while (i < items.size() && items[i].lo == lo) add(items[i++]);
            snapshot(lo);
        }
    }
}

// Items met by the line {coord = c} (vertical line x = c when transpose is false).
inline std::vector<LineItem> line_items(const std::vector<std::vector<Segment>>& segs, const Rational& c, bool transpose) {
    std::vector<LineItem> items;
    for (std::size_t p = 0; p < segs.size(); ++p) {
        for (const auto& s : segs[p]) {
            const bool across = s.horizontal() != transpose;  // segment crosses the line
            if (across) {
                if (s.lo() <= c && c <= s.hi()) items.push_back({static_cast<int>(p) + 1, s.level(), s.level()});
            } else if (s.level() == c) {
                items.push_back({static_cast<int>(p) + 1, s.lo(), s.hi()});
            }
        }
    }
    return items;
}

}  // namespace detail

// Every k-set met by some axis-parallel probe, plus the strip data that Lemma 2
// needs. Probe hit sets only change at grid lines, so probes on the refined
// coordinates X*, Y* realise every combinatorial case.
inline GoodSetAnalysis analyze_good_sets(const VpgRepresentation& RA, int k) {
    if (k < 1) throw ParameterError("good k-sets need k >= 1");
    const auto grid = induced_grid(RA);
    const int n = static_cast<int>(RA.size());
    std::vector<std::vector<Segment>> segs;
    for (const auto& [l, p] : RA.entries()) segs.push_back(p.segments());

    std::map<Subset, GoodKSet> found;
    GoodSetAnalysis out;
    for (bool transpose : {false, true}) {
        const auto& lines = transpose ? grid.y_lines : grid.x_lines;
        const auto& cross = transpose ? grid.x_lines : grid.y_lines;
        const auto cstar = detail::refine(lines);
        const auto ystar = detail::refine(cross);
        const Orientation o = transpose ? Orientation::Horizontal : Orientation::Vertical;
        for (std::size_t ci = 0; ci < cstar.size(); ++ci) {
            const Rational& c = cstar[ci];
            auto items = detail::line_items(segs, c, transpose);
            bool any = false;
            detail::sweep_line(items, ystar, n, k, [&](const Subset& s, const Rational& a, const Rational& b) {
                any = true;
                if (found.count(s)) return;
                Segment w = transpose ? Segment(Point(a, c), Point(b, c)) : Segment(Point(c, a), Point(c, b));
                found.emplace(s, GoodKSet{s, o, w});
            });
            // Odd positions strictly inside the line range are strip midpoints.
            if (ci % 2 == 0 && ci > 0 && ci + 1 < cstar.size()) {
                StripSet st{o, cstar[ci - 1], cstar[ci + 1], {}, any};
                std::set<int> ls;
                for (const auto& it : items) ls.insert(it.label);
                st.labels.assign(ls.begin(), ls.end());
                out.strips.push_back(std::move(st));
            }
        }
    }
    for (auto& [s, g] : found) out.good.push_back(std::move(g));
    return out;
}

inline std::vector<GoodKSet> enumerate_good_sets(const VpgRepresentation& RA, int k) {
    return analyze_good_sets(RA, k).good;
}

// Re-check a witness directly against the paths.
inline Subset probe_hits(const VpgRepresentation& RA, const Segment& probe) {
    const RectPath pr = RectPath::segment(probe.a(), probe.b());
    Subset s;
    for (std::size_t i = 0; i < RA.size(); ++i)
        if (!path_intersections(pr, RA.path(i)).empty()) s.push_back(static_cast<int>(i) + 1);
    return s;
}

inline int kset_distance(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) throw DomainError("k-set distance needs equal sizes");
    return static_cast<int>(a.size() - intersection_size(a, b));
}

// Lemma 2: strips without a good k-set contribute their unique good k'-set.
// A strip crossed by no path has nothing to contribute and is skipped.
struct AugmentedGoodSets {
    std::vector<Subset> good;      // the good k-sets
    std::vector<Subset> unpadded;  // k'-sets from strips lacking a good k-set
    std::vector<Subset> padded;    // the same, padded to size k
};

inline Subset pad_lexicographic(const Subset& s, int n, int k) {
    Subset out = s;
    for (int l = 1; l <= n && static_cast<int>(out.size()) < k; ++l)
        if (!std::binary_search(s.begin(), s.end(), l)) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

inline AugmentedGoodSets augmented_good_sets(const VpgRepresentation& RA, int k) {
    const auto an = analyze_good_sets(RA, k);
    AugmentedGoodSets out;
    for (const auto& g : an.good) out.good.push_back(g.members);
    std::set<Subset> extra;
    for (const auto& st : an.strips)
        if (!st.has_good_kset && !st.labels.empty()) extra.insert(st.labels);
    const int n = static_cast<int>(RA.size());
    for (const auto& s : extra) {
        out.unpadded.push_back(s);
        out.padded.push_back(static_cast<int>(s.size()) < k ? pad_lexicographic(s, n, k) : s);
    }
    return out;
}

// First k-subset of [n], lexicographically, meeting every set in at most 2 elements.
inline std::optional<Subset> find_far_kset(const std::vector<Subset>& good_sets, int n, int k) {
    for (const auto& t : k_subsets(n, k)) {
        const bool far = std::all_of(good_sets.begin(), good_sets.end(),
                                     [&](const Subset& s) { return intersection_size(t, s) <= 2; });
        if (far) return t;
    }
    return std::nullopt;
}

struct Certificate {
    int c = 0;                     // max |T ∩ S| over augmented good sets
    std::optional<int> min_bends;  // empty when c = 0 (no path can meet T)
};

// Each segment of a path meeting exactly T lies in one strip and meets at most
// c members of T, so the path needs ceil(k/c) segments.
inline Certificate bend_lb_certificate(const VpgRepresentation& RA, const Subset& target) {
    const int k = static_cast<int>(target.size());
    if (k == 0) throw DomainError("empty target set");
    if (!std::is_sorted(target.begin(), target.end()) || target.front() < 1 ||
        target.back() > static_cast<int>(RA.size()))
        throw DomainError("target must be a sorted subset of the clique positions");
    const auto aug = augmented_good_sets(RA, k);
    Certificate cert;
    for (const auto* family : {&aug.good, &aug.unpadded})
        for (const auto& s : *family) cert.c = std::max(cert.c, static_cast<int>(intersection_size(target, s)));
    if (cert.c > 0) cert.min_bends = (k + cert.c - 1) / cert.c - 1;
    return cert;
}

// ---------------------------------------------------------------------------
// Counting inequalities with exact big integers.

inline BigInt factorial(unsigned long m) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    if (n < 0) return 0;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

struct CountingReport {
    bool a = false;  // 8 n^2 (t+1)^2 <= 2 n^2 k^2
    bool b = false;  // k! < ceil(k/2)! floor(k/2)! (k-5)!
    bool c = false;  // 2 n^2 k^2 k! < n(n-1)(n-2)
    bool d = false;  // 2 n^2 k^2 (k-3) C(k,ceil(k/2)) C(n-k,k-3) < C(n,k)
};

inline BigInt paper_n(unsigned long k) { return 2 * BigInt(k) * BigInt(k) * factorial(k) + 3; }

inline CountingReport validate_counting(const BigInt& n, unsigned long k, unsigned long t) {
    if (k < 1 || n <= BigInt(k)) throw ParameterError("validate_counting needs n > k >= 1");
    CountingReport r;
    const BigInt K(k), T(t);
    const BigInt n2k2 = 2 * n * n * K * K;
    r.a = 8 * n * n * (T + 1) * (T + 1) <= n2k2;
    if (k >= 5) r.b = factorial(k) < factorial((k + 1) / 2) * factorial(k / 2) * factorial(k - 5);
    r.c = n2k2 * factorial(k) < n * (n - 1) * (n - 2);
    if (k >= 3) r.d = n2k2 * (K - 3) * binomial(K, (k + 1) / 2) * binomial(n - K, k - 3) < binomial(n, k);
    return r;
}

struct GoodSetBound {
    std::size_t count = 0;
    BigInt bound;
    bool holds = false;
};

inline GoodSetBound count_good_sets_vs_bound(const VpgRepresentation& RA, int k, unsigned long t) {
    GoodSetBound g;
    g.count = enumerate_good_sets(RA, k).size();
    const BigInt n(static_cast<unsigned long>(RA.size()));
    g.bound = 8 * n * n * (BigInt(t) + 1) * (BigInt(t) + 1);
    g.holds = BigInt(static_cast<unsigned long>(g.count)) <= g.bound;
    return g;
}

// ---------------------------------------------------------------------------
// Auxiliary graphs on clique segments for proper representations of K^3_n.

inline bool is_planar(const Graph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BG bg(g.order());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

struct AuxiliaryGraphs {
    Graph fh, fv;                          // vertices "label#segment"
    Graph fh_contracted, fv_contracted;    // same-path edges contracted
};

namespace detail {

struct SegmentHit {
    Rational pos;
    std::string label;
    std::size_t segment;
    bool horizontal;
};

// Crossings of P(b) with clique paths, ordered along P(b), tagged with the
// clique segment whose interior carries the crossing.
inline std::vector<SegmentHit> segment_hits(const VpgRepresentation& R, const RectPath& pb,
                                            const std::vector<std::string>& clique) {
    std::vector<SegmentHit> hits;
    for (const auto& c : clique) {
        const auto& pc = R.at(c);
        for (const auto& pt : path_intersections(pb, pc).points) {
            for (std::size_t i = 0; i < pc.segment_count(); ++i) {
                Segment s = pc.segment_at(i);
                if (s.contains(pt)) {
                    hits.push_back({pb.arc_position(pt), c, i, s.horizontal()});
                    break;
                }
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const SegmentHit& a, const SegmentHit& b) { return a.pos < b.pos; });
    return hits;
}

inline Graph contract_same_path(const Graph& f, const std::vector<std::string>& owner) {
    std::vector<std::size_t> parent(f.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : f.edges())
        if (owner[u] == owner[v]) parent[find(u)] = find(v);
    std::map<std::size_t, std::size_t> comp;
    std::vector<std::string> labels;
    std::vector<std::size_t> id(f.order());
    for (std::size_t v = 0; v < f.order(); ++v) {
        auto r = find(v);
        auto it = comp.find(r);
        if (it == comp.end()) {
            it = comp.emplace(r, labels.size()).first;
            labels.push_back(f.label(v));
        } else {
            labels[it->second] += "+" + f.label(v);
        }
        id[v] = it->second;
    }
    std::set<Edge> edges;
    for (auto [u, v] : f.edges())
        if (id[u] != id[v]) edges.insert(std::minmax(id[u], id[v]));
    return Graph(labels, {edges.begin(), edges.end()});
}

}  // namespace detail

inline AuxiliaryGraphs build_auxiliary_fh_fv(const VpgRepresentation& R, const std::vector<std::string>& clique,
                                             const std::vector<std::string>& indep) {
    if (!is_proper(R).ok) throw DomainError("auxiliary graphs need a proper representation");
    AuxiliaryGraphs out;
    for (bool horizontal : {true, false}) {
        std::vector<std::string> labels, owner;
        std::map<std::pair<std::string, std::size_t>, std::size_t> vid;
        for (const auto& c : clique) {
            const auto& p = R.at(c);
            for (std::size_t i = 0; i < p.segment_count(); ++i) {
                if (p.segment_at(i).horizontal() != horizontal) continue;
                vid[{c, i}] = labels.size();
                labels.push_back(c + "#" + std::to_string(i));
                owner.push_back(c);
            }
        }
        std::set<Edge> edges;
        for (const auto& b : indep) {
            std::optional<std::size_t> prev;
            for (const auto& h : detail::segment_hits(R, R.at(b), clique)) {
                if (h.horizontal != horizontal) continue;
                const auto v = vid.at({h.label, h.segment});
                if (prev && *prev != v) edges.insert(std::minmax(*prev, v));
                prev = v;
            }
        }
        Graph f(labels, {edges.begin(), edges.end()});
        Graph fc = detail::contract_same_path(f, owner);
        (horizontal ? out.fh : out.fv) = std::move(f);
        (horizontal ? out.fh_contracted : out.fv_contracted) = std::move(fc);
    }
    return out;
}

struct ShSvClassification {
    std::vector<std::string> sh, sv;
    bool covers = false;  // S_H ∪ S_V = all independent vertices
};

inline ShSvClassification classify_sh_sv(const VpgRepresentation& R, const std::vector<std::string>& clique,
                                         const std::vector<std::string>& indep) {
    ShSvClassification out;
    for (const auto& b : indep) {
        std::set<std::string> all, hs, vs;
        for (const auto& h : detail::segment_hits(R, R.at(b), clique)) {
            all.insert(h.label);
            (h.horizontal ? hs : vs).insert(h.label);
        }
        // A hit at a clique corner lies on both a horizontal and a vertical segment.
        for (const auto& c : clique) {
            for (const auto& pt : path_intersections(R.at(b), R.at(c)).points) {
                const auto& cs = R.at(c).corners();
                if (std::find(cs.begin(), cs.end(), pt) != cs.end() && pt != cs.front() && pt != cs.back()) {
                    hs.insert(c);
                    vs.insert(c);
                }
            }
        }
        if (all.size() < 3) throw DomainError(b + " meets fewer than 3 clique paths");
        if (hs.size() >= 2) out.sh.push_back(b);
        if (vs.size() >= 2) out.sv.push_back(b);
    }
    std::set<std::string> u(out.sh.begin(), out.sh.end());
    u.insert(out.sv.begin(), out.sv.end());
    out.covers = u.size() == std::set<std::string>(indep.begin(), indep.end()).size();
    return out;
}

}  // namespace vpg
