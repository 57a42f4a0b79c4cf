#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vpg/errors.hpp"
#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"

namespace vpg {

// Vertex label -> path, in insertion order.
class VpgRepresentation {
public:
    void add(const std::string& label, RectPath path) {
        if (label.empty() || label.find_first_of(" \t\n:") != std::string::npos)
            throw ValidationError("bad vertex label '" + label + "'");
        if (!index_.emplace(label, entries_.size()).second) throw ValidationError("duplicate path for " + label);
        entries_.emplace_back(label, std::move(path));
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<std::pair<std::string, RectPath>>& entries() const { return entries_; }
    const std::string& label(std::size_t i) const { return entries_.at(i).first; }
    const RectPath& path(std::size_t i) const { return entries_.at(i).second; }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    const RectPath& at(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw DomainError("no path for " + label);
        return entries_[it->second].second;
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& e : entries_) out.push_back(e.first);
        return out;
    }

    // Sub-representation on the given labels, in this representation's order.
    VpgRepresentation restricted(const std::vector<std::string>& keep) const {
        std::set<std::string> k(keep.begin(), keep.end());
        VpgRepresentation out;
        for (const auto& [l, p] : entries_)
            if (k.count(l)) out.add(l, p);
        return out;
    }

    friend bool operator==(const VpgRepresentation& a, const VpgRepresentation& b) { return a.entries_ == b.entries_; }

private:
    std::vector<std::pair<std::string, RectPath>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

struct Box {
    Rational x0, y0, x1, y1;
};

inline Box bbox(const RectPath& p) {
    Box b{p.front().x, p.front().y, p.front().x, p.front().y};
    for (const auto& c : p.corners()) {
        if (c.x < b.x0) b.x0 = c.x;
        if (c.x > b.x1) b.x1 = c.x;
        if (c.y < b.y0) b.y0 = c.y;
        if (c.y > b.y1) b.y1 = c.y;
    }
    return b;
}

inline bool boxes_meet(const Box& a, const Box& b) {
    return !(a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0);
}

struct PairIntersection {
    std::size_t i, j;
    PathIntersection meet;
};

// All nonempty pairwise intersections, i < j.
inline std::vector<PairIntersection> all_intersections(const VpgRepresentation& R) {
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < R.size(); ++i) boxes.push_back(bbox(R.path(i)));
    std::vector<PairIntersection> out;
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t j = i + 1; j < R.size(); ++j) {
            if (!boxes_meet(boxes[i], boxes[j])) continue;
            auto m = path_intersections(R.path(i), R.path(j));
            if (!m.empty()) out.push_back({i, j, std::move(m)});
        }
    return out;
}

}  // namespace detail

inline Graph intersection_graph(const VpgRepresentation& R) {
    std::vector<Edge> edges;
    for (const auto& pi : detail::all_intersections(R)) edges.emplace_back(pi.i, pi.j);
    return Graph(R.labels(), edges);
}

using LabelPair = std::pair<std::string, std::string>;

struct RealizationReport {
    bool ok = true;
    std::vector<LabelPair> missing;   // in g, not realized
    std::vector<LabelPair> spurious;  // realized, not in g
};

inline RealizationReport verify_realizes(const VpgRepresentation& R, const Graph& g) {
    {
        auto a = R.labels(), b = g.labels();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw DomainError("representation and graph have different vertex labels");
    }
    auto pairs_of = [](const Graph& h) {
        std::set<LabelPair> s;
        for (auto [u, v] : h.edges()) s.insert(std::minmax(h.label(u), h.label(v)));
        return s;
    };
    const auto want = pairs_of(g);
    const auto have = pairs_of(intersection_graph(R));
    RealizationReport rep;
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(rep.missing));
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(rep.spurious));
    rep.ok = rep.missing.empty() && rep.spurious.empty();
    return rep;
}

enum class ViolationKind { Overlap, Multiplicity, NonCrossing };

struct Violation {
    ViolationKind kind;
    std::vector<std::string> labels;
    Point where;
};

inline std::string describe(const Violation& v) {
    std::string kind = v.kind == ViolationKind::Overlap        ? "overlap"
                       : v.kind == ViolationKind::Multiplicity ? "multiplicity"
                                                               : "non-crossing";
    std::string out = kind + " at " + to_string(v.where) + ":";
    for (const auto& l : v.labels) out += " " + l;
    return out;
}

struct ProperReport {
    bool ok = true;
    std::vector<Violation> violations;
};

inline ProperReport is_proper(const VpgRepresentation& R) {
    ProperReport rep;
    std::map<Point, std::set<std::string>> on_point;
    for (const auto& pi : detail::all_intersections(R)) {
        const auto& a = R.label(pi.i);
        const auto& b = R.label(pi.j);
        for (const auto& s : pi.meet.overlaps) rep.violations.push_back({ViolationKind::Overlap, {a, b}, s.a()});
        for (const auto& pt : pi.meet.points) {
            on_point[pt].insert(a);
            on_point[pt].insert(b);
            if (!detail::crosses_at(R.path(pi.i), R.path(pi.j), pt))
                rep.violations.push_back({ViolationKind::NonCrossing, {a, b}, pt});
        }
    }
    for (const auto& [pt, ls] : on_point)
        if (ls.size() > 2) rep.violations.push_back({ViolationKind::Multiplicity, {ls.begin(), ls.end()}, pt});
    rep.ok = rep.violations.empty();
    return rep;
}

inline std::size_t max_bends(const VpgRepresentation& R) {
    std::size_t m = 0;
    for (const auto& [l, p] : R.entries()) m = std::max(m, bend_count(p));
    return m;
}

struct TrimResult {
    RectPath path;
    std::vector<std::string> original_sequence;
    std::vector<std::string> sequence;  // surviving hits, in order along the path
    bool degenerate = false;            // one hit survives; `path` is then the input path
};

namespace detail {

struct Hit {
    Rational pos;
    std::string label;
    Point where;
};

inline std::vector<Hit> ordered_hits(const VpgRepresentation& R, const std::string& b,
                                     const std::vector<std::string>& clique) {
    const RectPath& pb = R.at(b);
    std::vector<Hit> hits;
    for (const auto& c : clique) {
        auto m = path_intersections(pb, R.at(c));
        if (!m.overlaps.empty()) throw DomainError("path of " + b + " overlaps path of " + c);
        for (const auto& pt : m.points) hits.push_back({pb.arc_position(pt), c, pt});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
        if (x.pos != y.pos) return x.pos < y.pos;
        return x.label < y.label;
    });
    return hits;
}

}  // namespace detail

// Leaf rule: drop an end hit while its label recurs in the rest, alternating ends.
inline TrimResult trim_independent_path(const VpgRepresentation& R, const std::string& b,
                                        const std::vector<std::string>& clique) {
    auto hits = detail::ordered_hits(R, b, clique);
    if (hits.empty()) throw DomainError("path of " + b + " meets no clique path");
    TrimResult out{R.at(b), {}, {}, false};
    for (const auto& h : hits) out.original_sequence.push_back(h.label);

    std::size_t lo = 0, hi = hits.size();  // surviving window [lo, hi)
    auto recurs = [&](std::size_t at) {
        for (std::size_t i = lo; i < hi; ++i)
            if (i != at && hits[i].label == hits[at].label) return true;
        return false;
    };
    bool progress = true;
    while (progress && hi - lo > 1) {
        progress = false;
        if (recurs(lo)) {
            ++lo;
            progress = true;
        }
        if (hi - lo > 1 && recurs(hi - 1)) {
            --hi;
            progress = true;
        }
    }
    for (std::size_t i = lo; i < hi; ++i) out.sequence.push_back(hits[i].label);
    if (hits[lo].where == hits[hi - 1].where) {
        out.degenerate = true;
        return out;
    }
    out.path = R.at(b).subpath(hits[lo].where, hits[hi - 1].where);
    return out;
}

// One record per line: "label : (x1,y1) (x2,y2) ...".
inline void write_representation(std::ostream& os, const VpgRepresentation& R) {
    for (const auto& [l, p] : R.entries()) {
        os << l << " :";
        for (const auto& c : p.corners()) os << ' ' << to_string(c);
        os << '\n';
    }
}

inline VpgRepresentation read_representation(std::istream& is) {
    VpgRepresentation R;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto where = "representation line " + std::to_string(lineno) + ": ";
        const auto colon = line.find(" : ");
        if (colon == std::string::npos) throw ParseError(where + "missing ' : '");
        std::string label = line.substr(0, colon);
        label.erase(0, label.find_first_not_of(" \t"));
        std::istringstream ps(line.substr(colon + 3));
        std::vector<Point> pts;
        for (std::string tok; ps >> tok;) {
            if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') throw ParseError(where + "bad point " + tok);
            const auto comma = tok.find(',');
            if (comma == std::string::npos) throw ParseError(where + "bad point " + tok);
            pts.emplace_back(parse_rational(tok.substr(1, comma - 1)),
                             parse_rational(tok.substr(comma + 1, tok.size() - comma - 2)));
        }
        try {
            R.add(label, RectPath::from_corners(std::move(pts)));
        } catch (const ValidationError& e) {
            throw ParseError(where + e.what());
        }
    }
    return R;
}

}  // namespace vpg
