#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vpg/errors.hpp"
#include "vpg/graph.hpp"
#include "vpg/subsets.hpp"

namespace vpg {

// Strict partial order over labelled elements; less(i, j) means i < j.
class Poset {
public:
    Poset() = default;

    Poset(std::vector<std::string> ground, const std::vector<Edge>& less_pairs) : ground_(std::move(ground)) {
        const std::size_t n = ground_.size();
        less_.assign(n, std::vector<char>(n, 0));
        std::map<std::string, int> seen;
        for (const auto& g : ground_)
            if (seen[g]++) throw ValidationError("duplicate poset element " + g);
        for (auto [a, b] : less_pairs) {
            if (a >= n || b >= n) throw ValidationError("relation element out of range");
            less_[a][b] = 1;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (less_[i][i]) throw ValidationError("relation is not irreflexive at " + ground_[i]);
            for (std::size_t j = 0; j < n; ++j) {
                if (!less_[i][j]) continue;
                if (less_[j][i]) throw ValidationError("relation is not antisymmetric");
                for (std::size_t k = 0; k < n; ++k)
                    if (less_[j][k] && !less_[i][k]) throw ValidationError("relation is not transitive");
            }
        }
    }

    std::size_t size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::string& element(std::size_t i) const { return ground_.at(i); }
    bool less(std::size_t i, std::size_t j) const { return less_[i][j] != 0; }
    bool comparable(std::size_t i, std::size_t j) const { return less_[i][j] || less_[j][i]; }

    std::vector<Edge> relation() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (less_[i][j]) out.emplace_back(i, j);
        return out;
    }

    std::optional<std::size_t> index_of(const std::string& e) const {
        auto it = std::find(ground_.begin(), ground_.end(), e);
        if (it == ground_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - ground_.begin());
    }

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<char>> less_;
};

// Element indices from least to greatest.
using LinearOrder = std::vector<std::size_t>;
using Realizer = std::vector<LinearOrder>;

// r-subsets and s-subsets of [n]; mu < tau iff mu is a proper superset of tau.
inline Poset build_p_rsn(int r, int s, int n) {
    if (!(1 <= r && r < s && s <= n - 1)) throw ParameterError("build_p_rsn needs 1 <= r < s <= n-1");
    std::vector<Subset> elems = k_subsets(n, r);
    const auto big = k_subsets(n, s);
    elems.insert(elems.end(), big.begin(), big.end());
    std::vector<std::string> ground;
    for (const auto& e : elems) ground.push_back(subset_label(e));
    std::vector<Edge> rel;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (elems[i].size() > elems[j].size() &&
                std::includes(elems[i].begin(), elems[i].end(), elems[j].begin(), elems[j].end()))
                rel.emplace_back(i, j);
    return Poset(ground, rel);
}

inline bool is_linear_extension(const Poset& p, const LinearOrder& order) {
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (auto [a, b] : p.relation())
        if (pos[a] > pos[b]) return false;
    return true;
}

inline bool is_realizer(const Poset& p, const Realizer& R) {
    const std::size_t n = p.size();
    if (R.empty()) throw DomainError("empty realizer");
    std::vector<std::vector<std::size_t>> pos;
    for (const auto& order : R) {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        bool perm = sorted.size() == n;
        for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == i;
        if (!perm) throw DomainError("order is not a permutation of the ground set");
        if (!is_linear_extension(p, order)) return false;
        std::vector<std::size_t> ps(n);
        for (std::size_t i = 0; i < n; ++i) ps[order[i]] = i;
        pos.push_back(std::move(ps));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || p.less(a, b)) continue;
            const bool everywhere = std::all_of(pos.begin(), pos.end(), [&](const auto& ps) { return ps[a] < ps[b]; });
            if (everywhere) return false;
        }
    return true;
}

struct DimensionResult {
    std::optional<int> dimension;  // empty: exceeds maxDim
    Realizer witness;
};

namespace detail {

using Mask = std::uint64_t;

// Strict order as "below" bitsets: below[x] holds every y with y < x.
struct Closure {
    std::vector<Mask> below;

    bool lt(std::size_t a, std::size_t b) const { return (below[b] >> a) & 1U; }

    // Add a < b and close transitively.
    void add(std::size_t a, std::size_t b) {
        const Mask lower = below[a] | (Mask{1} << a);
        for (std::size_t x = 0; x < below.size(); ++x)
            if (x == b || lt(b, x)) below[x] |= lower;
    }
};

inline LinearOrder topological_order(const Closure& c) {
    const std::size_t n = c.below.size();
    LinearOrder order;
    std::vector<char> placed(n, 0);
    while (order.size() < n) {
        for (std::size_t x = 0; x < n; ++x) {
            if (placed[x]) continue;
            bool ready = true;
            for (std::size_t y = 0; y < n && ready; ++y)
                if (!placed[y] && c.lt(y, x)) ready = false;
            if (ready) {
                placed[x] = 1;
                order.push_back(x);
                break;
            }
        }
    }
    return order;
}

}  // namespace detail

// Exact dimension by colouring ordered incomparable pairs (a over b) with t
// extensions, each kept as a transitively closed strict order. Colour classes
// are interchangeable, so a pair may open at most one new colour.
inline DimensionResult brute_force_dimension(const Poset& p, int max_dim) {
    const std::size_t n = p.size();
    if (n > 64) throw DomainError("brute_force_dimension supports at most 64 elements");
    detail::Closure base{std::vector<detail::Mask>(n, 0)};
    for (auto [a, b] : p.relation()) base.below[b] |= detail::Mask{1} << a;

    std::vector<Edge> need;  // (a, b): some extension must place b below a
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && !p.comparable(a, b)) need.emplace_back(a, b);
    if (need.empty()) return {1, {detail::topological_order(base)}};

    for (int t = 2; t <= max_dim; ++t) {
        std::vector<detail::Closure> cols;
        auto search = [&](auto&& self, std::size_t i) -> bool {
            if (i == need.size()) return true;
            auto [a, b] = need[i];
            for (const auto& c : cols)
                if (c.lt(b, a)) return self(self, i + 1);
            for (std::size_t k = 0; k <= cols.size() && k < static_cast<std::size_t>(t); ++k) {
                const bool fresh = k == cols.size();
                if (fresh) {
                    cols.push_back(base);
                } else if (cols[k].lt(a, b)) {
                    continue;
                }
                detail::Closure saved = cols[k];
                cols[k].add(b, a);
                if (self(self, i + 1)) return true;
                if (fresh) {
                    cols.pop_back();
                } else {
                    cols[k] = std::move(saved);
                }
            }
            return false;
        };
        if (search(search, 0)) {
            Realizer r;
            for (const auto& c : cols) r.push_back(detail::topological_order(c));
            while (static_cast<int>(r.size()) < t) r.push_back(r.front());
            return {t, r};
        }
    }
    return {std::nullopt, {}};
}

inline std::vector<LinearOrder> linear_extensions(const Poset& p) {
    std::vector<LinearOrder> out;
    LinearOrder cur;
    std::vector<char> used(p.size(), 0);
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == p.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (used[x]) continue;
            bool ready = true;
            for (std::size_t y = 0; y < p.size() && ready; ++y)
                if (!used[y] && p.less(y, x)) ready = false;
            if (!ready) continue;
            used[x] = 1;
            cur.push_back(x);
            self(self);
            cur.pop_back();
            used[x] = 0;
        }
    };
    rec(rec);
    return out;
}

// The (s-1)-subset appearing last in `order`.
inline std::size_t pivot_element(const LinearOrder& order, const Poset& p, int s) {
    std::optional<std::size_t> pivot;
    for (auto x : order) {
        const auto& e = p.element(x);
        if (is_subset_label(e) && static_cast<int>(parse_subset_label(e).size()) == s - 1) pivot = x;
    }
    if (!pivot) throw DomainError("order has no (s-1)-subset");
    return *pivot;
}

inline Graph cocomparability_graph(const Poset& p) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (!p.comparable(i, j)) edges.emplace_back(i, j);
    return Graph(p.ground(), edges);
}

// One element per line, then "u < v" lines.
inline void write_poset(std::ostream& os, const Poset& p) {
    for (const auto& e : p.ground()) os << e << '\n';
    for (auto [a, b] : p.relation()) os << p.element(a) << " < " << p.element(b) << '\n';
}

inline Poset read_poset(std::istream& is) {
    std::vector<std::string> ground;
    std::vector<std::pair<std::string, std::string>> rel;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() == 1) {
            if (!rel.empty()) throw ParseError("poset file: element after relation lines");
            ground.push_back(tok[0]);
        } else if (tok.size() == 3 && tok[1] == "<") {
            rel.emplace_back(tok[0], tok[2]);
        } else {
            throw ParseError("poset file: bad line '" + line + "'");
        }
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ground.size(); ++i) index[ground[i]] = i;
    std::vector<Edge> pairs;
    for (const auto& [a, b] : rel) {
        if (!index.count(a) || !index.count(b)) throw ParseError("poset file: unknown element in relation");
        pairs.emplace_back(index[a], index[b]);
    }
    try {
        return Poset(ground, pairs);
    } catch (const ValidationError& e) {
        throw ParseError(std::string("poset file: ") + e.what());
    }
}

}  // namespace vpg
