#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vpg/errors.hpp"
#include "vpg/subsets.hpp"

namespace vpg {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph over labelled vertices; adjacency kept as sorted lists.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> labels, const std::vector<Edge>& edges = {})
        : labels_(std::move(labels)), adj_(labels_.size()) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw ValidationError("empty vertex label");
            if (!index_.emplace(labels_[i], i).second) throw ValidationError("duplicate vertex label " + labels_[i]);
        }
        for (auto [u, v] : edges) {
            if (u >= order() || v >= order()) throw ValidationError("edge endpoint out of range");
            if (u == v) throw ValidationError("self-loop at " + labels_[u]);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw ValidationError("multi-edge");
            size_ += a.size();
        }
        size_ /= 2;
    }

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return size_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }

    std::optional<std::size_t> index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t at(const std::string& label) const {
        auto i = index_of(label);
        if (!i) throw DomainError("unknown vertex " + label);
        return *i;
    }

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    bool adjacent(std::size_t u, std::size_t v) const {
        return std::binary_search(adj_.at(u).begin(), adj_.at(u).end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < order(); ++u)
            for (auto v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& g, const Graph& h) { return g.labels_ == h.labels_ && g.adj_ == h.adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> adj_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t size_ = 0;
};

struct SplitPartition {
    std::vector<std::size_t> clique;
    std::vector<std::size_t> independent;
};

inline void validate_split(const Graph& g, const SplitPartition& part) {
    std::vector<int> seen(g.order(), 0);
    for (auto v : part.clique) {
        if (v >= g.order()) throw DomainError("partition vertex out of range");
        ++seen[v];
    }
    for (auto v : part.independent) {
        if (v >= g.order()) throw DomainError("partition vertex out of range");
        ++seen[v];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw DomainError("partition does not split the vertex set");
    for (std::size_t i = 0; i < part.clique.size(); ++i)
        for (std::size_t j = i + 1; j < part.clique.size(); ++j)
            if (!g.adjacent(part.clique[i], part.clique[j])) throw DomainError("clique side is not complete");
    for (std::size_t i = 0; i < part.independent.size(); ++i)
        for (std::size_t j = i + 1; j < part.independent.size(); ++j)
            if (g.adjacent(part.independent[i], part.independent[j])) throw DomainError("independent side has an edge");
}

struct SplitGraph {
    Graph graph;
    SplitPartition partition;
};

namespace detail {

inline std::vector<std::string> hnk_labels(int n, const std::vector<Subset>& q) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (const auto& s : q) labels.push_back(subset_label(s));
    return labels;
}

inline std::vector<Edge> hnk_base_edges(int n, const std::vector<Subset>& q) {
    std::vector<Edge> edges;
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) edges.emplace_back(i, j);
    for (std::size_t t = 0; t < q.size(); ++t)
        for (int w : q[t]) edges.emplace_back(static_cast<std::size_t>(w - 1), un + t);
    return edges;
}

// No k < n check; K^3_3 is still a useful construction target.
inline SplitGraph split_knk(int n, int k) {
    const auto q = k_subsets(n, k);
    SplitGraph out{Graph(detail::hnk_labels(n, q), detail::hnk_base_edges(n, q)), {}};
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) out.partition.clique.push_back(i);
    for (std::size_t t = 0; t < q.size(); ++t) out.partition.independent.push_back(static_cast<std::size_t>(n) + t);
    return out;
}

}  // namespace detail

// Clique 1..n plus one independent vertex "{..}" per k-subset.
inline SplitGraph build_split_knk(int n, int k) {
    if (k < 1 || k >= n) throw ParameterError("build_split_knk needs 1 <= k < n");
    return detail::split_knk(n, k);
}

using SubsetPair = std::pair<Subset, Subset>;

inline std::vector<SubsetPair> all_subset_pairs(int n, int k) {
    const auto q = k_subsets(n, k);
    std::vector<SubsetPair> out;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) out.emplace_back(q[i], q[j]);
    return out;
}

inline Graph build_hnk_member(int n, int k, const std::vector<SubsetPair>& q_edges) {
    if (k < 1 || k >= n) throw ParameterError("build_hnk_member needs n > k >= 1");
    const auto q = k_subsets(n, k);
    auto edges = detail::hnk_base_edges(n, q);
    auto index = [&](const Subset& s) {
        if (static_cast<int>(s.size()) != k || !std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 1 || s.back() > n)
            throw ParameterError("malformed subset " + subset_label(s));
        auto it = std::lower_bound(q.begin(), q.end(), s);
        return static_cast<std::size_t>(n) + static_cast<std::size_t>(it - q.begin());
    };
    std::vector<Edge> extra;
    for (const auto& [a, b] : q_edges) {
        auto u = index(a), v = index(b);
        if (u == v) throw ParameterError("Q-edge joins a subset to itself");
        extra.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(detail::hnk_labels(n, q), edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) edges.emplace_back(i, j);
    return Graph(labels, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i < labels.size(); ++i) edges.emplace_back(i, (i + 1) % labels.size());
    return Graph(labels, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) edges.emplace_back(i, i + 1);
    return Graph(labels, edges);
}

// Exhaustive search over induced paths rooted at their smallest vertex.
inline bool has_long_induced_cycle(const Graph& g, int min_length) {
    if (min_length < 3) throw ParameterError("induced cycle length must be >= 3");
    const std::size_t n = g.order();
    std::vector<std::size_t> path;
    std::vector<char> on_path(n, 0);

    auto extend = [&](auto&& self, std::size_t root) -> bool {
        const std::size_t tail = path.back();
        for (auto w : g.neighbors(tail)) {
            if (w <= root || on_path[w]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(w, path[i]);
            if (chord) continue;
            if (path.size() >= 2 && g.adjacent(w, root)) {
                if (static_cast<int>(path.size()) + 1 >= min_length) return true;
                continue;
            }
            path.push_back(w);
            on_path[w] = 1;
            if (self(self, root)) return true;
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    };
    for (std::size_t r = 0; r < n; ++r) {
        path.assign(1, r);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[r] = 1;
        if (extend(extend, r)) return true;
    }
    return false;
}

// Merges v into u; the merged vertex keeps u's position and is labelled "u+v".
inline Graph contract_edge(const Graph& g, std::size_t u, std::size_t v) {
    if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw DomainError("contract_edge: not an edge");
    std::vector<std::string> labels;
    std::vector<std::size_t> remap(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (x == v) continue;
        remap[x] = labels.size();
        labels.push_back(x == u ? g.label(u) + "+" + g.label(v) : g.label(x));
    }
    remap[v] = remap[u];
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        auto ra = remap[a], rb = remap[b];
        if (ra == rb) continue;
        edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(labels, edges);
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.labels(), edges);
}

// Backtracking isomorphism search; returns mapping g-vertex -> h-vertex.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h) {
    const std::size_t n = g.order();
    if (n != h.order() || g.size() != h.size()) return std::nullopt;
    auto signature = [](const Graph& x, std::size_t v) {
        std::vector<std::size_t> nd;
        for (auto w : x.neighbors(v)) nd.push_back(x.degree(w));
        std::sort(nd.begin(), nd.end());
        nd.insert(nd.begin(), x.degree(v));
        return nd;
    };
    std::vector<std::vector<std::size_t>> gs(n), hs(n);
    for (std::size_t v = 0; v < n; ++v) {
        gs[v] = signature(g, v);
        hs[v] = signature(h, v);
    }
    {
        auto a = gs, b = hs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    // Visit g in BFS order so each new vertex has mapped neighbours to check against.
    std::vector<std::size_t> order;
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (auto w : g.neighbors(order[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    std::vector<std::size_t> map(n, n);
    std::vector<char> used(n, 0);
    auto assign = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        const std::size_t v = order[depth];
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || gs[v] != hs[c]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t w = order[d];
                ok = g.adjacent(v, w) == h.adjacent(c, map[w]);
            }
            if (!ok) continue;
            map[v] = c;
            used[c] = 1;
            if (self(self, depth + 1)) return true;
            used[c] = 0;
        }
        map[v] = n;
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    return map;
}

inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// "n m", n label lines, m lines "u v" by label.
inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& l : g.labels()) os << l << '\n';
    for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
}

inline Graph read_graph(std::istream& is) {
    std::size_t n = 0, m = 0;
    std::string line;
    auto next_line = [&]() {
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("graph file: missing header");
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("graph file: bad header '" + line + "'");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError("graph file: expected " + std::to_string(n) + " labels");
        std::istringstream ls(line);
        std::string label, extra;
        ls >> label;
        if (ls >> extra) throw ParseError("graph file: label with whitespace '" + line + "'");
        labels.push_back(label);
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("graph file: expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        std::string a, b, extra;
        if (!(es >> a >> b) || (es >> extra)) throw ParseError("graph file: bad edge line '" + line + "'");
        if (!index.count(a) || !index.count(b)) throw ParseError("graph file: unknown vertex in '" + line + "'");
        edges.emplace_back(index[a], index[b]);
    }
    if (next_line()) throw ParseError("graph file: trailing content '" + line + "'");
    try {
        return Graph(labels, edges);
    } catch (const ValidationError& e) {
        throw ParseError(std::string("graph file: ") + e.what());
    }
}

}  // namespace vpg
