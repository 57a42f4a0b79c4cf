#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "vpg/graph.hpp"
#include "vpg/poset.hpp"

using namespace vpg;

namespace {

Poset chain(int m) {
    std::vector<std::string> g;
    std::vector<Edge> rel;
    for (int i = 0; i < m; ++i) g.push_back("c" + std::to_string(i));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) rel.emplace_back(i, j);
    return Poset(g, rel);
}

Poset antichain(int m) {
    std::vector<std::string> g;
    for (int i = 0; i < m; ++i) g.push_back("a" + std::to_string(i));
    return Poset(g, {});
}

// Reference dimension: smallest t such that some multiset of t linear
// extensions is a realizer.
int tuple_dimension(const Poset& p, int max_dim) {
    const auto ext = linear_extensions(p);
    for (int t = 1; t <= max_dim; ++t) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
        while (true) {
            Realizer R;
            for (auto i : idx) R.push_back(ext[i]);
            if (is_realizer(p, R)) return t;
            int pos = t - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == ext.size() - 1) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < t; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(pos)];
        }
    }
    return max_dim + 1;
}

Poset random_poset(std::mt19937& rng, int m, double density) {
    // random DAG on a fixed topological order, then transitive closure
    std::vector<std::vector<char>> lt(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) lt[i][j] = coin(rng);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (lt[i][k] && lt[k][j]) lt[i][j] = 1;
    std::vector<std::string> g;
    std::vector<Edge> rel;
    for (int i = 0; i < m; ++i) g.push_back("e" + std::to_string(i));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (lt[i][j]) rel.emplace_back(i, j);
    return Poset(g, rel);
}

}  // namespace

TEST(Poset, RejectsNonOrders) {
    EXPECT_THROW(Poset({"a"}, {{0, 0}}), ValidationError);
    EXPECT_THROW(Poset({"a", "b"}, {{0, 1}, {1, 0}}), ValidationError);
    EXPECT_THROW(Poset({"a", "b", "c"}, {{0, 1}, {1, 2}}), ValidationError);
    EXPECT_THROW(Poset({"a", "a"}, {}), ValidationError);
}

TEST(Poset, BuildP123) {
    auto p = build_p_rsn(1, 2, 3);
    EXPECT_EQ(p.size(), 6u);
    EXPECT_EQ(p.relation().size(), 6u);
    // height 1: no chain a < b < c
    for (auto [a, b] : p.relation())
        for (auto [c, d] : p.relation()) EXPECT_NE(b, c) << a << d;
    EXPECT_THROW(build_p_rsn(2, 2, 4), ParameterError);
    EXPECT_THROW(build_p_rsn(1, 3, 3), ParameterError);
}

TEST(Poset, ContainmentIsComputed) {
    for (auto [r, s, n] : std::vector<std::array<int, 3>>{{1, 2, 4}, {2, 3, 5}, {1, 3, 5}}) {
        auto p = build_p_rsn(r, s, n);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) {
                auto a = parse_subset_label(p.element(i)), b = parse_subset_label(p.element(j));
                bool sup = a.size() > b.size() && std::includes(a.begin(), a.end(), b.begin(), b.end());
                EXPECT_EQ(p.less(i, j), sup);
            }
    }
}

TEST(Poset, Realizers) {
    EXPECT_TRUE(is_realizer(chain(4), {{0, 1, 2, 3}}));
    EXPECT_TRUE(is_realizer(antichain(2), {{0, 1}, {1, 0}}));
    EXPECT_FALSE(is_realizer(antichain(2), {{0, 1}}));
    EXPECT_FALSE(is_realizer(chain(3), {{0, 2, 1}}));
    EXPECT_THROW(is_realizer(chain(3), {{0, 1}}), DomainError);
    EXPECT_THROW(is_realizer(chain(3), {}), DomainError);
}

TEST(Poset, DimensionSmallCases) {
    EXPECT_EQ(brute_force_dimension(chain(5), 3).dimension, 1);
    EXPECT_EQ(brute_force_dimension(antichain(2), 3).dimension, 2);
    EXPECT_EQ(brute_force_dimension(antichain(1), 3).dimension, 1);
    auto p = build_p_rsn(1, 2, 3);
    auto res = brute_force_dimension(p, 4);
    ASSERT_TRUE(res.dimension);
    EXPECT_EQ(*res.dimension, 3);
    EXPECT_TRUE(is_realizer(p, res.witness));
    EXPECT_FALSE(brute_force_dimension(p, 2).dimension);
    EXPECT_EQ(tuple_dimension(p, 3), 3);
}

TEST(Poset, DimensionMatchesTupleOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poset(rng, 3 + trial % 5, 0.2 + 0.1 * (trial % 4));
        auto res = brute_force_dimension(p, 4);
        ASSERT_TRUE(res.dimension);
        EXPECT_EQ(*res.dimension, tuple_dimension(p, 4)) << trial;
        EXPECT_TRUE(is_realizer(p, res.witness));
        for (const auto& o : res.witness) EXPECT_TRUE(is_linear_extension(p, o));
    }
}

TEST(Poset, LemmaLowerBound) {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}}) {
        auto p = build_p_rsn(r, s - 1, s);
        auto res = brute_force_dimension(p, s - r);
        EXPECT_FALSE(res.dimension) << r << "," << s;
    }
}

TEST(Poset, Pivot) {
    auto p = build_p_rsn(1, 2, 3);
    // 2-sets are below 1-sets; the pivot is the last 2-set of the order
    LinearOrder o;
    for (const char* e : {"{2,3}", "{1,3}", "{1,2}", "{1}", "{2}", "{3}"}) o.push_back(*p.index_of(e));
    ASSERT_TRUE(is_linear_extension(p, o));
    EXPECT_EQ(p.element(pivot_element(o, p, 3)), "{1,2}");
    EXPECT_THROW(pivot_element(o, p, 5), DomainError);
}

TEST(Poset, PivotArgumentOnP123) {
    // every pair of linear extensions has at most 2 pivots and is never a realizer
    auto p = build_p_rsn(1, 2, 3);
    const auto ext = linear_extensions(p);
    for (const auto& a : ext)
        for (const auto& b : ext) {
            std::set<std::size_t> pivots{pivot_element(a, p, 3), pivot_element(b, p, 3)};
            EXPECT_LE(pivots.size(), 2u);
            EXPECT_FALSE(is_realizer(p, {a, b}));
        }
}

TEST(Poset, Cocomparability) {
    EXPECT_EQ(cocomparability_graph(chain(4)).size(), 0u);
    EXPECT_TRUE(isomorphic(cocomparability_graph(antichain(4)), complete_graph(4)));
    auto p = build_p_rsn(2, 3, 4);
    auto g = cocomparability_graph(p);
    EXPECT_EQ(g.size(), p.size() * (p.size() - 1) / 2 - p.relation().size());
    EXPECT_TRUE(isomorphic(g, build_hnk_member(4, 2, all_subset_pairs(4, 2))));
}

TEST(Poset, RoundTrip) {
    for (const auto& p : {build_p_rsn(1, 2, 3), build_p_rsn(2, 3, 5), chain(3), antichain(2)}) {
        std::stringstream ss;
        write_poset(ss, p);
        auto q = read_poset(ss);
        EXPECT_EQ(q.ground(), p.ground());
        EXPECT_EQ(q.relation(), p.relation());
    }
    std::istringstream bad("a\nb\na < c\n");
    EXPECT_THROW(read_poset(bad), ParseError);
    std::istringstream cyc("a\nb\na < b\nb < a\n");
    EXPECT_THROW(read_poset(cyc), ParseError);
}
