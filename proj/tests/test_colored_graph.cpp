#include "doctest.h"
#include "mdrg/colored_graph.hpp"
#include "mdrg/generators.hpp"
#include "random_graphs.hpp"

#include <functional>
#include <optional>

using namespace mdrg;

namespace {

using Less = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

bool ref_deglex_less(const std::vector<int>& a, const std::vector<int>& b)
{
    int ta = 0, tb = 0;
    for (int v : a)
        ta += v;
    for (int v : b)
        tb += v;
    if (ta != tb)
        return ta < tb;
    return a < b;
}

bool ref_lex_less(const std::vector<int>& a, const std::vector<int>& b) { return a < b; }

// Minimum m-length over all simple paths x -> y, by exhaustive DFS.
std::vector<int> brute_distance(const ColoredGraph& g, std::size_t x, std::size_t y, const Less& less)
{
    std::optional<std::vector<int>> best;
    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<int> length(g.m(), 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t u) {
        if (u == y) {
            if (!best || less(length, *best))
                best = length;
            return;
        }
        on_path[u] = 1;
        for (const auto& nb : g.neighbors(u))
            if (!on_path[nb.vertex]) {
                ++length[nb.color - 1];
                dfs(nb.vertex);
                --length[nb.color - 1];
            }
        on_path[u] = 0;
    };
    dfs(x);
    return *best;
}

} // namespace

TEST_CASE("graph validation")
{
    const std::vector<std::string> v{"a", "b", "c"};
    CHECK_NOTHROW(ColoredGraph(2, v, {{"a", "b", 1}, {"b", "c", 2}}));
    CHECK_THROWS_AS(ColoredGraph(1, v, {{"a", "a", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph(1, v, {{"a", "b", 1}, {"b", "a", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph(1, v, {{"a", "z", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph(1, v, {{"a", "b", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph(2, v, {{"a", "b", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph(1, {"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph(0, v, {}), std::invalid_argument);
    const ColoredGraph g(2, v, {{"a", "b", 1}, {"b", "c", 2}});
    CHECK(g.color_between(0, 1) == 1);
    CHECK(g.color_between(1, 2) == 2);
    CHECK(g.color_between(0, 2) == 0);
    CHECK(g.color_degree(1, 2) == 1);
}

TEST_CASE("m-distances equal the brute-force path minimum on random graphs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_colored_graph(rng, 10, 3);
        for (const auto& [text, less] : std::vector<std::pair<const char*, Less>>{{"deglex-sum", ref_deglex_less},
                                                                                   {"lex", ref_lex_less}}) {
            const auto table = m_distance_table(g, MonomialOrder::parse(text));
            for (std::size_t x = 0; x < g.vertex_count(); ++x)
                for (std::size_t y = 0; y < g.vertex_count(); ++y)
                    CHECK(table.at(x, y).entries() == brute_distance(g, x, y, less));
        }
    }
}

TEST_CASE("parallel distance table matches the serial one")
{
    std::mt19937 rng(5);
    const auto g = random_colored_graph(rng, 10, 2);
    const auto order = MonomialOrder::parse("deglex-sum");
    const auto a = m_distance_table(g, order, 1);
    const auto b = m_distance_table(g, order, 4);
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
        for (std::size_t y = 0; y < g.vertex_count(); ++y)
            CHECK(a.at(x, y) == b.at(x, y));
}

TEST_CASE("distance table of the 24-cell")
{
    const auto g = cell24();
    const auto table = m_distance_table(g, MonomialOrder::parse("deglex-sum"));
    std::vector<std::string> labels;
    for (const auto& l : table.labels())
        labels.push_back(l.to_string());
    CHECK(labels == std::vector<std::string>{"0,0", "0,1", "1,0", "0,2", "2,0"});
    CHECK(table.labels().front().is_zero());
    const auto classes = distance_matrices(table, g.vertex_names());
    CHECK(classes.class_count() == 5);
    for (std::size_t x = 0; x < 24; ++x) {
        CHECK(classes.row_sum(classes.index_of("0,0"), x) == 1);
        CHECK(classes.row_sum(classes.index_of("1,0"), x) == 6);
        CHECK(classes.row_sum(classes.index_of("0,1"), x) == 8);
        CHECK(classes.row_sum(classes.index_of("0,2"), x) == 8);
        CHECK(classes.row_sum(classes.index_of("2,0"), x) == 1);
    }
}

TEST_CASE("disconnected input is reported")
{
    const ColoredGraph g(1, {"a", "b", "c"}, {{"a", "b", 1}});
    CHECK_THROWS_AS(m_distance_table(g, MonomialOrder::parse("lex")), DisconnectedGraph);
    try {
        (void)m_distance_from(g, MonomialOrder::parse("lex"), 0);
    } catch (const DisconnectedGraph& e) {
        CHECK(e.unreachable() == "c");
    }
}

TEST_CASE("walk counts by color type match brute-force enumeration")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_colored_graph(rng, 7, 2);
        std::vector<int> type;
        for (int k = 0; k < 3; ++k)
            type.push_back(static_cast<int>(1 + rng() % g.m()));
        for (std::size_t x = 0; x < g.vertex_count(); ++x)
            for (std::size_t y = 0; y < g.vertex_count(); ++y) {
                long expected = 0;
                std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t u, std::size_t step) {
                    if (step == type.size()) {
                        expected += u == y;
                        return;
                    }
                    for (std::size_t w = 0; w < g.vertex_count(); ++w)
                        if (g.color_between(u, w) == type[step])
                            walk(w, step + 1);
                };
                walk(x, 0);
                CHECK(count_walks_by_type(g, x, y, type) == expected);
            }
    }
}

TEST_CASE("local precedence compatibility")
{
    const auto torus = cartesian_product({cycle(6), cycle(5)});
    const auto sum = MonomialOrder::parse("deglex-sum");
    CHECK(check_precompat_graph(torus, sum, PartialOrder::parse("componentwise")).passed());
    CHECK(check_precompat_graph(torus, sum, PartialOrder::parse("ab:0,0")).passed());
    // 24-cell: from y at (0,1) a color-1 neighbour z lies at (0,2), and (0,2) never precedes (1,1).
    for (const auto* p : {"ab:1,0", "ab:0,0"}) {
        const auto cert = check_precompat_graph(cell24(), sum, PartialOrder::parse(p));
        CHECK_FALSE(cert.passed());
        CHECK(cert.witness()["d_xz"].is_string());
    }
}
