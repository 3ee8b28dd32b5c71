#include "doctest.h"
#include "mdrg/generators.hpp"

#include <random>
#include <set>

using namespace mdrg;

namespace {

std::set<std::pair<std::string, std::string>> edge_set(const ColoredGraph& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges())
        out.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return out;
}

// Union of the generator classes of a symmetrized scheme as a plain graph.
std::set<std::pair<std::string, std::string>> generator_union(const SchemeClasses& s)
{
    std::set<std::pair<std::string, std::string>> out;
    const auto n = s.vertex_count();
    for (std::size_t k = 0; k < s.class_count(); ++k) {
        if (MultiIndex::parse(s.tag(k)).total() != 1)
            continue;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (s.at(k, x, y))
                    out.emplace(std::min(s.vertex_names()[x], s.vertex_names()[y]),
                                std::max(s.vertex_names()[x], s.vertex_names()[y]));
    }
    return out;
}

int cyc_dist(int a, int b, int n)
{
    const int d = a > b ? a - b : b - a;
    return std::min(d, n - d);
}

long cycle_p(int n, int i, int j, int k)
{
    long count = 0;
    for (int z = 0; z < n; ++z)
        count += cyc_dist(0, z, n) == i && cyc_dist(k, z, n) == j;
    return count;
}

long binomial(long n, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("basic families")
{
    const auto c6 = cycle(6);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(mdrg_check(c6, MonomialOrder::parse("lex")).table->labels().back() == MultiIndex{3});
    const auto h = hamming_graph(2, 4);
    CHECK(h.vertex_count() == 16);
    for (std::size_t v = 0; v < 16; ++v)
        CHECK(h.color_degree(v, 1) == 6);
    CHECK(mdrg_check(complete(7), MonomialOrder::parse("lex")).table->labels().size() == 2);
    CHECK_THROWS(cycle(2));
    CHECK_THROWS(complete(1));
    CHECK_THROWS(hamming_graph(0, 2));
    CHECK_THROWS(hamming_graph(2, 1));
}

TEST_CASE("cartesian products")
{
    const auto k2k2 = cartesian_product({complete(2), complete(2)});
    CHECK(k2k2.vertex_count() == 4);
    CHECK(k2k2.edge_count() == 4);
    CHECK(k2k2.m() == 2);
    for (std::size_t v = 0; v < 4; ++v)
        CHECK((k2k2.color_degree(v, 1) == 1 && k2k2.color_degree(v, 2) == 1));
    CHECK_THROWS(cartesian_product({}));
    CHECK_THROWS(cartesian_product({cycle(3), ColoredGraph(1, {"a", "b", "c"}, {{"a", "b", 1}})}));

    const auto torus = cartesian_product({cycle(14), cycle(9)});
    CHECK(torus.vertex_count() == 126);
    for (const auto* text : {"deglex-sum", "deglex-y2", "lex"}) {
        const auto r = mdrg_check(torus, MonomialOrder::parse(text));
        CHECK(r.passed());
        CHECK(r.table->labels().size() == 40);
    }
}

TEST_CASE("product intersection numbers factor over the cycles")
{
    const auto g = cartesian_product({complete(3), cycle(5)});
    const auto r = mdrg_check(g, MonomialOrder::parse("deglex-sum"));
    REQUIRE(r.passed());
    const auto& t = *r.tensor;
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const int a0 = rng() % 2, b0 = rng() % 2, c0 = rng() % 2;
        const int a1 = rng() % 3, b1 = rng() % 3, c1 = rng() % 3;
        // K3: p_{ij}^k by counting on the triangle.
        auto k3 = [](int i, int j, int k) {
            long count = 0;
            for (int z = 0; z < 3; ++z)
                count += (z != 0) == (i == 1) && (z != k) == (j == 1);
            return count;
        };
        const auto expected = k3(a0, b0, c0) * cycle_p(5, a1, b1, c1);
        const auto tag = [](int x, int y) { return MultiIndex{x, y}.to_string(); };
        CHECK(t.p(tag(a0, a1), tag(b0, b1), tag(c0, c1)) == expected);
    }
}

TEST_CASE("product graphs certify under all built-in orders")
{
    const std::vector<std::vector<ColoredGraph>> cases{{cycle(4), complete(3)}, {hamming_graph(2, 2), cycle(5)},
                                                      {cycle(3), cycle(3), cycle(4)}};
    for (const auto& factors : cases) {
        const auto g = cartesian_product(factors);
        for (const auto* text : {"deglex-sum", "lex"})
            CHECK(mdrg_check(g, MonomialOrder::parse(text)).passed());
        if (g.m() == 2)
            CHECK(mdrg_check(g, MonomialOrder::parse("deglex-y2")).passed());
    }
}

TEST_CASE("symmetrization of the Pauli scheme")
{
    const auto z = pauli_scheme4();
    const auto s1 = symmetrize(z, 1);
    CHECK(s1.class_count() == 3);
    CHECK(s1.matrix(s1.index_of("1,0")) == z.matrix(1));
    CHECK(s1.matrix(s1.index_of("0,1")) == z.matrix(2));
    for (int k : {2, 3}) {
        const auto s = symmetrize(z, k);
        CHECK(verify_scheme_axioms(s).passed());
        CHECK(s.class_count() == static_cast<std::size_t>(binomial(k + 2, 2)));
        CHECK(generator_union(s) == edge_set(hamming_graph(k, 4)));
    }
    CHECK_THROWS(symmetrize(z, 0));
}

TEST_CASE("symmetrizing the one-class scheme gives the Hamming scheme")
{
    const auto base = *mdrg_check(complete(3), MonomialOrder::parse("lex")).scheme;
    const auto s = symmetrize(base, 3);
    const auto h = mdrg_check(hamming_graph(3, 3), MonomialOrder::parse("lex"));
    REQUIRE(h.passed());
    for (int d = 0; d <= 3; ++d)
        CHECK(s.matrix(s.index_of(std::to_string(d))) == h.scheme->matrix(h.scheme->index_of(std::to_string(d))));
}

TEST_CASE("24-cell")
{
    const auto g = cell24();
    CHECK(g.vertex_count() == 24);
    std::size_t c1 = 0, c2 = 0;
    for (const auto& e : g.edges())
        (e.color == 1 ? c1 : c2) += 1;
    CHECK(c1 == 72);
    CHECK(c2 == 96);
    for (std::size_t v = 0; v < 24; ++v) {
        CHECK(g.color_degree(v, 1) == 6);
        CHECK(g.color_degree(v, 2) == 8);
    }
    const auto table = m_distance_table(g, MonomialOrder::parse("deglex-sum"));
    auto negate = [](std::string name) {
        for (auto& ch : name)
            ch = ch == '+' ? '-' : ch == '-' ? '+' : ch;
        return name;
    };
    for (std::size_t x = 0; x < 24; ++x)
        for (std::size_t y = 0; y < 24; ++y) {
            const bool antipodal = g.name(y) == negate(g.name(x));
            CHECK((table.at(x, y) == MultiIndex{2, 0}) == antipodal);
            // d = (0,2) exactly for squared distance 2, i.e. inner product 1.
            auto value = [](char ch) { return ch == '+' ? 1 : ch == '-' ? -1 : 0; };
            int inner = 0;
            for (int c = 0; c < 4; ++c)
                inner += value(g.name(x)[c]) * value(g.name(y)[c]);
            CHECK((table.at(x, y) == MultiIndex{0, 2}) == (inner == 1));
        }
}

TEST_CASE("generalized 24-cell tensor")
{
    const auto t = gen24cell(Rational(2), Rational(1, 2));
    CHECK(t.validate().passed());
    CHECK(t.valency(t.index_of("A1")) == 8);
    CHECK(t.valency(t.index_of("A2")) == 6);
    CHECK(t.valency(t.index_of("A3")) == 8);
    CHECK(t.valency(t.index_of("A4")) == 1);
    for (const auto& [l, s] : std::vector<std::pair<Rational, Rational>>{
             {Rational(2), Rational(1, 2)}, {Rational(3), Rational(3, 4)}, {Rational(5, 2), Rational(2, 3)}}) {
        const auto g = gen24cell(l, s);
        // L4 is the reversal permutation.
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 5; ++k)
                CHECK(g.p(4, j, k) == (j + k == 4 ? 1 : 0));
        // Row sums equal valencies.
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t k = 0; k < 5; ++k) {
                Rational row = 0;
                for (std::size_t j = 0; j < 5; ++j)
                    row += g.p(i, j, k);
                CHECK(row == g.valency(i));
            }
    }
    CHECK_THROWS_AS(gen24cell(Rational(2), Rational(1, 8)), std::invalid_argument);
    CHECK_THROWS_AS(gen24cell(Rational(1, 2), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("the 24-cell tensor equals the generalized family at l = 2, s = 1/2")
{
    const auto r = mdrg_check(cell24(), MonomialOrder::parse("deglex-sum"));
    REQUIRE(r.passed());
    const auto renamed = r.tensor->renamed({{"0,0", "A0"}, {"1,0", "A2"}, {"0,1", "A3"}, {"0,2", "A1"}, {"2,0", "A4"}});
    CHECK(renamed == gen24cell(Rational(2), Rational(1, 2)));
}
