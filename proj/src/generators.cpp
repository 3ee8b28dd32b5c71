#include "mdrg/generators.hpp"

#include <array>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace mdrg {

namespace {

std::vector<std::string> numbered(std::size_t n)
{
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::to_string(i));
    return out;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += parts[i];
    }
    return out;
}

bool is_connected(const ColoredGraph& g)
{
    if (g.vertex_count() == 0)
        return false;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop();
        for (const auto& nb : g.neighbors(u))
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = 1;
                ++reached;
                queue.push(nb.vertex);
            }
    }
    return reached == g.vertex_count();
}

// Mixed-radix digits of `index`, most significant first.
std::vector<std::size_t> digits(std::size_t index, std::size_t radix, std::size_t length)
{
    std::vector<std::size_t> out(length);
    for (std::size_t j = length; j-- > 0;) {
        out[j] = index % radix;
        index /= radix;
    }
    return out;
}

std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t out = 1;
    while (exp--)
        out *= base;
    return out;
}

} // namespace

ColoredGraph cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    const auto names = numbered(static_cast<std::size_t>(n));
    std::vector<ColoredEdge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({names[i], names[(i + 1) % n], 1});
    return ColoredGraph(1, names, edges);
}

ColoredGraph complete(int n)
{
    if (n < 2)
        throw std::invalid_argument("complete graph needs n >= 2, got " + std::to_string(n));
    const auto names = numbered(static_cast<std::size_t>(n));
    std::vector<ColoredEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({names[i], names[j], 1});
    return ColoredGraph(1, names, edges);
}

ColoredGraph hamming_graph(int k, int q)
{
    if (k < 1 || q < 2)
        throw std::invalid_argument("hamming graph needs k >= 1 and q >= 2, got k = " + std::to_string(k) +
                                    ", q = " + std::to_string(q));
    const auto K = static_cast<std::size_t>(k);
    const auto Q = static_cast<std::size_t>(q);
    const std::size_t n = ipow(Q, K);
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> words;
    for (std::size_t v = 0; v < n; ++v) {
        words.push_back(digits(v, Q, K));
        std::vector<std::string> parts;
        for (auto d : words.back())
            parts.push_back(std::to_string(d));
        names.push_back(join(parts));
    }
    std::vector<ColoredEdge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t differ = 0;
            for (std::size_t j = 0; j < K; ++j)
                differ += words[u][j] != words[v][j];
            if (differ == 1)
                edges.push_back({names[u], names[v], 1});
        }
    return ColoredGraph(1, names, edges);
}

ColoredGraph cartesian_product(const std::vector<ColoredGraph>& factors)
{
    if (factors.empty())
        throw std::invalid_argument("cartesian product needs at least one factor");
    std::size_t total_m = 0, n = 1;
    std::vector<std::size_t> offset;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (!is_connected(factors[f]))
            throw std::invalid_argument("factor " + std::to_string(f + 1) + " is not connected");
        offset.push_back(total_m);
        total_m += factors[f].m();
        n *= factors[f].vertex_count();
    }

    // Vertex tuples in row-major order, first factor most significant.
    std::vector<std::vector<std::size_t>> tuples(n);
    std::vector<std::string> names(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t rest = v;
        std::vector<std::size_t> t(factors.size());
        for (std::size_t f = factors.size(); f-- > 0;) {
            t[f] = rest % factors[f].vertex_count();
            rest /= factors[f].vertex_count();
        }
        std::vector<std::string> parts;
        for (std::size_t f = 0; f < factors.size(); ++f)
            parts.push_back(factors[f].name(t[f]));
        names[v] = join(parts);
        tuples[v] = std::move(t);
    }
    std::vector<std::size_t> stride(factors.size(), 1);
    for (std::size_t f = factors.size() - 1; f-- > 0;)
        stride[f] = stride[f + 1] * factors[f + 1].vertex_count();

    std::vector<ColoredEdge> edges;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t f = 0; f < factors.size(); ++f)
            for (const auto& nb : factors[f].neighbors(tuples[v][f])) {
                if (nb.vertex < tuples[v][f])
                    continue;
                const std::size_t w = v + (nb.vertex - tuples[v][f]) * stride[f];
                edges.push_back({names[v], names[w], static_cast<int>(offset[f]) + nb.color});
            }
    return ColoredGraph(total_m, names, edges);
}

SchemeClasses symmetrize(const SchemeClasses& base, int k)
{
    if (k < 1)
        throw std::invalid_argument("symmetrization length must be >= 1, got " + std::to_string(k));
    const auto axioms = verify_scheme_axioms(base);
    if (!axioms.passed())
        throw std::invalid_argument("symmetrization needs an association scheme: " + axioms.witness().dump());

    const std::size_t q = base.vertex_count();
    const std::size_t K = static_cast<std::size_t>(k);
    std::size_t identity = base.class_count();
    for (std::size_t c = 0; c < base.class_count() && identity == base.class_count(); ++c) {
        bool diagonal = true;
        for (std::size_t x = 0; x < q && diagonal; ++x)
            diagonal = base.at(c, x, x) == 1;
        if (diagonal)
            identity = c;
    }
    // Symbol 0 is the identity, symbols 1..m the remaining classes in order.
    std::vector<std::size_t> symbol_class{identity};
    for (std::size_t c = 0; c < base.class_count(); ++c)
        if (c != identity)
            symbol_class.push_back(c);
    const std::size_t m = symbol_class.size() - 1;
    if (m == 0)
        throw std::invalid_argument("symmetrization needs at least one non-identity class");

    std::vector<MultiIndex> labels;
    for (const auto& p : box_points(m, k))
        if (p.total() <= k)
            labels.push_back(p);
    std::map<MultiIndex, std::size_t> label_index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        label_index.emplace(labels[i], i);

    const std::size_t n = ipow(q, K);
    std::vector<std::vector<std::size_t>> words(n);
    std::vector<std::string> names(n);
    for (std::size_t v = 0; v < n; ++v) {
        words[v] = digits(v, q, K);
        std::vector<std::string> parts;
        for (auto d : words[v])
            parts.push_back(base.vertex_names()[d]);
        names[v] = join(parts);
    }

    // Each arrangement of symbols contributes the Kronecker product of its classes.
    std::vector<std::vector<std::uint32_t>> sums(labels.size(), std::vector<std::uint32_t>(n * n, 0));
    const std::size_t arrangements = ipow(m + 1, K);
    for (std::size_t code = 0; code < arrangements; ++code) {
        const auto symbols = digits(code, m + 1, K);
        std::vector<int> count(m, 0);
        for (auto sym : symbols)
            if (sym)
                ++count[sym - 1];
        auto& sum = sums[label_index.at(MultiIndex(count))];
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::uint32_t entry = 1;
                for (std::size_t j = 0; j < K && entry; ++j)
                    entry = base.at(symbol_class[symbols[j]], words[x][j], words[y][j]);
                sum[x * n + y] += entry;
            }
    }

    std::vector<std::string> tags;
    std::vector<std::vector<std::uint8_t>> matrices;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<std::uint8_t> matrix(n * n);
        for (std::size_t e = 0; e < n * n; ++e) {
            if (sums[i][e] > 1)
                throw std::invalid_argument("symmetrized class " + labels[i].to_string() + " has entry " +
                                            std::to_string(sums[i][e]) + " at (" + names[e / n] + ", " +
                                            names[e % n] + ")");
            matrix[e] = static_cast<std::uint8_t>(sums[i][e]);
        }
        tags.push_back(labels[i].to_string());
        matrices.push_back(std::move(matrix));
    }
    return SchemeClasses(n, std::move(tags), std::move(matrices), std::move(names));
}

ColoredGraph cell24()
{
    std::vector<std::array<int, 4>> points;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::array<int, 4> p{};
                    p[i] = si;
                    p[j] = sj;
                    points.push_back(p);
                }
    std::vector<std::string> names;
    for (const auto& p : points) {
        std::string name;
        for (int v : p)
            name += v > 0 ? '+' : v < 0 ? '-' : '0';
        names.push_back(name);
    }
    std::vector<ColoredEdge> edges;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            int d2 = 0;
            for (int c = 0; c < 4; ++c)
                d2 += (points[a][c] - points[b][c]) * (points[a][c] - points[b][c]);
            if (d2 == 4)
                edges.push_back({names[a], names[b], 1});
            else if (d2 == 6)
                edges.push_back({names[a], names[b], 2});
        }
    return ColoredGraph(2, names, edges);
}

IntersectionTensor gen24cell(const Rational& ell, const Rational& s)
{
    using Matrix = std::array<std::array<Rational, 5>, 5>;
    const Rational lo = 4 * s - 1, hi = 4 * s + 1;
    const Rational q = 16 * ell * s * s;   // 16 l s^2
    const Rational h = 8 * ell * s * s;    // 8 l s^2
    const Rational up = 2 * (ell - 1) * s * hi;
    const Rational dn = 2 * (ell - 1) * s * lo;
    const Rational pq = lo * hi;

    std::array<Matrix, 5> L{};
    for (std::size_t i = 0; i < 5; ++i)
        L[0][i][i] = 1;
    L[1] = Matrix{{{0, q, 0, 0, 0}, {1, up, pq, dn, 0}, {0, h, 0, h, 0}, {0, dn, pq, up, 1}, {0, 0, 0, q, 0}}};
    L[2] = Matrix{{{0, 0, 2 * pq, 0, 0}, {0, pq, 0, pq, 0}, {1, 0, 32 * s * s - 4, 0, 1}, {0, pq, 0, pq, 0},
                   {0, 0, 2 * pq, 0, 0}}};
    L[3] = Matrix{{{0, 0, 0, q, 0}, {0, dn, pq, up, 1}, {0, h, 0, h, 0}, {1, up, pq, dn, 0}, {0, q, 0, 0, 0}}};
    for (std::size_t k = 0; k < 5; ++k)
        L[4][k][4 - k] = 1;

    std::map<ClassTriple, Rational> entries;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t j = 0; j < 5; ++j) {
                // (L_i)_{kj} = p_{ij}^k
                if (L[i][k][j] < 0)
                    throw std::invalid_argument("generalized 24-cell entry p_{A" + std::to_string(i) + ",A" +
                                                std::to_string(j) + "}^{A" + std::to_string(k) +
                                                "} = " + format_rational(L[i][k][j]) + " is negative");
                if (L[i][k][j] != 0)
                    entries.emplace(ClassTriple{i, j, k}, L[i][k][j]);
            }
    IntersectionTensor t({"A0", "A1", "A2", "A3", "A4"}, std::move(entries));
    const auto report = t.validate();
    for (const auto& check : report.checks())
        if (!check.passed && check.name != "integrality")
            throw std::invalid_argument("generalized 24-cell parameters fail " + check.name + ": " +
                                        check.witness.dump());
    return t;
}

SchemeClasses pauli_scheme4()
{
    // Vertex v = 2 b1 + b2 for bits (b1, b2); X flips one bit.
    std::vector<std::vector<std::uint8_t>> matrices(3, std::vector<std::uint8_t>(16, 0));
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            const auto flips = static_cast<std::size_t>(std::popcount(x ^ y));
            matrices[flips][x * 4 + y] = 1;
        }
    return SchemeClasses(4, {"A0", "A1", "A2"}, std::move(matrices));
}

Labeling labeling_ad1()
{
    return Labeling({{"A0", {0, 0}}, {"A2", {1, 0}}, {"A3", {0, 1}}, {"A1", {1, 1}}, {"A4", {2, 0}}});
}

Labeling labeling_ad2()
{
    return Labeling({{"A0", {0, 0}}, {"A2", {1, 0}}, {"A3", {0, 1}}, {"A1", {0, 2}}, {"A4", {2, 0}}});
}

} // namespace mdrg
