#include "mdrg/colored_graph.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "mdrg/parallel.hpp"

namespace mdrg {

ColoredGraph::ColoredGraph(std::size_t m, std::vector<std::string> vertices, const std::vector<ColoredEdge>& edges)
    : m_(m), names_(std::move(vertices))
{
    if (m_ == 0)
        throw std::invalid_argument("a colored graph needs m >= 1");
    if (names_.empty())
        throw std::invalid_argument("a colored graph needs at least one vertex");
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate vertex '" + names_[i] + "'");
    adjacency_.resize(names_.size());
    std::vector<std::size_t> per_color(m_ + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& edge = edges[e];
        const std::string where = "edge " + std::to_string(e) + " ('" + edge.u + "','" + edge.v + "')";
        if (edge.color < 1 || static_cast<std::size_t>(edge.color) > m_)
            throw std::invalid_argument(where + ": color " + std::to_string(edge.color) + " outside 1.." +
                                        std::to_string(m_));
        const auto iu = index_.find(edge.u);
        const auto iv = index_.find(edge.v);
        if (iu == index_.end() || iv == index_.end())
            throw std::invalid_argument(where + ": unknown vertex");
        if (iu->second == iv->second)
            throw std::invalid_argument(where + ": self-loop");
        if (color_between(iu->second, iv->second) != 0)
            throw std::invalid_argument(where + ": the pair already carries an edge");
        adjacency_[iu->second].push_back({iv->second, edge.color});
        adjacency_[iv->second].push_back({iu->second, edge.color});
        ++per_color[edge.color];
        ++edge_count_;
    }
    for (std::size_t c = 1; c <= m_; ++c)
        if (per_color[c] == 0)
            throw std::invalid_argument("color class " + std::to_string(c) + " is empty");
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

std::size_t ColoredGraph::index_of(const std::string& name) const
{
    const auto it = index_.find(name);
    if (it == index_.end())
        throw std::out_of_range("unknown vertex '" + name + "'");
    return it->second;
}

int ColoredGraph::color_between(std::size_t u, std::size_t v) const
{
    for (const auto& nb : adjacency_[u])
        if (nb.vertex == v)
            return nb.color;
    return 0;
}

std::size_t ColoredGraph::color_degree(std::size_t v, int color) const
{
    return static_cast<std::size_t>(std::count_if(adjacency_[v].begin(), adjacency_[v].end(),
                                                  [color](const Neighbor& nb) { return nb.color == color; }));
}

std::vector<ColoredEdge> ColoredGraph::edges() const
{
    std::vector<ColoredEdge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (const auto& nb : adjacency_[u])
            if (u < nb.vertex)
                out.push_back({names_[u], names_[nb.vertex], nb.color});
    return out;
}

std::vector<MultiIndex> m_distance_from(const ColoredGraph& g, const MonomialOrder& order, std::size_t source)
{
    order.require_dimension(g.m());
    const std::size_t n = g.vertex_count();
    if (source >= n)
        throw std::out_of_range("source vertex out of range");

    struct Entry {
        MultiIndex label;
        std::size_t vertex;
    };
    auto after = [&order](const Entry& a, const Entry& b) {
        const auto c = order.compare(a.label, b.label);
        if (c != Ordering::Equal)
            return c == Ordering::Greater;
        return a.vertex > b.vertex;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(after)> queue(after);

    std::vector<std::optional<MultiIndex>> best(n);
    std::vector<char> settled(n, 0);
    std::vector<MultiIndex> units;
    for (std::size_t c = 0; c < g.m(); ++c)
        units.push_back(MultiIndex::unit(g.m(), c));

    best[source] = MultiIndex::zero(g.m());
    queue.push({*best[source], source});
    while (!queue.empty()) {
        Entry top = queue.top();
        queue.pop();
        if (settled[top.vertex])
            continue;
        settled[top.vertex] = 1;
        for (const auto& nb : g.neighbors(top.vertex)) {
            if (settled[nb.vertex])
                continue;
            MultiIndex candidate = top.label + units[static_cast<std::size_t>(nb.color - 1)];
            if (!best[nb.vertex] || order.less(candidate, *best[nb.vertex])) {
                best[nb.vertex] = candidate;
                queue.push({std::move(candidate), nb.vertex});
            }
        }
    }

    std::vector<MultiIndex> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!settled[v])
            throw DisconnectedGraph(g.name(source), g.name(v));
        out.push_back(std::move(*best[v]));
    }
    return out;
}

DistanceTable::DistanceTable(std::size_t n, std::size_t m, std::vector<MultiIndex> entries, const MonomialOrder& order)
    : n_(n), m_(m), entries_(std::move(entries)), order_(order)
{
    if (entries_.size() != n_ * n_)
        throw std::invalid_argument("distance table size mismatch");
    std::vector<MultiIndex> labels(entries_.begin(), entries_.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::sort(labels.begin(), labels.end(),
              [&order](const MultiIndex& a, const MultiIndex& b) { return order.less(a, b); });
    labels_ = std::move(labels);
    classes_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        classes_[i] = label_index(entries_[i]);
}

std::size_t DistanceTable::label_index(const MultiIndex& label) const
{
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                                     [this](const MultiIndex& a, const MultiIndex& b) { return order_.less(a, b); });
    if (it == labels_.end() || *it != label)
        throw std::out_of_range("label " + label.to_string() + " is not an m-distance");
    return static_cast<std::size_t>(it - labels_.begin());
}

bool DistanceTable::contains(const MultiIndex& label) const
{
    return std::binary_search(labels_.begin(), labels_.end(), label,
                              [this](const MultiIndex& a, const MultiIndex& b) { return order_.less(a, b); });
}

DistanceTable m_distance_table(const ColoredGraph& g, const MonomialOrder& order, unsigned threads)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<MultiIndex>> rows(n);
    parallel_for(n, threads, [&](std::size_t x) { rows[x] = m_distance_from(g, order, x); });

    std::vector<MultiIndex> entries;
    entries.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (rows[x][y] != rows[y][x])
                throw std::logic_error("asymmetric m-distance between '" + g.name(x) + "' and '" + g.name(y) +
                                       "': the order is not a monomial order");
            entries.push_back(rows[x][y]);
        }
    return DistanceTable(n, g.m(), std::move(entries), order);
}

SchemeClasses distance_matrices(const DistanceTable& table, const std::vector<std::string>& vertex_names)
{
    const std::size_t n = table.vertex_count();
    const auto& labels = table.labels();
    std::vector<std::vector<std::uint8_t>> matrices(labels.size(), std::vector<std::uint8_t>(n * n, 0));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            matrices[table.class_of(x, y)][x * n + y] = 1;
    std::vector<std::string> tags;
    tags.reserve(labels.size());
    for (const auto& l : labels)
        tags.push_back(l.to_string());
    return SchemeClasses(n, std::move(tags), std::move(matrices), vertex_names);
}

BigInt count_walks_by_type(const ColoredGraph& g, std::size_t x, std::size_t y, const std::vector<int>& type)
{
    const std::size_t n = g.vertex_count();
    if (x >= n || y >= n)
        throw std::out_of_range("vertex out of range");
    for (int c : type)
        if (c < 1 || static_cast<std::size_t>(c) > g.m())
            throw std::invalid_argument("walk type color " + std::to_string(c) + " outside 1.." + std::to_string(g.m()));
    std::vector<BigInt> current(n, 0), next(n, 0);
    current[x] = 1;
    for (int color : type) {
        std::fill(next.begin(), next.end(), BigInt(0));
        for (std::size_t u = 0; u < n; ++u) {
            if (current[u] == 0)
                continue;
            for (const auto& nb : g.neighbors(u))
                if (nb.color == color)
                    next[nb.vertex] += current[u];
        }
        current.swap(next);
    }
    return current[y];
}

Certificate check_precompat_graph(const ColoredGraph& g, const DistanceTable& table, const PartialOrder& p)
{
    p.require_dimension(g.m());
    Certificate cert("precedence compatibility under " + p.to_string());
    const std::size_t n = g.vertex_count();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& nb : g.neighbors(y)) {
                const MultiIndex bound = table.at(x, y) + MultiIndex::unit(g.m(), static_cast<std::size_t>(nb.color - 1));
                const auto& reached = table.at(x, nb.vertex);
                if (!p.precedes(reached, bound)) {
                    cert.fail("local_precedence",
                              Json{{"x", g.name(x)},
                                   {"y", g.name(y)},
                                   {"z", g.name(nb.vertex)},
                                   {"color", nb.color},
                                   {"d_xy", table.at(x, y).to_string()},
                                   {"d_xz", reached.to_string()}},
                              "d(x,z) does not precede d(x,y) + e_color");
                    return cert;
                }
            }
    cert.pass("local_precedence");
    return cert;
}

Certificate check_precompat_graph(const ColoredGraph& g, const MonomialOrder& order, const PartialOrder& p)
{
    return check_precompat_graph(g, m_distance_table(g, order), p);
}

} // namespace mdrg
