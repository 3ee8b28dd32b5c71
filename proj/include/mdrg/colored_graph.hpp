#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdrg/certificate.hpp"
#include "mdrg/multi_index.hpp"
#include "mdrg/orders.hpp"
#include "mdrg/rational.hpp"
#include "mdrg/scheme_classes.hpp"

namespace mdrg {

/// An undirected edge with a 1-based color.
struct ColoredEdge {
    std::string u;
    std::string v;
    int color = 1;
};

struct Neighbor {
    std::size_t vertex;
    int color; // 1-based
};

/// Simple undirected graph whose edge set is partitioned into m non-empty
/// color classes. Vertex identifiers are opaque strings mapped to dense indices
/// in insertion order.
class ColoredGraph {
public:
    ColoredGraph(std::size_t m, std::vector<std::string> vertices, const std::vector<ColoredEdge>& edges);

    std::size_t m() const noexcept { return m_; }
    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& name(std::size_t v) const { return names_[v]; }
    std::size_t index_of(const std::string& name) const;

    std::span<const Neighbor> neighbors(std::size_t v) const { return adjacency_[v]; }
    /// Color of {u,v}, or 0 if they are not adjacent.
    int color_between(std::size_t u, std::size_t v) const;
    std::size_t color_degree(std::size_t v, int color) const;
    std::vector<ColoredEdge> edges() const;

private:
    std::size_t m_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t edge_count_ = 0;
};

class DisconnectedGraph : public std::runtime_error {
public:
    DisconnectedGraph(const std::string& source, const std::string& unreachable)
        : std::runtime_error("graph is disconnected: '" + unreachable + "' is unreachable from '" + source + "'"),
          source_(source), unreachable_(unreachable)
    {
    }
    const std::string& source() const noexcept { return source_; }
    const std::string& unreachable() const noexcept { return unreachable_; }

private:
    std::string source_;
    std::string unreachable_;
};

/// m-distances from one source: the order-minimal m-length over all walks.
///
/// Label-setting search with MultiIndex labels extracted in monomial order.
/// Every edge weight e_c exceeds o and the order is translation invariant, so a
/// settled label is final and optimal walks may be taken to be paths.
std::vector<MultiIndex> m_distance_from(const ColoredGraph& g, const MonomialOrder& order, std::size_t source);

/// All-pairs m-distances plus the set D of values that occur.
class DistanceTable {
public:
    DistanceTable(std::size_t n, std::size_t m, std::vector<MultiIndex> entries, const MonomialOrder& order);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    const MultiIndex& at(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }
    /// D sorted by the monomial order, so labels().front() is o.
    const std::vector<MultiIndex>& labels() const noexcept { return labels_; }
    /// Position of d(x,y) in labels().
    std::size_t class_of(std::size_t x, std::size_t y) const { return classes_[x * n_ + y]; }
    std::size_t label_index(const MultiIndex& label) const;
    bool contains(const MultiIndex& label) const;
    const MonomialOrder& order() const noexcept { return order_; }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<MultiIndex> entries_;
    std::vector<MultiIndex> labels_;
    std::vector<std::size_t> classes_;
    MonomialOrder order_;
};

/// Runs m_distance_from from every source (optionally in parallel) and checks
/// symmetry; an asymmetric table means the order is not a monomial order.
DistanceTable m_distance_table(const ColoredGraph& g, const MonomialOrder& order, unsigned threads = 1);

/// One 0/1 matrix per label of D, tagged with the label string.
SchemeClasses distance_matrices(const DistanceTable& table, const std::vector<std::string>& vertex_names = {});

/// Number of walks x -> y whose k-th edge has color type[k] (1-based colors).
BigInt count_walks_by_type(const ColoredGraph& g, std::size_t x, std::size_t y, const std::vector<int>& type);

/// Local form of precedence-compatibility: for every x, every y and every edge
/// {y,z} of color i, d(x,z) must precede d(x,y) + e_i.
Certificate check_precompat_graph(const ColoredGraph& g, const MonomialOrder& order, const PartialOrder& p);
Certificate check_precompat_graph(const ColoredGraph& g, const DistanceTable& table, const PartialOrder& p);

} // namespace mdrg
