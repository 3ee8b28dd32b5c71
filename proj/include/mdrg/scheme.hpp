#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdrg/certificate.hpp"
#include "mdrg/colored_graph.hpp"
#include "mdrg/linalg.hpp"
#include "mdrg/multi_index.hpp"
#include "mdrg/orders.hpp"
#include "mdrg/rational.hpp"
#include "mdrg/scheme_classes.hpp"

namespace mdrg {

/// Class indices (a, b, c) addressing p_{ab}^c.
using ClassTriple = std::array<std::size_t, 3>;

/// Abstract Bose-Mesner multiplication table A_a A_b = sum_c p_{ab}^c A_c.
///
/// Stored sparsely. Entries may be arbitrary rationals so that parametrised
/// families can be instantiated formally; validate() reports what a genuine
/// scheme would additionally satisfy.
class IntersectionTensor {
public:
    IntersectionTensor() = default;
    /// Zero entries are dropped. The identity class is the unique tag t with
    /// p_{t,a}^c = delta_{ac}; construction fails if there is none.
    IntersectionTensor(std::vector<std::string> tags, std::map<ClassTriple, Rational> entries);

    std::size_t size() const noexcept { return tags_.size(); }
    const std::vector<std::string>& tags() const noexcept { return tags_; }
    const std::string& tag(std::size_t k) const { return tags_[k]; }
    std::size_t index_of(const std::string& tag) const;
    std::size_t identity() const noexcept { return identity_; }

    Rational p(std::size_t a, std::size_t b, std::size_t c) const;
    Rational p(const std::string& a, const std::string& b, const std::string& c) const;
    /// k_a = p_{a,a}^o.
    Rational valency(std::size_t a) const;
    const std::map<ClassTriple, Rational>& entries() const noexcept { return entries_; }

    /// Commutativity, non-negativity, row sums sum_b p_{ab}^c = k_a, and a
    /// separate `integrality` check.
    Certificate validate() const;

    /// Same tensor with tags renamed; `rename` must be a bijection on tags.
    IntersectionTensor renamed(const std::map<std::string, std::string>& rename) const;

    /// Equal tag sets with equal p_{ab}^c per tag triple; tag order is ignored.
    friend bool operator==(const IntersectionTensor& lhs, const IntersectionTensor& rhs);

private:
    std::vector<std::string> tags_;
    std::map<ClassTriple, Rational> entries_;
    std::size_t identity_ = 0;
};

/// Identity present, classes partition J, symmetry, and closure under
/// multiplication (each product constant on the support of each class).
Certificate verify_scheme_axioms(const SchemeClasses& s);

/// Reads p_{ab}^c off the classes. Throws std::invalid_argument when the
/// axioms fail.
IntersectionTensor intersection_tensor(const SchemeClasses& s);

/// Left-multiplication matrices over the class basis: entry (b, a) of the
/// matrix for generator g is p_{g,a}^b.
std::vector<RationalMatrix> regular_representation(const IntersectionTensor& t, const std::vector<std::size_t>& generators);
std::vector<RationalMatrix> regular_representation(const IntersectionTensor& t, const std::vector<std::string>& generators);

/// Class-basis coordinates of prod_i A_{g_i}^{a_i}. Throws std::logic_error if
/// the two application orders disagree (the tensor is not commutative).
RationalVector monomial_coeffs(const std::vector<RationalMatrix>& action, std::size_t classes, std::size_t identity,
                               const MultiIndex& a);
RationalVector monomial_coeffs(const IntersectionTensor& t, const std::vector<std::size_t>& generators, const MultiIndex& a);

/// Outcome of the m-distance-regularity check; the derived objects are filled
/// on a pass.
struct MdrgResult {
    Certificate certificate;
    std::optional<DistanceTable> table;
    std::optional<SchemeClasses> scheme;
    std::optional<IntersectionTensor> tensor;

    bool passed() const { return certificate.passed(); }
};

/// Certifies that the colored graph is m-distance-regular under `order`. A
/// disconnected graph fails the `connected` check with a witness pair.
MdrgResult mdrg_check(const ColoredGraph& g, const MonomialOrder& order, unsigned threads = 1);

struct PropertyOptions {
    std::uint64_t seed = 20231019;
    std::size_t walk_samples = 50;
    std::size_t max_walk_length = 4;
    std::size_t decomposition_vertex_limit = 200;
};

/// Consequences every m-distance-regular graph must satisfy: the triangle
/// conditions, p_{ab}^{a+b} != 0, per-pair decomposition of a distance,
/// walk-count permutation invariance, and agreement of the tensor with the one
/// read off the distance matrices.
Certificate mdrg_properties(const ColoredGraph& g, const MdrgResult& result, const PropertyOptions& options = {});

} // namespace mdrg
