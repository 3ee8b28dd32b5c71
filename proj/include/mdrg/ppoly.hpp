#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mdrg/certificate.hpp"
#include "mdrg/orders.hpp"
#include "mdrg/polynomial.hpp"
#include "mdrg/scheme.hpp"

namespace mdrg {

/// Bijection from class tags to points of N^m. The image is the domain D.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::map<std::string, MultiIndex> by_tag);

    /// Labels every class by parsing its tag as a MultiIndex ("1,0").
    static Labeling from_tags(const IntersectionTensor& t);
    /// "A0=0,0;A2=1,0;..." (whitespace ignored).
    static Labeling parse(std::string_view text);

    std::size_t m() const noexcept { return m_; }
    const std::map<std::string, MultiIndex>& by_tag() const noexcept { return by_tag_; }
    std::set<MultiIndex> domain() const;
    std::string tag_of(const MultiIndex& label) const;
    Json to_json() const;

private:
    std::size_t m_ = 0;
    std::map<std::string, MultiIndex> by_tag_;
};

/// Either a total monomial order or a partial order; selects the bound used in
/// "b <= a + e_i" style conditions.
using OrderBound = std::variant<MonomialOrder, PartialOrder>;
std::string to_string(const OrderBound& bound);

/// Certifies the m-variate P-polynomial property via intersection numbers:
/// box-closed domain; for each i and a in D, p_{e_i,a}^b != 0 implies
/// b <= a + e_i; and p_{e_i,a}^{a+e_i} != 0 whenever a + e_i is in D.
/// Throws std::invalid_argument if o or some e_i is not a label, or the
/// labeling does not cover the tensor's classes.
Certificate certify_ppoly(const IntersectionTensor& t, const Labeling& labeling, const MonomialOrder& order);

/// As certify_ppoly with the support bound taken in the partial order `p`.
/// Throws std::invalid_argument when (p, order) is not a compatible pair on a
/// box covering D + e_i.
Certificate certify_ppoly_refined(const IntersectionTensor& t, const Labeling& labeling, const MonomialOrder& order,
                                  const PartialOrder& p);

/// For each a in D with a + e_i outside D, tests by exact rank comparison that
/// A_{e_i} A^a lies in span{A^b : b in D, b bounded by a + e_i}.
Certificate boundary_check(const IntersectionTensor& t, const Labeling& labeling, const OrderBound& bound);

struct ExtractionResult {
    std::map<MultiIndex, Polynomial> polynomials;
    Certificate certificate;
};

/// Solves sum_{a in D, a <= n} f_a A^a = A_n exactly for every n in D. With a
/// partial order the monomials are further restricted to a preceding n.
ExtractionResult extract_polynomials(const IntersectionTensor& t, const Labeling& labeling, const MonomialOrder& order,
                                     const std::optional<PartialOrder>& partial = std::nullopt);

/// Checks x_i v_a = sum_b p_{a,e_i}^b v_b coefficientwise whenever a + e_i is
/// in D, and that every contributing b is bounded by a + e_i.
Certificate verify_recurrences(const std::map<MultiIndex, Polynomial>& polynomials, const IntersectionTensor& t,
                               const Labeling& labeling, const OrderBound& bound);

/// Evaluates v at the regular representation and returns class coordinates.
RationalVector evaluate_in_class_basis(const Polynomial& v, const IntersectionTensor& t, const Labeling& labeling);

/// Bivariate type-(alpha,beta) characterisation: D is a downset, successor
/// and predecessor intersection numbers are non-zero, and p_{e_i,a}^b != 0
/// implies b precedes a + e_i, the last only when a + e_i lies in D.
Certificate certify_type_ab(const IntersectionTensor& t, const Labeling& labeling, const AlphaBeta& ab);

/// Exact set of (alpha, beta) for which certify_type_ab passes.
ABRegion ab_region_for_scheme(const IntersectionTensor& t, const Labeling& labeling);

struct DiscoveredLabeling {
    std::vector<std::string> generators; // class tags playing A_{e_1}..A_{e_m}
    Labeling labeling;
    Certificate certificate;
};

/// Tries every ordered m-tuple of distinct non-identity classes as generators
/// and keeps those whose colored union graph is m-distance-regular with
/// m-distance classes equal to the scheme's classes.
std::vector<DiscoveredLabeling> discover_labelings(const SchemeClasses& s, std::size_t m, const MonomialOrder& order);

} // namespace mdrg
