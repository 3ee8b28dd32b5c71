#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mdrg/certificate.hpp"
#include "mdrg/multi_index.hpp"
#include "mdrg/rational.hpp"

namespace mdrg {

enum class Ordering { Less, Equal, Greater, Incomparable };

const char* to_string(Ordering o);
Ordering reverse(Ordering o);

/// Total monomial orders on N^m.
///
///   DegLexSum       total degree, ties by the leftmost non-zero entry of a-b (negative => a<b)
///   DegLexY2        m = 2 only: total degree, ties by the second coordinate
///   Lex             leftmost differing entry
///   WeightedDegLex  weighted sum with positive rational weights, ties by Lex
class MonomialOrder {
public:
    enum class Kind { DegLexSum, DegLexY2, Lex, WeightedDegLex };

    MonomialOrder() = default;
    explicit MonomialOrder(Kind kind);
    static MonomialOrder weighted(std::vector<Rational> weights);

    /// Parses `deglex-sum`, `deglex-y2`, `lex` or `wdeglex:w1,...,wm`.
    static MonomialOrder parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const noexcept { return kind_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }

    /// Throws std::invalid_argument when the order is not defined for this m.
    void require_dimension(std::size_t m) const;

    Ordering compare(const MultiIndex& a, const MultiIndex& b) const;
    bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) == Ordering::Less; }
    bool less_equal(const MultiIndex& a, const MultiIndex& b) const
    {
        return compare(a, b) != Ordering::Greater;
    }

private:
    Kind kind_ = Kind::DegLexSum;
    std::vector<Rational> weights_;
};

Ordering compare_monomial(const MonomialOrder& order, const MultiIndex& a, const MultiIndex& b);

/// Parameters of the two-inequality partial order on N^2:
///   (i,j) <= (i',j')  iff  i + alpha j <= i' + alpha j'  and  beta i + j <= beta i' + j'.
class AlphaBeta {
public:
    /// Enforces 0 <= alpha <= 1 and 0 <= beta < 1.
    AlphaBeta(Rational alpha, Rational beta);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }

private:
    Rational alpha_;
    Rational beta_;
};

struct Componentwise {};

class PartialOrder {
public:
    PartialOrder() = default;
    PartialOrder(AlphaBeta ab) : spec_(std::move(ab)) {}
    PartialOrder(Componentwise c) : spec_(c) {}

    /// Parses `ab:alpha,beta` or `componentwise`.
    static PartialOrder parse(std::string_view text);
    std::string to_string() const;

    bool is_alpha_beta() const noexcept { return std::holds_alternative<AlphaBeta>(spec_); }
    const AlphaBeta& alpha_beta() const { return std::get<AlphaBeta>(spec_); }

    /// Less iff a precedes b and a != b.
    Ordering compare(const MultiIndex& a, const MultiIndex& b) const;
    /// a precedes-or-equals b.
    bool precedes(const MultiIndex& a, const MultiIndex& b) const;

    void require_dimension(std::size_t m) const;

private:
    std::variant<Componentwise, AlphaBeta> spec_;
};

Ordering compare_partial(const PartialOrder& p, const MultiIndex& a, const MultiIndex& b);

/// All points of [0,box]^m in storage order.
std::vector<MultiIndex> box_points(std::size_t m, int box);

using Comparator = std::function<Ordering(const MultiIndex&, const MultiIndex&)>;

/// Exhaustive axiom check on [0,box]^m: antisymmetry/totality, transitivity,
/// translation invariance and o being the minimum. Well-ordering beyond this
/// finite evidence is the caller's obligation for custom weights.
Certificate validate_monomial_order(const Comparator& compare, std::size_t m, int box);
Certificate validate_monomial_order(const MonomialOrder& order, std::size_t m, int box);

/// Checks that `order` is a linear extension of `p`, that `p` is translation
/// invariant, and that o precedes every point, all on [0,box]^m.
Certificate validate_pair_compat(const PartialOrder& p, const MonomialOrder& order, std::size_t m, int box);

/// {b in N^m : b precedes a}.
std::set<MultiIndex> downset_enum(const MultiIndex& a, const PartialOrder& p);

struct BoxClosure {};
using DomainMode = std::variant<BoxClosure, PartialOrder>;

/// Downward closure of D, componentwise or under a partial order.
Certificate check_domain(const std::set<MultiIndex>& domain, const DomainMode& mode);

/// A real interval with exact rational endpoints.
struct Interval {
    Rational lower;
    Rational upper;
    bool lower_closed = true;
    bool upper_closed = true;

    bool empty() const;
    bool contains(const Rational& x) const;
    std::string to_string() const;
    Json to_json() const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// "b must precede c" (required) or "b must not precede c" (forbidden).
using Precedence = std::pair<MultiIndex, MultiIndex>;

/// Feasible (alpha, beta) parameters within [0,1] x [0,1).
///
/// Required precedences split into one inequality in alpha and one in beta, so
/// they always give a rectangle. Forbidden precedences are applied when they
/// cut the rectangle along one axis; any that would cut a corner stay in
/// `unresolved` and are honoured by contains().
struct ABRegion {
    bool is_empty = false;
    Interval alpha;
    Interval beta;
    std::vector<Precedence> unresolved;

    bool is_rectangle() const { return is_empty || unresolved.empty(); }
    bool contains(const Rational& a, const Rational& b) const;
    Json to_json() const;
};

ABRegion ab_feasible_region(const std::vector<Precedence>& required,
                            const std::vector<Precedence>& forbidden = {});

} // namespace mdrg
