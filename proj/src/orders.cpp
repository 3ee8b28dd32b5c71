#include "mdrg/orders.hpp"

#include <stdexcept>

namespace mdrg {

const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
    }
    return "?";
}

Ordering reverse(Ordering o)
{
    if (o == Ordering::Less)
        return Ordering::Greater;
    if (o == Ordering::Greater)
        return Ordering::Less;
    return o;
}

namespace {

Ordering lex(const MultiIndex& a, const MultiIndex& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            return Ordering::Less;
        if (a[i] > b[i])
            return Ordering::Greater;
    }
    return Ordering::Equal;
}

template <typename T>
Ordering three_way(const T& x, const T& y)
{
    if (x < y)
        return Ordering::Less;
    if (y < x)
        return Ordering::Greater;
    return Ordering::Equal;
}

Json mi(const MultiIndex& a)
{
    return a.to_string();
}

} // namespace

MonomialOrder::MonomialOrder(Kind kind) : kind_(kind)
{
    if (kind == Kind::WeightedDegLex)
        throw std::invalid_argument("weighted deg-lex needs weights; use MonomialOrder::weighted");
}

MonomialOrder MonomialOrder::weighted(std::vector<Rational> weights)
{
    if (weights.empty())
        throw std::invalid_argument("weighted deg-lex needs at least one weight");
    for (const auto& w : weights)
        if (w <= 0)
            throw std::invalid_argument("weighted deg-lex weights must be positive");
    MonomialOrder order;
    order.kind_ = Kind::WeightedDegLex;
    order.weights_ = std::move(weights);
    return order;
}

MonomialOrder MonomialOrder::parse(std::string_view text)
{
    if (text == "deglex-sum")
        return MonomialOrder(Kind::DegLexSum);
    if (text == "deglex-y2")
        return MonomialOrder(Kind::DegLexY2);
    if (text == "lex")
        return MonomialOrder(Kind::Lex);
    constexpr std::string_view prefix = "wdeglex:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::vector<Rational> weights;
        auto rest = text.substr(prefix.size());
        while (true) {
            const auto comma = rest.find(',');
            weights.push_back(parse_rational(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return weighted(std::move(weights));
    }
    throw std::invalid_argument("unknown monomial order '" + std::string(text) +
                                "' (expected deglex-sum, deglex-y2, lex or wdeglex:w1,...)");
}

std::string MonomialOrder::to_string() const
{
    switch (kind_) {
    case Kind::DegLexSum: return "deglex-sum";
    case Kind::DegLexY2: return "deglex-y2";
    case Kind::Lex: return "lex";
    case Kind::WeightedDegLex: {
        std::string out = "wdeglex:";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i)
                out += ',';
            out += format_rational_short(weights_[i]);
        }
        return out;
    }
    }
    return "?";
}

void MonomialOrder::require_dimension(std::size_t m) const
{
    if (m == 0)
        throw std::invalid_argument("monomial orders need m >= 1");
    if (kind_ == Kind::DegLexY2 && m != 2)
        throw std::invalid_argument("deglex-y2 is only defined for m = 2");
    if (kind_ == Kind::WeightedDegLex && weights_.size() != m)
        throw std::invalid_argument("wdeglex has " + std::to_string(weights_.size()) +
                                    " weights but m = " + std::to_string(m));
}

Ordering MonomialOrder::compare(const MultiIndex& a, const MultiIndex& b) const
{
    require_same_size(a, b);
    require_dimension(a.size());
    switch (kind_) {
    case Kind::Lex:
        return lex(a, b);
    case Kind::DegLexSum: {
        const auto by_degree = three_way(a.total(), b.total());
        return by_degree != Ordering::Equal ? by_degree : lex(a, b);
    }
    case Kind::DegLexY2: {
        const auto by_degree = three_way(a.total(), b.total());
        return by_degree != Ordering::Equal ? by_degree : three_way(a[1], b[1]);
    }
    case Kind::WeightedDegLex: {
        Rational wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            wa += weights_[i] * a[i];
            wb += weights_[i] * b[i];
        }
        const auto by_weight = three_way(wa, wb);
        return by_weight != Ordering::Equal ? by_weight : lex(a, b);
    }
    }
    return Ordering::Incomparable;
}

Ordering compare_monomial(const MonomialOrder& order, const MultiIndex& a, const MultiIndex& b)
{
    return order.compare(a, b);
}

AlphaBeta::AlphaBeta(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta))
{
    if (alpha_ < 0 || alpha_ > 1)
        throw std::invalid_argument("alpha must lie in [0,1], got " + format_rational_short(alpha_));
    if (beta_ < 0 || beta_ >= 1)
        throw std::invalid_argument("beta must lie in [0,1), got " + format_rational_short(beta_));
}

PartialOrder PartialOrder::parse(std::string_view text)
{
    if (text == "componentwise")
        return PartialOrder(Componentwise{});
    constexpr std::string_view prefix = "ab:";
    if (text.substr(0, prefix.size()) == prefix) {
        const auto rest = text.substr(prefix.size());
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("expected ab:alpha,beta, got '" + std::string(text) + "'");
        return PartialOrder(AlphaBeta(parse_rational(rest.substr(0, comma)),
                                      parse_rational(rest.substr(comma + 1))));
    }
    throw std::invalid_argument("unknown partial order '" + std::string(text) +
                                "' (expected ab:alpha,beta or componentwise)");
}

std::string PartialOrder::to_string() const
{
    if (!is_alpha_beta())
        return "componentwise";
    const auto& ab = alpha_beta();
    return "ab:" + format_rational_short(ab.alpha()) + "," + format_rational_short(ab.beta());
}

void PartialOrder::require_dimension(std::size_t m) const
{
    if (is_alpha_beta() && m != 2)
        throw std::invalid_argument("the (alpha,beta) partial order needs m = 2, got m = " +
                                    std::to_string(m));
}

bool PartialOrder::precedes(const MultiIndex& a, const MultiIndex& b) const
{
    require_same_size(a, b);
    require_dimension(a.size());
    if (!is_alpha_beta())
        return a.componentwise_le(b);
    const auto& ab = alpha_beta();
    return a[0] + ab.alpha() * a[1] <= b[0] + ab.alpha() * b[1] &&
           ab.beta() * a[0] + a[1] <= ab.beta() * b[0] + b[1];
}

Ordering PartialOrder::compare(const MultiIndex& a, const MultiIndex& b) const
{
    if (a == b) {
        require_dimension(a.size());
        return Ordering::Equal;
    }
    if (precedes(a, b))
        return Ordering::Less;
    if (precedes(b, a))
        return Ordering::Greater;
    return Ordering::Incomparable;
}

Ordering compare_partial(const PartialOrder& p, const MultiIndex& a, const MultiIndex& b)
{
    return p.compare(a, b);
}

std::vector<MultiIndex> box_points(std::size_t m, int box)
{
    if (box < 0)
        throw std::invalid_argument("box must be non-negative");
    std::vector<MultiIndex> out;
    std::vector<int> cur(m, 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t k = m;
        while (k > 0) {
            --k;
            if (cur[k] < box) {
                ++cur[k];
                break;
            }
            cur[k] = 0;
            if (k == 0)
                return out;
        }
        if (m == 0)
            return out;
    }
}

Certificate validate_monomial_order(const Comparator& compare, std::size_t m, int box)
{
    if (box < 1)
        throw std::invalid_argument("validation box must be >= 1");
    Certificate cert("monomial order on [0," + std::to_string(box) + "]^" + std::to_string(m));
    const auto points = box_points(m, box);
    const std::size_t n = points.size();
    std::vector<Ordering> table(n * n);

    std::optional<Json> antisym;
    for (std::size_t i = 0; i < n && !antisym; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto c = compare(points[i], points[j]);
            table[i * n + j] = c;
            const bool equal_points = i == j;
            if (c == Ordering::Incomparable || (c == Ordering::Equal) != equal_points) {
                antisym = Json{{"a", mi(points[i])}, {"b", mi(points[j])}, {"result", to_string(c)}};
                break;
            }
        }
    if (!antisym) {
        for (std::size_t i = 0; i < n && !antisym; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (table[i * n + j] != reverse(table[j * n + i])) {
                    antisym = Json{{"a", mi(points[i])},
                                   {"b", mi(points[j])},
                                   {"result", to_string(table[i * n + j])},
                                   {"reverse_result", to_string(table[j * n + i])}};
                    break;
                }
    }
    if (antisym) {
        cert.fail("totality_antisymmetry", *antisym);
        return cert;
    }
    cert.pass("totality_antisymmetry");

    std::optional<Json> trans;
    for (std::size_t i = 0; i < n && !trans; ++i)
        for (std::size_t j = 0; j < n && !trans; ++j) {
            if (table[i * n + j] != Ordering::Less)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (table[j * n + k] == Ordering::Less && table[i * n + k] != Ordering::Less) {
                    trans = Json{{"a", mi(points[i])}, {"b", mi(points[j])}, {"c", mi(points[k])}};
                    break;
                }
        }
    if (trans)
        cert.fail("transitivity", *trans);
    else
        cert.pass("transitivity");

    std::optional<Json> shift;
    for (std::size_t i = 0; i < n && !shift; ++i)
        for (std::size_t j = 0; j < n && !shift; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto moved = compare(points[i] + points[k], points[j] + points[k]);
                if (moved != table[i * n + j]) {
                    shift = Json{{"a", mi(points[i])},
                                 {"b", mi(points[j])},
                                 {"c", mi(points[k])},
                                 {"before", to_string(table[i * n + j])},
                                 {"after", to_string(moved)}};
                    break;
                }
            }
    if (shift)
        cert.fail("translation_invariance", *shift);
    else
        cert.pass("translation_invariance");

    // points[0] is o.
    std::optional<Json> minimum;
    for (std::size_t j = 1; j < n; ++j)
        if (table[j] != Ordering::Less) {
            minimum = Json{{"a", mi(points[j])}, {"result", to_string(table[j])}};
            break;
        }
    if (minimum)
        cert.fail("zero_is_minimum", *minimum);
    else
        cert.pass("zero_is_minimum");
    return cert;
}

Certificate validate_monomial_order(const MonomialOrder& order, std::size_t m, int box)
{
    order.require_dimension(m);
    auto cert = validate_monomial_order(
        [&order](const MultiIndex& a, const MultiIndex& b) { return order.compare(a, b); }, m, box);
    return cert;
}

Certificate validate_pair_compat(const PartialOrder& p, const MonomialOrder& order, std::size_t m, int box)
{
    if (box < 1)
        throw std::invalid_argument("validation box must be >= 1");
    p.require_dimension(m);
    order.require_dimension(m);
    Certificate cert("(" + p.to_string() + ", " + order.to_string() + ") on [0," +
                     std::to_string(box) + "]^" + std::to_string(m));
    const auto points = box_points(m, box);
    const std::size_t n = points.size();
    std::vector<char> prec(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            prec[i * n + j] = p.precedes(points[i], points[j]);

    std::optional<Json> ext;
    for (std::size_t i = 0; i < n && !ext; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (prec[i * n + j] && !order.less_equal(points[i], points[j])) {
                ext = Json{{"a", mi(points[i])}, {"b", mi(points[j])}};
                break;
            }
    if (ext)
        cert.fail("linear_extension", *ext, "a precedes b but a > b in the monomial order");
    else
        cert.pass("linear_extension");

    std::optional<Json> shift;
    for (std::size_t i = 0; i < n && !shift; ++i)
        for (std::size_t j = 0; j < n && !shift; ++j) {
            if (!prec[i * n + j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!p.precedes(points[i] + points[k], points[j] + points[k])) {
                    shift = Json{{"a", mi(points[i])}, {"b", mi(points[j])}, {"c", mi(points[k])}};
                    break;
                }
        }
    if (shift)
        cert.fail("translation_invariance", *shift);
    else
        cert.pass("translation_invariance");

    std::optional<Json> bottom;
    for (std::size_t j = 0; j < n; ++j)
        if (!prec[j]) {
            bottom = Json{{"a", mi(points[j])}};
            break;
        }
    if (bottom)
        cert.fail("zero_precedes_all", *bottom);
    else
        cert.pass("zero_precedes_all");
    return cert;
}

namespace {

int floor_nonneg(const Rational& x)
{
    const BigInt q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
    return static_cast<int>(q);
}

} // namespace

std::set<MultiIndex> downset_enum(const MultiIndex& a, const PartialOrder& p)
{
    p.require_dimension(a.size());
    std::vector<int> bound = a.entries();
    if (p.is_alpha_beta()) {
        const auto& ab = p.alpha_beta();
        bound[0] = floor_nonneg(a[0] + ab.alpha() * a[1]);
        bound[1] = floor_nonneg(ab.beta() * a[0] + a[1]);
    }
    std::set<MultiIndex> out;
    std::vector<int> cur(a.size(), 0);
    while (true) {
        MultiIndex b(cur);
        if (p.precedes(b, a))
            out.insert(b);
        std::size_t k = cur.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (cur[k] < bound[k]) {
                ++cur[k];
                done = false;
                break;
            }
            cur[k] = 0;
        }
        if (done)
            break;
    }
    return out;
}

Certificate check_domain(const std::set<MultiIndex>& domain, const DomainMode& mode)
{
    if (domain.empty())
        throw std::invalid_argument("domain must be non-empty");
    const std::size_t m = domain.begin()->size();
    const bool box = std::holds_alternative<BoxClosure>(mode);
    const PartialOrder order = box ? PartialOrder(Componentwise{}) : std::get<PartialOrder>(mode);
    Certificate cert(box ? "box closure" : "downset under " + order.to_string());
    const std::string check = box ? "box_closure" : "downset";
    for (const auto& a : domain) {
        if (a.size() != m)
            throw std::invalid_argument("domain mixes dimensions");
        for (const auto& b : downset_enum(a, order))
            if (!domain.count(b)) {
                cert.fail(check, Json{{"missing", mi(b)}, {"below", mi(a)}},
                          b.to_string() + " precedes " + a.to_string() + " but is not in the domain");
                return cert;
            }
    }
    cert.pass(check);
    return cert;
}

bool Interval::empty() const
{
    if (lower < upper)
        return false;
    if (lower == upper)
        return !(lower_closed && upper_closed);
    return true;
}

bool Interval::contains(const Rational& x) const
{
    const bool above = lower_closed ? x >= lower : x > lower;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
}

namespace {

std::string pretty(const Rational& x) { return format_rational_short(x); }

// Intersects `in` with {x : coef*x <= rhs} (strict: <).
Interval restrict(Interval in, const Rational& coef, const Rational& rhs, bool strict)
{
    if (coef == 0) {
        const bool ok = strict ? Rational(0) < rhs : Rational(0) <= rhs;
        if (!ok) {
            in.lower = 1;
            in.upper = 0;
        }
        return in;
    }
    const Rational t = rhs / coef;
    if (coef > 0) {
        if (t < in.upper || (t == in.upper && strict)) {
            in.upper = t;
            in.upper_closed = !strict;
        }
    } else {
        if (t > in.lower || (t == in.lower && strict)) {
            in.lower = t;
            in.lower_closed = !strict;
        }
    }
    return in;
}

// alpha-inequality of "b precedes c": alpha (b1 - c1) <= c0 - b0.
std::pair<Rational, Rational> alpha_ineq(const Precedence& pc)
{
    const auto& [b, c] = pc;
    return {Rational(b[1] - c[1]), Rational(c[0] - b[0])};
}

// beta-inequality: beta (b0 - c0) <= c1 - b1.
std::pair<Rational, Rational> beta_ineq(const Precedence& pc)
{
    const auto& [b, c] = pc;
    return {Rational(b[0] - c[0]), Rational(c[1] - b[1])};
}

void check_pair(const Precedence& pc)
{
    if (pc.first.size() != 2 || pc.second.size() != 2)
        throw std::invalid_argument("(alpha,beta) constraints need m = 2");
}

} // namespace

std::string Interval::to_string() const
{
    if (empty())
        return "empty";
    return std::string(lower_closed ? "[" : "(") + pretty(lower) + ", " + pretty(upper) +
           (upper_closed ? "]" : ")");
}

Json Interval::to_json() const
{
    return Json{{"lower", format_rational(lower)},
                {"lower_closed", lower_closed},
                {"upper", format_rational(upper)},
                {"upper_closed", upper_closed},
                {"text", to_string()}};
}

bool ABRegion::contains(const Rational& a, const Rational& b) const
{
    if (is_empty || !alpha.contains(a) || !beta.contains(b))
        return false;
    for (const auto& [lo, hi] : unresolved) {
        const bool first = lo[0] + a * lo[1] <= hi[0] + a * hi[1];
        const bool second = b * lo[0] + lo[1] <= b * hi[0] + hi[1];
        if (first && second)
            return false;
    }
    return true;
}

Json ABRegion::to_json() const
{
    if (is_empty)
        return Json{{"empty", true}};
    Json out = {{"empty", false}, {"alpha", alpha.to_json()}, {"beta", beta.to_json()}};
    if (!unresolved.empty()) {
        Json ex = Json::array();
        for (const auto& [b, c] : unresolved)
            ex.push_back(Json{{"b", b.to_string()}, {"c", c.to_string()}});
        out["excluded_precedences"] = std::move(ex);
    }
    return out;
}

ABRegion ab_feasible_region(const std::vector<Precedence>& required, const std::vector<Precedence>& forbidden)
{
    ABRegion region;
    region.alpha = Interval{0, 1, true, true};
    region.beta = Interval{0, 1, true, false};
    for (const auto& pc : required) {
        check_pair(pc);
        const auto [ca, ra] = alpha_ineq(pc);
        const auto [cb, rb] = beta_ineq(pc);
        region.alpha = restrict(region.alpha, ca, ra, false);
        region.beta = restrict(region.beta, cb, rb, false);
    }
    auto mark_empty = [&region] {
        region.is_empty = true;
        region.unresolved.clear();
    };
    if (region.alpha.empty() || region.beta.empty()) {
        mark_empty();
        return region;
    }

    std::vector<Precedence> pending;
    for (const auto& pc : forbidden) {
        check_pair(pc);
        pending.push_back(pc);
    }
    // Forbidding "b precedes c" removes the product of two half-lines; it can
    // only be applied to one axis when the other half-line covers that axis.
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        std::vector<Precedence> still;
        for (const auto& pc : pending) {
            const auto [ca, ra] = alpha_ineq(pc);
            const auto [cb, rb] = beta_ineq(pc);
            const auto a_hit = restrict(region.alpha, ca, ra, false);
            const auto b_hit = restrict(region.beta, cb, rb, false);
            if (a_hit.empty() || b_hit.empty()) {
                progress = true;
                continue;
            }
            const bool a_covers = a_hit == region.alpha;
            const bool b_covers = b_hit == region.beta;
            if (a_covers && b_covers) {
                mark_empty();
                return region;
            }
            if (b_covers) {
                region.alpha = restrict(region.alpha, -ca, -ra, true);
                progress = true;
            } else if (a_covers) {
                region.beta = restrict(region.beta, -cb, -rb, true);
                progress = true;
            } else {
                still.push_back(pc);
            }
            if (region.alpha.empty() || region.beta.empty()) {
                mark_empty();
                return region;
            }
        }
        pending = std::move(still);
    }
    region.unresolved = std::move(pending);
    return region;
}

} // namespace mdrg
