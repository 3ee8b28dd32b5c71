#include "mdrg/ppoly.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace mdrg {

Labeling::Labeling(std::map<std::string, MultiIndex> by_tag) : by_tag_(std::move(by_tag))
{
    if (by_tag_.empty())
        throw std::invalid_argument("a labeling needs at least one class");
    m_ = by_tag_.begin()->second.size();
    std::set<MultiIndex> seen;
    for (const auto& [tag, label] : by_tag_) {
        if (label.size() != m_)
            throw std::invalid_argument("labeling mixes dimensions at tag '" + tag + "'");
        if (!seen.insert(label).second)
            throw std::invalid_argument("label " + label.to_string() + " is used twice");
    }
}

Labeling Labeling::from_tags(const IntersectionTensor& t)
{
    std::map<std::string, MultiIndex> by_tag;
    for (const auto& tag : t.tags())
        by_tag.emplace(tag, MultiIndex::parse(tag));
    return Labeling(std::move(by_tag));
}

Labeling Labeling::parse(std::string_view text)
{
    std::map<std::string, MultiIndex> by_tag;
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n')
            cleaned += c;
    std::string_view rest = cleaned;
    while (!rest.empty()) {
        const auto semi = rest.find(';');
        const auto item = rest.substr(0, semi);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw std::invalid_argument("malformed labeling entry '" + std::string(item) + "' (expected TAG=i,j)");
        const std::string tag(item.substr(0, eq));
        if (!by_tag.emplace(tag, MultiIndex::parse(item.substr(eq + 1))).second)
            throw std::invalid_argument("tag '" + tag + "' labeled twice");
        if (semi == std::string_view::npos)
            break;
        rest = rest.substr(semi + 1);
    }
    return Labeling(std::move(by_tag));
}

std::set<MultiIndex> Labeling::domain() const
{
    std::set<MultiIndex> out;
    for (const auto& [tag, label] : by_tag_)
        out.insert(label);
    return out;
}

std::string Labeling::tag_of(const MultiIndex& label) const
{
    for (const auto& [tag, l] : by_tag_)
        if (l == label)
            return tag;
    throw std::out_of_range("no class labeled " + label.to_string());
}

Json Labeling::to_json() const
{
    Json out = Json::object();
    for (const auto& [tag, label] : by_tag_)
        out[tag] = label.to_string();
    return out;
}

std::string to_string(const OrderBound& bound)
{
    return std::visit([](const auto& o) { return o.to_string(); }, bound);
}

namespace {

bool bounded_by(const OrderBound& bound, const MultiIndex& b, const MultiIndex& c)
{
    if (const auto* order = std::get_if<MonomialOrder>(&bound))
        return order->less_equal(b, c);
    return std::get<PartialOrder>(bound).precedes(b, c);
}

// Tensor classes viewed through a labeling.
struct Labeled {
    const IntersectionTensor* t = nullptr;
    std::size_t m = 0;
    std::vector<MultiIndex> label;      // per class index
    std::map<MultiIndex, std::size_t> cls;
    std::set<MultiIndex> domain;
    std::vector<std::size_t> gens;      // class of e_i
    std::vector<MultiIndex> units;

    bool in_domain(const MultiIndex& a) const { return cls.count(a) != 0; }
};

Labeled make_labeled(const IntersectionTensor& t, const Labeling& labeling)
{
    Labeled out;
    out.t = &t;
    out.m = labeling.m();
    if (labeling.by_tag().size() != t.size())
        throw std::invalid_argument("labeling has " + std::to_string(labeling.by_tag().size()) + " entries for " +
                                    std::to_string(t.size()) + " classes");
    out.label.resize(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto it = labeling.by_tag().find(t.tag(k));
        if (it == labeling.by_tag().end())
            throw std::invalid_argument("class '" + t.tag(k) + "' is not labeled");
        out.label[k] = it->second;
        out.cls.emplace(it->second, k);
        out.domain.insert(it->second);
    }
    if (!out.label[t.identity()].is_zero())
        throw std::invalid_argument("the identity class '" + t.tag(t.identity()) + "' must be labeled o, not " +
                                    out.label[t.identity()].to_string());
    for (std::size_t i = 0; i < out.m; ++i) {
        const auto e = MultiIndex::unit(out.m, i);
        const auto it = out.cls.find(e);
        if (it == out.cls.end())
            throw std::invalid_argument("generator label " + e.to_string() + " is missing from the labeling");
        out.gens.push_back(it->second);
        out.units.push_back(e);
    }
    return out;
}

Json step_witness(const Labeled& L, std::size_t i, const MultiIndex& a)
{
    return Json{{"i", i + 1}, {"e_i", L.units[i].to_string()}, {"a", a.to_string()},
                {"a_plus_e_i", (a + L.units[i]).to_string()}};
}

void certify_core(Certificate& cert, const Labeled& L, const OrderBound& bound)
{
    cert.merge(check_domain(L.domain, BoxClosure{}));
    const auto& t = *L.t;

    std::optional<Json> support;
    for (const auto& a : L.domain) {
        for (std::size_t i = 0; i < L.m && !support; ++i) {
            const auto target = a + L.units[i];
            for (std::size_t b = 0; b < t.size(); ++b) {
                const auto v = t.p(L.gens[i], L.cls.at(a), b);
                if (v != 0 && !bounded_by(bound, L.label[b], target)) {
                    support = step_witness(L, i, a);
                    (*support)["b"] = L.label[b].to_string();
                    (*support)["p"] = format_rational(v);
                    (*support)["classes"] = Json::array({t.tag(L.gens[i]), t.tag(L.cls.at(a)), t.tag(b)});
                    break;
                }
            }
        }
        if (support)
            break;
    }
    if (support)
        cert.fail("support_bound", *support, "p_{e_i,a}^b != 0 with b not bounded by a + e_i under " + to_string(bound));
    else
        cert.pass("support_bound");

    std::optional<Json> successor;
    for (const auto& a : L.domain) {
        for (std::size_t i = 0; i < L.m; ++i) {
            const auto next = a + L.units[i];
            if (L.in_domain(next) && t.p(L.gens[i], L.cls.at(a), L.cls.at(next)) == 0) {
                successor = step_witness(L, i, a);
                break;
            }
        }
        if (successor)
            break;
    }
    if (successor)
        cert.fail("successor_nonzero", *successor, "p_{e_i,a}^{a+e_i} = 0");
    else
        cert.pass("successor_nonzero");
}

int coordinate_bound(const std::set<MultiIndex>& domain)
{
    int top = 0;
    for (const auto& a : domain)
        for (int v : a.entries())
            top = std::max(top, v);
    return top + 1;
}

class MonomialCache {
public:
    explicit MonomialCache(const Labeled& L)
        : L_(L), action_(regular_representation(*L.t, L.gens))
    {
    }
    const RationalVector& operator()(const MultiIndex& a)
    {
        auto it = cache_.find(a);
        if (it == cache_.end())
            it = cache_.emplace(a, monomial_coeffs(action_, L_.t->size(), L_.t->identity(), a)).first;
        return it->second;
    }

private:
    const Labeled& L_;
    std::vector<RationalMatrix> action_;
    std::map<MultiIndex, RationalVector> cache_;
};

} // namespace

Certificate certify_ppoly(const IntersectionTensor& t, const Labeling& labeling, const MonomialOrder& order)
{
    const auto L = make_labeled(t, labeling);
    order.require_dimension(L.m);
    Certificate cert("m-variate P-polynomial under " + order.to_string());
    certify_core(cert, L, order);
    return cert;
}

Certificate certify_ppoly_refined(const IntersectionTensor& t, const Labeling& labeling, const MonomialOrder& order,
                                  const PartialOrder& p)
{
    const auto L = make_labeled(t, labeling);
    order.require_dimension(L.m);
    p.require_dimension(L.m);
    const auto pair = validate_pair_compat(p, order, L.m, coordinate_bound(L.domain));
    if (!pair.passed())
        throw std::invalid_argument("(" + p.to_string() + ", " + order.to_string() +
                                    ") is not a compatible pair: " + pair.witness().dump());
    Certificate cert("m-variate P-polynomial under " + order.to_string() + " refined by " + p.to_string());
    cert.pass("pair_compat");
    certify_core(cert, L, p);
    return cert;
}

Certificate boundary_check(const IntersectionTensor& t, const Labeling& labeling, const OrderBound& bound)
{
    const auto L = make_labeled(t, labeling);
    Certificate cert("boundary compatibility under " + to_string(bound));
    MonomialCache monomial(L);
    std::size_t tested = 0;
    for (const auto& a : L.domain)
        for (std::size_t i = 0; i < L.m; ++i) {
            const auto next = a + L.units[i];
            if (L.in_domain(next))
                continue;
            ++tested;
            std::vector<RationalVector> basis;
            for (const auto& b : L.domain)
                if (bounded_by(bound, b, next))
                    basis.push_back(monomial(b));
            if (!in_span(basis, monomial(next))) {
                auto w = step_witness(L, i, a);
                w["spanning_monomials"] = basis.size();
                cert.fail("boundary_span", w, "A_{e_i} A^a is outside the span of the bounded monomials");
                return cert;
            }
        }
    cert.pass("boundary_span", std::to_string(tested) + " boundary steps");
    return cert;
}

ExtractionResult extract_polynomials(const IntersectionTensor& t, const Labeling& labeling, const MonomialOrder& order,
                                     const std::optional<PartialOrder>& partial)
{
    const auto L = make_labeled(t, labeling);
    order.require_dimension(L.m);
    if (partial)
        partial->require_dimension(L.m);
    ExtractionResult result;
    auto& cert = result.certificate;
    cert = Certificate("polynomial extraction under " + order.to_string() +
                       (partial ? " restricted by " + partial->to_string() : std::string{}));
    MonomialCache monomial(L);
    const std::size_t k = t.size();

    std::optional<Json> unsolvable, leading, resub;
    for (const auto& n : L.domain) {
        std::vector<MultiIndex> support;
        for (const auto& a : L.domain)
            if (order.less_equal(a, n) && (!partial || partial->precedes(a, n)))
                support.push_back(a);
        std::vector<RationalVector> columns;
        for (const auto& a : support)
            columns.push_back(monomial(a));
        RationalVector rhs(k);
        rhs[L.cls.at(n)] = 1;
        const auto solved = solve(from_columns(columns, k), rhs);
        if (solved.status != SolveStatus::Unique) {
            if (!unsolvable)
                unsolvable = Json{{"n", n.to_string()},
                                  {"status", solved.status == SolveStatus::Inconsistent ? "inconsistent" : "underdetermined"},
                                  {"monomials", support.size()}};
            continue;
        }
        Polynomial v(L.m);
        for (std::size_t j = 0; j < support.size(); ++j)
            v.add_term(support[j], solved.x[j]);
        if (v.coefficient(n) == 0 && !leading)
            leading = Json{{"n", n.to_string()}};

        RationalVector back(k);
        for (const auto& [a, c] : v.terms()) {
            const auto& coords = monomial(a);
            for (std::size_t r = 0; r < k; ++r)
                back[r] += c * coords[r];
        }
        if (back != rhs && !resub)
            resub = Json{{"n", n.to_string()}};
        result.polynomials.emplace(n, std::move(v));
    }
    if (unsolvable)
        cert.fail("solvable", *unsolvable, "class is not a unique combination of the admissible monomials");
    else
        cert.pass("solvable");
    if (leading)
        cert.fail("leading_coefficient", *leading, "f_n = 0");
    else
        cert.pass("leading_coefficient");
    if (resub)
        cert.fail("resubstitution", *resub, "internal consistency: v_n(A_e) != A_n");
    else
        cert.pass("resubstitution");
    return result;
}

Certificate verify_recurrences(const std::map<MultiIndex, Polynomial>& polynomials, const IntersectionTensor& t,
                               const Labeling& labeling, const OrderBound& bound)
{
    const auto L = make_labeled(t, labeling);
    std::visit([&](const auto& o) { o.require_dimension(L.m); }, bound);
    Certificate cert("recurrences x_i v_a = sum_b p_{a,e_i}^b v_b under " + to_string(bound));
    for (const auto& a : L.domain)
        if (!polynomials.count(a))
            throw std::invalid_argument("no polynomial for label " + a.to_string());

    std::optional<Json> support, mismatch;
    std::size_t checked = 0;
    for (const auto& a : L.domain)
        for (std::size_t i = 0; i < L.m; ++i) {
            const auto next = a + L.units[i];
            if (!L.in_domain(next))
                continue;
            ++checked;
            const Polynomial lhs = polynomials.at(a).times_variable(i);
            Polynomial rhs(L.m);
            for (std::size_t b = 0; b < t.size(); ++b) {
                const auto v = t.p(L.cls.at(a), L.gens[i], b);
                if (v == 0)
                    continue;
                if (!bounded_by(bound, L.label[b], next) && !support) {
                    support = step_witness(L, i, a);
                    (*support)["b"] = L.label[b].to_string();
                }
                rhs += polynomials.at(L.label[b]) * v;
            }
            if (lhs != rhs && !mismatch) {
                auto w = step_witness(L, i, a);
                std::set<MultiIndex> keys;
                for (const auto& [m, c] : lhs.terms())
                    keys.insert(m);
                for (const auto& [m, c] : rhs.terms())
                    keys.insert(m);
                for (const auto& m : keys)
                    if (lhs.coefficient(m) != rhs.coefficient(m)) {
                        w["monomial"] = m.to_string();
                        w["lhs"] = format_rational(lhs.coefficient(m));
                        w["rhs"] = format_rational(rhs.coefficient(m));
                        break;
                    }
                mismatch = std::move(w);
            }
        }
    if (support)
        cert.fail("recurrence_support", *support, "p_{a,e_i}^b != 0 with b not bounded by a + e_i");
    else
        cert.pass("recurrence_support");
    if (mismatch)
        cert.fail("recurrence", *mismatch, "x_i v_a differs from the intersection-number expansion");
    else
        cert.pass("recurrence", std::to_string(checked) + " relations");
    return cert;
}

RationalVector evaluate_in_class_basis(const Polynomial& v, const IntersectionTensor& t, const Labeling& labeling)
{
    const auto L = make_labeled(t, labeling);
    MonomialCache monomial(L);
    RationalVector out(t.size());
    for (const auto& [a, c] : v.terms()) {
        const auto& coords = monomial(a);
        for (std::size_t r = 0; r < out.size(); ++r)
            out[r] += c * coords[r];
    }
    return out;
}

namespace {

void require_bivariate(const Labeled& L)
{
    if (L.m != 2)
        throw std::invalid_argument("type (alpha,beta) needs m = 2, got m = " + std::to_string(L.m));
}

// Failure of the (alpha,beta)-independent conditions, if any.
std::optional<Json> type_ab_nonzero(const Labeled& L)
{
    const auto& t = *L.t;
    for (const auto& a : L.domain)
        for (std::size_t i = 0; i < 2; ++i) {
            const auto next = a + L.units[i];
            if (!L.in_domain(next))
                continue;
            const auto ca = L.cls.at(a), cn = L.cls.at(next);
            if (t.p(L.gens[i], ca, cn) == 0 || t.p(L.gens[i], cn, ca) == 0)
                return step_witness(L, i, a);
        }
    return std::nullopt;
}

template <typename Visit>
void for_each_interior_support(const Labeled& L, Visit&& visit)
{
    const auto& t = *L.t;
    for (const auto& a : L.domain)
        for (std::size_t i = 0; i < 2; ++i) {
            const auto next = a + L.units[i];
            if (!L.in_domain(next))
                continue;
            for (std::size_t b = 0; b < t.size(); ++b)
                if (t.p(L.gens[i], L.cls.at(a), b) != 0)
                    if (!visit(i, a, L.label[b], next))
                        return;
        }
}

} // namespace

Certificate certify_type_ab(const IntersectionTensor& t, const Labeling& labeling, const AlphaBeta& ab)
{
    const auto L = make_labeled(t, labeling);
    require_bivariate(L);
    const PartialOrder p(ab);
    Certificate cert("bivariate P-polynomial of type " + p.to_string());
    cert.merge(check_domain(L.domain, p));

    if (const auto w = type_ab_nonzero(L))
        cert.fail("successor_predecessor_nonzero", *w, "p_{e_i,a}^{a+e_i} = 0 or p_{e_i,a+e_i}^a = 0");
    else
        cert.pass("successor_predecessor_nonzero");

    std::optional<Json> support;
    for_each_interior_support(L, [&](std::size_t i, const MultiIndex& a, const MultiIndex& b, const MultiIndex& next) {
        if (p.precedes(b, next))
            return true;
        support = step_witness(L, i, a);
        (*support)["b"] = b.to_string();
        return false;
    });
    if (support)
        cert.fail("support_precedence", *support, "p_{e_i,a}^b != 0 with b not preceding a + e_i");
    else
        cert.pass("support_precedence");
    return cert;
}

ABRegion ab_region_for_scheme(const IntersectionTensor& t, const Labeling& labeling)
{
    const auto L = make_labeled(t, labeling);
    require_bivariate(L);
    if (type_ab_nonzero(L)) {
        ABRegion empty;
        empty.is_empty = true;
        return empty;
    }
    std::vector<Precedence> required, forbidden;
    for_each_interior_support(L, [&](std::size_t, const MultiIndex&, const MultiIndex& b, const MultiIndex& next) {
        required.emplace_back(b, next);
        return true;
    });
    // Any b preceding a satisfies b_0, b_1 <= a_0 + a_1 for every admissible (alpha, beta).
    for (const auto& a : L.domain)
        for (const auto& b : box_points(2, a.total()))
            if (!L.in_domain(b))
                forbidden.emplace_back(b, a);
    return ab_feasible_region(required, forbidden);
}

std::vector<DiscoveredLabeling> discover_labelings(const SchemeClasses& s, std::size_t m, const MonomialOrder& order)
{
    order.require_dimension(m);
    const auto axioms = verify_scheme_axioms(s);
    if (!axioms.passed())
        throw std::invalid_argument("discover_labelings needs an association scheme: " + axioms.witness().dump());
    const std::size_t n = s.vertex_count();
    const std::size_t k = s.class_count();
    std::vector<std::size_t> cls(n * n);
    std::size_t identity = 0;
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (s.at(c, x, y)) {
                    cls[x * n + y] = c;
                    if (x == y)
                        identity = c;
                }
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < k; ++c)
        if (c != identity)
            candidates.push_back(c);
    if (m > candidates.size())
        return {};

    std::vector<DiscoveredLabeling> found;
    std::vector<std::size_t> tuple;
    std::vector<char> used(k, 0);

    auto connected = [&](const std::vector<std::size_t>& gens) {
        std::vector<char> seen(n, 0);
        std::queue<std::size_t> queue;
        queue.push(0);
        seen[0] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && std::find(gens.begin(), gens.end(), cls[u * n + v]) != gens.end()) {
                    seen[v] = 1;
                    ++reached;
                    queue.push(v);
                }
        }
        return reached == n;
    };

    auto try_tuple = [&](const std::vector<std::size_t>& gens) {
        if (!connected(gens))
            return;
        std::vector<ColoredEdge> edges;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (cls[x * n + y] == gens[i])
                        edges.push_back({s.vertex_names()[x], s.vertex_names()[y], static_cast<int>(i + 1)});
        const ColoredGraph g(m, s.vertex_names(), edges);
        auto result = mdrg_check(g, order);
        std::vector<std::string> gen_tags;
        for (auto c : gens)
            gen_tags.push_back(s.tag(c));
        if (!result.passed())
            return;

        const auto& table = *result.table;
        std::vector<std::optional<std::size_t>> to_class(table.labels().size());
        std::vector<char> hit(k, 0);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                auto& slot = to_class[table.class_of(x, y)];
                const auto c = cls[x * n + y];
                if (!slot) {
                    if (hit[c])
                        return; // two m-distances share one scheme class
                    slot = c;
                    hit[c] = 1;
                } else if (*slot != c) {
                    return; // one m-distance spans two scheme classes
                }
            }
        if (table.labels().size() != k)
            return;
        std::map<std::string, MultiIndex> by_tag;
        for (std::size_t l = 0; l < table.labels().size(); ++l)
            by_tag.emplace(s.tag(*to_class[l]), table.labels()[l]);
        result.certificate.pass("classes_match", "m-distance classes coincide with the scheme classes");
        found.push_back({std::move(gen_tags), Labeling(std::move(by_tag)), std::move(result.certificate)});
    };

    std::function<void()> extend = [&] {
        if (tuple.size() == m) {
            try_tuple(tuple);
            return;
        }
        for (auto c : candidates) {
            if (used[c])
                continue;
            used[c] = 1;
            tuple.push_back(c);
            extend();
            tuple.pop_back();
            used[c] = 0;
        }
    };
    extend();
    return found;
}

} // namespace mdrg
