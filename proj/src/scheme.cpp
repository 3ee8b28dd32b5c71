#include "mdrg/scheme.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mdrg {

IntersectionTensor::IntersectionTensor(std::vector<std::string> tags, std::map<ClassTriple, Rational> entries)
    : tags_(std::move(tags))
{
    const std::size_t k = tags_.size();
    if (k == 0)
        throw std::invalid_argument("an intersection tensor needs at least one class");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (tags_[i] == tags_[j])
                throw std::invalid_argument("duplicate class tag '" + tags_[i] + "'");
    for (auto& [triple, value] : entries) {
        for (auto idx : triple)
            if (idx >= k)
                throw std::invalid_argument("intersection number index out of range");
        if (value != 0)
            entries_.emplace(triple, std::move(value));
    }
    std::optional<std::size_t> identity;
    for (std::size_t t = 0; t < k && !identity; ++t) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t c = 0; c < k && ok; ++c)
                ok = p(t, a, c) == (a == c ? 1 : 0);
        if (ok)
            identity = t;
    }
    if (!identity)
        throw std::invalid_argument("no class acts as the identity (p_{o,a}^c = delta_ac)");
    identity_ = *identity;
}

std::size_t IntersectionTensor::index_of(const std::string& tag) const
{
    for (std::size_t k = 0; k < tags_.size(); ++k)
        if (tags_[k] == tag)
            return k;
    throw std::out_of_range("unknown class tag '" + tag + "'");
}

Rational IntersectionTensor::p(std::size_t a, std::size_t b, std::size_t c) const
{
    const auto it = entries_.find({a, b, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

Rational IntersectionTensor::p(const std::string& a, const std::string& b, const std::string& c) const
{
    return p(index_of(a), index_of(b), index_of(c));
}

Rational IntersectionTensor::valency(std::size_t a) const
{
    return p(a, a, identity_);
}

Certificate IntersectionTensor::validate() const
{
    Certificate cert("intersection tensor");
    const std::size_t k = size();
    auto triple_json = [this](std::size_t a, std::size_t b, std::size_t c, const Rational& v) {
        return Json{{"a", tags_[a]}, {"b", tags_[b]}, {"c", tags_[c]}, {"p", format_rational(v)}};
    };

    std::optional<Json> comm, negative, integral;
    for (const auto& [t, v] : entries_) {
        const auto [a, b, c] = t;
        if (!comm && p(b, a, c) != v)
            comm = triple_json(a, b, c, v);
        if (!negative && v < 0)
            negative = triple_json(a, b, c, v);
        if (!integral && !is_integer(v))
            integral = triple_json(a, b, c, v);
    }
    if (comm)
        cert.fail("commutativity", *comm, "p_ab^c != p_ba^c");
    else
        cert.pass("commutativity");
    if (negative)
        cert.fail("nonnegativity", *negative);
    else
        cert.pass("nonnegativity");

    std::optional<Json> rows;
    for (std::size_t a = 0; a < k && !rows; ++a)
        for (std::size_t c = 0; c < k; ++c) {
            Rational sum = 0;
            for (std::size_t b = 0; b < k; ++b)
                sum += p(a, b, c);
            if (sum != valency(a)) {
                rows = Json{{"a", tags_[a]}, {"c", tags_[c]}, {"row_sum", format_rational(sum)},
                            {"valency", format_rational(valency(a))}};
                break;
            }
        }
    if (rows)
        cert.fail("row_sums", *rows, "sum_b p_ab^c != k_a");
    else
        cert.pass("row_sums");

    if (integral)
        cert.fail("integrality", *integral, "formal tensor: non-integer intersection number");
    else
        cert.pass("integrality");
    return cert;
}

IntersectionTensor IntersectionTensor::renamed(const std::map<std::string, std::string>& rename) const
{
    std::vector<std::string> tags;
    tags.reserve(tags_.size());
    for (const auto& t : tags_) {
        const auto it = rename.find(t);
        if (it == rename.end())
            throw std::invalid_argument("rename map misses tag '" + t + "'");
        tags.push_back(it->second);
    }
    return IntersectionTensor(std::move(tags), entries_);
}

bool operator==(const IntersectionTensor& lhs, const IntersectionTensor& rhs)
{
    if (lhs.size() != rhs.size() || lhs.entries_.size() != rhs.entries_.size())
        return false;
    std::vector<std::size_t> to_rhs(lhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        const auto it = std::find(rhs.tags_.begin(), rhs.tags_.end(), lhs.tags_[k]);
        if (it == rhs.tags_.end())
            return false;
        to_rhs[k] = static_cast<std::size_t>(it - rhs.tags_.begin());
    }
    for (const auto& [abc, v] : lhs.entries_)
        if (rhs.p(to_rhs[abc[0]], to_rhs[abc[1]], to_rhs[abc[2]]) != v)
            return false;
    return true;
}

namespace {

// p_{ab}^c accumulated per pair class, cross-checked on every pair.
struct ClassCounts {
    std::size_t classes = 0;
    std::vector<std::uint64_t> counts; // ((c * K) + a) * K + b
    std::optional<Json> witness;

    std::uint64_t at(std::size_t a, std::size_t b, std::size_t c) const
    {
        return counts[(c * classes + a) * classes + b];
    }
};

ClassCounts count_classes(std::size_t n, std::size_t k, const std::vector<std::size_t>& cls,
                          const std::vector<std::string>& tags, const std::vector<std::string>& names)
{
    ClassCounts out;
    out.classes = k;
    out.counts.assign(k * k * k, 0);
    std::vector<char> have(k, 0);
    std::vector<std::size_t> first_x(k), first_y(k);
    std::vector<std::uint64_t> local(k * k);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::fill(local.begin(), local.end(), 0);
            for (std::size_t z = 0; z < n; ++z)
                ++local[cls[x * n + z] * k + cls[z * n + y]];
            const std::size_t c = cls[x * n + y];
            auto* ref = out.counts.data() + c * k * k;
            if (!have[c]) {
                std::copy(local.begin(), local.end(), ref);
                have[c] = 1;
                first_x[c] = x;
                first_y[c] = y;
                continue;
            }
            for (std::size_t ab = 0; ab < k * k; ++ab)
                if (local[ab] != ref[ab]) {
                    const std::size_t a = ab / k, b = ab % k;
                    out.witness = Json{{"a", tags[a]},
                                       {"b", tags[b]},
                                       {"c", tags[c]},
                                       {"x", names[first_x[c]]},
                                       {"y", names[first_y[c]]},
                                       {"count_xy", ref[ab]},
                                       {"x_prime", names[x]},
                                       {"y_prime", names[y]},
                                       {"count_x_prime_y_prime", local[ab]}};
                    return out;
                }
        }
    return out;
}

IntersectionTensor tensor_from_counts(const ClassCounts& counts, std::vector<std::string> tags)
{
    const std::size_t k = counts.classes;
    std::map<ClassTriple, Rational> entries;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                if (const auto v = counts.at(a, b, c))
                    entries.emplace(ClassTriple{a, b, c}, Rational(v));
    return IntersectionTensor(std::move(tags), std::move(entries));
}

struct AxiomScan {
    Certificate cert{"association scheme axioms"};
    std::optional<ClassCounts> counts;
};

AxiomScan scan_axioms(const SchemeClasses& s)
{
    AxiomScan scan;
    auto& cert = scan.cert;
    const std::size_t n = s.vertex_count();
    const std::size_t k = s.class_count();
    const auto& names = s.vertex_names();

    std::vector<std::size_t> identities;
    for (std::size_t c = 0; c < k; ++c) {
        bool is_identity = true;
        for (std::size_t x = 0; x < n && is_identity; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (s.at(c, x, y) != (x == y ? 1 : 0)) {
                    is_identity = false;
                    break;
                }
        if (is_identity)
            identities.push_back(c);
    }
    if (identities.size() == 1)
        cert.pass("identity", "class '" + s.tag(identities.front()) + "'");
    else
        cert.fail("identity", Json{{"identity_classes", identities.size()}},
                  "expected exactly one class equal to I");

    std::vector<std::size_t> cls(n * n, k);
    std::optional<Json> partition;
    for (std::size_t x = 0; x < n && !partition; ++x)
        for (std::size_t y = 0; y < n && !partition; ++y) {
            std::size_t hits = 0;
            for (std::size_t c = 0; c < k; ++c)
                if (s.at(c, x, y)) {
                    ++hits;
                    cls[x * n + y] = c;
                }
            if (hits != 1)
                partition = Json{{"x", names[x]}, {"y", names[y]}, {"classes_covering", hits}};
        }
    if (partition)
        cert.fail("partition_of_J", *partition, "sum of classes is not J");
    else
        cert.pass("partition_of_J");

    std::optional<Json> symmetric;
    for (std::size_t c = 0; c < k && !symmetric; ++c)
        for (std::size_t x = 0; x < n && !symmetric; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (s.at(c, x, y) != s.at(c, y, x)) {
                    symmetric = Json{{"class", s.tag(c)}, {"x", names[x]}, {"y", names[y]}};
                    break;
                }
    if (symmetric)
        cert.fail("symmetry", *symmetric);
    else
        cert.pass("symmetry");

    if (partition) {
        cert.fail("closure", Json{{"reason", "classes do not partition J"}}, "not evaluated");
        return scan;
    }
    auto counts = count_classes(n, k, cls, s.tags(), names);
    if (counts.witness)
        cert.fail("closure", *counts.witness, "A_a A_b is not constant on the support of A_c");
    else
        cert.pass("closure");
    scan.counts = std::move(counts);
    return scan;
}

} // namespace

Certificate verify_scheme_axioms(const SchemeClasses& s)
{
    return scan_axioms(s).cert;
}

IntersectionTensor intersection_tensor(const SchemeClasses& s)
{
    auto scan = scan_axioms(s);
    if (!scan.cert.passed())
        throw std::invalid_argument("not an association scheme: " + scan.cert.witness().dump());
    return tensor_from_counts(*scan.counts, s.tags());
}

std::vector<RationalMatrix> regular_representation(const IntersectionTensor& t, const std::vector<std::size_t>& generators)
{
    const std::size_t k = t.size();
    std::vector<RationalMatrix> out;
    out.reserve(generators.size());
    for (auto g : generators) {
        if (g >= k)
            throw std::out_of_range("generator index out of range");
        RationalMatrix m(k, k);
        for (const auto& [triple, v] : t.entries())
            if (triple[0] == g)
                m(triple[2], triple[1]) = v;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<RationalMatrix> regular_representation(const IntersectionTensor& t, const std::vector<std::string>& generators)
{
    std::vector<std::size_t> idx;
    for (const auto& g : generators)
        idx.push_back(t.index_of(g));
    return regular_representation(t, idx);
}

RationalVector monomial_coeffs(const std::vector<RationalMatrix>& action, std::size_t classes, std::size_t identity,
                               const MultiIndex& a)
{
    if (a.size() != action.size())
        throw std::invalid_argument("monomial " + a.to_string() + " does not match " + std::to_string(action.size()) +
                                    " generators");
    RationalVector forward(classes), backward(classes);
    forward[identity] = 1;
    backward[identity] = 1;
    for (std::size_t i = 0; i < action.size(); ++i)
        for (int r = 0; r < a[i]; ++r)
            forward = action[i] * forward;
    for (std::size_t i = action.size(); i-- > 0;)
        for (int r = 0; r < a[i]; ++r)
            backward = action[i] * backward;
    if (forward != backward)
        throw std::logic_error("generator actions do not commute for monomial " + a.to_string());
    return forward;
}

RationalVector monomial_coeffs(const IntersectionTensor& t, const std::vector<std::size_t>& generators, const MultiIndex& a)
{
    return monomial_coeffs(regular_representation(t, generators), t.size(), t.identity(), a);
}

MdrgResult mdrg_check(const ColoredGraph& g, const MonomialOrder& order, unsigned threads)
{
    MdrgResult result;
    auto& cert = result.certificate;
    std::optional<DistanceTable> maybe_table;
    try {
        maybe_table = m_distance_table(g, order, threads);
    } catch (const DisconnectedGraph& e) {
        cert.fail("connected", Json{{"source", e.source()}, {"unreachable", e.unreachable()}}, e.what());
        return result;
    }
    DistanceTable table = std::move(*maybe_table);
    cert.pass("connected");

    std::optional<Json> missing;
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto e = MultiIndex::unit(g.m(), i);
        if (!table.contains(e)) {
            missing = Json{{"missing_generator", e.to_string()}, {"color", i + 1}};
            break;
        }
    }
    if (missing)
        cert.fail("generators_in_D", *missing, "some e_i is not an m-distance");
    else
        cert.pass("generators_in_D");

    const std::size_t n = g.vertex_count();
    const std::size_t k = table.labels().size();
    std::vector<std::size_t> cls(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cls[x * n + y] = table.class_of(x, y);
    std::vector<std::string> tags;
    for (const auto& l : table.labels())
        tags.push_back(l.to_string());
    auto counts = count_classes(n, k, cls, tags, g.vertex_names());
    if (counts.witness)
        cert.fail("regularity", *counts.witness, "p_ab^c depends on the pair (x,y)");
    else
        cert.pass("regularity", std::to_string(k) + " m-distances");

    if (cert.passed()) {
        result.scheme = distance_matrices(table, g.vertex_names());
        result.tensor = tensor_from_counts(counts, tags);
    }
    result.table = std::move(table);
    return result;
}

Certificate mdrg_properties(const ColoredGraph& g, const MdrgResult& result, const PropertyOptions& options)
{
    if (!result.passed() || !result.tensor || !result.table || !result.scheme)
        throw std::invalid_argument("property suite requires a passing m-distance-regularity certificate");
    const auto& t = *result.tensor;
    const auto& table = *result.table;
    const auto& order = table.order();
    const auto& labels = table.labels();
    const std::size_t k = labels.size();
    const std::size_t n = g.vertex_count();
    Certificate cert("m-distance-regular graph properties");

    std::optional<Json> triangle;
    for (const auto& [triple, v] : t.entries()) {
        const auto& a = labels[triple[0]];
        const auto& b = labels[triple[1]];
        const auto& c = labels[triple[2]];
        if (!order.less_equal(a, b + c) || !order.less_equal(b, a + c) || !order.less_equal(c, a + b)) {
            triangle = Json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}, {"p", format_rational(v)}};
            break;
        }
    }
    if (triangle)
        cert.fail("triangle", *triangle);
    else
        cert.pass("triangle");

    std::optional<Json> sum_lemma;
    for (std::size_t a = 0; a < k && !sum_lemma; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const auto sum = labels[a] + labels[b];
            if (!table.contains(sum))
                continue;
            const auto c = table.label_index(sum);
            if (t.p(a, b, c) == 0 || t.p(a, c, b) == 0 || t.p(b, c, a) == 0) {
                sum_lemma = Json{{"a", labels[a].to_string()}, {"b", labels[b].to_string()}, {"c", sum.to_string()}};
                break;
            }
        }
    if (sum_lemma)
        cert.fail("sum_lemma", *sum_lemma, "a + b = c in D but an intersection number vanishes");
    else
        cert.pass("sum_lemma");

    if (n <= options.decomposition_vertex_limit) {
        std::optional<Json> decomposition;
        for (std::size_t x = 0; x < n && !decomposition; ++x)
            for (std::size_t y = 0; y < n && !decomposition; ++y) {
                const auto& a = table.at(x, y);
                for (const auto& b : downset_enum(a, PartialOrder(Componentwise{}))) {
                    const auto rest = a - b;
                    bool found = false;
                    for (std::size_t z = 0; z < n && !found; ++z)
                        found = table.at(x, z) == b && table.at(z, y) == rest;
                    if (!found) {
                        decomposition = Json{{"x", g.name(x)}, {"y", g.name(y)}, {"a", a.to_string()}, {"b", b.to_string()}};
                        break;
                    }
                }
            }
        if (decomposition)
            cert.fail("decomposition", *decomposition, "no z with d(x,z) = b and d(z,y) = a - b");
        else
            cert.pass("decomposition", "exhaustive");
    } else {
        cert.pass("decomposition", "skipped: more than " + std::to_string(options.decomposition_vertex_limit) + " vertices");
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, options.max_walk_length));
    std::uniform_int_distribution<int> color(1, static_cast<int>(g.m()));
    std::optional<Json> walks;
    for (std::size_t s = 0; s < options.walk_samples && !walks; ++s) {
        const auto x = vertex(rng), y = vertex(rng);
        std::vector<int> type(length(rng));
        for (auto& c : type)
            c = color(rng);
        auto permuted = type;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        const auto lhs = count_walks_by_type(g, x, y, type);
        const auto rhs = count_walks_by_type(g, x, y, permuted);
        if (lhs != rhs)
            walks = Json{{"x", g.name(x)}, {"y", g.name(y)}, {"type", type}, {"permuted", permuted},
                         {"count", lhs.str()}, {"permuted_count", rhs.str()}};
    }
    if (walks)
        cert.fail("walk_permutation", *walks);
    else
        cert.pass("walk_permutation", std::to_string(options.walk_samples) + " samples");

    if (intersection_tensor(distance_matrices(table, g.vertex_names())) == t)
        cert.pass("tensor_idempotent");
    else
        cert.fail("tensor_idempotent", Json{{"reason", "tensor from distance matrices differs"}});
    return cert;
}

} // namespace mdrg
