#include "doctest.h"
#include "mdrg/generators.hpp"
#include "mdrg/ppoly.hpp"

using namespace mdrg;

namespace {

const MonomialOrder y2 = MonomialOrder::parse("deglex-y2");
const MonomialOrder sum = MonomialOrder::parse("deglex-sum");

struct Closed {
    Polynomial v11{2}, v20{2}, v02{2};
};

// The closed forms for the generalized 24-cell, x = A_{1,0}, y = A_{0,1}.
Closed closed_forms(const Rational& l, const Rational& s)
{
    const Rational pq = (4 * s - 1) * (4 * s + 1);
    Closed c;
    c.v11.add_term({1, 1}, 1 / pq);
    c.v11.add_term({0, 1}, -1);
    c.v20.add_term({2, 0}, 1 / (2 * pq));
    c.v20.add_term({1, 0}, -2 * (8 * s * s - 1) / pq);
    c.v20.add_term({0, 0}, -1);
    const Rational den = 2 * (l - 1) * s * (4 * s + 1);
    c.v02.add_term({0, 2}, 1 / den);
    c.v02.add_term({0, 1}, -2 * (l - 1) * s * (4 * s - 1) / den);
    c.v02.add_term({1, 0}, -8 * l * s * s / den);
    c.v02.add_term({0, 0}, -16 * l * s * s / den);
    return c;
}

const std::vector<std::pair<Rational, Rational>> params{
    {Rational(2), Rational(1, 2)}, {Rational(2), Rational(3, 4)}, {Rational(3), Rational(1, 2)}, {Rational(3), Rational(3, 4)}};

bool mentions(const Json& w, const std::string& label) { return w.dump().find("\"" + label + "\"") != std::string::npos; }

} // namespace

TEST_CASE("labeling parsing and validation")
{
    const auto l = Labeling::parse("A0=0,0; A2=1,0;A3=0,1;A1=1,1;A4=2,0");
    CHECK(l.m() == 2);
    CHECK(l.tag_of({1, 1}) == "A1");
    CHECK(l.domain() == labeling_ad1().domain());
    CHECK_THROWS(Labeling::parse("A0=0,0;A0=1,0"));
    CHECK_THROWS(Labeling::parse("A0=0,0;A1=0,0"));
    CHECK_THROWS(Labeling::parse("A0"));
    const auto t = gen24cell(Rational(2), Rational(1, 2));
    // Identity must carry o; e_i must be present; every class labeled.
    CHECK_THROWS(certify_ppoly(t, Labeling::parse("A1=0,0;A2=1,0;A3=0,1;A0=1,1;A4=2,0"), y2));
    CHECK_THROWS(certify_ppoly(t, Labeling::parse("A0=0,0;A2=2,1;A3=0,1;A1=1,1;A4=2,0"), y2));
    CHECK_THROWS(certify_ppoly(t, Labeling::parse("A0=0,0;A2=1,0;A3=0,1;A1=1,1"), y2));
}

TEST_CASE("generalized 24-cell: D1 is P-polynomial under deglex-y2")
{
    for (const auto& [l, s] : params) {
        const auto t = gen24cell(l, s);
        CHECK(certify_ppoly(t, labeling_ad1(), y2).passed());
        CHECK(certify_ppoly_refined(t, labeling_ad1(), y2, PartialOrder::parse("ab:1,0")).passed());
        const auto strict = certify_ppoly_refined(t, labeling_ad1(), y2, PartialOrder::parse("ab:0,0"));
        CHECK_FALSE(strict.passed());
        CHECK(strict.witness()["b"] == "1,1");
        CHECK(strict.witness()["a_plus_e_i"] == "0,2");
    }
}

TEST_CASE("generalized 24-cell: D2 fails under deglex-y2 and passes under deglex-sum")
{
    for (const auto& [l, s] : params) {
        const auto t = gen24cell(l, s);
        const auto bad = certify_ppoly(t, labeling_ad2(), y2);
        CHECK_FALSE(bad.passed());
        CHECK_FALSE(bad.find("support_bound")->passed);
        const auto w = bad.witness();
        CHECK(mentions(w, "1,0"));
        CHECK(mentions(w, "0,1"));
        CHECK(mentions(w, "0,2"));
        CHECK(certify_ppoly(t, labeling_ad2(), sum).passed());
        CHECK(boundary_check(t, labeling_ad2(), sum).passed());
    }
}

TEST_CASE("extracted polynomials match the closed forms")
{
    for (const auto& [l, s] : params) {
        const auto t = gen24cell(l, s);
        const auto expected = closed_forms(l, s);
        const auto d1 = extract_polynomials(t, labeling_ad1(), y2);
        REQUIRE(d1.certificate.passed());
        CHECK(d1.polynomials.at({1, 1}) == expected.v11);
        CHECK(d1.polynomials.at({2, 0}) == expected.v20);
        const auto d2 = extract_polynomials(t, labeling_ad2(), sum);
        REQUIRE(d2.certificate.passed());
        CHECK(d2.polynomials.at({0, 2}) == expected.v02);
        CHECK(d2.polynomials.at({2, 0}) == expected.v20);

        // Each v_n evaluated at the generators is A_n.
        for (const auto& [n, v] : d2.polynomials) {
            const auto coords = evaluate_in_class_basis(v, t, labeling_ad2());
            for (std::size_t k = 0; k < t.size(); ++k)
                CHECK(coords[k] == (t.tag(k) == labeling_ad2().tag_of(n) ? 1 : 0));
        }

        CHECK(verify_recurrences(d1.polynomials, t, labeling_ad1(), y2).passed());
        CHECK(verify_recurrences(d1.polynomials, t, labeling_ad1(), PartialOrder::parse("ab:1,0")).passed());
        CHECK(verify_recurrences(d2.polynomials, t, labeling_ad2(), sum).passed());
    }
}

TEST_CASE("extraction restricted by a partial order")
{
    const auto t = gen24cell(Rational(2), Rational(1, 2));
    const auto r = extract_polynomials(t, labeling_ad1(), y2, PartialOrder::parse("ab:1,0"));
    CHECK(r.certificate.passed());
    CHECK(r.polynomials.at({1, 1}) == closed_forms(Rational(2), Rational(1, 2)).v11);
}

TEST_CASE("a corrupted polynomial breaks the recurrences")
{
    const auto t = gen24cell(Rational(2), Rational(1, 2));
    auto polys = extract_polynomials(t, labeling_ad1(), y2).polynomials;
    polys.at({1, 1}).add_term({0, 0}, 1);
    const auto cert = verify_recurrences(polys, t, labeling_ad1(), y2);
    CHECK_FALSE(cert.passed());
    CHECK(cert.witness().contains("monomial"));
    polys.erase({1, 1});
    CHECK_THROWS(verify_recurrences(polys, t, labeling_ad1(), y2));
}

TEST_CASE("refined certification needs a compatible pair")
{
    const auto t = gen24cell(Rational(2), Rational(1, 2));
    CHECK_THROWS_AS(certify_ppoly_refined(t, labeling_ad2(), sum, PartialOrder::parse("ab:1,0")), std::invalid_argument);
}

TEST_CASE("type (alpha,beta) certification and regions")
{
    for (const auto& [l, s] : params) {
        const auto t = gen24cell(l, s);
        CHECK(certify_type_ab(t, labeling_ad1(), AlphaBeta(Rational(0), Rational(0))).passed());
        const auto r1 = ab_region_for_scheme(t, labeling_ad1());
        CHECK(r1.alpha.to_string() == "[0, 1]");
        CHECK(r1.beta.to_string() == "[0, 1)");
        const auto r2 = ab_region_for_scheme(t, labeling_ad2());
        CHECK(r2.alpha.to_string() == "[1/2, 1)");
        CHECK(r2.beta.to_string() == "[0, 1)");
        CHECK(certify_type_ab(t, labeling_ad2(), AlphaBeta(Rational(1, 2), Rational(0))).passed());
        const auto low = certify_type_ab(t, labeling_ad2(), AlphaBeta(Rational(1, 4), Rational(0)));
        CHECK_FALSE(low.passed());
        CHECK_FALSE(low.find("support_precedence")->passed);
        CHECK_FALSE(certify_type_ab(t, labeling_ad2(), AlphaBeta(Rational(1), Rational(0))).passed());
    }
}

TEST_CASE("region membership agrees with pointwise certification")
{
    const auto t = gen24cell(Rational(2), Rational(1, 2));
    for (const auto& labeling : {labeling_ad1(), labeling_ad2()}) {
        const auto region = ab_region_for_scheme(t, labeling);
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const Rational a(i, 8), b(j, 8);
                CHECK(region.contains(a, b) == certify_type_ab(t, labeling, AlphaBeta(a, b)).passed());
            }
    }
    const auto c5 = mdrg_check(cycle(5), MonomialOrder::parse("lex")).tensor.value();
    CHECK_THROWS(certify_type_ab(c5, Labeling::from_tags(c5), AlphaBeta(Rational(0), Rational(0))));
}

TEST_CASE("univariate P-polynomial regression")
{
    const auto lex = MonomialOrder::parse("lex");
    for (const auto& g : {cycle(6), complete(5), hamming_graph(3, 2)}) {
        const auto result = mdrg_check(g, lex);
        REQUIRE(result.passed());
        const auto& t = *result.tensor;
        const auto labeling = Labeling::from_tags(t);
        CHECK(certify_ppoly(t, labeling, lex).passed());
        const auto extracted = extract_polynomials(t, labeling, lex);
        REQUIRE(extracted.certificate.passed());
        for (const auto& [n, v] : extracted.polynomials) {
            // v_n has degree exactly n.
            CHECK(v.coefficient(n) != 0);
            for (const auto& [mono, c] : v.terms())
                CHECK(mono[0] <= n[0]);
        }
        CHECK(verify_recurrences(extracted.polynomials, t, labeling, lex).passed());
    }
}

TEST_CASE("labeling discovery")
{
    const auto cell = mdrg_check(cell24(), sum);
    REQUIRE(cell.passed());
    const auto& scheme = *cell.scheme;
    CHECK(discover_labelings(scheme, 1, MonomialOrder::parse("lex")).empty());
    const auto found = discover_labelings(scheme, 2, sum);
    REQUIRE_FALSE(found.empty());
    bool has_distance_labels = false;
    for (const auto& d : found) {
        CHECK(d.certificate.passed());
        if (d.generators == std::vector<std::string>{"1,0", "0,1"})
            has_distance_labels = d.labeling.by_tag().at("0,2") == MultiIndex{0, 2};
    }
    CHECK(has_distance_labels);

    const auto k4 = mdrg_check(complete(4), MonomialOrder::parse("lex"));
    const auto trivial = discover_labelings(*k4.scheme, 1, MonomialOrder::parse("lex"));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].labeling.by_tag().at("1") == MultiIndex{1});
}
