#include "mdrg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mdrg {

Rational Polynomial::coefficient(const MultiIndex& a) const
{
    const auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& a, const Rational& coef)
{
    if (a.size() != m_)
        throw std::invalid_argument("monomial " + a.to_string() + " does not have " + std::to_string(m_) + " variables");
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.emplace(a, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [a, c] : other.terms_)
        add_term(a, c);
    return *this;
}

Polynomial Polynomial::operator*(const Rational& scalar) const
{
    Polynomial out(m_);
    if (scalar == 0)
        return out;
    for (const auto& [a, c] : terms_)
        out.terms_.emplace(a, c * scalar);
    return out;
}

Polynomial Polynomial::times_variable(std::size_t i) const
{
    const auto shift = MultiIndex::unit(m_, i);
    Polynomial out(m_);
    for (const auto& [a, c] : terms_)
        out.terms_.emplace(a + shift, c);
    return out;
}

namespace {

std::vector<std::pair<MultiIndex, Rational>> descending(const std::map<MultiIndex, Rational>& terms,
                                                        const MonomialOrder& order)
{
    std::vector<std::pair<MultiIndex, Rational>> out(terms.begin(), terms.end());
    std::sort(out.begin(), out.end(), [&order](const auto& l, const auto& r) { return order.less(r.first, l.first); });
    return out;
}

std::string monomial_text(const MultiIndex& a)
{
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += a.size() == 2 ? std::string(i == 0 ? "x" : "y") : "x" + std::to_string(i + 1);
        if (a[i] > 1)
            out += "^" + std::to_string(a[i]);
    }
    return out;
}

} // namespace

std::string Polynomial::to_string(const MonomialOrder& order) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [a, c] : descending(terms_, order)) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string coef = is_integer(mag) ? boost::multiprecision::numerator(mag).str() : format_rational(mag);
        if (a.is_zero())
            out += coef;
        else if (mag == 1)
            out += monomial_text(a);
        else
            out += coef + "*" + monomial_text(a);
    }
    return out;
}

Json Polynomial::to_json(const MultiIndex& n, const MonomialOrder& order) const
{
    Json terms = Json::array();
    for (const auto& [a, c] : descending(terms_, order))
        terms.push_back(Json{{"a", a.to_string()}, {"coef", format_rational(c)}});
    return Json{{"n", n.to_string()}, {"terms", std::move(terms)}};
}

} // namespace mdrg
