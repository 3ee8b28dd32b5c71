#pragma once

#include <map>
#include <string>

#include "mdrg/certificate.hpp"
#include "mdrg/multi_index.hpp"
#include "mdrg/orders.hpp"
#include "mdrg/rational.hpp"

namespace mdrg {

/// Sparse m-variate polynomial with exact rational coefficients, keyed by
/// exponent vector. Zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t m) : m_(m) {}

    std::size_t m() const noexcept { return m_; }
    const std::map<MultiIndex, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(const MultiIndex& a) const;
    void add_term(const MultiIndex& a, const Rational& coef);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial operator*(const Rational& scalar) const;
    /// x_i * this, 0-based variable index.
    Polynomial times_variable(std::size_t i) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, variables x,y for m = 2 and x1..xm otherwise;
    /// terms in descending `order`.
    std::string to_string(const MonomialOrder& order) const;
    /// {"n": ..., "terms": [{"a": "1,1", "coef": "1/3"}, ...]}, leading term first.
    Json to_json(const MultiIndex& n, const MonomialOrder& order) const;

private:
    std::size_t m_ = 0;
    std::map<MultiIndex, Rational> terms_;
};

} // namespace mdrg
