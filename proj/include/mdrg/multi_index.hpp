#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mdrg {

/// An element of N^m: walk m-lengths, m-distances and scheme labels.
///
/// The built-in operator<=> is plain lexicographic storage order so that
/// MultiIndex can key ordered containers. It is NOT a monomial order; use
/// compare_monomial for that.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zero(std::size_t m);
    /// e_i with a 0-based position.
    static MultiIndex unit(std::size_t m, std::size_t i);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    int total() const noexcept;
    bool is_zero() const noexcept;

    /// Componentwise a_i <= b_i.
    bool componentwise_le(const MultiIndex& other) const;

    MultiIndex operator+(const MultiIndex& other) const;
    /// Throws std::domain_error if the result would leave N^m.
    MultiIndex operator-(const MultiIndex& other) const;
    MultiIndex& operator+=(const MultiIndex& other);

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
    {
        return a.entries_ <=> b.entries_;
    }

    /// "1,0,2"
    std::string to_string() const;
    static MultiIndex parse(std::string_view text);

private:
    std::vector<int> entries_;
};

void require_same_size(const MultiIndex& a, const MultiIndex& b);

} // namespace mdrg
