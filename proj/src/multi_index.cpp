#include "mdrg/multi_index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mdrg {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    if (std::any_of(entries_.begin(), entries_.end(), [](int v) { return v < 0; }))
        throw std::domain_error("multi-index entries must be non-negative");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(std::size_t m)
{
    return MultiIndex(std::vector<int>(m, 0));
}

MultiIndex MultiIndex::unit(std::size_t m, std::size_t i)
{
    if (i >= m)
        throw std::out_of_range("unit index out of range");
    std::vector<int> v(m, 0);
    v[i] = 1;
    return MultiIndex(std::move(v));
}

int MultiIndex::total() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool MultiIndex::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

bool MultiIndex::componentwise_le(const MultiIndex& other) const
{
    require_same_size(*this, other);
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const
{
    MultiIndex out = *this;
    out += other;
    return out;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other)
{
    require_same_size(*this, other);
    for (std::size_t i = 0; i < size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const
{
    require_same_size(*this, other);
    std::vector<int> v(size());
    for (std::size_t i = 0; i < size(); ++i) {
        v[i] = entries_[i] - other.entries_[i];
        if (v[i] < 0)
            throw std::domain_error("multi-index subtraction leaves N^m: " + to_string() + " - " +
                                    other.to_string());
    }
    return MultiIndex(std::move(v));
}

std::string MultiIndex::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

MultiIndex MultiIndex::parse(std::string_view text)
{
    std::vector<int> v;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                         : comma - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < 0)
            throw std::invalid_argument("malformed multi-index '" + std::string(text) + "'");
        v.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return MultiIndex(std::move(v));
}

void require_same_size(const MultiIndex& a, const MultiIndex& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch: " + a.to_string() + " vs " + b.to_string());
}

} // namespace mdrg
