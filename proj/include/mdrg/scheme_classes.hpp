#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mdrg {

/// A family of square 0/1 matrices over a common vertex set, one per class
/// tag. Candidate association scheme until verify_scheme_axioms says otherwise.
///
/// Tags are opaque strings; tags of classes produced from m-distances are
/// MultiIndex strings such as "1,0".
class SchemeClasses {
public:
    SchemeClasses() = default;
    SchemeClasses(std::size_t vertex_count, std::vector<std::string> tags,
                  std::vector<std::vector<std::uint8_t>> matrices,
                  std::vector<std::string> vertex_names = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t class_count() const noexcept { return tags_.size(); }
    const std::vector<std::string>& tags() const noexcept { return tags_; }
    const std::string& tag(std::size_t k) const { return tags_[k]; }
    /// Index of a tag; throws std::out_of_range if absent.
    std::size_t index_of(const std::string& tag) const;

    std::uint8_t at(std::size_t k, std::size_t x, std::size_t y) const { return matrices_[k][x * n_ + y]; }
    const std::vector<std::uint8_t>& matrix(std::size_t k) const { return matrices_[k]; }

    /// Vertex names, defaulting to "0".."n-1".
    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }

    /// Per-row sum of class k at row x.
    std::size_t row_sum(std::size_t k, std::size_t x) const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> tags_;
    std::vector<std::vector<std::uint8_t>> matrices_;
    std::vector<std::string> vertex_names_;
};

} // namespace mdrg
