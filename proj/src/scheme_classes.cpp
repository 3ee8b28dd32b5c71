#include "mdrg/scheme_classes.hpp"

#include <numeric>
#include <stdexcept>

namespace mdrg {

SchemeClasses::SchemeClasses(std::size_t vertex_count, std::vector<std::string> tags,
                             std::vector<std::vector<std::uint8_t>> matrices,
                             std::vector<std::string> vertex_names)
    : n_(vertex_count), tags_(std::move(tags)), matrices_(std::move(matrices)),
      vertex_names_(std::move(vertex_names))
{
    if (tags_.size() != matrices_.size())
        throw std::invalid_argument("scheme has " + std::to_string(tags_.size()) + " tags but " +
                                    std::to_string(matrices_.size()) + " matrices");
    for (std::size_t k = 0; k < matrices_.size(); ++k) {
        if (matrices_[k].size() != n_ * n_)
            throw std::invalid_argument("class '" + tags_[k] + "' is not " + std::to_string(n_) + "x" +
                                        std::to_string(n_));
        for (auto v : matrices_[k])
            if (v > 1)
                throw std::invalid_argument("class '" + tags_[k] + "' has a non 0/1 entry");
    }
    for (std::size_t i = 0; i < tags_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (tags_[i] == tags_[j])
                throw std::invalid_argument("duplicate class tag '" + tags_[i] + "'");
    if (vertex_names_.empty()) {
        vertex_names_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i)
            vertex_names_.push_back(std::to_string(i));
    } else if (vertex_names_.size() != n_) {
        throw std::invalid_argument("vertex name count does not match matrix size");
    }
}

std::size_t SchemeClasses::index_of(const std::string& tag) const
{
    for (std::size_t k = 0; k < tags_.size(); ++k)
        if (tags_[k] == tag)
            return k;
    throw std::out_of_range("unknown class tag '" + tag + "'");
}

std::size_t SchemeClasses::row_sum(std::size_t k, std::size_t x) const
{
    const auto* row = matrices_[k].data() + x * n_;
    return std::accumulate(row, row + n_, std::size_t{0});
}

} // namespace mdrg
