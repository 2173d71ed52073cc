#include "rearr/multi_index.hpp"

#include <algorithm>
#include <limits>

#include "rearr/error.hpp"

namespace rearr {

MultiIndex::MultiIndex(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw error(errc::invalid_index, "multi-index must have dimension >= 1");
}

MultiIndex::MultiIndex(std::initializer_list<std::int64_t> entries)
    : MultiIndex(std::vector<std::int64_t>(entries)) {}

MultiIndex MultiIndex::filled(int dim, std::int64_t value) {
    if (dim < 1)
        throw error(errc::invalid_index, "multi-index must have dimension >= 1");
    return MultiIndex(std::vector<std::int64_t>(static_cast<std::size_t>(dim), value));
}

std::int64_t MultiIndex::min_entry() const {
    return *std::min_element(entries_.begin(), entries_.end());
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (dim() != other.dim())
        throw error(errc::invalid_index, "dimension mismatch in multi-index arithmetic");
    std::vector<std::int64_t> out(entries_);
    for (int j = 0; j < dim(); ++j) out[static_cast<std::size_t>(j)] += other[j];
    return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
    if (dim() != other.dim())
        throw error(errc::invalid_index, "dimension mismatch in multi-index arithmetic");
    std::vector<std::int64_t> out(entries_);
    for (int j = 0; j < dim(); ++j) out[static_cast<std::size_t>(j)] -= other[j];
    return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
    std::string out;
    for (int j = 0; j < dim(); ++j) {
        if (j > 0) out += 'x';
        out += std::to_string((*this)[j]);
    }
    return out;
}

bool componentwise_le(const MultiIndex& h, const MultiIndex& k) {
    if (h.dim() != k.dim())
        throw error(errc::invalid_index, "dimension mismatch in multi-index comparison");
    for (int j = 0; j < h.dim(); ++j)
        if (h[j] > k[j]) return false;
    return true;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

std::int64_t product_count(const MultiIndex& n) {
    std::int64_t prod = 1;
    for (int j = 0; j < n.dim(); ++j) {
        if (n[j] < 1)
            throw error(errc::invalid_index,
                        "product_count requires all entries >= 1, got " + n.to_string());
        if (n[j] != 0 && prod > std::numeric_limits<std::int64_t>::max() / n[j])
            throw error(errc::invalid_index, "product_count overflow for " + n.to_string());
        prod *= n[j];
    }
    return prod;
}

IndexRange::IndexRange(MultiIndex low, MultiIndex high)
    : low_(std::move(low)), high_(std::move(high)) {
    if (low_.dim() != high_.dim())
        throw error(errc::invalid_index, "index range bounds have different dimensions");
    if (!componentwise_le(low_, high_))
        throw error(errc::invalid_index, "index range requires low <= high componentwise");
    count_ = product_count(high_ - low_ + MultiIndex::ones(low_.dim()));
}

bool IndexRange::contains(const MultiIndex& i) const {
    return i.dim() == dim() && componentwise_le(low_, i) && componentwise_le(i, high_);
}

MultiIndex IndexRange::at(std::int64_t k) const {
    if (k < 0 || k >= count_)
        throw error(errc::invalid_index, "index range position out of bounds");
    const int d = dim();
    std::vector<std::int64_t> out(static_cast<std::size_t>(d));
    // mixed-radix decomposition, last coordinate fastest
    for (int j = d - 1; j >= 0; --j) {
        const std::int64_t extent = high_[j] - low_[j] + 1;
        out[static_cast<std::size_t>(j)] = low_[j] + k % extent;
        k /= extent;
    }
    return MultiIndex(std::move(out));
}

std::int64_t IndexRange::rank(const MultiIndex& i) const {
    if (!contains(i))
        throw error(errc::invalid_index, "index " + i.to_string() + " outside range");
    std::int64_t k = 0;
    for (int j = 0; j < dim(); ++j) {
        const std::int64_t extent = high_[j] - low_[j] + 1;
        k = k * extent + (i[j] - low_[j]);
    }
    return k;
}

IndexRange::iterator::iterator(const IndexRange* range, std::int64_t k) : range_(range), k_(k) {
    if (k_ < range_->count()) current_ = range_->at(k_);
}

IndexRange::iterator& IndexRange::iterator::operator++() {
    ++k_;
    if (k_ >= range_->count()) return *this;
    // increment in place, last coordinate fastest
    for (int j = range_->dim() - 1; j >= 0; --j) {
        if (current_[j] < range_->high()[j]) {
            ++current_[j];
            return *this;
        }
        current_[j] = range_->low()[j];
    }
    return *this;
}

std::vector<MultiIndex> lex_iterate(const IndexRange& range) {
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(range.count()));
    for (const MultiIndex& i : range) out.push_back(i);
    return out;
}

} // namespace rearr
