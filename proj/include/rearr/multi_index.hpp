#ifndef REARR_MULTI_INDEX_HPP
#define REARR_MULTI_INDEX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rearr {

/// A d-dimensional integer index. Indices into grids are 1-based, so that
/// i = 1,...,n enumerates the cells of an n-subdivision without offset
/// arithmetic.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::int64_t> entries);
    MultiIndex(std::initializer_list<std::int64_t> entries);

    static MultiIndex filled(int dim, std::int64_t value);
    static MultiIndex ones(int dim) { return filled(dim, 1); }

    int dim() const { return static_cast<int>(entries_.size()); }
    std::int64_t operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    std::int64_t& operator[](int j) { return entries_[static_cast<std::size_t>(j)]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    std::int64_t min_entry() const;

    MultiIndex operator+(const MultiIndex& other) const;
    MultiIndex operator-(const MultiIndex& other) const;

    bool operator==(const MultiIndex& other) const = default;

    /// "3x4x2" (used in CSV columns and report labels).
    std::string to_string() const;

  private:
    std::vector<std::int64_t> entries_;
};

/// Componentwise h <= k. This is the paper-style partial order, not the
/// lexicographic one.
bool componentwise_le(const MultiIndex& h, const MultiIndex& k);

/// Strict lexicographic order (total), used only to state ordering properties.
bool lex_less(const MultiIndex& a, const MultiIndex& b);

/// N(n) = prod_j n_j. Throws invalid-index if any entry < 1.
std::int64_t product_count(const MultiIndex& n);

/// Inclusive index range {low,...,high} in lexicographic order with the last
/// coordinate varying fastest.
class IndexRange {
  public:
    IndexRange(MultiIndex low, MultiIndex high);

    const MultiIndex& low() const { return low_; }
    const MultiIndex& high() const { return high_; }
    int dim() const { return low_.dim(); }
    std::int64_t count() const { return count_; }

    bool contains(const MultiIndex& i) const;

    /// k-th index of the range in lexicographic order, k = 0..count()-1.
    MultiIndex at(std::int64_t k) const;
    /// Inverse of at(). Throws invalid-index if i is outside the range.
    std::int64_t rank(const MultiIndex& i) const;

    class iterator {
      public:
        iterator() = default;
        iterator(const IndexRange* range, std::int64_t k);

        const MultiIndex& operator*() const { return current_; }
        const MultiIndex* operator->() const { return &current_; }
        iterator& operator++();
        bool operator==(const iterator& other) const { return k_ == other.k_; }
        std::int64_t rank() const { return k_; }

      private:
        const IndexRange* range_ = nullptr;
        std::int64_t k_ = 0;
        MultiIndex current_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, count_); }

  private:
    MultiIndex low_;
    MultiIndex high_;
    std::int64_t count_ = 0;
};

/// Materializes the whole range in order. Prefer range-for over IndexRange
/// when the sequence is large.
std::vector<MultiIndex> lex_iterate(const IndexRange& range);

} // namespace rearr

#endif
