#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace lrw {

// Fixed-length bit vector over GF(2). Bits at positions >= len are kept zero.
struct BitVec {
    std::size_t len = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t n) : len(n), w((n + 63) / 64, 0) {}

    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(std::size_t i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    void operator^=(const BitVec& o);
    BitVec operator^(const BitVec& o) const;
    bool operator==(const BitVec& o) const { return len == o.len && w == o.w; }

    bool any() const;
    std::size_t count() const;
    // Index of the lowest set bit, or len if none.
    std::size_t first_set() const;

    // this &= o
    void mask_and(const BitVec& o);
    // this &= ~o
    void mask_andnot(const BitVec& o);
    // Keep only bits at positions > t (drop positions 0..t).
    void keep_above(std::size_t t);
    // Set every bit in [a, b).
    void set_range(std::size_t a, std::size_t b);

    std::vector<std::size_t> ones() const;
};

// Row-echelon basis over GF(2) with increasing pivot positions.
// Rows are independent; each successful insert carries a caller tag.
// With combination tracking enabled, each row remembers which inserted
// originals it is a sum of, so members of span(basis) can be expressed
// as a subset of the inserted tags.
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t veclen, bool track_combos = false)
        : veclen_(veclen), track_(track_combos) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t veclen() const { return veclen_; }
    const std::vector<uint32_t>& tags() const { return tags_; }

    // Inserts v if independent of the current span; returns true on insert.
    bool insert(const BitVec& v, uint32_t tag);

    // If v lies in the span, returns the tags of the unique subset of
    // inserted vectors summing to v. Requires combo tracking.
    std::optional<std::vector<uint32_t>> express(const BitVec& v) const;

    // True if v is in the span of the basis.
    bool contains(const BitVec& v) const;

private:
    std::size_t veclen_;
    bool track_;
    std::vector<BitVec> rows_;        // echelon order, pivots ascending
    std::vector<std::size_t> pivots_;
    std::vector<BitVec> combos_;      // combos_[i] over insertion indices
    std::vector<uint32_t> tags_;      // tag per successful insert, insertion order

    // Reduces v in place; fills used (insertion-index bits) when tracking.
    void reduce(BitVec& v, BitVec* used) const;
};

} // namespace lrw
