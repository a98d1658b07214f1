#include "lrw/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace lrw {

void BitVec::operator^=(const BitVec& o) {
    if (len != o.len) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
}

BitVec BitVec::operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

bool BitVec::any() const {
    for (uint64_t x : w)
        if (x) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t s = 0;
    for (uint64_t x : w) s += std::popcount(x);
    return s;
}

std::size_t BitVec::first_set() const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return (i << 6) + std::countr_zero(w[i]);
    return len;
}

void BitVec::mask_and(const BitVec& o) {
    if (len != o.len) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
}

void BitVec::mask_andnot(const BitVec& o) {
    if (len != o.len) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
}

void BitVec::keep_above(std::size_t t) {
    // zero positions 0..t
    std::size_t word = t >> 6, bit = t & 63;
    for (std::size_t i = 0; i < word && i < w.size(); ++i) w[i] = 0;
    if (word < w.size()) {
        uint64_t keep = (bit == 63) ? 0 : ~uint64_t(0) << (bit + 1);
        w[word] &= keep;
    }
}

void BitVec::set_range(std::size_t a, std::size_t b) {
    if (a >= b) return;
    std::size_t wa = a >> 6, wb = (b - 1) >> 6;
    uint64_t first = ~uint64_t(0) << (a & 63);
    uint64_t last = ((b - 1) & 63) == 63 ? ~uint64_t(0)
                                         : ((uint64_t(1) << (((b - 1) & 63) + 1)) - 1);
    if (wa == wb) {
        w[wa] |= first & last;
        return;
    }
    w[wa] |= first;
    for (std::size_t i = wa + 1; i < wb; ++i) w[i] = ~uint64_t(0);
    w[wb] |= last;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        uint64_t x = w[i];
        while (x) {
            out.push_back((i << 6) + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

void Gf2Basis::reduce(BitVec& v, BitVec* used) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
            if (used) *used ^= combos_[i];
        }
    }
}

bool Gf2Basis::insert(const BitVec& v, uint32_t tag) {
    if (v.len != veclen_) throw std::invalid_argument("Gf2Basis length mismatch");
    BitVec r = v;
    BitVec used;
    if (track_) {
        used = BitVec(tags_.size());
        reduce(r, &used);
    } else {
        reduce(r, nullptr);
    }
    if (!r.any()) return false;

    std::size_t piv = r.first_set();
    // new row corresponds to (originals used during reduction) + v itself
    BitVec combo;
    if (track_) {
        combo = BitVec(tags_.size() + 1);
        for (std::size_t i = 0; i < used.len && i < combo.len; ++i)
            if (used.get(i)) combo.set(i);
        combo.set(tags_.size());
        // widen existing combos to the new insertion count
        for (auto& c : combos_) {
            BitVec wide(tags_.size() + 1);
            for (std::size_t i = 0; i < c.len; ++i)
                if (c.get(i)) wide.set(i);
            c = std::move(wide);
        }
    }
    tags_.push_back(tag);

    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + at, std::move(r));
    pivots_.insert(pivots_.begin() + at, piv);
    if (track_) combos_.insert(combos_.begin() + at, std::move(combo));
    return true;
}

std::optional<std::vector<uint32_t>> Gf2Basis::express(const BitVec& v) const {
    if (!track_) throw std::logic_error("Gf2Basis::express requires combo tracking");
    if (v.len != veclen_) throw std::invalid_argument("Gf2Basis length mismatch");
    BitVec r = v;
    BitVec used(tags_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            for (std::size_t j = 0; j < combos_[i].len; ++j)
                if (combos_[i].get(j)) used.w[j >> 6] ^= uint64_t(1) << (j & 63);
        }
    }
    if (r.any()) return std::nullopt;
    std::vector<uint32_t> out;
    for (std::size_t j = 0; j < tags_.size(); ++j)
        if (used.get(j)) out.push_back(tags_[j]);
    return out;
}

bool Gf2Basis::contains(const BitVec& v) const {
    if (v.len != veclen_) throw std::invalid_argument("Gf2Basis length mismatch");
    BitVec r = v;
    reduce(r, nullptr);
    return !r.any();
}

} // namespace lrw
