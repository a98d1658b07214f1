#pragma once

#include <cstdint>
#include <vector>

namespace lrw {

// The semigroup Gamma_k of all functions [k] -> [k]. Elements are encoded as
// base-k digit strings: element e maps i to digit i of e. The product follows
// word order: (x * y) = "apply x, then y", i.e. y o x, so that evaluating a
// word left to right multiplies letter images left to right.
class GammaK {
public:
    explicit GammaK(int k);

    int k() const { return k_; }
    int size() const { return size_; }

    int compose(int x, int y) const { return table_[(std::size_t)x * size_ + y]; }
    bool idempotent(int x) const { return idem_[x]; }
    int apply(int x, int color) const { return digits_[(std::size_t)x * k_ + color]; }
    int identity() const; // encoding of the identity function

    int encode(const std::vector<int>& f) const;
    std::vector<int> decode(int x) const;

private:
    int k_;
    int size_; // k^k
    std::vector<int> table_;
    std::vector<uint8_t> idem_;
    std::vector<uint8_t> digits_;
};

// Green's relations on the subsemigroup generated by a set of GammaK
// elements; everything is relative to that subsemigroup.
struct SubSemigroup {
    std::vector<int> elements;    // sorted element ids
    std::vector<int> rclass;      // per element index: R-class id
    std::vector<int> lclass;      // L-class id
    std::vector<int> jclass;      // J-class id
    std::vector<uint8_t> is_idem;
    bool is_group = false;

    int index_of(int elem) const; // -1 if absent
    bool contains(int elem) const { return index_of(elem) >= 0; }

    // J-class partial order: true if jclass a strictly below jclass b
    // (every a-element is a two-sided product through b's class).
    std::vector<std::vector<uint8_t>> j_below; // j_below[a][b]: J_a <=_J J_b
    int num_jclasses = 0;
};

SubSemigroup generated_subsemigroup(const GammaK& gk, const std::vector<int>& gens);

} // namespace lrw
