#include "lrw/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrw {

GammaK::GammaK(int k) : k_(k) {
    if (k < 1 || k > 4) throw std::invalid_argument("GammaK: k in 1..4 supported");
    size_ = 1;
    for (int i = 0; i < k; ++i) size_ *= k;
    digits_.resize((std::size_t)size_ * k_);
    for (int x = 0; x < size_; ++x) {
        int v = x;
        for (int i = 0; i < k_; ++i) {
            digits_[(std::size_t)x * k_ + i] = (uint8_t)(v % k_);
            v /= k_;
        }
    }
    table_.resize((std::size_t)size_ * size_);
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y) {
            // (x * y)(i) = y(x(i)): apply x first
            int enc = 0, pw = 1;
            for (int i = 0; i < k_; ++i) {
                enc += apply(y, apply(x, i)) * pw;
                pw *= k_;
            }
            table_[(std::size_t)x * size_ + y] = enc;
        }
    idem_.resize(size_);
    for (int x = 0; x < size_; ++x) idem_[x] = compose(x, x) == x;
}

int GammaK::identity() const {
    std::vector<int> f(k_);
    for (int i = 0; i < k_; ++i) f[i] = i;
    return encode(f);
}

int GammaK::encode(const std::vector<int>& f) const {
    if ((int)f.size() != k_) throw std::invalid_argument("GammaK::encode: bad arity");
    int enc = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
        if (f[i] < 0 || f[i] >= k_) throw std::invalid_argument("GammaK::encode: bad image");
        enc += f[i] * pw;
        pw *= k_;
    }
    return enc;
}

std::vector<int> GammaK::decode(int x) const {
    std::vector<int> f(k_);
    for (int i = 0; i < k_; ++i) f[i] = apply(x, i);
    return f;
}

int SubSemigroup::index_of(int elem) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), elem);
    if (it == elements.end() || *it != elem) return -1;
    return (int)(it - elements.begin());
}

namespace {

// classes from a reachability relation: x ~ y iff reach[x][y] and reach[y][x]
std::vector<int> classes_of(const std::vector<std::vector<uint8_t>>& reach) {
    int n = (int)reach.size();
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (cls[i] != -1) continue;
        cls[i] = next;
        for (int j = i + 1; j < n; ++j)
            if (cls[j] == -1 && reach[i][j] && reach[j][i]) cls[j] = next;
        ++next;
    }
    return cls;
}

} // namespace

SubSemigroup generated_subsemigroup(const GammaK& gk, const std::vector<int>& gens) {
    SubSemigroup s;
    // closure
    std::vector<uint8_t> in(gk.size(), 0);
    std::vector<int> queue;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            queue.push_back(g);
        }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int g : gens) {
            int p = gk.compose(queue[i], g);
            if (!in[p]) {
                in[p] = 1;
                queue.push_back(p);
            }
            p = gk.compose(g, queue[i]);
            if (!in[p]) {
                in[p] = 1;
                queue.push_back(p);
            }
        }
    s.elements = queue;
    std::sort(s.elements.begin(), s.elements.end());
    const int n = (int)s.elements.size();

    std::vector<int> uniq_gens;
    for (int g : gens)
        if (std::find(uniq_gens.begin(), uniq_gens.end(), g) == uniq_gens.end())
            uniq_gens.push_back(g);

    // reachability under one-sided multiplication (x <=_R y iff x in y S^1);
    // BFS from each element, stepping by generators
    enum class Side { right, left, both };
    auto reach_from = [&](int start_idx, Side side) {
        std::vector<uint8_t> seen(n, 0);
        std::vector<int> q{start_idx};
        seen[start_idx] = 1;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int y = s.elements[q[h]];
            for (int g : uniq_gens) {
                int prods[2] = {gk.compose(y, g), gk.compose(g, y)};
                for (int which = 0; which < 2; ++which) {
                    if (side == Side::right && which == 1) continue;
                    if (side == Side::left && which == 0) continue;
                    int idx = s.index_of(prods[which]);
                    if (idx >= 0 && !seen[idx]) {
                        seen[idx] = 1;
                        q.push_back(idx);
                    }
                }
            }
        }
        return seen;
    };
    std::vector<std::vector<uint8_t>> rreach(n), lreach(n), jreach(n);
    for (int i = 0; i < n; ++i) {
        rreach[i] = reach_from(i, Side::right);
        lreach[i] = reach_from(i, Side::left);
        jreach[i] = reach_from(i, Side::both);
    }
    s.rclass = classes_of(rreach);
    s.lclass = classes_of(lreach);
    s.jclass = classes_of(jreach);
    s.num_jclasses = n == 0 ? 0 : *std::max_element(s.jclass.begin(), s.jclass.end()) + 1;

    s.j_below.assign(s.num_jclasses, std::vector<uint8_t>(s.num_jclasses, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (jreach[i][j]) s.j_below[s.jclass[j]][s.jclass[i]] = 1;

    s.is_idem.resize(n);
    for (int i = 0; i < n; ++i) s.is_idem[i] = gk.idempotent(s.elements[i]);

    // a finite semigroup is a group iff it has one R-class and one L-class
    s.is_group = n > 0;
    for (int i = 0; i < n; ++i)
        if (s.rclass[i] != s.rclass[0] || s.lclass[i] != s.lclass[0]) s.is_group = false;
    return s;
}

} // namespace lrw
