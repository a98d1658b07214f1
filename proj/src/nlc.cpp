#include "lrw/nlc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lrw {

void validate_expression(const NlcExpression& alpha) {
    if (alpha.k < 1) throw std::invalid_argument("expression width must be >= 1");
    if (alpha.letters.empty()) throw std::invalid_argument("empty expression");
    if (alpha.k > 31) throw std::invalid_argument("expression width capped at 31");
    std::set<int> vs;
    for (const auto& a : alpha.letters) {
        if (!vs.insert(a.v).second)
            throw std::invalid_argument("inadmissible expression: repeated v-value");
        if (a.c < 0 || a.c >= alpha.k)
            throw std::invalid_argument("letter color out of range");
        if (a.e >> alpha.k)
            throw std::invalid_argument("letter e-set out of range");
        if ((int)a.r.size() != alpha.k)
            throw std::invalid_argument("letter recoloring has wrong arity");
        for (int img : a.r)
            if (img < 0 || img >= alpha.k)
                throw std::invalid_argument("letter recoloring image out of range");
    }
}

NlcEval eval_nlc(const NlcExpression& alpha) {
    validate_expression(alpha);
    const int n = (int)alpha.letters.size();
    NlcEval out;
    out.graph.n = n;
    out.graph.adj.assign(n, BitVec(n));
    out.vlabels.resize(n);
    out.colors.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& a = alpha.letters[i];
        out.vlabels[i] = a.v;
        for (int w = 0; w < i; ++w)
            if (a.e & (uint32_t(1) << out.colors[w])) {
                out.graph.adj[i].set(w);
                out.graph.adj[w].set(i);
            }
        out.colors[i] = a.c;
        for (int w = 0; w <= i; ++w) out.colors[w] = a.r[out.colors[w]];
    }
    return out;
}

NlcExpression nlc_from_order(const OrderedGraph& og) {
    const int n = og.n();
    if (n == 0) throw std::invalid_argument("nlc_from_order: empty graph");
    std::vector<BitVec> rows(n);
    for (int p = 0; p < n; ++p) rows[p] = og.adj_at(p);

    // slot = color in use; each slot carries the common future neighborhood
    // of its members
    struct Step {
        int c;
        std::vector<int> e;            // slots adjacent to the new vertex
        std::vector<std::pair<int, int>> merges; // slot -> slot after this letter
    };
    std::vector<Step> steps(n);
    std::map<int, BitVec> slots; // slot id -> future neighborhood (positions > t)
    int max_slot = 0;

    for (int t = 0; t < n; ++t) {
        // e: slots whose vectors contain position t (colors before insertion)
        auto& st = steps[t];
        for (auto& [s, vec] : slots)
            if (vec.get(t)) st.e.push_back(s);
        // advance horizon to t: drop bit t everywhere
        for (auto& [s, vec] : slots) vec.clear(t);
        BitVec mine = rows[t];
        mine.keep_above(t);
        // reuse the color of a class the new vertex falls into, else open one
        int c = -1;
        for (auto& [s, vec] : slots)
            if (vec == mine) {
                c = s;
                break;
            }
        if (c == -1) {
            c = 0;
            while (slots.count(c)) ++c;
            slots.emplace(c, mine);
        }
        st.c = c;
        max_slot = std::max(max_slot, c);
        // merge old classes that collapsed when bit t was dropped
        std::map<int, int> target; // slot -> representative
        for (auto it = slots.begin(); it != slots.end(); ++it)
            for (auto jt = slots.begin(); jt != it; ++jt)
                if (jt->second == it->second) {
                    target[it->first] = jt->first;
                    break;
                }
        for (auto& [from, to] : target) {
            st.merges.emplace_back(from, to);
            slots.erase(from);
        }
    }

    const int k = max_slot + 1;
    NlcExpression alpha;
    alpha.k = k;
    alpha.letters.resize(n);
    for (int t = 0; t < n; ++t) {
        auto& a = alpha.letters[t];
        a.v = og.order[t];
        a.c = steps[t].c;
        a.e = 0;
        for (int s : steps[t].e) a.e |= uint32_t(1) << s;
        a.r.resize(k);
        for (int i = 0; i < k; ++i) a.r[i] = i;
        for (auto [from, to] : steps[t].merges) a.r[from] = to;
    }
    validate_expression(alpha);
    return alpha;
}

NlcExpression random_nlc(int n, int k, uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("random_nlc: n, k >= 1");
    if (k > 31) throw std::invalid_argument("random_nlc: k capped at 31");
    // splitmix64; stable across platforms
    uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    NlcExpression alpha;
    alpha.k = k;
    alpha.letters.resize(n);
    for (int i = 0; i < n; ++i) {
        auto& a = alpha.letters[i];
        a.v = i;
        a.c = (int)(next() % (uint64_t)k);
        a.e = (uint32_t)(next() & ((uint64_t(1) << k) - 1));
        a.r.resize(k);
        for (int j = 0; j < k; ++j) a.r[j] = (int)(next() % (uint64_t)k);
    }
    return alpha;
}

std::string expression_to_text(const NlcExpression& alpha) {
    std::ostringstream ss;
    for (const auto& a : alpha.letters) {
        ss << a.v << " " << a.c << " e={";
        bool first = true;
        for (int i = 0; i < alpha.k; ++i)
            if (a.e & (uint32_t(1) << i)) {
                if (!first) ss << ",";
                ss << i;
                first = false;
            }
        ss << "} r=[";
        for (int i = 0; i < alpha.k; ++i) {
            if (i) ss << ",";
            ss << a.r[i];
        }
        ss << "]\n";
    }
    return ss.str();
}

NlcExpression expression_from_text(const std::string& text) {
    NlcExpression alpha;
    alpha.k = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        NlcLetter a;
        if (!(ls >> a.v >> a.c)) {
            std::string probe;
            std::istringstream check(line);
            if (!(check >> probe)) continue; // blank line
            throw std::invalid_argument("bad expression line: " + line);
        }
        std::string tok;
        if (!(ls >> tok) || tok.rfind("e={", 0) != 0)
            throw std::invalid_argument("expected e={...} in: " + line);
        std::string inner = tok.substr(3);
        if (inner.empty() || inner.back() != '}')
            throw std::invalid_argument("unterminated e-set in: " + line);
        inner.pop_back();
        if (!inner.empty()) {
            std::istringstream es(inner);
            std::string num;
            while (std::getline(es, num, ','))
                a.e |= uint32_t(1) << std::stoi(num);
        }
        if (!(ls >> tok) || tok.rfind("r=[", 0) != 0)
            throw std::invalid_argument("expected r=[...] in: " + line);
        inner = tok.substr(3);
        if (inner.empty() || inner.back() != ']')
            throw std::invalid_argument("unterminated r-list in: " + line);
        inner.pop_back();
        {
            std::istringstream rs(inner);
            std::string num;
            while (std::getline(rs, num, ',')) a.r.push_back(std::stoi(num));
        }
        alpha.k = std::max(alpha.k, (int)a.r.size());
        alpha.letters.push_back(std::move(a));
    }
    for (auto& a : alpha.letters)
        while ((int)a.r.size() < alpha.k) a.r.push_back((int)a.r.size());
    if (alpha.k == 0) alpha.k = 1;
    validate_expression(alpha);
    return alpha;
}

} // namespace lrw
