#include "lrw/bitvec.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace lrw;

TEST_CASE("bitvec basics") {
    BitVec v(130);
    CHECK(!v.any());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.first_set() == 0);
    v.clear(0);
    CHECK(v.first_set() == 64);
    v.keep_above(64);
    CHECK(v.count() == 1);
    CHECK(v.get(129));

    BitVec w(130);
    w.set(129);
    CHECK((v ^ w).count() == 0);
}

TEST_CASE("basis insert examples") {
    // zero vector is in every span
    Gf2Basis b(8);
    CHECK(!b.insert(BitVec(8), 0));
    // independent insertion
    BitVec e1(8);
    e1.set(1);
    CHECK(b.insert(e1, 1));
    BitVec e2(8);
    e2.set(2);
    CHECK(b.insert(e2, 2));
    // sum of rows is in the span
    BitVec s = e1 ^ e2;
    CHECK(!b.insert(s, 3));
    CHECK(b.rank() == 2);
    CHECK(b.contains(s));
}

TEST_CASE("basis expresses members of the span by tags") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int len = 20;
        Gf2Basis b(len, true);
        std::vector<BitVec> inserted;
        std::vector<uint32_t> tags;
        for (int i = 0; i < 12; ++i) {
            BitVec v(len);
            for (int j = 0; j < len; ++j)
                if (rng.coin()) v.set(j);
            if (b.insert(v, (uint32_t)i)) {
                inserted.push_back(v);
                tags.push_back((uint32_t)i);
            }
        }
        // random combination of the inserted originals
        BitVec target(len);
        std::vector<uint32_t> chosen;
        for (std::size_t i = 0; i < inserted.size(); ++i)
            if (rng.coin()) {
                target ^= inserted[i];
                chosen.push_back(tags[i]);
            }
        auto expr = b.express(target);
        REQUIRE(expr.has_value());
        CHECK(*expr == chosen);
    }
}

TEST_CASE("insert never decreases rank and reaches the set rank") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int len = 16;
        std::vector<BitVec> rows;
        for (int i = 0; i < 10; ++i) {
            BitVec v(len);
            for (int j = 0; j < len; ++j)
                if (rng.coin()) v.set(j);
            rows.push_back(v);
        }
        Gf2Basis b(len);
        std::size_t prev = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            b.insert(rows[i], (uint32_t)i);
            CHECK(b.rank() >= prev);
            prev = b.rank();
        }
        // textbook elimination as the independent oracle
        std::vector<BitVec> mat = rows;
        int rank = 0;
        for (int col = 0; col < len; ++col) {
            int piv = -1;
            for (int r = rank; r < (int)mat.size(); ++r)
                if (mat[r].get(col)) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mat[rank], mat[piv]);
            for (int r = 0; r < (int)mat.size(); ++r)
                if (r != rank && mat[r].get(col)) mat[r] ^= mat[rank];
            ++rank;
        }
        CHECK((int)b.rank() == rank);
    }
}
