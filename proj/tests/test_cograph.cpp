#include "lrw/cograph.hpp"
#include "lrw/nlc.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace lrw;
using namespace testutil;

TEST_CASE("f bound values") {
    CHECK(f_bound(0) == 6);
    CHECK(f_bound(1) == 36);
    CHECK(f_bound(2) == 576);
}

TEST_CASE("edgeless graph: one class, union-only cotree") {
    auto og = identity_order(edgeless(6));
    auto cp = cograph_partition(og);
    REQUIRE(cp.classes.size() == 1);
    CHECK(cp.classes[0].members.size() == 6);
    for (const auto& [node, mark] : cp.classes[0].marks)
        CHECK(mark == CotreeMark::cup);
    auto rep = verify_partition(og);
    CHECK(rep.all_ok());
    CHECK(*rep.chi == 1);
    CHECK(*rep.omega == 1);
}

TEST_CASE("complete graphs: classes induce complete graphs") {
    auto og = identity_order(complete(6));
    auto cp = cograph_partition(og);
    for (const auto& c : cp.classes)
        for (std::size_t i = 0; i < c.members.size(); ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j)
                CHECK(og.graph.has_edge(c.members[i], c.members[j]));
    CHECK(verify_partition(og).all_ok());
}

TEST_CASE("path partition verifies with the chi bound") {
    auto og = identity_order(path(4));
    auto rep = verify_partition(og);
    CHECK(rep.all_ok());
    CHECK(*rep.chi == 2);
    CHECK((uint64_t)*rep.chi <= rep.class_count * (uint64_t)*rep.omega);
}

TEST_CASE("C5 under its optimal order") {
    auto res = lrw_exact(cycle(5));
    REQUIRE(res.r == 2);
    auto cp = cograph_partition(res.witness);
    CHECK(cp.classes.size() <= f_bound(2)); // 576
    CHECK(cp.classes.size() <= 5);          // small in practice
    auto rep = verify_partition(res.witness);
    CHECK(rep.all_ok());
    CHECK(*rep.chi == 3);
}

TEST_CASE("random instances pass all partition checks") {
    for (int trial = 0; trial < 8; ++trial) {
        int k = 1 + trial % 3;
        auto alpha = random_nlc(20 + 2 * trial, k, 3000 + trial);
        auto ev = eval_nlc(alpha);
        auto og = identity_order(ev.graph);
        auto rep = verify_partition(og);
        CHECK(rep.partition_ok);
        CHECK(rep.all_p4_free);
        CHECK(rep.heights_ok);
        CHECK(rep.count_ok);
        CHECK(rep.cotree_consistent);
        if (rep.chi_bound_ok) CHECK(*rep.chi_bound_ok);
    }
}

TEST_CASE("report json carries the verdict") {
    auto rep = verify_partition(identity_order(path(4)));
    auto text = rep.to_json();
    CHECK(text.find("\"all_ok\": true") != std::string::npos);
    CHECK(text.find("\"class_count\"") != std::string::npos);
}
