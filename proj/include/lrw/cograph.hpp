#pragma once

#include "lrw/encoding.hpp"
#include "lrw/oracles.hpp"

#include <map>
#include <optional>

namespace lrw {

enum class CotreeMark { join, cup };

// One equivalence class of u ~ v iff Class(u) = Class(v) and NC(u) = NC(v),
// with the F-tree restricted to the class as its cotree.
struct ClassCotree {
    std::vector<int> members;          // positions, ascending
    std::map<int, CotreeMark> marks;   // F-tree node id -> mark
    int height = 0;                    // nodes on the longest leaf-root chain
};

struct CographPartition {
    int r = 0;
    std::vector<ClassCotree> classes; // ordered by smallest member
};

CographPartition cograph_partition(const OrderedGraph& og);
CographPartition cograph_partition(const OrderPipeline& pipe, const ColoredOrder& co);

// f(r) = 3 (r+2)! 2^C(r+1,2); saturates at uint64 max.
uint64_t f_bound(int r);

// Verification report; failed checks are recorded, never thrown.
struct PartitionReport {
    int r = 0;
    std::size_t class_count = 0;
    uint64_t class_bound = 0;
    bool partition_ok = false;     // classes disjoint and cover V
    bool all_p4_free = false;
    bool heights_ok = false;       // every cotree height <= r+2
    bool count_ok = false;         // class count <= f(r)
    bool cotree_consistent = false; // marks reproduce adjacency on every pair
    std::vector<int> class_sizes;
    std::vector<int> cotree_heights;
    std::vector<bool> class_p4_free;
    std::optional<int> chi, omega; // when n <= 25
    std::optional<bool> chi_bound_ok; // chi <= class_count * omega and <= f(r) * omega

    bool all_ok() const;
    std::string to_json() const;
};

PartitionReport verify_partition(const OrderPipeline& pipe, const CographPartition& cp);
PartitionReport verify_partition(const OrderedGraph& og);

} // namespace lrw
