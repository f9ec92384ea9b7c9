#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qperm/rational.hpp"

namespace qperm {

// Set partition of {1..k} stored as a restricted-growth string: entry s-1 is
// the label of the block containing s, labels appear in first-use order
// starting from 0. The string is unique per partition, so == on the labels is
// partition equality and lexicographic < is a total order. Blocks are
// reconstructed on demand.
class Partition {
public:
    // `growth` must already be in restricted-growth form.
    explicit Partition(std::vector<int> growth);

    // Canonicalizes an arbitrary labeling of positions.
    static Partition from_labels(const std::vector<int>& labels);
    // Blocks hold 1-based elements and must partition {1..k}.
    static Partition from_blocks(const std::vector<std::vector<int>>& blocks);
    // Parses "{1,3}{2}" (round-trip partner of to_block_string).
    static Partition from_block_string(const std::string& text);
    static Partition single_block(int k);
    static Partition discrete(int k);

    int k() const { return static_cast<int>(growth_.size()); }
    int block_count() const { return block_count_; }
    const std::vector<int>& growth() const { return growth_; }

    // Blocks sorted by least element (which for growth strings is label
    // order), elements ascending, 1-based.
    std::vector<std::vector<int>> blocks() const;
    std::string to_block_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.growth_ == b.growth_;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.growth_ < b.growth_;
    }

private:
    std::vector<int> growth_;
    int block_count_ = 0;
};

enum class PartitionKind { noncrossing, all };

// NC(k) / P(k) in strictly increasing lexicographic growth-string order.
// This order fixes matrix row/column indexing everywhere downstream.
class PartitionFamily {
public:
    // Enumeration ceiling; beyond it memory is the caller's problem, so we
    // refuse outright.
    static constexpr int max_k = 12;

    static PartitionFamily enumerate(int k, PartitionKind kind);

    int k() const { return k_; }
    PartitionKind kind() const { return kind_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Partition>& members() const { return members_; }
    const Partition& member(std::size_t pos) const { return members_[pos]; }

    // Position in the canonical order (binary search; the order is sorted).
    std::optional<std::size_t> index_of(const Partition& p) const;

private:
    PartitionFamily(int k, PartitionKind kind, std::vector<Partition> members);

    int k_;
    PartitionKind kind_;
    std::vector<Partition> members_;
};

// True iff no a<b<c<d has a,c in one block and b,d in another.
bool is_noncrossing(const Partition& p);

// Join in the lattice of all partitions of {1..k} (finest common
// coarsening); the result may be crossing even for non-crossing inputs.
Partition join(const Partition& p, const Partition& q);

// 1 iff every block of p is constant on the multi-index (one value per
// position of {1..k}; the values themselves are unconstrained here).
int delta(const Partition& p, const std::vector<int>& multi_index);

// |p∨q| - (|p|+|q|)/2 as an exact rational. Defined (and known to be ≤ 0,
// zero only for p = q) on non-crossing inputs; anything else is refused.
BigRational join_exponent(const Partition& p, const Partition& q);

// JSON forms: a partition serializes as its growth-string array, a family as
// an array of those. Both round-trip.
std::string growth_to_json(const Partition& p);
Partition partition_from_growth_json(const std::string& text);

}  // namespace qperm
