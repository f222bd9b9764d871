#pragma once

// Mask-level routines shared by the shattering, cubes and compression modules.
// A "row set" is a sorted, deduplicated span of masks, all inside `universe`.
// Working inside a universe lets C|S be handled without renumbering bits.

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extremal/bits.hpp"

namespace extremal::detail {

bool contains_sorted(std::span<const Mask> rows, Mask m);

/// Sorted, deduplicated {r & universe}.
std::vector<Mask> project(std::span<const Mask> rows, Mask universe);

/// All shattered subsets of `universe`, grouped by size (level k holds the k-sets).
std::vector<std::vector<Mask>> shattered_levels(std::span<const Mask> rows, Mask universe);

/// Tags of all cubes, keyed by dimension set. Only strongly shattered sets appear.
/// Tags are zero on their dimension set and sorted.
class ReductionTable {
public:
    ReductionTable(std::span<const Mask> rows, Mask universe);

    Mask universe() const { return universe_; }
    const std::vector<std::vector<Mask>>& levels() const { return levels_; }
    /// Cube tags with dimension set S; empty when S is not strongly shattered.
    std::span<const Mask> tags(Mask S) const;
    bool has(Mask S) const { return table_.count(S) != 0; }
    std::size_t cube_count() const;

    /// Is the cube (S, tag) contained in no cube with one more dimension?
    bool is_maximal(Mask S, Mask tag) const;
    /// Maximal cubes as (dims, tag) pairs, grouped by dims in level order.
    std::vector<std::pair<Mask, Mask>> maximal_cubes() const;

private:
    Mask universe_;
    std::vector<std::vector<Mask>> levels_;  // strongly shattered sets by size
    std::unordered_map<Mask, std::vector<Mask>> table_;
};

}  // namespace extremal::detail
