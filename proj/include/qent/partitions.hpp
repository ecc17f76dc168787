#pragma once

#include <vector>

namespace qent {

/// Set partition into disjoint blocks. Canonical form: each block ascending,
/// blocks ordered by smallest element.
struct Partition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const Partition&) const = default;
};

/// All partitions of `sites` into at least two blocks with every block of size
/// at least two (singleton blocks drop out of the connected-tensor expansion
/// because one-site correlation tensors vanish identically). Deterministic
/// order, no duplicates; empty for |sites| in {2, 3}. Throws for |sites| < 2.
std::vector<Partition> enumerate_partitions_min2(const std::vector<int>& sites);

}  // namespace qent
