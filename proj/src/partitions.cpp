#include "qent/partitions.hpp"

#include <algorithm>

#include "qent/errors.hpp"

namespace qent {

std::vector<Partition> enumerate_partitions_min2(const std::vector<int>& sites) {
    const std::size_t n = sites.size();
    if (n < 2) throw ShapeError("partition enumeration needs at least 2 sites");
    std::vector<int> ordered = sites;
    std::sort(ordered.begin(), ordered.end());
    if (std::adjacent_find(ordered.begin(), ordered.end()) != ordered.end())
        throw ShapeError("site subset contains duplicates");

    // Restricted growth strings (a[0] = 0, a[k] <= 1 + max of the prefix)
    // enumerate every set partition exactly once, with blocks indexed by first
    // occurrence, so blocks come out sorted by smallest element.
    std::vector<int> assign(n, 0);
    auto advance = [&]() -> bool {
        for (std::size_t k = n; k-- > 1;) {
            int prefix_max = 0;
            for (std::size_t j = 0; j < k; ++j) prefix_max = std::max(prefix_max, assign[j]);
            if (assign[k] <= prefix_max) {
                ++assign[k];
                std::fill(assign.begin() + static_cast<std::ptrdiff_t>(k) + 1, assign.end(), 0);
                return true;
            }
        }
        return false;
    };

    std::vector<Partition> out;
    do {
        const int block_count = 1 + *std::max_element(assign.begin(), assign.end());
        if (block_count < 2) continue;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
        for (std::size_t k = 0; k < n; ++k)
            blocks[static_cast<std::size_t>(assign[k])].push_back(ordered[k]);
        if (std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() >= 2; }))
            out.push_back(Partition{std::move(blocks)});
    } while (advance());
    return out;
}

}  // namespace qent
