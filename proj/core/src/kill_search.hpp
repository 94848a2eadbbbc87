#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sqf/word.hpp"

namespace sqf::detail {

// Depth-first search over square-free words of a fixed length in which some
// positions may be forced. Each tracked insertion slot j (a letter placed
// before index j) is followed as the prefix grows: it is dropped once a square
// through it appears and the branch is cut once no square within the final
// length can still reach it. A leaf with no tracked insertion left is handed
// to `accept`.
struct KillSearchConfig {
    std::size_t length = 0;
    std::vector<int> forced;  // per position: letter, or -1 when free; empty means all free
    std::size_t track_lo = 0;
    std::size_t track_hi = 0;  // inclusive; track_lo > track_hi tracks nothing
    int alphabet = 3;
    bool shuffle = true;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;  // nodes
    std::function<bool(std::span<const Letter>)> accept;
};

struct KillSearchResult {
    std::optional<std::vector<Letter>> word;
    std::uint64_t nodes = 0;
    bool completed = false;  // the whole tree was explored within budget
};

KillSearchResult kill_search(const KillSearchConfig& config);

}  // namespace sqf::detail
