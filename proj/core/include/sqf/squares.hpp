#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sqf/word.hpp"

namespace sqf {

/// Occurrence of a square xx: it starts at `start` and |x| = `half`.
struct SquareOccurrence {
    std::size_t start = 0;
    std::size_t half = 0;

    friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

enum class Detector {
    Oracle,  // every (half, start) pair compared directly, shortest half first
    Fast,    // Main-Lorentz divide and conquer, O(n log n)
};

inline constexpr std::size_t kNoHalfLimit = static_cast<std::size_t>(-1);

/// Finds some square with half length at most `max_half`, or nothing.
std::optional<SquareOccurrence> find_square(std::span<const Letter> w, Detector detector = Detector::Fast,
                                            std::size_t max_half = kNoHalfLimit);

inline std::optional<SquareOccurrence> contains_square(const Word& w, Detector detector = Detector::Fast) {
    return find_square(w.letters(), detector);
}

inline bool is_square_free(std::span<const Letter> w, Detector detector = Detector::Fast) {
    return !find_square(w, detector).has_value();
}

inline bool is_square_free(const Word& w, Detector detector = Detector::Fast) {
    return is_square_free(w.letters(), detector);
}

/// True when `occ` describes a genuine square inside `w`.
bool is_valid_square(std::span<const Letter> w, const SquareOccurrence& occ);

/// Some square whose span covers index `pos`. In cyclic mode `w` is read as a
/// circular word: occurrences may wrap (start is reported modulo |w|) and the
/// square length is at most |w|. Cost is proportional to the total length of
/// the letter matches examined, so it is close to linear on square-free text.
std::optional<SquareOccurrence> square_through(std::span<const Letter> w, std::size_t pos, bool cyclic = false);

/// Some square that is a suffix of `w` (i.e. ends at its last letter).
std::optional<SquareOccurrence> suffix_square(std::span<const Letter> w);

/// Some suffix square of `w` that starts at or before index `bound`.
std::optional<SquareOccurrence> suffix_square_from(std::span<const Letter> w, std::size_t bound);

}  // namespace sqf
