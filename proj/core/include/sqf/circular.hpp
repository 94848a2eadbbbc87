#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqf/squares.hpp"
#include "sqf/word.hpp"

namespace sqf {

/// Rotation class of a word, held as its least rotation so that equality of
/// circular words is equality of representatives.
class CircularWord {
public:
    CircularWord() = default;
    explicit CircularWord(const Word& w) : rep_(canonical_rotation(w)) {}

    const Word& representative() const noexcept { return rep_; }
    std::size_t size() const noexcept { return rep_.size(); }
    bool empty() const noexcept { return rep_.empty(); }

    /// "~" followed by the representative.
    std::string str() const { return "~" + rep_.str(); }

    friend bool operator==(const CircularWord&, const CircularWord&) = default;
    friend auto operator<=>(const CircularWord& a, const CircularWord& b) { return a.rep_ <=> b.rep_; }

private:
    Word rep_;
};

/// Some square in a conjugate of the circular word spelled by `w`. The start
/// is reported modulo |w|. Fast mode scans ww with half lengths capped at
/// floor(|w|/2); Oracle mode checks every conjugate directly.
std::optional<SquareOccurrence> find_circular_square(std::span<const Letter> w, Detector detector = Detector::Fast);

inline bool is_circular_square_free(std::span<const Letter> w, Detector detector = Detector::Fast) {
    return !find_circular_square(w, detector).has_value();
}

inline bool is_circular_square_free(const CircularWord& cw, Detector detector = Detector::Fast) {
    return is_circular_square_free(cw.representative().letters(), detector);
}

/// All words a.v.a where a.v is a conjugate of the representative.
/// Throws EmptyWord for the empty circular word.
std::vector<Word> circumnavigations(const CircularWord& cw);

}  // namespace sqf
