#pragma once

#include <vector>

#include "sqf/circular.hpp"
#include "sqf/squares.hpp"
#include "sqf/word.hpp"

namespace sqf {

/// Distinct words obtained by inserting one letter anywhere in `w`, sorted.
std::vector<Word> extensions(const Word& w);

/// The square-free members of extensions(w), sorted. `w` itself need not be
/// square-free.
std::vector<Word> square_free_extensions(const Word& w, Detector detector = Detector::Fast);

enum class Side { Left, Right };

struct ExtremalReport {
    bool square_free = false;
    std::vector<Word> square_free_extensions;
    bool extremal = false;
    bool nearly_extremal = false;
    bool left_extremal = false;
    bool right_extremal = false;
};

ExtremalReport analyze(const Word& w, Detector detector = Detector::Fast);

/// Square-free with no square-free extension. Fast mode checks each insertion
/// only for squares through the inserted letter.
bool is_extremal(const Word& w, Detector detector = Detector::Fast);
bool is_nearly_extremal(const Word& w, Detector detector = Detector::Fast);

/// Left: every square-free extension appends a letter. Right: every one prepends.
bool is_directional_extremal(const Word& w, Side side, Detector detector = Detector::Fast);

/// Distinct circular words <w'aw''> over all splits of the representative.
std::vector<CircularWord> circular_extensions(const CircularWord& cw);

bool is_extremal_circular(const CircularWord& cw, Detector detector = Detector::Fast);
bool is_extremal_circular(std::span<const Letter> w, int alphabet = 3, Detector detector = Detector::Fast);

/// Square-free, and deleting any interior letter leaves a word with a square.
/// Throws TooShort when |w| < 3.
bool is_irreducibly_square_free(const Word& w);

/// 121 u_3 121 u_4 ... 121 u_n 121 with u_k = k2k, over the digit alphabet
/// {1..n}. Throws BadN unless 4 <= n <= 36.
Word irreducible_witness(int n);

}  // namespace sqf
