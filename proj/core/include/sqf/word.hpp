#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqf {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 36;

// How letters are rendered as text. Latin: a..z then 0..9. Digits (used by the
// irreducible witnesses): 1..9, then A..Z, then 0.
enum class Glyphs : std::uint8_t { Latin, Digits };

struct Alphabet {
    int size = 3;
    Glyphs glyphs = Glyphs::Latin;

    static Alphabet ternary() { return {3, Glyphs::Latin}; }
    static Alphabet latin(int n);
    static Alphabet digits(int n);

    char glyph(Letter l) const;
    std::optional<Letter> letter(char c) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Finite word over a small alphabet. Letters are 0-based ids below
/// `alphabet().size`; the constructor enforces this.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters, Alphabet alphabet = Alphabet::ternary());
    Word(std::initializer_list<Letter> letters, Alphabet alphabet = Alphabet::ternary());

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    std::span<const Letter> letters() const noexcept { return letters_; }
    const std::vector<Letter>& vec() const noexcept { return letters_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    Word factor(std::size_t pos, std::size_t len) const;
    Word operator+(const Word& other) const;
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_.size == b.alphabet_.size && a.letters_ == b.letters_;
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
        return a.alphabet_.size <=> b.alphabet_.size;
    }

private:
    std::vector<Letter> letters_;
    Alphabet alphabet_ = Alphabet::ternary();
};

/// Parses text into a word. Throws Error(InvalidCharacter, position) on the
/// first character that is not a glyph of `alphabet`.
Word parse_word(std::string_view text, Alphabet alphabet = Alphabet::ternary());

Word reverse(const Word& w);
Word rotate(const Word& w, std::size_t shift);
std::vector<Word> conjugates(const Word& w);

/// Index of the lexicographically least rotation (least index on ties).
std::size_t least_rotation(std::span<const Letter> w);
Word canonical_rotation(const Word& w);

/// Permutation of the ternary alphabet, ids 0..5 = (), (ab), (ac), (bc), (abc), (acb).
class Perm {
public:
    static constexpr int kCount = 6;

    constexpr Perm() = default;
    explicit Perm(int id);

    static Perm from_cycle(std::string_view cycle);

    int id() const noexcept { return id_; }
    Letter operator()(Letter l) const;
    Perm inverse() const;
    std::string cycle() const;

    friend bool operator==(Perm, Perm) = default;

private:
    int id_ = 0;
};

/// Letterwise image under `p`. Throws AlphabetMismatch unless `w` is ternary.
Word apply_permutation(const Word& w, Perm p);

}  // namespace sqf
