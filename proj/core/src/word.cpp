#include "sqf/word.hpp"

#include <algorithm>
#include <array>

#include "sqf/error.hpp"

namespace sqf {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidCharacter: return "InvalidCharacter";
        case Errc::AlphabetMismatch: return "AlphabetMismatch";
        case Errc::EmptyWord: return "EmptyWord";
        case Errc::TooShort: return "TooShort";
        case Errc::BadN: return "BadN";
        case Errc::BadChoice: return "BadChoice";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::UnknownName: return "UnknownName";
        case Errc::InvalidSubstitution: return "InvalidSubstitution";
        case Errc::ParseError: return "ParseError";
        case Errc::NoSuchWord: return "NoSuchWord";
        case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Errc::NotInSpectrum: return "NotInSpectrum";
        case Errc::BudgetRefused: return "BudgetRefused";
    }
    return "Unknown";
}

namespace {

void check_alphabet_size(int n) {
    if (n < 1 || n > kMaxAlphabet) {
        throw Error(Errc::AlphabetMismatch, "alphabet size must be in 1..36, got " + std::to_string(n));
    }
}

}  // namespace

Alphabet Alphabet::latin(int n) {
    check_alphabet_size(n);
    return {n, Glyphs::Latin};
}

Alphabet Alphabet::digits(int n) {
    check_alphabet_size(n);
    return {n, Glyphs::Digits};
}

char Alphabet::glyph(Letter l) const {
    if (glyphs == Glyphs::Latin) {
        return l < 26 ? static_cast<char>('a' + l) : static_cast<char>('0' + (l - 26));
    }
    if (l < 9) return static_cast<char>('1' + l);
    if (l < 35) return static_cast<char>('A' + (l - 9));
    return '0';
}

std::optional<Letter> Alphabet::letter(char c) const {
    int id = -1;
    if (glyphs == Glyphs::Latin) {
        if (c >= 'a' && c <= 'z') id = c - 'a';
        else if (c >= '0' && c <= '9') id = 26 + (c - '0');
    } else {
        if (c >= '1' && c <= '9') id = c - '1';
        else if (c >= 'A' && c <= 'Z') id = 9 + (c - 'A');
        else if (c == '0') id = 35;
    }
    if (id < 0 || id >= size) return std::nullopt;
    return static_cast<Letter>(id);
}

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
    check_alphabet_size(alphabet_.size);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] >= alphabet_.size) {
            throw Error(Errc::AlphabetMismatch,
                        "letter id " + std::to_string(letters_[i]) + " outside alphabet at " + std::to_string(i), i);
        }
    }
}

Word::Word(std::initializer_list<Letter> letters, Alphabet alphabet)
    : Word(std::vector<Letter>(letters), alphabet) {}

Word Word::factor(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, letters_.size());
    len = std::min(len, letters_.size() - pos);
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len), alphabet_);
}

Word Word::operator+(const Word& other) const {
    if (alphabet_.size != other.alphabet_.size) {
        throw Error(Errc::AlphabetMismatch, "concatenating words over different alphabets");
    }
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out), alphabet_);
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(alphabet_.glyph(l));
    return s;
}

Word parse_word(std::string_view text, Alphabet alphabet) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto l = alphabet.letter(text[i]);
        if (!l) {
            throw Error(Errc::InvalidCharacter,
                        "invalid character '" + std::string(1, text[i]) + "' at position " + std::to_string(i), i);
        }
        out.push_back(*l);
    }
    return Word(std::move(out), alphabet);
}

Word reverse(const Word& w) {
    std::vector<Letter> out(w.vec().rbegin(), w.vec().rend());
    return Word(std::move(out), w.alphabet());
}

Word rotate(const Word& w, std::size_t shift) {
    if (w.empty()) return w;
    std::vector<Letter> out = w.vec();
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return Word(std::move(out), w.alphabet());
}

std::vector<Word> conjugates(const Word& w) {
    if (w.empty()) return {w};
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotate(w, i));
    return out;
}

std::size_t least_rotation(std::span<const Letter> s) {
    // Two-candidate scan: i and j are competing start positions, k the
    // length of the common prefix of their rotations.
    const std::size_t n = s.size();
    if (n < 2) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Letter a = s[(i + k) % n];
        Letter b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) i += k + 1;
        else j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

Word canonical_rotation(const Word& w) { return rotate(w, least_rotation(w.letters())); }

namespace {

constexpr std::array<std::array<Letter, 3>, Perm::kCount> kPermTable{{
    {0, 1, 2},  // ()
    {1, 0, 2},  // (ab)
    {2, 1, 0},  // (ac)
    {0, 2, 1},  // (bc)
    {1, 2, 0},  // (abc)
    {2, 0, 1},  // (acb)
}};

constexpr std::array<const char*, Perm::kCount> kPermCycles{"()", "(ab)", "(ac)", "(bc)", "(abc)", "(acb)"};

}  // namespace

Perm::Perm(int id) : id_(id) {
    if (id < 0 || id >= kCount) throw Error(Errc::UnknownVertex, "permutation id out of range");
}

Perm Perm::from_cycle(std::string_view cycle) {
    for (int i = 0; i < kCount; ++i) {
        if (cycle == kPermCycles[i]) return Perm(i);
    }
    // Equivalent spellings of the 3-cycles.
    if (cycle == "(bca)" || cycle == "(cab)") return Perm(4);
    if (cycle == "(cba)" || cycle == "(bac)") return Perm(5);
    if (cycle == "(ba)") return Perm(1);
    if (cycle == "(ca)") return Perm(2);
    if (cycle == "(cb)") return Perm(3);
    throw Error(Errc::UnknownVertex, "unknown permutation '" + std::string(cycle) + "'");
}

Letter Perm::operator()(Letter l) const { return kPermTable[id_][l]; }

Perm Perm::inverse() const {
    if (id_ == 4) return Perm(5);
    if (id_ == 5) return Perm(4);
    return *this;
}

std::string Perm::cycle() const { return kPermCycles[id_]; }

Word apply_permutation(const Word& w, Perm p) {
    if (w.alphabet().size != 3) throw Error(Errc::AlphabetMismatch, "permutations act on the ternary alphabet only");
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(p(l));
    return Word(std::move(out), w.alphabet());
}

}  // namespace sqf
