#include "sqf/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sqf/error.hpp"
#include "sqf/squares.hpp"

namespace sqf {

Substitution::Substitution(int source_size, Alphabet target, std::vector<std::vector<Word>> images)
    : source_size_(source_size), target_(target), images_(std::move(images)) {
    if (source_size_ < 1 || source_size_ > kMaxAlphabet) {
        throw Error(Errc::InvalidSubstitution, "source alphabet size must be in 1..36");
    }
    if (static_cast<int>(images_.size()) != source_size_) {
        throw Error(Errc::InvalidSubstitution, "one image list per source letter required");
    }
    for (std::size_t a = 0; a < images_.size(); ++a) {
        if (images_[a].empty()) {
            throw Error(Errc::InvalidSubstitution, "source letter " + std::to_string(a) + " has no image", a);
        }
        for (const Word& img : images_[a]) {
            if (img.empty()) throw Error(Errc::InvalidSubstitution, "empty image for letter " + std::to_string(a), a);
            if (img.alphabet().size != target_.size) {
                throw Error(Errc::InvalidSubstitution, "image alphabet differs from target alphabet", a);
            }
        }
    }
}

Word apply(const Substitution& sub, std::span<const Letter> w, std::span<const std::size_t> choices) {
    if (choices.size() != w.size()) {
        throw Error(Errc::BadChoice, "expected one choice per letter", std::min(choices.size(), w.size()));
    }
    std::vector<Letter> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= sub.source_size() || choices[i] >= sub.image_count(w[i])) {
            throw Error(Errc::BadChoice, "invalid image choice at position " + std::to_string(i), i);
        }
        const Word& img = sub.images(w[i])[choices[i]];
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), sub.target());
}

std::vector<std::size_t> enumerate_image_lengths(const Substitution& sub, std::span<const Letter> w) {
    std::vector<std::size_t> reach{0};
    for (Letter a : w) {
        std::vector<std::size_t> next;
        for (std::size_t r : reach) {
            for (const Word& img : sub.images(a)) next.push_back(r + img.size());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reach = std::move(next);
    }
    return reach;
}

std::optional<Choices> select_choices_for_length(const Substitution& sub, std::span<const Letter> w,
                                                 std::size_t target) {
    const std::size_t n = w.size();
    // feasible[i][t]: the suffix starting at letter i can produce exactly t letters.
    std::vector<std::vector<char>> feasible(n + 1, std::vector<char>(target + 1, 0));
    feasible[n][0] = 1;
    for (std::size_t i = n; i-- > 0;) {
        for (const Word& img : sub.images(w[i])) {
            const std::size_t len = img.size();
            for (std::size_t t = len; t <= target; ++t) {
                if (feasible[i + 1][t - len]) feasible[i][t] = 1;
            }
        }
    }
    if (!feasible[0][target]) return std::nullopt;
    Choices choices(n);
    std::size_t remaining = target;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& imgs = sub.images(w[i]);
        for (std::size_t c = 0; c < imgs.size(); ++c) {
            const std::size_t len = imgs[c].size();
            if (len <= remaining && feasible[i + 1][remaining - len]) {
                choices[i] = c;
                remaining -= len;
                break;
            }
        }
    }
    return choices;
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::I: return "I";
        case Condition::II_i: return "II.i";
        case Condition::II_ii: return "II.ii";
        case Condition::II_iii: return "II.iii";
    }
    return "?";
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << "condition " << condition_name(condition) << ": letters";
    for (Letter l : source) os << ' ' << static_cast<int>(l);
    os << " choices";
    for (std::size_t c : choices) os << ' ' << c;
    os << " images";
    for (const Word& w : images) os << ' ' << w.str();
    os << " offsets";
    for (std::size_t o : offsets) os << ' ' << o;
    return os.str();
}

void ConditionReport::merge(ConditionReport&& other) {
    violation_count += other.violation_count;
    checks += other.checks;
    for (auto& v : other.violations) {
        if (violations.size() >= kMaxStoredViolations) break;
        violations.push_back(std::move(v));
    }
}

namespace {

void record(ConditionReport& r, Violation v) {
    ++r.violation_count;
    if (r.violations.size() < ConditionReport::kMaxStoredViolations) r.violations.push_back(std::move(v));
}

// Condition I for one short source word: every choice vector, in
// lexicographic order.
void check_images_square_free(const Substitution& sub, const std::vector<Letter>& v, ConditionReport& r) {
    Choices choices(v.size(), 0);
    while (true) {
        ++r.checks;
        Word img = apply(sub, v, choices);
        if (auto occ = find_square(img.letters())) {
            record(r, Violation{Condition::I, v, choices, {img}, {occ->start, occ->half}});
        }
        std::size_t i = v.size();
        while (i > 0) {
            --i;
            if (++choices[i] < sub.image_count(v[i])) break;
            choices[i] = 0;
            if (i == 0) return;
        }
        if (v.empty()) return;
    }
}

struct FlatImage {
    Letter letter;
    std::size_t choice;
    const Word* word;
};

std::vector<FlatImage> flatten(const Substitution& sub) {
    std::vector<FlatImage> out;
    for (int a = 0; a < sub.source_size(); ++a) {
        const auto& imgs = sub.images(static_cast<Letter>(a));
        for (std::size_t c = 0; c < imgs.size(); ++c) out.push_back({static_cast<Letter>(a), c, &imgs[c]});
    }
    return out;
}

bool occurs_at(std::span<const Letter> text, std::span<const Letter> pat, std::size_t pos) {
    return pos + pat.size() <= text.size() && std::equal(pat.begin(), pat.end(), text.begin() + pos);
}

// C = A'B'' with |A'| = k and |B''| = |C| - k.
bool splits_as(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c, std::size_t k) {
    if (k > a.size() || k > c.size()) return false;
    const std::size_t tail = c.size() - k;
    if (tail > b.size()) return false;
    return std::equal(c.begin(), c.begin() + k, a.begin()) &&
           std::equal(c.begin() + k, c.end(), b.end() - tail);
}

}  // namespace

ConditionReport check_condition_I_words(const Substitution& sub, const std::vector<Word>& words) {
    ConditionReport r;
    for (const Word& v : words) check_images_square_free(sub, v.vec(), r);
    return r;
}

ConditionReport check_condition_I(const Substitution& sub, const Word& u) {
    std::vector<Word> factors;
    for (std::size_t len = 1; len <= 3; ++len) {
        for (std::size_t i = 0; i + len <= u.size(); ++i) factors.push_back(u.factor(i, len));
    }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return check_condition_I_words(sub, factors);
}

ConditionReport check_condition_II(const Substitution& sub) {
    ConditionReport r;
    const auto flat = flatten(sub);

    // (i) A factor of B implies a = b and A = B.
    for (const auto& A : flat) {
        for (const auto& B : flat) {
            if (A.letter == B.letter && A.choice == B.choice) continue;
            ++r.checks;
            const auto a = A.word->letters();
            const auto b = B.word->letters();
            if (a.size() > b.size()) continue;
            for (std::size_t pos = 0; pos + a.size() <= b.size(); ++pos) {
                if (occurs_at(b, a, pos)) {
                    // Identical words under one letter are the same image listed twice.
                    if (A.letter == B.letter && a.size() == b.size()) break;
                    record(r, Violation{Condition::II_i, {A.letter, B.letter}, {A.choice, B.choice},
                                        {*A.word, *B.word}, {pos}});
                    break;
                }
            }
        }
    }

    // (ii) AB = pCs forces p or s empty; (iii) C = A'B'' forces c = a or c = b.
    std::vector<Letter> ab;
    for (const auto& A : flat) {
        for (const auto& B : flat) {
            ab.assign(A.word->begin(), A.word->end());
            ab.insert(ab.end(), B.word->begin(), B.word->end());
            for (const auto& C : flat) {
                r.checks += 2;
                const auto c = C.word->letters();
                for (std::size_t pos = 1; pos + c.size() < ab.size(); ++pos) {
                    if (occurs_at(ab, c, pos)) {
                        record(r, Violation{Condition::II_ii, {A.letter, B.letter, C.letter},
                                            {A.choice, B.choice, C.choice}, {*A.word, *B.word, *C.word}, {pos}});
                        break;
                    }
                }
                if (C.letter == A.letter || C.letter == B.letter) continue;
                const auto a = A.word->letters();
                const auto b = B.word->letters();
                for (std::size_t k = 0; k <= a.size(); ++k) {
                    if (splits_as(a, b, c, k)) {
                        const std::size_t b_cut = b.size() - (c.size() - k);
                        record(r, Violation{Condition::II_iii, {A.letter, B.letter, C.letter},
                                            {A.choice, B.choice, C.choice}, {*A.word, *B.word, *C.word}, {k, b_cut}});
                        break;
                    }
                }
            }
        }
    }
    return r;
}

ConditionReport check_universal(const Substitution& sub, const ShortWordGenerator& source_words) {
    const std::vector<Word> words = source_words();
    ConditionReport r = check_condition_I_words(sub, words);
    r.merge(check_condition_II(sub));
    return r;
}

std::vector<Word> square_free_words(Alphabet alphabet, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<std::vector<Letter>> layer{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : layer) {
            for (int a = 0; a < alphabet.size; ++a) {
                auto u = w;
                u.push_back(static_cast<Letter>(a));
                if (!suffix_square(u)) next.push_back(std::move(u));
            }
        }
        for (const auto& w : next) out.emplace_back(w, alphabet);
        layer = std::move(next);
    }
    return out;
}

bool replay(const Substitution& sub, const Violation& v) {
    if (v.source.size() != v.choices.size() || v.images.size() != (v.condition == Condition::I ? 1u : v.source.size())) {
        return false;
    }
    for (std::size_t i = 0; i < v.source.size(); ++i) {
        if (v.source[i] >= sub.source_size() || v.choices[i] >= sub.image_count(v.source[i])) return false;
    }
    switch (v.condition) {
        case Condition::I: {
            if (v.offsets.size() != 2) return false;
            const Word img = apply(sub, v.source, v.choices);
            return img == v.images[0] && is_valid_square(img.letters(), {v.offsets[0], v.offsets[1]});
        }
        case Condition::II_i: {
            const Word& a = sub.images(v.source[0])[v.choices[0]];
            const Word& b = sub.images(v.source[1])[v.choices[1]];
            if (a != v.images[0] || b != v.images[1] || v.offsets.size() != 1) return false;
            const bool same = v.source[0] == v.source[1] && a == b;
            return !same && occurs_at(b.letters(), a.letters(), v.offsets[0]);
        }
        case Condition::II_ii: {
            const Word& a = sub.images(v.source[0])[v.choices[0]];
            const Word& b = sub.images(v.source[1])[v.choices[1]];
            const Word& c = sub.images(v.source[2])[v.choices[2]];
            if (a != v.images[0] || b != v.images[1] || c != v.images[2] || v.offsets.size() != 1) return false;
            const Word ab = a + b;
            const std::size_t pos = v.offsets[0];
            return pos >= 1 && pos + c.size() < ab.size() && occurs_at(ab.letters(), c.letters(), pos);
        }
        case Condition::II_iii: {
            const Word& a = sub.images(v.source[0])[v.choices[0]];
            const Word& b = sub.images(v.source[1])[v.choices[1]];
            const Word& c = sub.images(v.source[2])[v.choices[2]];
            if (a != v.images[0] || b != v.images[1] || c != v.images[2] || v.offsets.size() != 2) return false;
            if (v.source[2] == v.source[0] || v.source[2] == v.source[1]) return false;
            const std::size_t k = v.offsets[0], b_cut = v.offsets[1];
            if (k > a.size() || b_cut > b.size()) return false;
            return a.factor(0, k) + b.factor(b_cut, b.size() - b_cut) == c;
        }
    }
    return false;
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
    const Alphabet wide = Alphabet::latin(kMaxAlphabet);
    std::map<Letter, std::vector<std::vector<Letter>>> rules;
    int target_size = 1;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto arrow = t.find("->");
        if (arrow == std::string::npos) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'letter -> images'", line_no);
        }
        const std::string lhs = trim(std::string_view(t).substr(0, arrow));
        if (lhs.size() != 1 || !wide.letter(lhs[0])) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": source must be a single letter", line_no);
        }
        const Letter src = *wide.letter(lhs[0]);
        if (rules.count(src)) {
            throw Error(Errc::InvalidSubstitution, "line " + std::to_string(line_no) + ": letter defined twice", line_no);
        }
        auto& images = rules[src];
        std::string_view rest = std::string_view(t).substr(arrow + 2);
        while (true) {
            const auto bar = rest.find('|');
            const std::string item = trim(rest.substr(0, bar));
            if (item.empty()) {
                throw Error(Errc::InvalidSubstitution, "line " + std::to_string(line_no) + ": empty image", line_no);
            }
            std::vector<Letter> img;
            for (char ch : item) {
                const auto l = wide.letter(ch);
                if (!l) {
                    throw Error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": invalid character '" + std::string(1, ch) + "'",
                                line_no);
                }
                img.push_back(*l);
                target_size = std::max(target_size, *l + 1);
            }
            images.push_back(std::move(img));
            if (bar == std::string_view::npos) break;
            rest = rest.substr(bar + 1);
        }
    }
    if (rules.empty()) throw Error(Errc::InvalidSubstitution, "no rules");
    const int source_size = rules.rbegin()->first + 1;
    const Alphabet target = Alphabet::latin(target_size);
    std::vector<std::vector<Word>> images(static_cast<std::size_t>(source_size));
    for (int a = 0; a < source_size; ++a) {
        auto it = rules.find(static_cast<Letter>(a));
        if (it == rules.end()) {
            throw Error(Errc::InvalidSubstitution, std::string("no rule for letter '") + wide.glyph(static_cast<Letter>(a)) + "'");
        }
        for (auto& img : it->second) images[static_cast<std::size_t>(a)].emplace_back(std::move(img), target);
    }
    return Substitution(source_size, target, std::move(images));
}

std::string format_substitution(const Substitution& sub) {
    const Alphabet src = Alphabet::latin(sub.source_size());
    std::ostringstream os;
    for (int a = 0; a < sub.source_size(); ++a) {
        os << src.glyph(static_cast<Letter>(a)) << " ->";
        const auto& imgs = sub.images(static_cast<Letter>(a));
        for (std::size_t c = 0; c < imgs.size(); ++c) os << (c ? " | " : " ") << imgs[c].str();
        os << '\n';
    }
    return os.str();
}

}  // namespace sqf
