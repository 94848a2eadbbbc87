#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqf/word.hpp"

namespace sqf {

/// Multi-valued substitution: every source letter maps to a finite nonempty
/// list of nonempty target words. A morphism is the case of one image each.
class Substitution {
public:
    Substitution() = default;
    /// Throws InvalidSubstitution on an empty image list, an empty image, or an
    /// image over a different alphabet than `target`.
    Substitution(int source_size, Alphabet target, std::vector<std::vector<Word>> images);

    int source_size() const noexcept { return source_size_; }
    const Alphabet& target() const noexcept { return target_; }
    const std::vector<Word>& images(Letter a) const { return images_.at(a); }
    std::size_t image_count(Letter a) const { return images_.at(a).size(); }

private:
    int source_size_ = 0;
    Alphabet target_;
    std::vector<std::vector<Word>> images_;
};

using Choices = std::vector<std::size_t>;

/// Concatenation of the chosen image of each letter. Throws BadChoice(position)
/// when a choice index is out of range or the lengths disagree.
Word apply(const Substitution& sub, std::span<const Letter> w, std::span<const std::size_t> choices);
inline Word apply(const Substitution& sub, const Word& w, std::span<const std::size_t> choices) {
    return apply(sub, w.letters(), choices);
}

/// Every achievable image length, ascending.
std::vector<std::size_t> enumerate_image_lengths(const Substitution& sub, std::span<const Letter> w);

/// Choices whose image has exactly `target` letters. Among all solutions the
/// lexicographically smallest choice vector is returned.
std::optional<Choices> select_choices_for_length(const Substitution& sub, std::span<const Letter> w,
                                                 std::size_t target);

enum class Condition { I, II_i, II_ii, II_iii };

const char* condition_name(Condition c);

/// Evidence for one failed condition. `source` and `choices` name the letters
/// and images involved; `images` repeats the image words; `offsets` locate the
/// failure: for I the square (start, half) inside images[0]; for II(i) where A
/// sits inside B; for II(ii) the length of p in AB = pCs; for II(iii) the
/// split points |A'| and |B'|.
struct Violation {
    Condition condition = Condition::I;
    std::vector<Letter> source;
    Choices choices;
    std::vector<Word> images;
    std::vector<std::size_t> offsets;

    std::string describe() const;
};

struct ConditionReport {
    std::vector<Violation> violations;  // deterministic order, capped at `kMaxStoredViolations`
    std::size_t violation_count = 0;
    std::size_t checks = 0;

    static constexpr std::size_t kMaxStoredViolations = 256;

    bool passed() const noexcept { return violation_count == 0; }
    void merge(ConditionReport&& other);
};

/// Condition I: every image of every factor of `u` of length at most 3 is square-free.
ConditionReport check_condition_I(const Substitution& sub, const Word& u);

/// Condition I over a list of short source words taken as the factors themselves.
ConditionReport check_condition_I_words(const Substitution& sub, const std::vector<Word>& words);

/// Conditions II(i), II(ii), II(iii) over all letter triples and image triples.
ConditionReport check_condition_II(const Substitution& sub);

/// Generator of every square-free source word of length 1..3 in the relevant
/// language (all words, or walks in a digraph).
using ShortWordGenerator = std::function<std::vector<Word>()>;

/// Condition I on every generated word plus condition II. A pass certifies that
/// every image of every square-free word of that language is square-free.
ConditionReport check_universal(const Substitution& sub, const ShortWordGenerator& source_words);

/// Square-free words of length 1..max_len over `alphabet`, shortlex order.
std::vector<Word> square_free_words(Alphabet alphabet, std::size_t max_len);

/// Re-derives the violation from `sub` alone: true when the stored witness
/// still exhibits the failure it claims.
bool replay(const Substitution& sub, const Violation& v);

/// Text form: one line per source letter, "a -> abc | ac". Blank lines and
/// lines starting with '#' are skipped. Source and target letters use the
/// latin glyphs; alphabet sizes are the largest letter seen plus one.
/// Throws ParseError or InvalidSubstitution.
Substitution parse_substitution(std::string_view text);
std::string format_substitution(const Substitution& sub);

}  // namespace sqf
