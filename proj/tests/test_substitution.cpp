#include "doctest.h"
#include "oracles.hpp"
#include "sqf/catalog.hpp"
#include "sqf/error.hpp"
#include "sqf/substitution.hpp"
#include "sqf/walks.hpp"

using namespace sqf;

namespace {

Substitution ternary(std::vector<std::vector<std::string>> images) {
    std::vector<std::vector<Word>> words;
    for (const auto& list : images) {
        words.emplace_back();
        for (const std::string& s : list) words.back().push_back(parse_word(s));
    }
    return Substitution(static_cast<int>(images.size()), Alphabet::ternary(), words);
}

bool has_violation(const ConditionReport& r, Condition c) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.condition == c; });
}

}  // namespace

TEST_CASE("construction rejects empty images") {
    CHECK_THROWS_AS(ternary({{}}), Error);
    CHECK_THROWS_AS(Substitution(1, Alphabet::ternary(), {{Word()}}), Error);
    CHECK_THROWS_AS(Substitution(2, Alphabet::ternary(), {{parse_word("a")}}), Error);
}

TEST_CASE("apply") {
    const Substitution d = delta();
    const Word x({0}, hat_alphabet());
    CHECK(apply(d, x, Choices{0}) == constant(CatalogName::Q));
    CHECK(apply(d, x, Choices{1}) == constant(CatalogName::R));
    CHECK(apply(d, Word(std::vector<Letter>{}, hat_alphabet()), Choices{}).empty());
    const Word h0 = apply(h_substitution(), Word({0}), Choices{0});
    CHECK(format_walk(h0.letters()) == "(),(~ab),(acb),(ac),(~abc),(bc)");
    try {
        apply(d, Word({0, 0}, hat_alphabet()), Choices{0, 2});
        FAIL("expected BadChoice");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadChoice);
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(apply(d, x, Choices{}), Error);
}

TEST_CASE("image lengths") {
    const std::vector<Letter> two{0, 7};
    CHECK(enumerate_image_lengths(delta(), two) == std::vector<std::size_t>{82, 93, 104});
    const std::vector<Letter> one{3};
    CHECK(enumerate_image_lengths(delta_prime(), one) == std::vector<std::size_t>{41, 52, 61, 64});
    const std::vector<Letter> two_h{2};
    CHECK(enumerate_image_lengths(h_substitution(), two_h) == std::vector<std::size_t>{6, 8});
}

TEST_CASE("image lengths agree with brute force over choices") {
    const Substitution d = delta_prime();
    const std::vector<Letter> w{0, 7, 5, 9};
    std::set<std::size_t> brute;
    for (std::size_t c = 0; c < 256; ++c) {
        const Choices ch{c % 4, c / 4 % 4, c / 16 % 4, c / 64};
        brute.insert(apply(d, w, ch).size());
    }
    const auto lengths = enumerate_image_lengths(d, w);
    CHECK(std::vector<std::size_t>(brute.begin(), brute.end()) == lengths);
    for (std::size_t t = 150; t <= 260; ++t) {
        const auto ch = select_choices_for_length(d, w, t);
        CHECK(ch.has_value() == (brute.count(t) == 1));
        if (ch) CHECK(apply(d, w, *ch).size() == t);
    }
}

TEST_CASE("choosing images for a target length") {
    const Word walk = square_free_walk(46);
    const auto ch = select_choices_for_length(delta(), walk.letters(), 2040);
    REQUIRE(ch);
    CHECK(std::count(ch->begin(), ch->end(), 0U) == 32);
    CHECK(std::count(ch->begin(), ch->end(), 1U) == 14);
    CHECK(apply(delta(), walk.letters(), *ch).size() == 2040);

    const std::vector<Letter> pair{0, 7};
    const auto q_rp = select_choices_for_length(delta_prime(), pair, 105);
    REQUIRE(q_rp);
    CHECK(*q_rp == Choices{0, 3});
    const std::vector<Letter> one{0};
    CHECK_FALSE(select_choices_for_length(delta(), one, 50));
}

TEST_CASE("condition I") {
    CHECK(check_condition_I(h_substitution(), parse_word("abacbc")).passed());  // 010212
    const Substitution g = ternary({{"aa"}, {"b"}, {"c"}});
    const ConditionReport r = check_condition_I(g, parse_word("a"));
    CHECK_FALSE(r.passed());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].condition == Condition::I);
    CHECK(replay(g, r.violations[0]));
}

TEST_CASE("condition II") {
    CHECK(check_condition_II(h_substitution()).passed());
    const Substitution g = ternary({{"ab"}, {"a"}, {"c"}});
    const ConditionReport r = check_condition_II(g);
    CHECK_FALSE(r.passed());
    CHECK(has_violation(r, Condition::II_i));
    for (const Violation& v : r.violations) {
        CHECK(replay(g, v));
        CHECK_FALSE(v.describe().empty());
    }
}

TEST_CASE("condition II(ii) and II(iii) detect overlapping images") {
    const ConditionReport ii = check_condition_II(ternary({{"abc"}, {"bca"}, {"cb"}}));
    CHECK(has_violation(ii, Condition::II_ii));
    const ConditionReport iii = check_condition_II(ternary({{"ab"}, {"cb"}, {"ac"}}));
    CHECK(has_violation(iii, Condition::II_iii));
}

TEST_CASE("condition II does not depend on letter names") {
    const Substitution f = ternary({{"abc", "ab"}, {"ac"}, {"b", "cb"}});
    const Substitution g = ternary({{"b", "cb"}, {"abc", "ab"}, {"ac"}});
    const ConditionReport rf = check_condition_II(f);
    const ConditionReport rg = check_condition_II(g);
    CHECK(rf.violation_count == rg.violation_count);
    CHECK(rf.checks == rg.checks);
}

TEST_CASE("a tampered replay no longer reproduces") {
    const Substitution g = ternary({{"aa"}, {"b"}, {"c"}});
    const ConditionReport r = check_condition_I(g, parse_word("a"));
    REQUIRE_FALSE(r.violations.empty());
    const Substitution fixed = ternary({{"ab"}, {"b"}, {"c"}});
    CHECK_FALSE(replay(fixed, r.violations[0]));
}

TEST_CASE("universal check on ternary morphisms") {
    const auto words = [] { return square_free_words(Alphabet::ternary(), 3); };
    const Substitution leech = ternary({{"abcbacbcabcba"}, {"bcacbacabcacb"}, {"cabacbabcabac"}});
    CHECK(check_universal(leech, words).passed());
    // Square-free on its own fixed point only: aba maps to abcacabc.
    const Substitution thue = ternary({{"abc"}, {"ac"}, {"b"}});
    const ConditionReport r = check_universal(thue, words);
    CHECK_FALSE(r.passed());
    CHECK(has_violation(r, Condition::I));
    CHECK(has_violation(r, Condition::II_i));
    for (const Violation& v : r.violations) CHECK(replay(thue, v));
}

TEST_CASE("square-free words of bounded length") {
    const auto words = square_free_words(Alphabet::ternary(), 3);
    CHECK(words.size() == 3 + 6 + 12);
    CHECK(words.front().str() == "a");
    for (std::size_t i = 1; i < words.size(); ++i) {
        CHECK(words[i - 1].size() <= words[i].size());
        CHECK_FALSE(oracle::has_square(words[i].vec()));
    }
}

TEST_CASE("certified substitutions map square-free words to square-free words") {
    std::mt19937_64 rng(17);
    const Word walk = square_free_walk(400);
    const Substitution d = delta();
    const Substitution dp = delta_prime();
    const Substitution& h = h_substitution();
    const oracle::Letters t = oracle::thue(400);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t len = 1 + rng() % 12;
        const std::size_t at = rng() % (walk.size() - len);
        const Word u = walk.factor(at, len);
        Choices cd(len);
        Choices cp(len);
        for (std::size_t i = 0; i < len; ++i) {
            cd[i] = rng() % 2;
            cp[i] = rng() % 4;
        }
        CHECK_FALSE(oracle::has_square(apply(d, u.letters(), cd).vec()));
        CHECK_FALSE(oracle::has_square(apply(dp, u.letters(), cp).vec()));

        const std::vector<Letter> v(t.begin() + static_cast<std::ptrdiff_t>(at),
                                    t.begin() + static_cast<std::ptrdiff_t>(at + len));
        Choices ch(len);
        for (std::size_t i = 0; i < len; ++i) ch[i] = rng() % h.image_count(v[i]);
        CHECK_FALSE(oracle::has_square(apply(h, v, ch).vec()));
    }
}

TEST_CASE("text format round trip") {
    const Substitution s = parse_substitution("# Thue\na -> abc\n\nb -> ac | a\nc -> b\n");
    CHECK(s.source_size() == 3);
    CHECK(s.image_count(1) == 2);
    CHECK(s.images(1)[1].str() == "a");
    const Substitution again = parse_substitution(format_substitution(s));
    CHECK(format_substitution(again) == format_substitution(s));
    CHECK_THROWS_AS(parse_substitution("a => b"), Error);
    CHECK_THROWS_AS(parse_substitution("a -> b | "), Error);
}
