#include "doctest.h"
#include "oracles.hpp"
#include "sqf/error.hpp"
#include "sqf/word.hpp"

using namespace sqf;

TEST_CASE("parse and print round trip") {
    const Word w = parse_word("abcacb");
    CHECK(w.size() == 6);
    CHECK(w.str() == "abcacb");
    CHECK(w[2] == 2);
    CHECK(parse_word("").empty());
}

TEST_CASE("parse reports the first bad character") {
    try {
        parse_word("abxc");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidCharacter);
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_word("abd"), Error);
}

TEST_CASE("letters outside the alphabet are rejected") {
    CHECK_THROWS_AS(Word({0, 3}), Error);
    CHECK_NOTHROW(Word({0, 3}, Alphabet::latin(4)));
}

TEST_CASE("glyph sets") {
    CHECK(Alphabet::latin(36).glyph(25) == 'z');
    CHECK(Alphabet::latin(36).glyph(26) == '0');
    CHECK(Alphabet::digits(12).glyph(0) == '1');
    CHECK(Alphabet::digits(12).glyph(9) == 'A');
    CHECK(Alphabet::digits(36).glyph(35) == '0');
    for (int i = 0; i < 36; ++i) {
        CHECK(Alphabet::digits(36).letter(Alphabet::digits(36).glyph(static_cast<Letter>(i))) == i);
        CHECK(Alphabet::latin(36).letter(Alphabet::latin(36).glyph(static_cast<Letter>(i))) == i);
    }
}

TEST_CASE("factor and concatenation") {
    const Word w = parse_word("abcab");
    CHECK(w.factor(1, 3).str() == "bca");
    CHECK((w.factor(0, 2) + w.factor(2, 3)) == w);
    CHECK(reverse(w).str() == "bacba");
}

TEST_CASE("rotations") {
    const Word w = parse_word("abcb");
    CHECK(rotate(w, 1).str() == "bcba");
    CHECK(rotate(w, 5).str() == "bcba");
    CHECK(conjugates(w).size() == 4);
    CHECK(conjugates(Word()).size() == 1);
}

TEST_CASE("least rotation agrees with brute force") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = static_cast<std::size_t>(rng() % 12);
        const oracle::Letters w = oracle::random_word(rng, n, 2 + static_cast<int>(rng() % 2));
        const Word word(w);
        CHECK(canonical_rotation(word).vec() == oracle::least_rotation(w));
        if (!w.empty()) CHECK(oracle::rotation(w, least_rotation(w)) == oracle::least_rotation(w));
    }
}

TEST_CASE("least rotation breaks ties at the smallest index") {
    CHECK(least_rotation(oracle::letters("abab")) == 0);
    CHECK(least_rotation(oracle::letters("baba")) == 1);
    CHECK(least_rotation(oracle::letters("aaa")) == 0);
}

TEST_CASE("permutations") {
    CHECK(Perm::from_cycle("(ab)").id() == 1);
    CHECK(Perm::from_cycle("(acb)").id() == 5);
    CHECK(Perm::from_cycle("()").id() == 0);
    CHECK(Perm(4)(0) == 1);
    CHECK(Perm(4)(1) == 2);
    CHECK(Perm(4)(2) == 0);
    for (int id = 0; id < Perm::kCount; ++id) {
        const Perm p(id);
        for (Letter l = 0; l < 3; ++l) CHECK(p.inverse()(p(l)) == l);
        CHECK(Perm::from_cycle(p.cycle()) == p);
    }
    CHECK(apply_permutation(parse_word("abc"), Perm::from_cycle("(abc)")).str() == "bca");
    CHECK_THROWS_AS(apply_permutation(Word({0, 3}, Alphabet::latin(4)), Perm(1)), Error);
}
