#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "treeforce/word.hpp"

using namespace tf;

TEST_CASE("word parse and print round") {
    Word w = Word::parse("0110");
    CHECK(w.size() == 4);
    CHECK(w.str() == "0110");
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("012"), ParseError);
}

TEST_CASE("length-lex enumeration") {
    CHECK(length_lex_word(0).str() == "");
    CHECK(length_lex_word(1).str() == "0");
    CHECK(length_lex_word(2).str() == "1");
    CHECK(length_lex_word(3).str() == "00");
    CHECK(length_lex_word(4).str() == "01");
    CHECK(length_lex_word(5).str() == "10");
    CHECK(length_lex_word(6).str() == "11");
    CHECK(length_lex_word(7).str() == "000");
    for (std::uint64_t k = 0; k < 4096; ++k)
        CHECK(length_lex_index(length_lex_word(k)) == k);
}

TEST_CASE("dense sequence canonical values") {
    CHECK(dense_seq(0).str() == "");
    CHECK(dense_seq(1).str() == "0");
    CHECK(dense_seq(2).str() == "10");
    CHECK(dense_seq(3).str() == "000");
    CHECK(dense_seq(4).str() == "0100");
    for (std::uint64_t k = 0; k <= 64; ++k) CHECK(dense_seq(k).size() == k);
}

TEST_CASE("density at scale: every short word has a dense extension") {
    for (std::size_t len = 0; len <= 8; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            Word s = Word::from_value(v, len);
            bool found = false;
            for (std::uint64_t k = 0; k <= (1u << 9); ++k)
                if (s.is_prefix_of(dense_seq(k))) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("least dense index extending") {
    // Matches the linear scan on small inputs.
    auto brute = [](const Word& w, std::uint64_t lo) {
        for (std::uint64_t k = lo;; ++k)
            if (w.is_prefix_of(dense_seq(k))) return k;
    };
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        std::size_t len = rng() % 9;
        Word w = Word::from_value(rng() & ((1u << len) - 1), len);
        std::uint64_t lo = rng() % 40;
        CHECK(least_dense_index_extending(w, lo) == brute(w, lo));
    }
    CHECK(least_dense_index_extending(Word::parse("1"), 1) == 2);
}

TEST_CASE("xor involution on words") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = rng() % 12, m = rng() % 12;
        Word a = Word::from_value(rng() & ((1ull << n) - 1), n);
        Word t = Word::from_value(rng() & ((1ull << m) - 1), m);
        Word back = xor_padded(xor_padded(a, t), t);
        CHECK(a.is_prefix_of(back));
        for (std::size_t j = a.size(); j < back.size(); ++j) CHECK(back[j] == 0);
    }
    CHECK(xor_padded(Word::parse("10"), Word::parse("11")).str() == "01");
    CHECK(xor_padded(Word::parse("0100"), one_at(2)).str() == "0110");
}

TEST_CASE("point canonical form") {
    // 1 0 0 0 ... == prefix "1", period "0".
    Point a(Word::parse("100"), Word::parse("00"));
    CHECK(a == Point::parse("1", "0"));
    // 0 1 0 1 ... has empty prefix and primitive period.
    Point b(Word::parse("01"), Word::parse("0101"));
    CHECK(b.prefix().empty());
    CHECK(b.period().str() == "01");
    CHECK(b.at(0) == 0);
    CHECK(b.at(5) == 1);
    CHECK_THROWS_AS(Point(Word(), Word()), PreconditionError);
}

TEST_CASE("point xor") {
    Point one_then_zeros = Point::parse("1", "0");
    Point flipped = xor_point(one_then_zeros, one_at(0));
    CHECK(flipped == Point::parse("0", "0"));
    CHECK(flipped == Point::parse("", "0"));

    // xor with a point is involutive.
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        auto rand_point = [&rng]() {
            std::size_t pl = rng() % 5, ql = 1 + rng() % 4;
            return Point(Word::from_value(rng() & ((1u << pl) - 1), pl),
                         Word::from_value(rng() & ((1u << ql) - 1), ql));
        };
        Point x = rand_point(), t = rand_point();
        CHECK(xor_point(xor_point(x, t), t) == x);
    }
}

TEST_CASE("eventually periodic equality is canonical equality") {
    CHECK(Point::parse("0", "10") == Point::parse("", "01"));
    CHECK(Point::parse("0", "10") != Point::parse("", "10"));
    for (std::uint64_t i = 0; i < 16; ++i) {
        Point x = Point::parse("0", "10");
        Point y = Point::parse("", "01");
        CHECK(x.at(i) == y.at(i));
    }
}
