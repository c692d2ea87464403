#include <doctest.h>

#include <random>
#include <stdexcept>

#include "circword/circular.hpp"
#include "circword/fibonacci.hpp"
#include "circword/word.hpp"
#include "oracles.hpp"

using namespace circword;

TEST_CASE("Fibonacci words") {
    CHECK_EQ(fib_word(1), "b");
    CHECK_EQ(fib_word(2), "a");
    CHECK_EQ(fib_word(3), "ab");
    CHECK_EQ(fib_word(5), "abaab");
    CHECK_EQ(fib_word(6), "abaababa");
    CHECK_THROWS_AS(fib_word(0), std::invalid_argument);
    CHECK_THROWS_AS(fib_word(31), std::invalid_argument);  // |f_31| > 10^6

    std::size_t a = 1, b = 1;
    for (std::size_t i = 3; i <= 20; ++i) {
        CHECK_EQ(fib_word(i), fib_word(i - 1) + fib_word(i - 2));
        const std::size_t len = a + b;
        a = b;
        b = len;
        CHECK_EQ(fib_word(i).size(), len);
    }
    for (std::size_t i = 1; i <= 16; ++i) {
        CHECK(is_primitive(fib_word(i)));
    }
}

TEST_CASE("Fibonacci number predicate") {
    for (std::size_t n : {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377}) {
        CHECK(is_fib_number(n));
    }
    for (std::size_t n : {0, 4, 6, 7, 9, 10, 12, 20, 100, 376, 378}) {
        CHECK_FALSE(is_fib_number(n));
    }
}

TEST_CASE("square factors") {
    const auto sq = squares_in("abaababa");
    CHECK(std::find(sq.begin(), sq.end(), "aba") != sq.end());
    CHECK_EQ(squares_in("ab"), std::vector<Word>{});
    CHECK_EQ(squares_in("aa"), std::vector<Word>{"a"});
    CHECK_THROWS_AS(squares_in(Word(10'001, 'a')), std::invalid_argument);
}

TEST_CASE("square factors agree with a position-by-position scan") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& w : oracle::binary_words(n)) {
            const auto got = squares_in(w);
            const auto want = oracle::square_roots(w);
            REQUIRE_EQ(std::vector<Word>(want.begin(), want.end()), got);
        }
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> len(1, 200);
    std::uniform_int_distribution<int> sym(0, 1);
    for (int i = 0; i < 40; ++i) {
        Word w(len(rng), 'a');
        for (char& c : w) {
            c = static_cast<char>('a' + sym(rng));
        }
        const auto got = squares_in(w);
        const auto want = oracle::square_roots(w);
        REQUIRE_EQ(std::vector<Word>(want.begin(), want.end()), got);
    }
}

TEST_CASE("square roots in Fibonacci words are Fibonacci conjugates") {
    for (std::size_t i = 3; i <= 14; ++i) {
        REQUIRE(check_seebold(i).ok());
    }

    // aba shows up squared in f_6 and is a conjugate of f_4 = aba.
    const auto sq = squares_in(fib_word(6));
    REQUIRE(std::find(sq.begin(), sq.end(), "aba") != sq.end());
    CHECK(CircularWord(fib_word(4)).contains("aba"));

    CHECK(squares_in(fib_word(3)).empty());
    CHECK_THROWS_AS(check_seebold(15), std::invalid_argument);
}

TEST_CASE("Fibonacci tries branch once per level below the top two") {
    for (std::size_t i = 2; i <= 12; ++i) {
        REQUIRE(check_fib_branching(i));
    }
    CHECK_THROWS_AS(check_fib_branching(1), std::invalid_argument);
    CHECK_THROWS_AS(check_fib_branching(13), std::invalid_argument);
}

TEST_CASE("Fibonacci tries have k+1 nodes on level k") {
    for (std::size_t i = 2; i <= 12; ++i) {
        REQUIRE(check_fib_factor_count(i));
    }
}

TEST_CASE("Fibonacci trie branching gaps are Fibonacci numbers") {
    for (std::size_t i = 2; i <= 12; ++i) {
        REQUIRE(check_fib_gaps(i));
    }
}

TEST_CASE("Fibonacci tries nest, except the two single-letter trees") {
    CHECK(check_fib_subtrees(5, 6));
    CHECK(check_fib_subtrees(6, 7));
    CHECK(check_fib_subtrees(3, 12));
    CHECK(check_fib_subtrees(2, 3));
    for (std::size_t j = 3; j <= 12; ++j) {
        CHECK(check_fib_subtrees(1, j));
        CHECK(check_fib_subtrees(2, j));
    }
    // The tree of the single letter b cannot embed into the tree of a.
    CHECK_FALSE(check_fib_subtrees(1, 2));
    CHECK_THROWS_AS(check_fib_subtrees(6, 6), std::invalid_argument);
    CHECK_THROWS_AS(check_fib_subtrees(7, 6), std::invalid_argument);
}
