#pragma once

// Finite Fibonacci words f_1 = b, f_2 = a, f_n = f_{n-1} f_{n-2}, plus
// the empirical checkers for their conjugate tries: square factors,
// branching structure, per-level factor counts, branching gaps and
// subtree nesting.

#include <cstddef>
#include <string>
#include <vector>

#include "circword/word.hpp"

namespace circword {

// The i-th finite Fibonacci word (1-based). Throws when the result
// would exceed 10^6 symbols.
Word fib_word(std::size_t i);

// True iff n is the length of some finite Fibonacci word:
// n in {1, 2, 3, 5, 8, 13, ...}.
bool is_fib_number(std::size_t n);

// All distinct words v such that vv is a factor of w, sorted. Throws
// when |w| > 10^4.
std::vector<Word> squares_in(const Word& w);

// For every square factor v^2 of f_i, v must have Fibonacci length and
// be a conjugate of the Fibonacci word of that length. Supported for
// i <= 14 (|f_14| = 377).
struct SquareRootReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};
SquareRootReport check_seebold(std::size_t i);

// Trie of the circular word of f_i has exactly one branching node on
// every level 0..|f_i|-2 and none above. Supported for 2 <= i <= 12.
bool check_fib_branching(std::size_t i);

// Trie of the circular word of f_i has min(k+1, |f_i|) nodes on level k.
bool check_fib_factor_count(std::size_t i);

// Every branching gap in the trie of the circular word of f_i is a
// Fibonacci number.
bool check_fib_gaps(std::size_t i);

// The trie of the circular word of f_i embeds root-first into the trie
// for f_j. Requires 1 <= i < j <= 12; throws when i >= j.
bool check_fib_subtrees(std::size_t i, std::size_t j);

}  // namespace circword
