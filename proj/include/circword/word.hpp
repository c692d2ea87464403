#pragma once

// Linear-word primitives: cyclic shift, fractional powers, borders and
// periods, primitivity, conjugates, canonical (least) rotation and the
// Lyndon-Schutzenberger border decomposition.
//
// Words are plain character strings over an ordered alphabet; the total
// order on symbols is code-point order. Positions are 1-based in the
// documentation, 0-based in code.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace circword {

using Word = std::string;

// shift(w, l) = w_{1+r}...w_n w_1...w_r with r = l mod |w|.
// Negative l rotates the other way: shift(w, -l) = shift(w, |w| - l).
// Throws std::invalid_argument on the empty word.
Word shift(const Word& w, long long l);

// w^{p/|w|}: floor(p/|w|) full copies of w followed by its
// length-(p mod |w|) prefix. Result has length exactly p; p = 0 gives
// the empty word. Throws std::invalid_argument on an empty base word.
Word fractional_power(const Word& w, std::size_t p);

// Failure function: bt[i] = length of the longest proper border of the
// length-i prefix of w, for i = 1..|w| (bt[0] = 0).
std::vector<std::size_t> border_table(const Word& w);

// All border lengths of w in ascending order. Always contains 0 and
// |w|. Defined for the empty word too (borders("") = {0}).
std::vector<std::size_t> borders(const Word& w);

// All periods of w in ascending order: { |w| - b : b border of w } \ {0}.
// |w| itself is always a period. Throws on the empty word.
std::vector<std::size_t> periods(const Word& w);

// Smallest period of w. Throws on the empty word.
std::size_t min_period(const Word& w);

// The shortest root of w: the prefix u of length min_period(w), which
// satisfies fractional_power(u, |w|) == w.
Word primitive_root(const Word& w);

// True iff w is not a proper integer power v^p, p > 1.
bool is_primitive(const Word& w);

// The set of distinct rotations of w, listed in rotation-index order
// (smallest shift first, first occurrence kept). Has |w| elements iff
// w is primitive.
std::vector<Word> conjugates(const Word& w);

struct Rotation {
    Word word;          // lexicographically least conjugate of w
    std::size_t index;  // smallest j with shift(w, j) == word

    bool operator==(const Rotation&) const = default;
};

// Index of the lexicographically least rotation of w (smallest such
// index when w is periodic). Booth's algorithm, O(|w|).
std::size_t least_rotation_index(const Word& w);

// Least conjugate together with its rotation index.
Rotation canonical_rotation(const Word& w);

// Witness for the Lyndon-Schutzenberger equation xb = by:
// x = uv, y = vu, b = (uv)^k u.
struct LsWitness {
    Word u;
    Word v;
    std::size_t k = 0;

    bool operator==(const LsWitness&) const = default;
};

// If xb == by, returns a witness decomposition; otherwise nullopt.
// u is non-empty except in the one degenerate case b == "" (where
// every witness forces u == ""). Requires |x| == |y| >= 1.
std::optional<LsWitness> ls_check(const Word& x, const Word& b, const Word& y);

}  // namespace circword
