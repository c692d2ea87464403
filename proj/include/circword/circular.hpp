#pragma once

// Circular words and their tuple representations.
//
// A circular word is the set of all conjugates of a linear word; it is
// stored through its canonical (lexicographically least) rotation, so
// equality is plain string equality on the canonical form.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "circword/word.hpp"

namespace circword {

class CircularWord {
public:
    // Throws std::invalid_argument on the empty word.
    explicit CircularWord(const Word& w);

    const Word& canonical() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }

    // The conjugate set, in rotation-index order from the canonical form.
    std::vector<Word> members() const { return conjugates(canonical_); }

    // True iff v is one of the conjugates.
    bool contains(const Word& v) const;

    bool operator==(const CircularWord&) const = default;
    auto operator<=>(const CircularWord&) const = default;

private:
    Word canonical_;
};

CircularWord circular_from(const Word& w);

// A pair (root, n): the word fractional_power(root, n) is a conjugate
// of the represented circular word of length n.
struct Representation {
    Word root;
    std::size_t length = 0;  // n, the length of the represented word

    bool operator==(const Representation&) const = default;
};

// True iff rep.length == cw.size(), |rep.root| <= rep.length and
// fractional_power(rep.root, rep.length) is a conjugate of cw.
bool is_representation(const Representation& rep, const CircularWord& cw);

// Weak periods: periods of at least one conjugate (union).
std::vector<std::size_t> weak_periods(const CircularWord& cw);

// Strong periods: periods of every conjugate (intersection).
std::vector<std::size_t> strong_periods(const CircularWord& cw);

std::size_t min_weak_period(const CircularWord& cw);

// All representations whose root length equals the smallest weak
// period, sorted lexicographically by root.
std::vector<Representation> minimal_representations(const CircularWord& cw);

// Border reduction: for u with border s of length border_len < |u|,
// the pair (y, 2|u| - border_len) with y = u minus its suffix s is a
// representation of the circular word of u·y. With the longest
// non-trivial border it is a minimal one. Throws if border_len is not
// a border of u.
Representation border_reduce(const Word& u, std::size_t border_len);

}  // namespace circword
