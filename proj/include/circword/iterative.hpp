#pragma once

// Iterative representations of circular words: a 2m-tuple
// (u, l1, k1, ..., l_{m-1}, k_{m-1}, l_m) that rebuilds a circular word
// from a short root by alternating fractional powers and cyclic shifts.
//
// decode() replays the tuple; greedy_encode() compresses a circular
// word by repeatedly replacing the current word with a shortest root of
// one of its conjugates; optimal_encode() finds, by exhaustive backward
// search, a tuple with the shortest possible root and then the fewest
// fractional-power steps.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circword/circular.hpp"
#include "circword/word.hpp"

namespace circword {

inline constexpr std::size_t kDefaultOptimalGuard = 24;

// One intermediate level: expand to `length`, then rotate by `rot`.
struct PowerStep {
    std::size_t length = 0;  // l_i
    std::size_t rot = 0;     // k_i

    bool operator==(const PowerStep&) const = default;
};

struct IterativeRepresentation {
    Word root;                    // u
    std::vector<PowerStep> steps; // levels 1..m-1
    std::size_t final_len = 0;    // l_m

    // m: number of fractional-power applications during decoding.
    std::size_t power_count() const { return steps.size() + 1; }

    // Tuple text, e.g. "baa,4,0,6,4,14".
    std::string to_tuple() const;

    // Parses tuple text; throws std::invalid_argument naming the
    // offending field on malformed input.
    static IterativeRepresentation parse_tuple(const std::string& text);

    bool operator==(const IterativeRepresentation&) const = default;
};

// The words u_0, u_1, ..., u_{m-1} followed by the final linear
// expansion of length final_len. Throws on an empty root or a length
// chain that ever shrinks.
std::vector<Word> decode_trace(const IterativeRepresentation& rep);

// The circular word the tuple represents.
CircularWord decode(const IterativeRepresentation& rep);

// Linear reconstruction: the final expansion shifted by final_shift.
Word decode_linear(const IterativeRepresentation& rep, std::size_t final_shift);

// One reduction step of the greedy loop: if some conjugate of u has a
// period p < |u|, returns the root v of the smallest-index such
// conjugate together with the shift k that restores u from v
// (u == shift(fractional_power(v, |u|), k)). Returns nullopt when u is
// already a minimal root.
struct GreedyStep {
    Word reduced;        // v
    std::size_t rot = 0; // k

    bool operator==(const GreedyStep&) const = default;
};
std::optional<GreedyStep> greedy_step(const Word& u);

// Greedy encoder: repeats greedy_step from the canonical form down to a
// minimal root. The outermost level keeps no shift (circular words are
// shift-invariant), so the tuple ends with final_len = cw.size().
IterativeRepresentation greedy_encode(const CircularWord& cw);

// Exhaustive optimal encoder: minimizes root length, then the number of
// fractional-power applications m, then the tuple itself
// (lexicographically, field by field). Throws std::invalid_argument
// when cw.size() > max_len_guard.
IterativeRepresentation optimal_encode(const CircularWord& cw,
                                       std::size_t max_len_guard = kDefaultOptimalGuard);

// Sweep over all binary words w, 1 <= |w| <= max_n (max_n <= 16):
// checks that the greedy root never exceeds two letters and that every
// binary word of length >= 3 has a conjugate with a non-trivial border.
struct BoundCheckReport {
    std::vector<std::string> violations;
    std::size_t words_checked = 0;

    bool ok() const { return violations.empty(); }
};
BoundCheckReport minimal_root_length_bound_check(std::size_t max_n);

}  // namespace circword
