#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "circword/iterative.hpp"
#include "oracles.hpp"

using namespace circword;

namespace {

IterativeRepresentation rep_of(const std::string& tuple) {
    return IterativeRepresentation::parse_tuple(tuple);
}

}  // namespace

TEST_CASE("decoding replays powers and shifts") {
    const auto rep = rep_of("baa,4,0,6,4,14");
    const auto trace = decode_trace(rep);
    REQUIRE_EQ(trace.size(), 4);
    CHECK_EQ(trace[0], "baa");
    CHECK_EQ(trace[1], "baab");
    CHECK_EQ(trace[2], "babaab");
    CHECK_EQ(trace[3], "babaabbabaabba");
    CHECK_EQ(decode(rep), CircularWord("bababaabbabaab"));
}

TEST_CASE("a tuple extended at the root decodes to the same circular word") {
    const auto rep = rep_of("ab,3,1,4,0,6,4,14");
    const auto trace = decode_trace(rep);
    REQUIRE_EQ(trace.size(), 5);
    CHECK_EQ(trace[0], "ab");
    CHECK_EQ(trace[1], "baa");
    CHECK_EQ(trace[2], "baab");
    CHECK_EQ(trace[3], "babaab");
    CHECK_EQ(decode(rep), CircularWord("bababaabbabaab"));
}

TEST_CASE("decode: more frozen examples") {
    CHECK_EQ(decode(rep_of("ab,5,0,6")), CircularWord("ababaa"));
    CHECK_EQ(decode(rep_of("ab,2")), CircularWord("ab"));
    CHECK_EQ(decode(rep_of("a,4")), CircularWord("aaaa"));
}

TEST_CASE("linear decoding applies one final shift") {
    CHECK_EQ(decode_linear(rep_of("baa,4,0,6,4,14"), 0), "babaabbabaabba");
    CHECK_EQ(decode_linear(rep_of("baa,4,0,6,4,14"), 3), "aabbabaabbabab");
    CHECK_EQ(decode_linear(rep_of("ab,3"), 0), "aba");
    CHECK_EQ(decode_linear(rep_of("baa,4,0,6,4,14"), 14),
             decode_linear(rep_of("baa,4,0,6,4,14"), 0));
}

TEST_CASE("decode normalizes out-of-range shifts") {
    CHECK_EQ(decode_trace(rep_of("ab,3,4,6"))[1], decode_trace(rep_of("ab,3,1,6"))[1]);
    CHECK_EQ(decode(rep_of("ab,3,4,6")), decode(rep_of("ab,3,1,6")));
}

TEST_CASE("decode rejects bad chains") {
    CHECK_THROWS_AS(decode(rep_of("ab,3,0,2")), std::invalid_argument);
    CHECK_THROWS_AS(decode(rep_of("abc,2")), std::invalid_argument);
    CHECK_THROWS_AS(decode(IterativeRepresentation{"", {}, 4}), std::invalid_argument);
    CHECK_EQ(decode(rep_of("ab,2,0,2")), CircularWord("ab"));  // equal lengths tolerated
}

TEST_CASE("tuple text round-trips and rejects malformed input") {
    const auto rep = rep_of("baa,4,0,6,4,14");
    CHECK_EQ(rep.to_tuple(), "baa,4,0,6,4,14");
    CHECK_EQ(rep.root, "baa");
    CHECK_EQ(rep.steps, std::vector<PowerStep>{{4, 0}, {6, 4}});
    CHECK_EQ(rep.final_len, 14);
    CHECK_EQ(rep.power_count(), 3);

    CHECK_THROWS_AS(rep_of("ab"), std::invalid_argument);
    CHECK_THROWS_AS(rep_of("ab,3,0"), std::invalid_argument);
    CHECK_THROWS_AS(rep_of("ab,x"), std::invalid_argument);
    CHECK_THROWS_AS(rep_of(",3"), std::invalid_argument);
    CHECK_THROWS_AS(rep_of("ab,3,,5"), std::invalid_argument);
    CHECK_THROWS_WITH(rep_of("ab,3,0,4x"), doctest::Contains("field 4"));
    CHECK_THROWS_WITH(rep_of("ab,99999999999999999999"), doctest::Contains("out of range"));
}

TEST_CASE("decode is total on well-formed tuples") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> root_len(1, 4);
    std::uniform_int_distribution<std::size_t> growth(0, 3);
    std::uniform_int_distribution<std::size_t> step_count(0, 4);
    std::uniform_int_distribution<int> sym(0, 1);
    std::uniform_int_distribution<std::size_t> any_rot(0, 50);
    for (int trial = 0; trial < 500; ++trial) {
        IterativeRepresentation rep;
        rep.root.resize(root_len(rng));
        for (char& c : rep.root) {
            c = static_cast<char>('a' + sym(rng));
        }
        std::size_t len = rep.root.size();
        const std::size_t m = step_count(rng);
        for (std::size_t i = 0; i < m; ++i) {
            len += growth(rng);  // equal lengths allowed for decoding
            rep.steps.push_back(PowerStep{len, any_rot(rng)});
        }
        rep.final_len = len + growth(rng);
        const auto trace = decode_trace(rep);
        REQUIRE_EQ(trace.size(), rep.power_count() + 1);
        for (std::size_t i = 0; i < rep.steps.size(); ++i) {
            REQUIRE_EQ(trace[i + 1].size(), rep.steps[i].length);
        }
        REQUIRE_EQ(trace.back().size(), rep.final_len);
        REQUIRE_EQ(decode(rep).size(), rep.final_len);
    }
}

TEST_CASE("greedy encoder: frozen examples") {
    CHECK_EQ(greedy_encode(CircularWord("ababaa")).to_tuple(), "ab,3,0,4,0,6");
    CHECK_EQ(greedy_encode(CircularWord("aaaa")).to_tuple(), "a,4");
    CHECK_EQ(greedy_encode(CircularWord("ab")).to_tuple(), "ab,2");
    CHECK_EQ(greedy_encode(CircularWord("a")).to_tuple(), "a,1");
    // full reduction of the 14-letter worked example down to root ab
    CHECK_EQ(greedy_encode(CircularWord("bababaabbabaab")).to_tuple(),
             "ab,3,1,4,0,6,4,14");
}

TEST_CASE("greedy step picks the first conjugate with the smallest root") {
    CHECK_EQ(greedy_step("baa"), GreedyStep{"ab", 1});
    CHECK_EQ(greedy_step("aaabab"), GreedyStep{"abaa", 2});
    CHECK_FALSE(greedy_step("ab").has_value());
    CHECK_FALSE(greedy_step("abc").has_value());
    CHECK_EQ(greedy_step("aaaa"), GreedyStep{"a", 0});
    // the recorded shift restores the input from the reduced word
    const auto st = greedy_step("baa");
    CHECK_EQ(shift(fractional_power(st->reduced, 3), static_cast<long long>(st->rot)), "baa");
}

TEST_CASE("optimal encoder: frozen examples") {
    CHECK_EQ(optimal_encode(CircularWord("ababaa")).to_tuple(), "ab,5,0,6");
    CHECK_EQ(optimal_encode(CircularWord("abaab")).to_tuple(), "ab,5");
    CHECK_EQ(optimal_encode(CircularWord("abaab")).power_count(), 1);
    CHECK_EQ(optimal_encode(CircularWord("ab")).to_tuple(), "ab,2");
    CHECK_THROWS_AS(optimal_encode(CircularWord(Word(25, 'a') + "b")),
                    std::invalid_argument);
}

TEST_CASE("round trip through the greedy encoder") {
    for (std::size_t n = 1; n <= 11; ++n) {
        for (const auto& w : oracle::binary_words(n)) {
            const CircularWord cw(w);
            REQUIRE_EQ(decode(greedy_encode(cw)), cw);
        }
    }
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> len(1, 20);
    std::uniform_int_distribution<int> sym(0, 2);
    for (int i = 0; i < 60; ++i) {
        Word w(len(rng), 'a');
        for (char& c : w) {
            c = static_cast<char>('a' + sym(rng));
        }
        const CircularWord cw(w);
        REQUIRE_EQ(decode(greedy_encode(cw)), cw);
    }
}

namespace {

void check_chain(const IterativeRepresentation& rep) {
    std::size_t prev = rep.root.size();
    for (const auto& st : rep.steps) {
        REQUIRE_GT(st.length, prev);
        REQUIRE_LT(st.rot, st.length);
        prev = st.length;
    }
    if (rep.steps.empty()) {
        REQUIRE_LE(rep.root.size(), rep.final_len);
    } else {
        REQUIRE_GT(rep.final_len, prev);
    }
}

}  // namespace

TEST_CASE("encoder outputs have strictly growing length chains") {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& w : oracle::binary_words(n)) {
            const CircularWord cw(w);
            const auto g = greedy_encode(cw);
            check_chain(g);
            const auto tr = decode_trace(g);
            REQUIRE_EQ(tr.back().size(), g.final_len);
            const auto o = optimal_encode(cw);
            check_chain(o);
            REQUIRE_EQ(IterativeRepresentation::parse_tuple(g.to_tuple()), g);
            REQUIRE_EQ(IterativeRepresentation::parse_tuple(o.to_tuple()), o);
        }
    }
}

TEST_CASE("optimal never loses to greedy on (root length, power count)") {
    bool strictly_better_somewhere = false;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& w : oracle::binary_words(n)) {
            const CircularWord cw(w);
            const auto g = greedy_encode(cw);
            const auto o = optimal_encode(cw);
            REQUIRE_EQ(decode(o), cw);
            const auto o_key = std::make_pair(o.root.size(), o.power_count());
            const auto g_key = std::make_pair(g.root.size(), g.power_count());
            REQUIRE_LE(o_key.first, g_key.first);
            REQUIRE(o_key <= g_key);
            if (o_key < g_key) {
                strictly_better_somewhere = true;
            }
        }
    }
    CHECK(strictly_better_somewhere);
    CHECK_EQ(greedy_encode(CircularWord("ababaa")).power_count(), 3);
    CHECK_EQ(optimal_encode(CircularWord("ababaa")).power_count(), 2);
}

namespace {

constexpr std::size_t kUnreachable = 1000;

// Fewest fractional powers needed to expand `cur` into a member of the
// target set through strictly growing chains. Forward dynamic
// programming over words, independent of the backward layer search.
std::size_t powers_to_target(const Word& cur, const std::set<Word>& members, std::size_t n,
                             std::map<Word, std::size_t>& memo) {
    if (const auto it = memo.find(cur); it != memo.end()) {
        return it->second;
    }
    std::size_t best = kUnreachable;
    if (members.count(fractional_power(cur, n))) {
        best = 1;
    }
    for (std::size_t len = cur.size() + 1; len < n; ++len) {
        const Word z = fractional_power(cur, len);
        for (std::size_t k = 0; k < len; ++k) {
            const auto sub =
                powers_to_target(shift(z, static_cast<long long>(k)), members, n, memo);
            if (sub != kUnreachable) {
                best = std::min(best, 1 + sub);
            }
        }
    }
    memo[cur] = best;
    return best;
}

// True minimum of (root length, power count) over every valid tuple.
std::pair<std::size_t, std::size_t> best_tuple_by_enumeration(const CircularWord& cw) {
    const auto mems = oracle::rotation_set(cw.canonical());
    std::set<char> alphabet;
    for (char c : cw.canonical()) {
        alphabet.insert(c);
    }
    const std::string sigma(alphabet.begin(), alphabet.end());
    std::map<Word, std::size_t> memo;
    std::pair<std::size_t, std::size_t> best{kUnreachable, kUnreachable};
    for (std::size_t root_len = 1; root_len <= cw.size(); ++root_len) {
        for (const auto& root : oracle::words_over(sigma, root_len)) {
            const auto m = powers_to_target(root, mems, cw.size(), memo);
            if (m != kUnreachable) {
                best = std::min(best, {root_len, m});
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("optimal encoder matches full forward enumeration") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& w : oracle::binary_words(n)) {
            const CircularWord cw(w);
            const auto o = optimal_encode(cw);
            const auto want = best_tuple_by_enumeration(cw);
            REQUIRE_EQ(o.root.size(), want.first);
            REQUIRE_EQ(o.power_count(), want.second);
        }
    }
    for (const Word w : {"abcabc", "aabcbc", "abcab"}) {
        const CircularWord cw(w);
        const auto o = optimal_encode(cw);
        const auto want = best_tuple_by_enumeration(cw);
        REQUIRE_EQ(o.root.size(), want.first);
        REQUIRE_EQ(o.power_count(), want.second);
    }
}

TEST_CASE("greedy roots of binary words never exceed two letters") {
    const auto report = minimal_root_length_bound_check(12);
    CHECK(report.ok());
    CHECK_EQ(report.words_checked, (std::size_t{1} << 13) - 2);
    CHECK_THROWS_AS(minimal_root_length_bound_check(17), std::invalid_argument);

    // explicit witness behind the sweep: aab has the conjugate aba,
    // which carries the border a
    CHECK(CircularWord("aab").contains("aba"));
    CHECK_EQ(borders("aba"), std::vector<std::size_t>{0, 1, 3});
    CHECK_LT(min_weak_period(CircularWord("aab")), 3);
}

TEST_CASE("ternary roots can be longer than two letters") {
    const auto rep = greedy_encode(CircularWord("abc"));
    CHECK_EQ(rep.root.size(), 3);
    CHECK_EQ(decode(rep), CircularWord("abc"));
}
