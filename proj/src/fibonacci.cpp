#include "circword/fibonacci.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "circword/circular.hpp"
#include "circword/trie.hpp"

namespace circword {

namespace {

constexpr std::size_t kFibWordGuard = 1'000'000;
constexpr std::size_t kSquareScanGuard = 10'000;
constexpr std::size_t kTrieCheckMax = 12;    // |f_12| = 144
constexpr std::size_t kSquareCheckMax = 14;  // |f_14| = 377

std::size_t fib_length(std::size_t i) {
    if (i <= 2) {
        return 1;
    }
    std::size_t a = 1, b = 1;  // |f_1|, |f_2|
    for (std::size_t k = 3; k <= i; ++k) {
        const std::size_t next = a + b;
        a = b;
        b = next;
    }
    return b;
}

}  // namespace

Word fib_word(std::size_t i) {
    if (i < 1) {
        throw std::invalid_argument("Fibonacci words are indexed from 1");
    }
    if (fib_length(i) > kFibWordGuard) {
        throw std::invalid_argument("Fibonacci word exceeds the length guard");
    }
    Word prev = "b";  // f_1
    if (i == 1) {
        return prev;
    }
    Word cur = "a";  // f_2
    for (std::size_t k = 3; k <= i; ++k) {
        Word next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool is_fib_number(std::size_t n) {
    if (n == 0) {
        return false;
    }
    std::size_t a = 1, b = 1;
    while (b < n) {
        const std::size_t next = a + b;
        a = b;
        b = next;
    }
    return b == n || a == n;
}

std::vector<Word> squares_in(const Word& w) {
    if (w.size() > kSquareScanGuard) {
        throw std::invalid_argument("word exceeds the square-scan guard");
    }
    std::set<Word> found;
    for (std::size_t len = 1; 2 * len <= w.size(); ++len) {
        for (std::size_t start = 0; start + 2 * len <= w.size(); ++start) {
            if (w.compare(start, len, w, start + len, len) == 0) {
                found.insert(w.substr(start, len));
            }
        }
    }
    return {found.begin(), found.end()};
}

SquareRootReport check_seebold(std::size_t i) {
    if (i < 1 || i > kSquareCheckMax) {
        throw std::invalid_argument("square-root check supports 1 <= i <= 14");
    }
    SquareRootReport report;
    for (const Word& v : squares_in(fib_word(i))) {
        if (!is_fib_number(v.size())) {
            report.violations.push_back("square root of non-Fibonacci length: " + v);
            continue;
        }
        bool conjugate_of_fib = false;
        for (std::size_t j = 1; fib_length(j) <= v.size(); ++j) {
            if (fib_length(j) == v.size() && CircularWord(fib_word(j)).contains(v)) {
                conjugate_of_fib = true;
                break;
            }
        }
        if (!conjugate_of_fib) {
            report.violations.push_back("square root is not a Fibonacci conjugate: " + v);
        }
    }
    return report;
}

namespace {

ConjugateTrie fib_trie(std::size_t i) {
    return ConjugateTrie(CircularWord(fib_word(i)));
}

void require_trie_range(std::size_t i, std::size_t lo) {
    if (i < lo || i > kTrieCheckMax) {
        throw std::invalid_argument("Fibonacci trie checks support indices up to 12");
    }
}

}  // namespace

bool check_fib_branching(std::size_t i) {
    require_trie_range(i, 2);
    const auto profile = fib_trie(i).branching_profile();
    const std::size_t n = profile.size();
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        if (profile[k] != 1) {
            return false;
        }
    }
    return profile[n - 1] == 0;
}

bool check_fib_factor_count(std::size_t i) {
    require_trie_range(i, 2);
    const ConjugateTrie t = fib_trie(i);
    const auto counts = t.level_counts();
    const std::size_t n = t.depth();
    for (std::size_t k = 0; k <= n; ++k) {
        if (counts[k] != std::min(k + 1, n)) {
            return false;
        }
    }
    return true;
}

bool check_fib_gaps(std::size_t i) {
    require_trie_range(i, 2);
    const auto gaps = branching_gaps(fib_trie(i));
    return std::all_of(gaps.begin(), gaps.end(), [](std::size_t g) { return is_fib_number(g); });
}

bool check_fib_subtrees(std::size_t i, std::size_t j) {
    if (i >= j) {
        throw std::invalid_argument("subtree check requires i < j");
    }
    if (i < 1 || j > kTrieCheckMax) {
        throw std::invalid_argument("subtree check supports 1 <= i < j <= 12");
    }
    return is_subtree(fib_trie(i), fib_trie(j));
}

}  // namespace circword
