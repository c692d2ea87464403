#include "circword/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace circword {

Word shift(const Word& w, long long l) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no shift");
    }
    const long long n = static_cast<long long>(w.size());
    long long r = l % n;
    if (r < 0) {
        r += n;
    }
    return w.substr(static_cast<std::size_t>(r)) + w.substr(0, static_cast<std::size_t>(r));
}

Word fractional_power(const Word& w, std::size_t p) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no fractional power");
    }
    const std::size_t n = w.size();
    Word out;
    out.reserve(p);
    for (std::size_t i = 0; i < p / n; ++i) {
        out += w;
    }
    out.append(w, 0, p % n);
    return out;
}

std::vector<std::size_t> border_table(const Word& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> bt(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) {
            k = bt[k];
        }
        if (w[i] == w[k]) {
            ++k;
        }
        bt[i + 1] = k;
    }
    return bt;
}

std::vector<std::size_t> borders(const Word& w) {
    const auto bt = border_table(w);
    std::vector<std::size_t> out;
    std::size_t b = w.size();
    out.push_back(b);
    while (b > 0) {
        b = bt[b];
        out.push_back(b);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> periods(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no period");
    }
    std::vector<std::size_t> out;
    for (std::size_t b : borders(w)) {
        if (b < w.size()) {
            out.push_back(w.size() - b);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::size_t min_period(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no period");
    }
    return w.size() - border_table(w)[w.size()];
}

Word primitive_root(const Word& w) {
    return w.substr(0, min_period(w));
}

bool is_primitive(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("empty word is not classified");
    }
    const std::size_t p = min_period(w);
    return p == w.size() || w.size() % p != 0;
}

std::vector<Word> conjugates(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no conjugates");
    }
    // w = u^k with u primitive repeats after |u| rotations.
    const std::size_t p = min_period(w);
    const std::size_t count = (w.size() % p == 0) ? p : w.size();
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        out.push_back(shift(w, static_cast<long long>(j)));
    }
    return out;
}

std::size_t least_rotation_index(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no rotation");
    }
    // Booth's least-rotation algorithm over w·w.
    const Word ww = w + w;
    const long long m = static_cast<long long>(ww.size());
    std::vector<long long> f(ww.size(), -1);
    long long k = 0;
    for (long long j = 1; j < m; ++j) {
        const char sj = ww[static_cast<std::size_t>(j)];
        long long i = f[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && sj != ww[static_cast<std::size_t>(k + i + 1)]) {
            if (sj < ww[static_cast<std::size_t>(k + i + 1)]) {
                k = j - i - 1;
            }
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != ww[static_cast<std::size_t>(k)]) {
            if (sj < ww[static_cast<std::size_t>(k)]) {
                k = j;
            }
            f[static_cast<std::size_t>(j - k)] = -1;
        } else if (i == -1) {
            f[static_cast<std::size_t>(j - k)] = 0;
        } else {
            f[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    return static_cast<std::size_t>(k);
}

Rotation canonical_rotation(const Word& w) {
    const std::size_t j = least_rotation_index(w);
    return Rotation{shift(w, static_cast<long long>(j)), j};
}

std::optional<LsWitness> ls_check(const Word& x, const Word& b, const Word& y) {
    if (x.empty()) {
        throw std::invalid_argument("ls_check requires non-empty x");
    }
    if (x.size() != y.size()) {
        throw std::invalid_argument("ls_check requires |x| == |y|");
    }
    if (x + b != b + y) {
        return std::nullopt;
    }
    const std::size_t n = x.size();
    const std::size_t r = b.size() % n;
    const std::size_t q = b.size() / n;
    if (r > 0) {
        // b = x^q u with u the length-r prefix of x.
        return LsWitness{x.substr(0, r), x.substr(r), q};
    }
    if (q > 0) {
        // b = x^q: take u = x, v = empty, one power fewer.
        return LsWitness{x, Word{}, q - 1};
    }
    // b empty forces x == y; the only decompositions have empty u.
    return LsWitness{Word{}, x, 0};
}

}  // namespace circword
