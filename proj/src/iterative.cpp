#include "circword/iterative.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace circword {

namespace {

std::string join_fields(const Word& root, const std::vector<PowerStep>& steps,
                        std::size_t final_len) {
    std::string out = root;
    for (const PowerStep& st : steps) {
        out += ',' + std::to_string(st.length) + ',' + std::to_string(st.rot);
    }
    out += ',' + std::to_string(final_len);
    return out;
}

std::size_t parse_count_field(const std::string& field, std::size_t index) {
    if (field.empty()) {
        throw std::invalid_argument("tuple field " + std::to_string(index) + ": empty");
    }
    std::size_t value = 0;
    for (char c : field) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("tuple field " + std::to_string(index) +
                                        ": expected a non-negative integer, got '" + field + "'");
        }
        const auto digit = static_cast<std::size_t>(c - '0');
        if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
            throw std::invalid_argument("tuple field " + std::to_string(index) +
                                        ": integer out of range");
        }
        value = value * 10 + digit;
    }
    return value;
}

}  // namespace

std::string IterativeRepresentation::to_tuple() const {
    return join_fields(root, steps, final_len);
}

IterativeRepresentation IterativeRepresentation::parse_tuple(const std::string& text) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(',', start);
        fields.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    if (fields.size() < 2) {
        throw std::invalid_argument("tuple: expected a root followed by at least one integer");
    }
    if (fields.size() % 2 != 0) {
        throw std::invalid_argument("tuple: expected an odd number of integers after the root");
    }
    IterativeRepresentation rep;
    rep.root = fields[0];
    if (rep.root.empty()) {
        throw std::invalid_argument("tuple field 1: empty root");
    }
    for (std::size_t i = 1; i + 1 < fields.size(); i += 2) {
        rep.steps.push_back(PowerStep{parse_count_field(fields[i], i + 1),
                                      parse_count_field(fields[i + 1], i + 2)});
    }
    rep.final_len = parse_count_field(fields.back(), fields.size());
    return rep;
}

std::vector<Word> decode_trace(const IterativeRepresentation& rep) {
    if (rep.root.empty()) {
        throw std::invalid_argument("iterative representation has an empty root");
    }
    std::vector<Word> trace{rep.root};
    Word cur = rep.root;
    for (const PowerStep& st : rep.steps) {
        if (st.length < cur.size()) {
            throw std::invalid_argument("non-monotone length chain");
        }
        cur = shift(fractional_power(cur, st.length),
                    static_cast<long long>(st.rot % st.length));
        trace.push_back(cur);
    }
    if (rep.final_len < cur.size()) {
        throw std::invalid_argument("non-monotone length chain");
    }
    trace.push_back(fractional_power(cur, rep.final_len));
    return trace;
}

CircularWord decode(const IterativeRepresentation& rep) {
    return CircularWord(decode_trace(rep).back());
}

Word decode_linear(const IterativeRepresentation& rep, std::size_t final_shift) {
    return shift(decode_trace(rep).back(), static_cast<long long>(final_shift));
}

std::optional<GreedyStep> greedy_step(const Word& u) {
    if (u.empty()) {
        throw std::invalid_argument("empty word has no greedy step");
    }
    std::size_t best = u.size();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const std::size_t p = min_period(shift(u, static_cast<long long>(j)));
        if (p < best) {
            best = p;
            best_j = j;
        }
    }
    if (best == u.size()) {
        return std::nullopt;
    }
    const Word rotated = shift(u, static_cast<long long>(best_j));
    return GreedyStep{rotated.substr(0, best), (u.size() - best_j) % u.size()};
}

IterativeRepresentation greedy_encode(const CircularWord& cw) {
    Word u = cw.canonical();
    std::vector<PowerStep> inner;
    bool outermost = true;
    while (auto st = greedy_step(u)) {
        if (!outermost) {
            inner.push_back(PowerStep{u.size(), st->rot});
        }
        outermost = false;
        u = st->reduced;
    }
    std::reverse(inner.begin(), inner.end());
    return IterativeRepresentation{u, std::move(inner), cw.size()};
}

IterativeRepresentation optimal_encode(const CircularWord& cw, std::size_t max_len_guard) {
    if (cw.size() > max_len_guard) {
        throw std::invalid_argument("instance exceeds optimal-search guard");
    }
    const std::size_t n = cw.size();
    const auto mems = cw.members();

    // layers[t] = words reachable by exactly t backward reduction steps.
    // Backward step from x: pick a rotation of x and a proper period p of
    // it, keep the length-p prefix. The first step starts from the member
    // set itself, which already absorbs the rotation freedom.
    std::vector<std::set<Word>> layers;
    layers.emplace_back(mems.begin(), mems.end());
    {
        std::set<Word> first;
        for (const Word& w : mems) {
            for (std::size_t p : periods(w)) {
                if (p < w.size()) {
                    first.insert(w.substr(0, p));
                }
            }
        }
        if (!first.empty()) {
            layers.push_back(std::move(first));
        }
    }
    while (layers.size() > 1) {
        std::set<Word> next;
        for (const Word& x : layers.back()) {
            for (std::size_t j = 0; j < x.size(); ++j) {
                const Word xs = shift(x, static_cast<long long>(j));
                for (std::size_t p : periods(xs)) {
                    if (p < xs.size()) {
                        next.insert(xs.substr(0, p));
                    }
                }
            }
        }
        if (next.empty()) {
            break;
        }
        layers.push_back(std::move(next));
    }

    // Pick the best root: shortest, then fewest power applications,
    // then lexicographically least.
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    std::size_t best_m = std::numeric_limits<std::size_t>::max();
    Word best_root;
    for (std::size_t t = 0; t < layers.size(); ++t) {
        const std::size_t m = std::max<std::size_t>(1, t);
        for (const Word& x : layers[t]) {
            if (x.size() < best_len ||
                (x.size() == best_len && (m < best_m || (m == best_m && x < best_root)))) {
                best_len = x.size();
                best_m = m;
                best_root = x;
            }
        }
    }

    // Rebuild the lexicographically least step sequence for that root:
    // at each level take the smallest expansion length, then the
    // smallest shift, that still completes within the step budget.
    std::vector<PowerStep> steps;
    if (best_m >= 2) {
        Word cur = best_root;
        for (std::size_t remaining = best_m; remaining > 1; --remaining) {
            bool advanced = false;
            for (std::size_t len = cur.size() + 1; len < n && !advanced; ++len) {
                const Word z = fractional_power(cur, len);
                for (std::size_t k = 0; k < len && !advanced; ++k) {
                    const Word candidate = shift(z, static_cast<long long>(k));
                    if (layers[remaining - 1].contains(candidate)) {
                        steps.push_back(PowerStep{len, k});
                        cur = candidate;
                        advanced = true;
                    }
                }
            }
            if (!advanced) {
                throw std::logic_error("optimal search lost its reconstruction path");
            }
        }
    }
    return IterativeRepresentation{best_root, std::move(steps), n};
}

BoundCheckReport minimal_root_length_bound_check(std::size_t max_n) {
    if (max_n < 1 || max_n > 16) {
        throw std::invalid_argument("bound check supports 1 <= max_n <= 16");
    }
    BoundCheckReport report;
    for (std::size_t n = 1; n <= max_n; ++n) {
        Word w(n, 'a');
        for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = (bits >> i) & 1 ? 'b' : 'a';
            }
            ++report.words_checked;
            const CircularWord cw(w);
            const auto rep = greedy_encode(cw);
            if (rep.root.size() > 2) {
                report.violations.push_back("greedy root longer than two letters: " + w);
            }
            if (n >= 3 && min_weak_period(cw) >= n) {
                report.violations.push_back("no conjugate with a non-trivial border: " + w);
            }
        }
    }
    return report;
}

}  // namespace circword
