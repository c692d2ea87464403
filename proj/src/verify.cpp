#include "circword/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "circword/circular.hpp"
#include "circword/fibonacci.hpp"
#include "circword/iterative.hpp"
#include "circword/trie.hpp"
#include "circword/word.hpp"

namespace circword::verify {

namespace {

using CheckFn = std::function<void(const std::string&, std::vector<Violation>&)>;

std::vector<Word> words_over(const std::string& alphabet, std::size_t min_len,
                             std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t n = min_len; n <= max_len; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            total *= alphabet.size();
        }
        Word w(n, alphabet[0]);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = alphabet[rest % alphabet.size()];
                rest /= alphabet.size();
            }
            out.push_back(w);
        }
    }
    return out;
}

std::vector<Violation> run_items(const std::vector<std::string>& items, std::size_t jobs,
                                 const CheckFn& check) {
    std::vector<Violation> out;
    if (jobs <= 1 || items.size() < 2) {
        for (const auto& item : items) {
            check(item, out);
        }
    } else {
        const std::size_t workers = std::min(jobs, items.size());
        std::vector<std::vector<Violation>> sinks(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < items.size(); i += workers) {
                        check(items[i], sinks[t]);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        for (const auto& err : errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }
        for (auto& sink : sinks) {
            out.insert(out.end(), sink.begin(), sink.end());
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.input, a.detail) < std::tie(b.input, b.detail);
    });
    return out;
}

void push(std::vector<Violation>& sink, std::string suite, std::string input,
          std::string detail) {
    sink.push_back(Violation{std::move(suite), std::move(input), std::move(detail)});
}

// --- individual suites ----------------------------------------------------

Outcome suite_theorem1(std::size_t max_len, std::size_t jobs) {
    const auto items = words_over("ab", 2, max_len);
    const auto check = [](const std::string& u, std::vector<Violation>& sink) {
        const auto bs = borders(u);
        std::size_t longest = 0;
        for (std::size_t b : bs) {
            if (b > 0 && b < u.size()) {
                longest = std::max(longest, b);
            }
        }
        for (std::size_t b : bs) {
            if (b == 0 || b >= u.size()) {
                continue;
            }
            const Representation rep = border_reduce(u, b);
            const CircularWord target(u + rep.root);
            if (!is_representation(rep, target)) {
                push(sink, "theorem1", u,
                     "border " + std::to_string(b) + " reduction is not a representation");
            } else if (b == longest && rep.root.size() != min_weak_period(target)) {
                push(sink, "theorem1", u,
                     "longest-border reduction is not minimal: root length " +
                         std::to_string(rep.root.size()) + ", smallest weak period " +
                         std::to_string(min_weak_period(target)));
            }
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_theorem2(std::size_t max_len, std::size_t jobs) {
    (void)jobs;  // single linear sweep, already fast
    const auto report = minimal_root_length_bound_check(max_len);
    Outcome out;
    out.checked = report.words_checked;
    for (const auto& v : report.violations) {
        push(out.violations, "theorem2", v, "bound check failed");
    }
    return out;
}

Outcome suite_prop1(std::size_t max_len, std::size_t jobs) {
    auto items = words_over("ab", 1, max_len);
    std::erase_if(items, [](const Word& w) { return !is_primitive(w); });
    const auto check = [](const std::string& w, std::vector<Violation>& sink) {
        if (!check_level_n_minus_2(ConjugateTrie(CircularWord(w)))) {
            push(sink, "prop1", w, "branching on level |w|-2 without single-branch levels");
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_cascade(std::size_t max_len, std::size_t jobs) {
    const auto items = words_over("ab", 1, max_len);
    const std::size_t lcp_cap = std::min<std::size_t>(max_len, 10);
    const auto check = [lcp_cap](const std::string& w, std::vector<Violation>& sink) {
        const CircularWord cw(w);
        const ConjugateTrie t(cw);
        if (!check_branching_cascade(t)) {
            push(sink, "cascade", w, "branching level without branching level below it");
        }
        if (w.size() > lcp_cap) {
            return;
        }
        const auto profile = t.branching_profile();
        for (std::size_t ell = 0; ell < profile.size(); ++ell) {
            const auto witness = lcp_branching_witness(cw, ell);
            if ((profile[ell] >= 1) != witness.has_value()) {
                push(sink, "cascade", w,
                     "branch/lcp-witness mismatch at level " + std::to_string(ell));
                continue;
            }
            if (witness) {
                const auto& [a, b] = *witness;
                std::size_t lcp = 0;
                while (lcp < a.size() && a[lcp] == b[lcp]) {
                    ++lcp;
                }
                if (a == b || lcp != ell || !cw.contains(a) || !cw.contains(b)) {
                    push(sink, "cascade", w,
                         "invalid lcp witness at level " + std::to_string(ell));
                }
            }
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_roundtrip(std::size_t max_len, std::size_t jobs) {
    auto items = words_over("ab", 1, max_len);
    std::mt19937 rng(1729);
    std::uniform_int_distribution<std::size_t> len_dist(1, 20);
    std::uniform_int_distribution<int> sym_dist(0, 2);
    for (int i = 0; i < 200; ++i) {
        Word w(len_dist(rng), 'a');
        for (char& c : w) {
            c = static_cast<char>('a' + sym_dist(rng));
        }
        items.push_back(std::move(w));
    }
    const auto check = [](const std::string& w, std::vector<Violation>& sink) {
        const CircularWord cw(w);
        const auto rep = greedy_encode(cw);
        if (decode(rep) != cw) {
            push(sink, "roundtrip", w, "decode(greedy_encode(w)) differs: " + rep.to_tuple());
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_factor_set(std::size_t max_len, std::size_t jobs) {
    const auto items = words_over("ab", 1, max_len);
    const auto check = [](const std::string& w, std::vector<Violation>& sink) {
        const Word ww = w + w;
        std::set<Word> factors;
        for (std::size_t i = 0; i + w.size() <= ww.size(); ++i) {
            factors.insert(ww.substr(i, w.size()));
        }
        const auto conj = conjugates(w);
        const std::set<Word> conj_set(conj.begin(), conj.end());
        if (conj_set != factors) {
            push(sink, "factor-set", w, "conjugate set differs from length-|w| factors of ww");
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_ls_lemma(std::size_t max_x, std::size_t jobs) {
    const auto items = words_over("ab", 1, max_x);
    const std::size_t max_b = max_x + 3;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= max_x; ++n) {
        std::size_t xs = 1;
        for (std::size_t i = 0; i < n; ++i) {
            xs *= 2;
        }
        std::size_t bs = 0;
        for (std::size_t lb = 0; lb <= max_b; ++lb) {
            std::size_t cnt = 1;
            for (std::size_t i = 0; i < lb; ++i) {
                cnt *= 2;
            }
            bs += cnt;
        }
        checked += xs * xs * bs;
    }
    const auto check = [max_b](const std::string& x, std::vector<Violation>& sink) {
        const auto ys = words_over("ab", x.size(), x.size());
        const auto all_b = words_over("ab", 0, max_b);
        for (const Word& y : ys) {
            for (const Word& b : all_b) {
                const bool equal = (x + b == b + y);
                const auto witness = ls_check(x, b, y);
                if (witness.has_value() != equal) {
                    push(sink, "ls-lemma", x + "|" + b + "|" + y,
                         equal ? "missing witness" : "witness for unequal sides");
                    continue;
                }
                if (witness) {
                    const Word uv = witness->u + witness->v;
                    Word expect_b;
                    for (std::size_t i = 0; i < witness->k; ++i) {
                        expect_b += uv;
                    }
                    expect_b += witness->u;
                    if (uv != x || witness->v + witness->u != y || expect_b != b) {
                        push(sink, "ls-lemma", x + "|" + b + "|" + y, "invalid witness");
                    }
                }
            }
        }
    };
    Outcome out;
    out.violations = run_items(items, jobs, check);
    out.checked = checked;
    return out;
}

Outcome suite_fib_single(const std::string& suite, std::size_t lo, std::size_t fib_max,
                         std::size_t jobs, const std::function<bool(std::size_t)>& pred) {
    std::vector<std::string> items;
    for (std::size_t i = lo; i <= fib_max; ++i) {
        items.push_back(std::to_string(i));
    }
    const auto check = [&suite, &pred](const std::string& item, std::vector<Violation>& sink) {
        const std::size_t i = static_cast<std::size_t>(std::stoul(item));
        if (!pred(i)) {
            push(sink, suite, item, "check failed at index " + item);
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_fib_subtree(std::size_t fib_max, std::size_t jobs) {
    std::vector<std::string> items;
    for (std::size_t i = 1; i < fib_max; ++i) {
        for (std::size_t j = i + 1; j <= fib_max; ++j) {
            items.push_back(std::to_string(i) + "," + std::to_string(j));
        }
    }
    const auto check = [](const std::string& item, std::vector<Violation>& sink) {
        const auto comma = item.find(',');
        const std::size_t i = static_cast<std::size_t>(std::stoul(item.substr(0, comma)));
        const std::size_t j = static_cast<std::size_t>(std::stoul(item.substr(comma + 1)));
        if (!check_fib_subtrees(i, j)) {
            push(sink, "fib-subtree", item, "tree " + std::to_string(i) +
                                                " does not embed into tree " + std::to_string(j));
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

Outcome suite_seebold(std::size_t fib_max, std::size_t jobs) {
    std::vector<std::string> items;
    for (std::size_t i = 3; i <= fib_max; ++i) {
        items.push_back(std::to_string(i));
    }
    const auto check = [](const std::string& item, std::vector<Violation>& sink) {
        const std::size_t i = static_cast<std::size_t>(std::stoul(item));
        for (const auto& v : check_seebold(i).violations) {
            push(sink, "seebold", item, v);
        }
    };
    return Outcome{run_items(items, jobs, check), items.size()};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "theorem1",   "theorem2",         "prop1",    "cascade",
        "roundtrip",  "fib-branching",    "fib-factor-count", "fib-gaps",
        "fib-subtree", "seebold",         "ls-lemma", "factor-set",
    };
    return names;
}

Outcome run_suite(const std::string& name, const Options& opt) {
    const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
    const auto len_or = [&](std::size_t dflt) { return opt.max_len ? opt.max_len : dflt; };

    if (name == "theorem1") {
        return suite_theorem1(len_or(12), jobs);
    }
    if (name == "theorem2") {
        return suite_theorem2(len_or(12), jobs);
    }
    if (name == "prop1") {
        return suite_prop1(len_or(12), jobs);
    }
    if (name == "cascade") {
        return suite_cascade(len_or(12), jobs);
    }
    if (name == "roundtrip") {
        return suite_roundtrip(len_or(12), jobs);
    }
    if (name == "factor-set") {
        return suite_factor_set(len_or(12), jobs);
    }
    if (name == "ls-lemma") {
        return suite_ls_lemma(len_or(5), jobs);
    }
    if (name == "fib-branching") {
        return suite_fib_single(name, 2, opt.fib_max, jobs, check_fib_branching);
    }
    if (name == "fib-factor-count") {
        return suite_fib_single(name, 2, opt.fib_max, jobs, check_fib_factor_count);
    }
    if (name == "fib-gaps") {
        return suite_fib_single(name, 2, opt.fib_max, jobs, check_fib_gaps);
    }
    if (name == "fib-subtree") {
        return suite_fib_subtree(opt.fib_max, jobs);
    }
    if (name == "seebold") {
        return suite_seebold(opt.fib_max, jobs);
    }
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace circword::verify
