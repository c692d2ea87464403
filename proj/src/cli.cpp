#include "circword/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "circword/circular.hpp"
#include "circword/fibonacci.hpp"
#include "circword/iterative.hpp"
#include "circword/trie.hpp"
#include "circword/verify.hpp"
#include "circword/word.hpp"

namespace circword::cli {

namespace {

using nlohmann::json;

void require_word(const std::string& w) {
    if (w.empty()) {
        throw std::invalid_argument("word must be non-empty");
    }
    for (char c : w) {
        const auto uc = static_cast<unsigned char>(c);
        if (!std::isprint(uc) || std::isspace(uc)) {
            throw std::invalid_argument("word may only contain printable, non-space symbols");
        }
    }
}

std::string circular_text(const CircularWord& cw) {
    return "o:" + cw.canonical();
}

json steps_json(const IterativeRepresentation& rep) {
    json steps = json::array();
    for (const auto& st : rep.steps) {
        steps.push_back(json::array({st.length, st.rot}));
    }
    return json{{"root", rep.root}, {"steps", steps}, {"final_len", rep.final_len}};
}

json periods_json(const std::vector<std::size_t>& ps) {
    return json(ps);
}

void print_periods(std::ostream& out, bool as_json, const std::vector<std::size_t>& ps) {
    if (as_json) {
        out << periods_json(ps).dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out << (i ? " " : "") << ps[i];
    }
    out << "\n";
}

json trie_json(const ConjugateTrie& t) {
    json edges = json::array();
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        for (const auto& [sym, child] : t.nodes()[i].children) {
            edges.push_back(json::array({i, std::string(1, sym), child}));
        }
    }
    return json{{"levels", t.level_counts()},
                {"profile", t.branching_profile()},
                {"edges", edges}};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"circular word representations: tuples, iterative encodings and conjugate tries",
                 "circword"};
    app.require_subcommand(1);

    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");
    app.add_flag("--quiet", quiet, "suppress informational output");

    std::string word_arg;
    std::string tuple_arg;
    std::size_t fib_index = 0;
    std::string suite_arg;

    auto* cmd_conj = app.add_subcommand("conjugates", "list the conjugates of a word");
    cmd_conj->add_option("word", word_arg)->required();

    auto* cmd_periods = app.add_subcommand("periods", "periods of a linear word");
    cmd_periods->add_option("word", word_arg)->required();

    auto* cmd_weak = app.add_subcommand("weak-periods", "weak periods of the circular word");
    cmd_weak->add_option("word", word_arg)->required();

    auto* cmd_strong = app.add_subcommand("strong-periods", "strong periods of the circular word");
    cmd_strong->add_option("word", word_arg)->required();

    bool all_roots = false;
    auto* cmd_minrep = app.add_subcommand("minrep", "minimal representations of the circular word");
    cmd_minrep->add_option("word", word_arg)->required();
    cmd_minrep->add_flag("--all", all_roots, "print every minimal root, not just the least");

    bool optimal = false;
    std::size_t guard = kDefaultOptimalGuard;
    auto* cmd_encode = app.add_subcommand("encode", "iterative representation of the circular word");
    cmd_encode->add_option("word", word_arg)->required();
    cmd_encode->add_flag("--optimal", optimal, "exhaustive optimal encoding instead of greedy");
    cmd_encode->add_option("--guard", guard, "length guard for the optimal search");

    std::size_t final_shift = 0;
    auto* cmd_decode = app.add_subcommand("decode", "decode an iterative representation tuple");
    cmd_decode->add_option("tuple", tuple_arg)->required();
    auto* linear_opt =
        cmd_decode->add_option("--linear", final_shift, "print the linear word after this final shift");

    bool want_dot = false;
    bool want_trie_json = false;
    bool want_profile = false;
    bool want_gaps = false;
    auto* cmd_trie = app.add_subcommand("trie", "conjugate trie export and analyses");
    cmd_trie->add_option("word", word_arg)->required();
    cmd_trie->add_flag("--dot", want_dot, "DOT digraph");
    cmd_trie->add_flag("--json", want_trie_json, "JSON dump (levels, profile, edges)");
    cmd_trie->add_flag("--profile", want_profile, "branching profile per level");
    cmd_trie->add_flag("--gaps", want_gaps, "distances between nested branching nodes");

    bool fib_circular = false;
    bool fib_trie_out = false;
    bool fib_word_out = false;
    auto* cmd_fib = app.add_subcommand("fib", "Fibonacci word utilities");
    cmd_fib->add_option("i", fib_index, "1-based Fibonacci word index")->required();
    cmd_fib->add_flag("--word", fib_word_out, "print the linear word (default)");
    cmd_fib->add_flag("--circular", fib_circular, "print the circular word");
    cmd_fib->add_flag("--trie", fib_trie_out, "print the conjugate trie as DOT");

    verify::Options vopt;
    auto* cmd_verify = app.add_subcommand("verify", "run an exhaustive verification sweep");
    cmd_verify->add_option("suite", suite_arg, "one of: " + [] {
                              std::string s;
                              for (const auto& n : verify::suite_names()) {
                                  s += s.empty() ? n : ", " + n;
                              }
                              return s;
                          }())
        ->required();
    cmd_verify->add_option("--max-len", vopt.max_len, "exhaustive sweep length bound");
    cmd_verify->add_option("--fib-max", vopt.fib_max, "largest Fibonacci index");
    cmd_verify->add_option("--jobs", vopt.jobs, "worker threads");

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_conj->parsed()) {
            require_word(word_arg);
            if (as_json) {
                out << json(conjugates(word_arg)).dump() << "\n";
            } else {
                for (const Word& m : conjugates(word_arg)) {
                    out << m << "\n";
                }
            }
            return 0;
        }
        if (cmd_periods->parsed()) {
            require_word(word_arg);
            print_periods(out, as_json, periods(word_arg));
            return 0;
        }
        if (cmd_weak->parsed()) {
            require_word(word_arg);
            print_periods(out, as_json, weak_periods(CircularWord(word_arg)));
            return 0;
        }
        if (cmd_strong->parsed()) {
            require_word(word_arg);
            print_periods(out, as_json, strong_periods(CircularWord(word_arg)));
            return 0;
        }
        if (cmd_minrep->parsed()) {
            require_word(word_arg);
            const auto reps = minimal_representations(CircularWord(word_arg));
            if (as_json) {
                json roots = json::array();
                for (const auto& rep : reps) {
                    roots.push_back(rep.root);
                    if (!all_roots) {
                        break;
                    }
                }
                out << json{{"length", reps.front().length}, {"roots", roots}}.dump() << "\n";
            } else {
                for (const auto& rep : reps) {
                    out << rep.root << "," << rep.length << "\n";
                    if (!all_roots) {
                        break;
                    }
                }
            }
            return 0;
        }
        if (cmd_encode->parsed()) {
            require_word(word_arg);
            const CircularWord cw(word_arg);
            const auto rep = optimal ? optimal_encode(cw, guard) : greedy_encode(cw);
            if (as_json) {
                out << steps_json(rep).dump() << "\n";
            } else {
                out << rep.to_tuple() << "\n";
            }
            return 0;
        }
        if (cmd_decode->parsed()) {
            const auto rep = IterativeRepresentation::parse_tuple(tuple_arg);
            require_word(rep.root);
            if (linear_opt->count() > 0) {
                const Word w = decode_linear(rep, final_shift);
                out << (as_json ? json(w).dump() : w) << "\n";
            } else {
                const std::string text = circular_text(decode(rep));
                out << (as_json ? json(text).dump() : text) << "\n";
            }
            return 0;
        }
        if (cmd_trie->parsed()) {
            require_word(word_arg);
            if (want_dot && (want_trie_json || as_json)) {
                err << "choose one of --dot and --json\n";
                return 2;
            }
            const ConjugateTrie t{CircularWord(word_arg)};
            if (want_dot) {
                out << t.to_dot();
                return 0;
            }
            if (want_trie_json || as_json) {
                out << trie_json(t).dump() << "\n";
                return 0;
            }
            if (want_profile || want_gaps) {
                if (want_profile) {
                    print_periods(out, false, t.branching_profile());
                }
                if (want_gaps) {
                    print_periods(out, false, branching_gaps(t));
                }
                return 0;
            }
            out << "word " << circular_text(t.source()) << "\n"
                << "nodes " << t.nodes().size() << ", leaves " << t.leaf_count()
                << ", depth " << t.depth() << "\n"
                << "profile ";
            print_periods(out, false, t.branching_profile());
            return 0;
        }
        if (cmd_fib->parsed()) {
            const Word w = fib_word(fib_index);
            if (fib_trie_out) {
                out << ConjugateTrie{CircularWord(w)}.to_dot();
            } else if (fib_circular) {
                const std::string text = circular_text(CircularWord(w));
                out << (as_json ? json(text).dump() : text) << "\n";
            } else {
                out << (as_json ? json(w).dump() : w) << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            const auto outcome = verify::run_suite(suite_arg, vopt);
            for (const auto& v : outcome.violations) {
                out << json{{"suite", v.suite}, {"input", v.input}, {"detail", v.detail}}.dump()
                    << "\n";
            }
            if (!quiet) {
                out << "suite " << suite_arg << ": " << outcome.checked << " inputs, "
                    << outcome.violations.size() << " violations\n";
            }
            return outcome.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace circword::cli
