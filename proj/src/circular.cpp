#include "circword/circular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace circword {

CircularWord::CircularWord(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("empty word has no circular form");
    }
    canonical_ = canonical_rotation(w).word;
}

bool CircularWord::contains(const Word& v) const {
    if (v.size() != canonical_.size()) {
        return false;
    }
    return canonical_rotation(v).word == canonical_;
}

CircularWord circular_from(const Word& w) {
    return CircularWord(w);
}

bool is_representation(const Representation& rep, const CircularWord& cw) {
    if (rep.root.empty() || rep.root.size() > rep.length) {
        return false;
    }
    if (rep.length != cw.size()) {
        return false;
    }
    return cw.contains(fractional_power(rep.root, rep.length));
}

std::vector<std::size_t> weak_periods(const CircularWord& cw) {
    std::set<std::size_t> acc;
    for (const Word& m : cw.members()) {
        for (std::size_t p : periods(m)) {
            acc.insert(p);
        }
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::size_t> strong_periods(const CircularWord& cw) {
    std::vector<std::size_t> acc;
    bool first = true;
    for (const Word& m : cw.members()) {
        const auto ps = periods(m);
        if (first) {
            acc = ps;
            first = false;
        } else {
            std::vector<std::size_t> kept;
            std::set_intersection(acc.begin(), acc.end(), ps.begin(), ps.end(),
                                  std::back_inserter(kept));
            acc = std::move(kept);
        }
    }
    return acc;
}

std::size_t min_weak_period(const CircularWord& cw) {
    std::size_t best = cw.size();
    for (const Word& m : cw.members()) {
        best = std::min(best, min_period(m));
    }
    return best;
}

std::vector<Representation> minimal_representations(const CircularWord& cw) {
    const std::size_t p = min_weak_period(cw);
    std::set<Word> roots;
    for (const Word& m : cw.members()) {
        const auto ps = periods(m);
        if (std::binary_search(ps.begin(), ps.end(), p)) {
            roots.insert(m.substr(0, p));
        }
    }
    std::vector<Representation> out;
    out.reserve(roots.size());
    for (const Word& r : roots) {
        out.push_back(Representation{r, cw.size()});
    }
    return out;
}

Representation border_reduce(const Word& u, std::size_t border_len) {
    if (u.empty()) {
        throw std::invalid_argument("empty word has no border reduction");
    }
    if (border_len >= u.size()) {
        throw std::invalid_argument("border must be shorter than the word");
    }
    const auto bs = borders(u);
    if (!std::binary_search(bs.begin(), bs.end(), border_len)) {
        throw std::invalid_argument("given length is not a border of the word");
    }
    return Representation{u.substr(0, u.size() - border_len), 2 * u.size() - border_len};
}

}  // namespace circword
