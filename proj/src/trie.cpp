#include "circword/trie.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace circword {

namespace {

struct ProtoNode {
    std::map<char, std::size_t> children;
};

}  // namespace

ConjugateTrie::ConjugateTrie(const CircularWord& cw) : source_(cw) {
    std::vector<ProtoNode> proto(1);
    for (const Word& m : cw.members()) {
        std::size_t cur = 0;
        for (char c : m) {
            auto it = proto[cur].children.find(c);
            if (it == proto[cur].children.end()) {
                proto.push_back(ProtoNode{});
                it = proto[cur].children.emplace(c, proto.size() - 1).first;
            }
            cur = it->second;
        }
    }

    // Flatten breadth-first; children of each node stay in symbol order.
    std::vector<std::size_t> order;
    order.reserve(proto.size());
    std::vector<std::size_t> remap(proto.size(), 0);
    std::queue<std::size_t> pending;
    pending.push(0);
    while (!pending.empty()) {
        const std::size_t p = pending.front();
        pending.pop();
        remap[p] = order.size();
        order.push_back(p);
        for (const auto& [sym, child] : proto[p].children) {
            pending.push(child);
        }
    }
    nodes_.resize(proto.size());
    for (std::size_t p = 0; p < proto.size(); ++p) {
        Node& node = nodes_[remap[p]];
        for (const auto& [sym, child] : proto[p].children) {
            node.children.emplace_back(sym, remap[child]);
        }
    }
    nodes_[0].level = 0;
    for (const Node& node : nodes_) {
        for (const auto& [sym, child] : node.children) {
            nodes_[child].level = node.level + 1;
        }
    }
}

std::size_t ConjugateTrie::leaf_count() const {
    std::size_t count = 0;
    for (const Node& node : nodes_) {
        if (node.is_leaf()) {
            ++count;
        }
    }
    return count;
}

std::vector<std::size_t> ConjugateTrie::level_counts() const {
    std::vector<std::size_t> counts(depth() + 1, 0);
    for (const Node& node : nodes_) {
        ++counts[node.level];
    }
    return counts;
}

std::vector<std::size_t> ConjugateTrie::branching_profile() const {
    std::vector<std::size_t> profile(depth(), 0);
    for (const Node& node : nodes_) {
        if (node.is_branching()) {
            ++profile[node.level];
        }
    }
    return profile;
}

std::string ConjugateTrie::to_dot() const {
    std::ostringstream out;
    out << "digraph conjugate_trie {\n";
    out << "  node [shape=circle, label=\"\", width=0.15];\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].is_branching()) {
            out << "  " << i << " [shape=doublecircle];\n";
        }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (const auto& [sym, child] : nodes_[i].children) {
            out << "  " << i << " -> " << child << " [label=\"" << sym << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

bool check_branching_cascade(const ConjugateTrie& t) {
    const auto profile = t.branching_profile();
    for (std::size_t k = 1; k < profile.size(); ++k) {
        if (profile[k] >= 1 && profile[k - 1] == 0) {
            return false;
        }
    }
    return true;
}

bool check_level_n_minus_2(const ConjugateTrie& t) {
    const Word& canon = t.source().canonical();
    const std::set<char> alphabet(canon.begin(), canon.end());
    if (alphabet.size() > 2 || !is_primitive(canon)) {
        throw std::invalid_argument("proposition precondition violated: "
                                    "source must be binary and primitive");
    }
    const std::size_t n = t.source().size();
    if (n < 2) {
        return true;
    }
    const auto profile = t.branching_profile();
    if (profile[n - 2] == 0) {
        return true;
    }
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        if (profile[k] != 1) {
            return false;
        }
    }
    return profile[n - 1] == 0;
}

std::optional<std::pair<Word, Word>> lcp_branching_witness(const CircularWord& cw,
                                                           std::size_t ell) {
    if (ell >= cw.size()) {
        throw std::invalid_argument("prefix length must be below the word length");
    }
    std::vector<Word> mems = cw.members();
    std::sort(mems.begin(), mems.end());
    for (std::size_t i = 0; i < mems.size(); ++i) {
        for (std::size_t j = i + 1; j < mems.size(); ++j) {
            std::size_t lcp = 0;
            while (lcp < mems[i].size() && mems[i][lcp] == mems[j][lcp]) {
                ++lcp;
            }
            if (lcp == ell) {
                return std::make_pair(mems[i], mems[j]);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> branching_gaps(const ConjugateTrie& t) {
    const auto& nodes = t.nodes();
    std::vector<std::size_t> gaps;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].is_branching()) {
            continue;
        }
        for (const auto& [sym, child] : nodes[i].children) {
            // Walk the unary chain below this edge to the next branch.
            std::size_t cur = child;
            while (!nodes[cur].is_branching() && !nodes[cur].is_leaf()) {
                cur = nodes[cur].children.front().second;
            }
            if (nodes[cur].is_branching()) {
                gaps.push_back(nodes[cur].level - nodes[i].level);
            }
        }
    }
    return gaps;
}

namespace {

bool embeds(const ConjugateTrie& small, std::size_t s,
            const ConjugateTrie& big, std::size_t b) {
    for (const auto& [sym, s_child] : small.nodes()[s].children) {
        const auto& b_children = big.nodes()[b].children;
        const auto it = std::find_if(b_children.begin(), b_children.end(),
                                     [sym = sym](const auto& e) { return e.first == sym; });
        if (it == b_children.end() || !embeds(small, s_child, big, it->second)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_subtree(const ConjugateTrie& small, const ConjugateTrie& big) {
    return embeds(small, 0, big, 0);
}

}  // namespace circword
