#pragma once

// Tree representation of a circular word: an edge-labeled trie whose
// root-to-leaf paths spell exactly the conjugate set. Nodes are stored
// in breadth-first order with children sorted by symbol, so node
// numbering, DOT output and JSON dumps are deterministic.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circword/circular.hpp"
#include "circword/word.hpp"

namespace circword {

class ConjugateTrie {
public:
    struct Node {
        std::size_t level = 0;
        // (symbol, child index), sorted by symbol.
        std::vector<std::pair<char, std::size_t>> children;

        bool is_branching() const { return children.size() >= 2; }
        bool is_leaf() const { return children.empty(); }
    };

    explicit ConjugateTrie(const CircularWord& cw);

    const CircularWord& source() const { return source_; }
    const std::vector<Node>& nodes() const { return nodes_; }

    std::size_t leaf_count() const;

    // Leaves sit at this level; the root is level 0.
    std::size_t depth() const { return source_.size(); }

    // Number of nodes on each level 0..depth().
    std::vector<std::size_t> level_counts() const;

    // m_k = number of branching nodes on level k, for k = 0..depth()-1.
    std::vector<std::size_t> branching_profile() const;

    std::string to_dot() const;

private:
    CircularWord source_;
    std::vector<Node> nodes_;  // breadth-first order, root at index 0
};

inline ConjugateTrie build_trie(const CircularWord& cw) { return ConjugateTrie(cw); }

// No level gains a branching node unless the level above already has
// one: m_k >= 1 implies m_{k-1} >= 1 for every k >= 1.
bool check_branching_cascade(const ConjugateTrie& t);

// For a primitive word over at most two symbols: a branching node on
// level |w|-2 forces exactly one branching node on every level
// 0..|w|-2 and none on level |w|-1. Throws std::invalid_argument when
// the source is not binary or not primitive.
bool check_level_n_minus_2(const ConjugateTrie& t);

// Two distinct conjugates whose longest common prefix has length
// exactly ell, if such a pair exists (the lexicographically first one).
std::optional<std::pair<Word, Word>> lcp_branching_witness(const CircularWord& cw,
                                                           std::size_t ell);

// Level distances between branching nodes and their nearest branching
// descendants, listed by ancestor node index then child symbol.
std::vector<std::size_t> branching_gaps(const ConjugateTrie& t);

// Root-anchored embedding: every path of `small` from its root is a
// prefix of a path of `big` from its root, label for label.
bool is_subtree(const ConjugateTrie& small, const ConjugateTrie& big);

}  // namespace circword
