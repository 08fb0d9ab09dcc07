#pragma once

#include "twistkit/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twistkit
{

/// A rooted tree with a planar (left-to-right) child order. The order only
/// matters while gluing bushes onto leaves; isomorphism ignores it.
struct RootedTree
{
    std::vector<RootedTree> children;

    static RootedTree point() { return {}; }
    /// The bush B(k): a root joined to k leaves.
    static RootedTree bush(std::size_t leaves);

    bool is_leaf() const noexcept { return children.empty(); }
    std::size_t leaf_count() const noexcept;
    std::size_t vertex_count() const noexcept;

    friend bool operator==(const RootedTree& a, const RootedTree& b);
};

/// Disjoint union of trees, one per primitive factor of a product torus.
struct RootedForest
{
    std::vector<RootedTree> trees;

    std::size_t dimension() const noexcept;
    friend bool operator==(const RootedForest& a, const RootedForest& b) = default;
};

/// One twist operation: glue B(twists + 1) onto leaf number `leaf`
/// (1-based, counted from the left).
struct TwistStep
{
    int twists = 1;
    int leaf = 1;

    friend bool operator==(const TwistStep&, const TwistStep&) = default;
};

/// An iterated twist, innermost step first. The empty word is the circle.
struct TwistWord
{
    std::vector<TwistStep> steps;

    /// Throws InvalidLeafIndex when a step refers to a leaf that does not
    /// exist yet, InvalidInput for non-positive twist counts.
    void validate() const;
    std::size_t dimension() const noexcept;

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

struct ProductSpec
{
    std::vector<TwistWord> factors;
};

RootedTree word_to_tree(const TwistWord& word);
RootedForest product_to_forest(const ProductSpec& product);

// Text grammar (whitespace insignificant):
//   forest := tree ("*" tree)*
//   tree   := "L" | "point" | "(" tree+ ")" | word
//   word   := "twist(" [k (";" k "@" l)*] ")"
RootedForest parse_forest(std::string_view text);
RootedTree parse_tree(std::string_view text);
TwistWord parse_word(std::string_view text);

std::string print_tree(const RootedTree& tree);
std::string print_forest(const RootedForest& forest);
std::string print_word(const TwistWord& word);

/// AHU-style canonical string: a leaf is "()", an inner vertex wraps its
/// children's canonical strings, sorted, separated by commas.
std::string canonical_form(const RootedTree& tree);
/// Sorted multiset of the trees' canonical forms, joined by " * ".
std::string canonical_form(const RootedForest& forest);
RootedTree tree_from_canonical(std::string_view canonical);

bool is_isomorphic(const RootedTree& a, const RootedTree& b);
bool is_isomorphic(const RootedForest& a, const RootedForest& b);

bool is_ample(const RootedTree& tree);

inline constexpr int default_enumeration_cap = 16;

/// All ample trees with `leaves` leaves up to isomorphism, sorted by
/// canonical form. Throws CapExceeded above `cap`.
std::vector<RootedTree> enumerate_ample_trees(int leaves, int cap = default_enumeration_cap);

/// Number of ample trees with `leaves` leaves, computed by counting
/// multisets of smaller ample trees; no trees are materialized.
Integer count_ample_trees(int leaves);

} // namespace twistkit
