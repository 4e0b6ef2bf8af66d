#ifndef MANS_CORE_TREE_HPP
#define MANS_CORE_TREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/monotone.hpp"
#include "core/semigroup.hpp"

namespace mans {

// The family MA(m,r) of semigroups with monotone Apery set, multiplicity m
// and ratio r is finite; removing the greatest generator gives it a rooted
// tree structure with root <m,r>. Nodes below materialize that tree in
// breadth-first order with siblings sorted by the adjoined generator.

struct TreeNode {
  Generators semigroup;
  std::int64_t depth = 0;  // always embedding_dim - 2
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct MansTree {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::vector<TreeNode> nodes;  // empty when r != 1 (mod m)

  friend bool operator==(const MansTree&, const MansTree&) = default;
};

/// Values n that can be adjoined to a MANS-semigroup while preserving the
/// monotone Apery set: n above the greatest generator, with a strictly
/// larger residue, squeezed between the two Apery entries around its
/// residue. Sorted ascending.
std::vector<std::int64_t> suitably_monotone_elements(const Generators& s);

/// Children of s in the tree of its (m, r) family: one semigroup per
/// suitably monotone element, sorted by the adjoined generator.
std::vector<Generators> children_of(const Generators& s);

/// Closed-form child count floor((F(S) - M(S)) / m) + 1, floored toward
/// negative infinity and clamped at zero (leaves can push F - M far below
/// zero). Always equals children_of(s).size().
std::int64_t child_count(const Generators& s);

/// Drops the greatest minimal generator. Fails with is_root on a
/// two-generator semigroup.
Generators parent_of(const Generators& s);

/// Materializes all of MA(m,r) breadth-first. A ratio outside the residue
/// class 1 (mod m) yields an explicitly empty family, not an error.
/// `max_depth` optionally truncates the expansion for exploratory use.
MansTree build_tree(std::int64_t m, std::int64_t r,
                    std::optional<std::int64_t> max_depth = std::nullopt);

/// Graphviz export. Arrows run parent -> child (the reverse of the
/// removal-of-generator edge relation) and are labelled with the adjoined
/// generator's residue mod m.
std::string export_dot(const MansTree& tree);

/// Stable JSON export: {"m", "r", "vertex_count", "nodes": [{"id", "gens",
/// "parent", "frobenius", "genus", "children"}]}, keys sorted,
/// newline-terminated.
std::string export_json(const MansTree& tree);

/// Inverse of export_json; validates the recorded invariants.
MansTree tree_from_json(const std::string& text);

}  // namespace mans

#endif
