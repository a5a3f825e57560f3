#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chinoid/errors.hpp"
#include "json.hpp"

namespace chinoid {

enum class StepKind { Root, Arc, Dot };
enum class GrowthSide { None, Left, Right };

/// A vertex of the diagram tree. A diagram marks a contiguous interval of
/// generator positions; the marked positions are covered by a tower of
/// concentric arcs plus dots, each position lying on at most one arc.
/// The diagram with nothing marked is the root.
class Diagram {
 public:
  static Diagram root(int n);
  static Diagram level1_dot(int n, int s);  // single dot, 2 <= s <= n-1
  static Diagram level1_arc(int n, int s);  // arc (s, s+1), 1 <= s < n

  int rank() const { return n_; }
  bool is_root() const { return arcs_.empty() && dots_.empty(); }

  /// Used interval; only meaningful off the root.
  int lo() const;
  int hi() const;

  /// Arcs (low, high), sorted by low ascending (outermost first).
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  /// Dot positions, sorted ascending.
  const std::vector<int>& dots() const { return dots_; }

  /// What the final construction step added. Derived from content: an
  /// uncovered dot at the right (left) bound means the last step was a dot
  /// on that side; a single dot with no arcs is a first-level dot; anything
  /// else ends in an arc.
  StepKind last_step() const;
  GrowthSide growth_side() const;

  /// Child diagrams obtained by growing one step: the enclosing arc
  /// (lo-1, hi+1) and/or a boundary dot, depending on the last step, in the
  /// fixed order arc, left dot, right dot. Steps that would leave 1..n are
  /// not generated, so the list may be empty. The root's children are the
  /// first level. Throws IsLeaf on a leaf.
  std::vector<Diagram> children() const;

  Diagram with_arc(int low, int high) const;
  Diagram with_dot(int pos) const;

  bool operator==(const Diagram&) const = default;

  /// {"n":4,"arcs":[[2,3]],"dots":[1]}
  nlohmann::ordered_json to_json() const;
  static Diagram from_json(const nlohmann::json& j);

  /// One-line rendering: arcs as bracket pairs, dots as filled circles,
  /// unused positions as open circles.
  std::string ascii() const;

 private:
  explicit Diagram(int n);
  void validate() const;

  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> dots_;
};

/// True iff some arc touches position 1 or position n. False on the root.
bool is_leaf(const Diagram& d);

/// The 2n-3 first-level diagrams: the n-2 single dots at s = 2..n-1
/// followed by the n-1 arcs (s, s+1) for s = 1..n-1.
std::vector<Diagram> first_level(int n);

/// A root-to-node path in the diagram tree, stored as its diagrams from the
/// first level down. Consecutive entries satisfy the child relation.
class Branch {
 public:
  explicit Branch(Diagram level1);
  Branch extended(const Diagram& child) const;

  const std::vector<Diagram>& diagrams() const { return diagrams_; }
  const Diagram& tip() const { return diagrams_.back(); }
  int rank() const { return tip().rank(); }
  std::size_t length() const { return diagrams_.size(); }

  bool operator==(const Branch&) const = default;

 private:
  std::vector<Diagram> diagrams_;
};

/// What one construction step added: an arc (low, high) or a dot
/// (low == high == position).
struct BranchStep {
  StepKind kind = StepKind::Root;
  int low = 0;
  int high = 0;

  bool operator==(const BranchStep&) const = default;
};

/// The per-level steps of a branch, first level first.
std::vector<BranchStep> branch_steps(const Branch& b);

/// All branches ending in leaves, in depth-first order with children
/// visited in rule order. Throws RankTooSmall for n < 2.
std::vector<Branch> enumerate_leaves(int n);

/// Every branch of the tree in depth-first preorder (leaves, interior
/// vertices and dead ends alike).
std::vector<Branch> enumerate_tree(int n);

}  // namespace chinoid
