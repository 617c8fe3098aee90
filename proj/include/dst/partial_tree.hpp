#pragma once

#include <string>
#include <vector>

#include "dst/instance.hpp"

namespace dst {

inline constexpr int kFreeSteiner = -1;

/// One component of a partial Steiner tree: a node set, a distinguished
/// head inside it, and an arc set (indices into the instance) whose
/// endpoints lie in the node set and which must contain a head-to-v path
/// for every member v.
struct Component {
  NodeId head = kNoNode;
  std::vector<NodeId> nodes;  // sorted ascending
  std::vector<ArcId> edges;   // sorted ascending

  friend bool operator==(const Component&, const Component&) = default;
};

/// Head-rooted components partitioning V together with the free Steiner
/// nodes. components[0] is the root component (head = r); every other head
/// is a terminal. Value type; all operations below are pure.
struct PartialSteinerTree {
  std::vector<Component> components;  // [0] = root component
  std::vector<int> comp_of;           // per node: component index, or kFreeSteiner
  std::vector<NodeId> free_steiner;   // sorted ascending

  int nonroot_count() const { return static_cast<int>(components.size()) - 1; }

  friend bool operator==(const PartialSteinerTree&, const PartialSteinerTree&) = default;
};

/// Root component {r}, one singleton component per terminal (in terminal
/// order), every Steiner node free. Cost 0.
PartialSteinerTree init_partial_tree(const Instance& inst);

struct TreeCheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Verifies the partial-tree structure: partition of V, free set contains
/// only Steiner nodes, heads well placed, arcs inside their component, and
/// head-to-member reachability within each edge set.
TreeCheckReport check_partial_tree(const Instance& inst, const PartialSteinerTree& pst);

struct ClosureResult {
  PartialSteinerTree tree;
  std::vector<ArcId> added_arcs;  // all cost 0, sorted ascending
};

/// While some component has a zero-cost path to the head of a different
/// non-root component, merge the two along that path. Afterwards
/// d(B_i, h_j) > 0 for every component i and non-root head h_j, i != j.
/// Adds only zero-cost arcs, so the tree cost is unchanged.
ClosureResult zero_cost_closure(const Instance& inst, const PartialSteinerTree& pst);

/// Sum of arc costs over all component edge sets (disjoint by construction).
Rational tree_cost(const Instance& inst, const PartialSteinerTree& pst);

/// Edge set of a finished tree (no non-root components left). With
/// prune = true, returns only the arcs of a shortest-path tree from the
/// root inside the solution subgraph; the certificate bound is stated for
/// the unpruned set.
std::vector<ArcId> extract_solution(const Instance& inst, const PartialSteinerTree& pst,
                                    bool prune = false);

}  // namespace dst
