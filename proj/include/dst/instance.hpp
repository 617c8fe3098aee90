#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dst/rational.hpp"

namespace dst {

using NodeId = std::int32_t;
using ArcId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class NodeRole : std::uint8_t { Root, Terminal, Steiner };

struct Arc {
  NodeId tail = kNoNode;
  NodeId head = kNoNode;
  Rational cost;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Raised by the algorithms when an internal invariant breaks. Seeing one
/// means a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A directed Steiner tree instance: directed graph with non-negative arc
/// costs, a root and a terminal set. Arc order is load-bearing: it is the
/// tie-breaking order for every downstream computation. Immutable after
/// construction and safe to share across threads.
class Instance {
 public:
  /// Validates ids, self-loops, costs and root/terminal disjointness.
  /// Quasi-bipartiteness and reachability are graph-level properties
  /// checked by validate() (and enforced by parse_instance).
  static Instance make(NodeId node_count, std::vector<Arc> arcs, NodeId root,
                       std::vector<NodeId> terminals);

  NodeId node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[static_cast<size_t>(a)]; }
  NodeId root() const { return root_; }
  const std::vector<NodeId>& terminals() const { return terminals_; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }

  NodeRole role(NodeId v) const { return roles_[static_cast<size_t>(v)]; }
  bool is_steiner(NodeId v) const { return role(v) == NodeRole::Steiner; }
  bool is_terminal(NodeId v) const { return role(v) == NodeRole::Terminal; }

  const std::vector<ArcId>& out_arcs(NodeId v) const { return out_[static_cast<size_t>(v)]; }
  const std::vector<ArcId>& in_arcs(NodeId v) const { return in_[static_cast<size_t>(v)]; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_ && a.root_ == b.root_ &&
           a.terminals_ == b.terminals_;
  }

 private:
  Instance() = default;

  NodeId node_count_ = 0;
  std::vector<Arc> arcs_;
  NodeId root_ = kNoNode;
  std::vector<NodeId> terminals_;
  std::vector<NodeRole> roles_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

enum class ParseErrorKind {
  MalformedLine,
  NegativeCost,
  DuplicateRoot,
  MissingRoot,
  MissingNodes,
  IdOutOfRange,
  SelfLoop,
  RootIsTerminal,
  DuplicateTerminal,
  QuasiBipartiteViolation,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based, 0 when not tied to a line

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Parses the line-oriented instance format (see README). Node ids in the
/// file are 1-based; in memory they are dense 0-based indices in file order
/// of first mention... ids are fixed by the `Nodes` count, so file id i maps
/// to NodeId i-1. Arc order equals file order.
Instance parse_instance(std::string_view text);

/// Canonical text form; parse_instance(serialize_instance(I)) == I.
std::string serialize_instance(const Instance& inst);

struct ValidationCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  std::vector<ValidationCheck> checks;
};

/// Checks quasi-bipartiteness, non-negative costs and root-to-terminal
/// reachability. solve() is defined exactly on instances with ok == true.
ValidationReport validate(const Instance& inst);

struct PathResult {
  std::optional<Rational> dist;  // nullopt = unreachable
  std::vector<ArcId> arcs;       // a witnessing min-cost path, in travel order
  bool reachable() const { return dist.has_value(); }
};

/// Exact min-cost directed path from any node of `sources` to `target`.
/// Deterministic: ties are broken by node id, predecessors by arc order.
PathResult shortest_dist(const Instance& inst, std::span<const NodeId> sources, NodeId target);

}  // namespace dst
