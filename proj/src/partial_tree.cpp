#include "dst/partial_tree.hpp"

#include <algorithm>
#include <queue>

namespace dst {

namespace {

void rebuild_comp_of(const Instance& inst, PartialSteinerTree& pst) {
  pst.comp_of.assign(static_cast<size_t>(inst.node_count()), kFreeSteiner);
  for (size_t c = 0; c < pst.components.size(); ++c)
    for (NodeId v : pst.components[c].nodes) pst.comp_of[static_cast<size_t>(v)] = static_cast<int>(c);
}

std::vector<NodeId> sorted_union(std::vector<NodeId> a, const std::vector<NodeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

PartialSteinerTree init_partial_tree(const Instance& inst) {
  PartialSteinerTree pst;
  pst.components.push_back(Component{inst.root(), {inst.root()}, {}});
  for (NodeId t : inst.terminals()) pst.components.push_back(Component{t, {t}, {}});
  for (NodeId v = 0; v < inst.node_count(); ++v)
    if (inst.is_steiner(v)) pst.free_steiner.push_back(v);
  rebuild_comp_of(inst, pst);
  return pst;
}

TreeCheckReport check_partial_tree(const Instance& inst, const PartialSteinerTree& pst) {
  TreeCheckReport report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  const size_t n = static_cast<size_t>(inst.node_count());
  std::vector<int> cover(n, 0);
  for (const Component& c : pst.components)
    for (NodeId v : c.nodes) {
      if (v < 0 || static_cast<size_t>(v) >= n) {
        fail("component node out of range");
        continue;
      }
      ++cover[static_cast<size_t>(v)];
    }
  for (NodeId v : pst.free_steiner) {
    if (v < 0 || static_cast<size_t>(v) >= n) {
      fail("free Steiner node out of range");
      continue;
    }
    ++cover[static_cast<size_t>(v)];
    if (!inst.is_steiner(v))
      fail("free set contains non-Steiner node " + std::to_string(v + 1));
  }
  for (size_t v = 0; v < n; ++v) {
    if (cover[v] != 1)
      fail("node " + std::to_string(v + 1) + " covered " + std::to_string(cover[v]) +
           " times (partition violated)");
  }

  if (pst.components.empty()) {
    fail("no root component");
    return report;
  }
  if (pst.components[0].head != inst.root()) fail("root component head is not the root");

  if (pst.comp_of.size() != n) {
    fail("comp_of index has wrong size");
  } else {
    for (size_t c = 0; c < pst.components.size(); ++c)
      for (NodeId v : pst.components[c].nodes)
        if (pst.comp_of[static_cast<size_t>(v)] != static_cast<int>(c))
          fail("comp_of stale for node " + std::to_string(v + 1));
    for (NodeId v : pst.free_steiner)
      if (pst.comp_of[static_cast<size_t>(v)] != kFreeSteiner)
        fail("comp_of stale for free node " + std::to_string(v + 1));
  }

  for (size_t c = 0; c < pst.components.size(); ++c) {
    const Component& comp = pst.components[c];
    const std::string tag = "component " + std::to_string(c);
    if (!std::binary_search(comp.nodes.begin(), comp.nodes.end(), comp.head))
      fail(tag + ": head not among its nodes");
    if (c > 0 && !inst.is_terminal(comp.head))
      fail(tag + ": non-root head is not a terminal");

    for (ArcId a : comp.edges) {
      if (a < 0 || a >= inst.arc_count()) {
        fail(tag + ": edge index out of range");
        continue;
      }
      const Arc& arc = inst.arc(a);
      if (!std::binary_search(comp.nodes.begin(), comp.nodes.end(), arc.tail) ||
          !std::binary_search(comp.nodes.begin(), comp.nodes.end(), arc.head))
        fail(tag + ": arc " + std::to_string(a) + " leaves the component");
    }

    // Head-to-member reachability inside the component's own arc set.
    std::vector<std::vector<NodeId>> adj;
    adj.resize(n);
    for (ArcId a : comp.edges) {
      if (a < 0 || a >= inst.arc_count()) continue;
      adj[static_cast<size_t>(inst.arc(a).tail)].push_back(inst.arc(a).head);
    }
    std::vector<char> seen(n, 0);
    std::queue<NodeId> queue;
    seen[static_cast<size_t>(comp.head)] = 1;
    queue.push(comp.head);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      for (NodeId w : adj[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          queue.push(w);
        }
    }
    for (NodeId v : comp.nodes)
      if (!seen[static_cast<size_t>(v)])
        fail(tag + ": node " + std::to_string(v + 1) + " unreachable from head");
  }

  return report;
}

namespace {

struct ZeroPathHit {
  int target_comp = -1;
  std::vector<ArcId> path;        // B_i node -> h_j, all cost 0
  std::vector<NodeId> interior;   // free Steiner nodes on the path
};

// From the nodes of components[i], follow zero-cost arcs through free
// Steiner interior nodes only. Returns the lowest-index non-root component
// j != i whose head is reached, with a witnessing path.
std::optional<ZeroPathHit> find_zero_merge(const Instance& inst, const PartialSteinerTree& pst,
                                           int i, const std::vector<std::vector<ArcId>>& out0) {
  const size_t n = static_cast<size_t>(inst.node_count());
  std::vector<ArcId> pred(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<NodeId> queue;
  for (NodeId v : pst.components[static_cast<size_t>(i)].nodes) {
    seen[static_cast<size_t>(v)] = 1;
    queue.push(v);
  }

  int best = -1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    const int cv = pst.comp_of[static_cast<size_t>(v)];
    // Expand only from the sources themselves and from free interior nodes.
    if (cv != kFreeSteiner && cv != i) continue;
    for (ArcId a : out0[static_cast<size_t>(v)]) {
      NodeId w = inst.arc(a).head;
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      pred[static_cast<size_t>(w)] = a;
      const int cw = pst.comp_of[static_cast<size_t>(w)];
      if (cw != kFreeSteiner && cw != i && cw != 0 &&
          pst.components[static_cast<size_t>(cw)].head == w) {
        if (best == -1 || cw < best) best = cw;
        continue;  // heads are component nodes; do not expand through them
      }
      if (cw == kFreeSteiner) queue.push(w);
    }
  }

  if (best == -1) return std::nullopt;
  ZeroPathHit hit;
  hit.target_comp = best;
  NodeId v = pst.components[static_cast<size_t>(best)].head;
  while (pred[static_cast<size_t>(v)] != -1) {
    ArcId a = pred[static_cast<size_t>(v)];
    hit.path.push_back(a);
    v = inst.arc(a).tail;
  }
  std::reverse(hit.path.begin(), hit.path.end());
  for (ArcId a : hit.path) {
    NodeId w = inst.arc(a).head;
    if (pst.comp_of[static_cast<size_t>(w)] == kFreeSteiner) hit.interior.push_back(w);
  }
  return hit;
}

}  // namespace

ClosureResult zero_cost_closure(const Instance& inst, const PartialSteinerTree& pst) {
  ClosureResult result{pst, {}};

  bool has_zero_arc = false;
  for (const Arc& a : inst.arcs())
    if (a.cost.is_zero()) {
      has_zero_arc = true;
      break;
    }
  if (!has_zero_arc || result.tree.nonroot_count() == 0) return result;

  std::vector<std::vector<ArcId>> out0(static_cast<size_t>(inst.node_count()));
  for (ArcId a = 0; a < inst.arc_count(); ++a)
    if (inst.arc(a).cost.is_zero()) out0[static_cast<size_t>(inst.arc(a).tail)].push_back(a);

  bool merged = true;
  while (merged && result.tree.nonroot_count() > 0) {
    merged = false;
    for (int i = 0; i < static_cast<int>(result.tree.components.size()); ++i) {
      auto hit = find_zero_merge(inst, result.tree, i, out0);
      if (!hit) continue;

      Component& absorber = result.tree.components[static_cast<size_t>(i)];
      const Component& absorbed = result.tree.components[static_cast<size_t>(hit->target_comp)];
      absorber.nodes = sorted_union(std::move(absorber.nodes), absorbed.nodes);
      absorber.nodes = sorted_union(std::move(absorber.nodes), hit->interior);
      absorber.edges = [&] {
        std::vector<ArcId> e = absorber.edges;
        e.insert(e.end(), absorbed.edges.begin(), absorbed.edges.end());
        e.insert(e.end(), hit->path.begin(), hit->path.end());
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        return e;
      }();

      std::vector<NodeId> remaining;
      std::set_difference(result.tree.free_steiner.begin(), result.tree.free_steiner.end(),
                          hit->interior.begin(), hit->interior.end(),
                          std::back_inserter(remaining));
      result.tree.free_steiner = std::move(remaining);

      result.tree.components.erase(result.tree.components.begin() + hit->target_comp);
      rebuild_comp_of(inst, result.tree);
      result.added_arcs.insert(result.added_arcs.end(), hit->path.begin(), hit->path.end());
      merged = true;
      break;  // restart the pair scan on the new component list
    }
  }

  std::sort(result.added_arcs.begin(), result.added_arcs.end());
  return result;
}

Rational tree_cost(const Instance& inst, const PartialSteinerTree& pst) {
  Rational total;
  for (const Component& c : pst.components)
    for (ArcId a : c.edges) total += inst.arc(a).cost;
  return total;
}

std::vector<ArcId> extract_solution(const Instance& inst, const PartialSteinerTree& pst,
                                    bool prune) {
  if (pst.nonroot_count() != 0)
    throw std::invalid_argument("extract_solution: tree still has non-root components");
  const std::vector<ArcId>& edges = pst.components[0].edges;

  const size_t n = static_cast<size_t>(inst.node_count());
  std::vector<std::vector<ArcId>> adj(n);
  for (ArcId a : edges) adj[static_cast<size_t>(inst.arc(a).tail)].push_back(a);

  if (!prune) {
    std::vector<char> seen(n, 0);
    std::queue<NodeId> queue;
    seen[static_cast<size_t>(inst.root())] = 1;
    queue.push(inst.root());
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      for (ArcId a : adj[static_cast<size_t>(v)]) {
        NodeId w = inst.arc(a).head;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          queue.push(w);
        }
      }
    }
    for (NodeId t : inst.terminals())
      if (!seen[static_cast<size_t>(t)])
        throw InternalError("extract_solution: terminal " + std::to_string(t + 1) +
                            " not reachable in the final tree");
    return edges;
  }

  // Shortest-path tree from the root inside the solution subgraph, then
  // keep only arcs actually used to reach terminals.
  std::vector<std::optional<Rational>> dist(n);
  std::vector<ArcId> pred(n, -1);
  std::vector<char> settled(n, 0);
  using Entry = std::pair<Rational, NodeId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    return a.first > b.first || (a.first == b.first && a.second > b.second);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  dist[static_cast<size_t>(inst.root())] = Rational(0);
  queue.emplace(Rational(0), inst.root());
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[static_cast<size_t>(v)]) continue;
    settled[static_cast<size_t>(v)] = 1;
    for (ArcId a : adj[static_cast<size_t>(v)]) {
      NodeId w = inst.arc(a).head;
      Rational nd = d + inst.arc(a).cost;
      auto& slot = dist[static_cast<size_t>(w)];
      if (!slot || nd < *slot) {
        slot = std::move(nd);
        pred[static_cast<size_t>(w)] = a;
        queue.emplace(*slot, w);
      }
    }
  }
  std::vector<ArcId> kept;
  for (NodeId t : inst.terminals()) {
    if (!dist[static_cast<size_t>(t)])
      throw InternalError("extract_solution: terminal " + std::to_string(t + 1) +
                          " not reachable in the final tree");
    for (NodeId v = t; pred[static_cast<size_t>(v)] != -1;) {
      ArcId a = pred[static_cast<size_t>(v)];
      kept.push_back(a);
      v = inst.arc(a).tail;
    }
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

}  // namespace dst
