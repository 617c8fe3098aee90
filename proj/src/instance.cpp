#include "dst/instance.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace dst {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedLine: return "malformed_line";
    case ParseErrorKind::NegativeCost: return "negative_cost";
    case ParseErrorKind::DuplicateRoot: return "duplicate_root";
    case ParseErrorKind::MissingRoot: return "missing_root";
    case ParseErrorKind::MissingNodes: return "missing_nodes";
    case ParseErrorKind::IdOutOfRange: return "id_out_of_range";
    case ParseErrorKind::SelfLoop: return "self_loop";
    case ParseErrorKind::RootIsTerminal: return "root_is_terminal";
    case ParseErrorKind::DuplicateTerminal: return "duplicate_terminal";
    case ParseErrorKind::QuasiBipartiteViolation: return "quasi_bipartite_violation";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

Instance Instance::make(NodeId node_count, std::vector<Arc> arcs, NodeId root,
                        std::vector<NodeId> terminals) {
  if (node_count < 0) throw std::invalid_argument("Instance: negative node count");
  auto in_range = [node_count](NodeId v) { return v >= 0 && v < node_count; };
  if (!in_range(root)) throw std::invalid_argument("Instance: root out of range");

  Instance inst;
  inst.node_count_ = node_count;
  inst.root_ = root;
  inst.roles_.assign(static_cast<size_t>(node_count), NodeRole::Steiner);
  inst.roles_[static_cast<size_t>(root)] = NodeRole::Root;
  for (NodeId t : terminals) {
    if (!in_range(t)) throw std::invalid_argument("Instance: terminal out of range");
    if (t == root) throw std::invalid_argument("Instance: root listed as terminal");
    if (inst.roles_[static_cast<size_t>(t)] == NodeRole::Terminal)
      throw std::invalid_argument("Instance: duplicate terminal");
    inst.roles_[static_cast<size_t>(t)] = NodeRole::Terminal;
  }
  inst.terminals_ = std::move(terminals);

  inst.out_.assign(static_cast<size_t>(node_count), {});
  inst.in_.assign(static_cast<size_t>(node_count), {});
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (!in_range(a.tail) || !in_range(a.head))
      throw std::invalid_argument("Instance: arc endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("Instance: self-loop");
    if (a.cost.sign() < 0) throw std::invalid_argument("Instance: negative arc cost");
    inst.out_[static_cast<size_t>(a.tail)].push_back(static_cast<ArcId>(i));
    inst.in_[static_cast<size_t>(a.head)].push_back(static_cast<ArcId>(i));
  }
  inst.arcs_ = std::move(arcs);
  return inst;
}

namespace {

struct RawLine {
  int number = 0;
  std::vector<std::string> tokens;
};

NodeId parse_file_id(const std::string& tok, NodeId node_count, int line) {
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(ParseErrorKind::MalformedLine, line, "expected a node id, got '" + tok + "'");
  }
  if (tok.empty() || tok.size() > 9)
    throw ParseError(ParseErrorKind::MalformedLine, line, "expected a node id, got '" + tok + "'");
  long id = std::stol(tok);
  if (id < 1 || id > node_count)
    throw ParseError(ParseErrorKind::IdOutOfRange, line,
                     "node id " + tok + " outside 1.." + std::to_string(node_count));
  return static_cast<NodeId>(id - 1);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<RawLine> lines;
  {
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++number;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;  // blank
      if (line[first] == '#') continue;               // comment
      RawLine raw;
      raw.number = number;
      std::istringstream ss{std::string(line)};
      std::string tok;
      while (ss >> tok) raw.tokens.push_back(tok);
      lines.push_back(std::move(raw));
    }
  }

  if (lines.empty() || lines.front().tokens[0] != "Nodes")
    throw ParseError(ParseErrorKind::MissingNodes, lines.empty() ? 0 : lines.front().number,
                     "first line must be 'Nodes <n>'");
  const RawLine& nodes_line = lines.front();
  if (nodes_line.tokens.size() != 2)
    throw ParseError(ParseErrorKind::MalformedLine, nodes_line.number, "expected 'Nodes <n>'");
  NodeId node_count;
  try {
    size_t used = 0;
    long n = std::stol(nodes_line.tokens[1], &used);
    if (used != nodes_line.tokens[1].size() || n < 0 || n > 50'000'000)
      throw std::invalid_argument("range");
    node_count = static_cast<NodeId>(n);
  } catch (const std::exception&) {
    throw ParseError(ParseErrorKind::MalformedLine, nodes_line.number,
                     "bad node count '" + nodes_line.tokens[1] + "'");
  }

  std::vector<Arc> arcs;
  std::vector<int> arc_lines;
  std::optional<NodeId> root;
  std::vector<NodeId> terminals;
  std::vector<char> is_terminal(static_cast<size_t>(node_count), 0);

  for (size_t i = 1; i < lines.size(); ++i) {
    const RawLine& ln = lines[i];
    const std::string& kw = ln.tokens[0];
    if (kw == "A") {
      if (ln.tokens.size() != 4)
        throw ParseError(ParseErrorKind::MalformedLine, ln.number, "expected 'A <tail> <head> <cost>'");
      Arc arc;
      arc.tail = parse_file_id(ln.tokens[1], node_count, ln.number);
      arc.head = parse_file_id(ln.tokens[2], node_count, ln.number);
      if (arc.tail == arc.head)
        throw ParseError(ParseErrorKind::SelfLoop, ln.number,
                         "self-loop at node " + ln.tokens[1]);
      auto cost = Rational::try_parse(ln.tokens[3]);
      if (!cost)
        throw ParseError(ParseErrorKind::MalformedLine, ln.number,
                         "bad cost literal '" + ln.tokens[3] + "'");
      if (cost->sign() < 0)
        throw ParseError(ParseErrorKind::NegativeCost, ln.number,
                         "negative cost " + ln.tokens[3]);
      arc.cost = std::move(*cost);
      arcs.push_back(std::move(arc));
      arc_lines.push_back(ln.number);
    } else if (kw == "Root") {
      if (ln.tokens.size() != 2)
        throw ParseError(ParseErrorKind::MalformedLine, ln.number, "expected 'Root <id>'");
      if (root)
        throw ParseError(ParseErrorKind::DuplicateRoot, ln.number, "Root declared twice");
      root = parse_file_id(ln.tokens[1], node_count, ln.number);
    } else if (kw == "T") {
      if (ln.tokens.size() != 2)
        throw ParseError(ParseErrorKind::MalformedLine, ln.number, "expected 'T <id>'");
      NodeId t = parse_file_id(ln.tokens[1], node_count, ln.number);
      if (is_terminal[static_cast<size_t>(t)])
        throw ParseError(ParseErrorKind::DuplicateTerminal, ln.number,
                         "terminal " + ln.tokens[1] + " declared twice");
      is_terminal[static_cast<size_t>(t)] = 1;
      terminals.push_back(t);
    } else if (kw == "Nodes") {
      throw ParseError(ParseErrorKind::MalformedLine, ln.number, "'Nodes' declared twice");
    } else {
      throw ParseError(ParseErrorKind::MalformedLine, ln.number, "unknown keyword '" + kw + "'");
    }
  }

  if (!root) throw ParseError(ParseErrorKind::MissingRoot, 0, "no Root line");
  if (is_terminal[static_cast<size_t>(*root)])
    throw ParseError(ParseErrorKind::RootIsTerminal, 0,
                     "root node is also declared as a terminal");

  // Roles are known only now; reject Steiner-Steiner arcs with their line.
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    const bool tail_steiner = a.tail != *root && !is_terminal[static_cast<size_t>(a.tail)];
    const bool head_steiner = a.head != *root && !is_terminal[static_cast<size_t>(a.head)];
    if (tail_steiner && head_steiner)
      throw ParseError(ParseErrorKind::QuasiBipartiteViolation, arc_lines[i],
                       "arc joins two Steiner nodes");
  }

  return Instance::make(node_count, std::move(arcs), *root, std::move(terminals));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "Nodes " << inst.node_count() << "\n";
  for (const Arc& a : inst.arcs())
    out << "A " << a.tail + 1 << " " << a.head + 1 << " " << a.cost.str() << "\n";
  out << "Root " << inst.root() + 1 << "\n";
  for (NodeId t : inst.terminals()) out << "T " << t + 1 << "\n";
  return out.str();
}

ValidationReport validate(const Instance& inst) {
  ValidationReport report;

  {
    ValidationCheck check{"quasi_bipartite", true, ""};
    for (ArcId a = 0; a < inst.arc_count(); ++a) {
      const Arc& arc = inst.arc(a);
      if (inst.is_steiner(arc.tail) && inst.is_steiner(arc.head)) {
        check.ok = false;
        check.detail += "arc " + std::to_string(a) + " joins Steiner nodes " +
                        std::to_string(arc.tail + 1) + "->" + std::to_string(arc.head + 1) + "; ";
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    ValidationCheck check{"costs_nonnegative", true, ""};
    for (ArcId a = 0; a < inst.arc_count(); ++a) {
      if (inst.arc(a).cost.sign() < 0) {
        check.ok = false;
        check.detail += "arc " + std::to_string(a) + "; ";
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    ValidationCheck check{"terminals_reachable", true, ""};
    std::vector<char> seen(static_cast<size_t>(inst.node_count()), 0);
    std::queue<NodeId> queue;
    seen[static_cast<size_t>(inst.root())] = 1;
    queue.push(inst.root());
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      for (ArcId a : inst.out_arcs(v)) {
        NodeId w = inst.arc(a).head;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          queue.push(w);
        }
      }
    }
    for (NodeId t : inst.terminals()) {
      if (!seen[static_cast<size_t>(t)]) {
        check.ok = false;
        check.detail += "terminal " + std::to_string(t + 1) + " unreachable from root; ";
      }
    }
    report.checks.push_back(std::move(check));
  }

  report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                          [](const ValidationCheck& c) { return c.ok; });
  return report;
}

PathResult shortest_dist(const Instance& inst, std::span<const NodeId> sources, NodeId target) {
  if (sources.empty()) throw std::invalid_argument("shortest_dist: empty source set");

  const size_t n = static_cast<size_t>(inst.node_count());
  std::vector<std::optional<Rational>> dist(n);
  std::vector<ArcId> pred(n, -1);
  std::vector<char> settled(n, 0);

  using Entry = std::pair<Rational, NodeId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    return a.first > b.first || (a.first == b.first && a.second > b.second);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);

  for (NodeId s : sources) {
    if (s < 0 || s >= inst.node_count())
      throw std::invalid_argument("shortest_dist: source out of range");
    if (!dist[static_cast<size_t>(s)]) {
      dist[static_cast<size_t>(s)] = Rational(0);
      queue.emplace(Rational(0), s);
    }
  }

  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[static_cast<size_t>(v)]) continue;
    settled[static_cast<size_t>(v)] = 1;
    if (v == target) break;
    for (ArcId a : inst.out_arcs(v)) {
      const Arc& arc = inst.arc(a);
      Rational nd = d + arc.cost;
      auto& slot = dist[static_cast<size_t>(arc.head)];
      if (!slot || nd < *slot) {
        slot = nd;
        pred[static_cast<size_t>(arc.head)] = a;
        queue.emplace(std::move(nd), arc.head);
      }
    }
  }

  PathResult result;
  if (!dist[static_cast<size_t>(target)]) return result;
  result.dist = dist[static_cast<size_t>(target)];
  NodeId v = target;
  while (pred[static_cast<size_t>(v)] != -1) {
    ArcId a = pred[static_cast<size_t>(v)];
    result.arcs.push_back(a);
    v = inst.arc(a).tail;
  }
  std::reverse(result.arcs.begin(), result.arcs.end());
  return result;
}

}  // namespace dst
