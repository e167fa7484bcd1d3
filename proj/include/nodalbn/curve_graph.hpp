#pragma once

#include "nodalbn/common.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nodalbn {

/// A node joining two distinct components.
struct Node {
  int id = 0;
  ComponentId first = 0;
  ComponentId second = 0;

  ComponentId other(ComponentId c) const { return c == first ? second : first; }
  bool touches(ComponentId c) const { return c == first || c == second; }
  friend bool operator==(const Node&, const Node&) = default;
};

/// A nonempty set of components of a curve with `gamma` components.
class Subcurve {
 public:
  Subcurve() = default;
  explicit Subcurve(int gamma) : members_(static_cast<std::size_t>(gamma), false) {}

  static Subcurve of(int gamma, std::initializer_list<ComponentId> ids) {
    return of(gamma, std::vector<ComponentId>(ids));
  }
  static Subcurve of(int gamma, const std::vector<ComponentId>& ids) {
    Subcurve s(gamma);
    for (auto id : ids) s.insert(id);
    return s;
  }
  static Subcurve whole(int gamma) {
    Subcurve s(gamma);
    std::fill(s.members_.begin(), s.members_.end(), true);
    return s;
  }

  void insert(ComponentId id) {
    if (id < 1 || id > gamma()) throw InputError("component id " + std::to_string(id) + " out of range");
    members_[static_cast<std::size_t>(id - 1)] = true;
  }
  void erase(ComponentId id) {
    if (id >= 1 && id <= gamma()) members_[static_cast<std::size_t>(id - 1)] = false;
  }
  bool contains(ComponentId id) const {
    return id >= 1 && id <= gamma() && members_[static_cast<std::size_t>(id - 1)];
  }
  int gamma() const { return static_cast<int>(members_.size()); }
  int size() const { return static_cast<int>(std::count(members_.begin(), members_.end(), true)); }
  bool empty() const { return size() == 0; }

  Subcurve complement() const {
    Subcurve c(gamma());
    for (int i = 0; i < gamma(); ++i) c.members_[static_cast<std::size_t>(i)] = !members_[static_cast<std::size_t>(i)];
    return c;
  }

  std::vector<ComponentId> ids() const {
    std::vector<ComponentId> out;
    for (int i = 0; i < gamma(); ++i)
      if (members_[static_cast<std::size_t>(i)]) out.push_back(i + 1);
    return out;
  }

  std::string str() const { return "{" + join(ids()) + "}"; }

  friend bool operator==(const Subcurve&, const Subcurve&) = default;

 private:
  std::vector<bool> members_;
};

enum class CurveClass { chain, comb, chain_and_comb, other, not_compact_type };

inline std::string_view to_string(CurveClass c) {
  switch (c) {
    case CurveClass::chain: return "chain";
    case CurveClass::comb: return "comb";
    case CurveClass::chain_and_comb: return "chain_and_comb";
    case CurveClass::other: return "other";
    case CurveClass::not_compact_type: return "not_compact_type";
  }
  return "other";
}

/// Connected nodal curve with smooth components of genus >= 2, stored as its dual multigraph.
class NodalCurve {
 public:
  NodalCurve(std::vector<int> genera, std::vector<Node> nodes) : genera_(std::move(genera)), nodes_(std::move(nodes)) {
    if (genera_.empty()) throw InputError("a curve needs at least one component");
    for (std::size_t i = 0; i < genera_.size(); ++i)
      if (genera_[i] < 2)
        throw InputError("component " + std::to_string(i + 1) + " has genus " + std::to_string(genera_[i]) +
                         " (components must have genus >= 2)");
    std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
    incident_.assign(genera_.size(), {});
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const Node& n = nodes_[k];
      if (n.id < 1) throw InputError("node id " + std::to_string(n.id) + " must be positive");
      if (k > 0 && nodes_[k - 1].id == n.id) throw InputError("duplicate node id " + std::to_string(n.id));
      if (!valid_id(n.first) || !valid_id(n.second))
        throw InputError("node " + std::to_string(n.id) + " references an unknown component");
      if (n.first == n.second)
        throw InputError("node " + std::to_string(n.id) + " is a self-node on component " + std::to_string(n.first));
      incident_[static_cast<std::size_t>(n.first - 1)].push_back(k);
      incident_[static_cast<std::size_t>(n.second - 1)].push_back(k);
    }
    if (components_of(Subcurve::whole(num_components())).size() != 1) throw InputError("the dual graph is not connected");
  }

  int num_components() const { return static_cast<int>(genera_.size()); }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const std::vector<int>& genera() const { return genera_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool valid_id(ComponentId c) const { return c >= 1 && c <= num_components(); }

  int genus(ComponentId c) const {
    require_id(c);
    return genera_[static_cast<std::size_t>(c - 1)];
  }

  const Node& node(int node_id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node_id,
                               [](const Node& n, int id) { return n.id < id; });
    if (it == nodes_.end() || it->id != node_id) throw InputError("unknown node id " + std::to_string(node_id));
    return *it;
  }

  /// Nodes lying on component `c`, in node-id order.
  std::vector<Node> incident_nodes(ComponentId c) const {
    require_id(c);
    std::vector<Node> out;
    for (auto k : incident_[static_cast<std::size_t>(c - 1)]) out.push_back(nodes_[k]);
    return out;
  }

  /// Connected components of the subgraph induced on `b`, each listed once, ordered by smallest id.
  std::vector<Subcurve> components_of(const Subcurve& b) const {
    std::vector<Subcurve> out;
    Subcurve seen(num_components());
    for (ComponentId start : b.ids()) {
      if (seen.contains(start)) continue;
      Subcurve piece(num_components());
      std::vector<ComponentId> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        const ComponentId c = stack.back();
        stack.pop_back();
        piece.insert(c);
        for (auto k : incident_[static_cast<std::size_t>(c - 1)]) {
          const ComponentId next = nodes_[k].other(c);
          if (b.contains(next) && !seen.contains(next)) {
            seen.insert(next);
            stack.push_back(next);
          }
        }
      }
      out.push_back(std::move(piece));
    }
    return out;
  }

  friend bool operator==(const NodalCurve& a, const NodalCurve& b) {
    return a.genera_ == b.genera_ && a.nodes_ == b.nodes_;
  }

 private:
  void require_id(ComponentId c) const {
    if (!valid_id(c)) throw InputError("unknown component id " + std::to_string(c));
  }

  std::vector<int> genera_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline Subcurve whole_curve(const NodalCurve& c) { return Subcurve::whole(c.num_components()); }

/// p_a(C) = sum g_i + delta - gamma + 1.
inline int arithmetic_genus(const NodalCurve& c) {
  int total = 0;
  for (int g : c.genera()) total += g;
  return total + c.num_nodes() - c.num_components() + 1;
}

/// Number of nodes on component `i` (delta_i).
inline int node_degree(const NodalCurve& c, ComponentId i) { return static_cast<int>(c.incident_nodes(i).size()); }

inline bool is_compact_type(const NodalCurve& c) { return c.num_nodes() == c.num_components() - 1; }

inline void require_compact_type(const NodalCurve& c, std::string_view operation) {
  if (!is_compact_type(c))
    throw InputError(std::string(operation) + " requires a curve of compact type (dual graph must be a tree)");
}

inline bool is_connected(const NodalCurve& c, const Subcurve& b) { return c.components_of(b).size() == 1; }

/// Ids of the nodes joining `b` to its complement.
inline std::vector<int> crossing_nodes(const NodalCurve& c, const Subcurve& b) {
  std::vector<int> out;
  for (const Node& n : c.nodes())
    if (b.contains(n.first) != b.contains(n.second)) out.push_back(n.id);
  return out;
}

/// B . B^c, the number of nodes where `b` meets its complement.
inline int crossing_count(const NodalCurve& c, const Subcurve& b) { return static_cast<int>(crossing_nodes(c, b).size()); }

/// Nodes with both branches on `b`.
inline int internal_node_count(const NodalCurve& c, const Subcurve& b) {
  int count = 0;
  for (const Node& n : c.nodes())
    if (b.contains(n.first) && b.contains(n.second)) ++count;
  return count;
}

inline CurveClass classify(const NodalCurve& c) {
  if (!is_compact_type(c)) return CurveClass::not_compact_type;
  const int gamma = c.num_components();
  bool path = true;
  bool star = false;
  for (ComponentId i = 1; i <= gamma; ++i) {
    const int deg = node_degree(c, i);
    if (deg > 2) path = false;
    if (deg == gamma - 1) star = true;
  }
  if (path && star) return CurveClass::chain_and_comb;
  if (path) return CurveClass::chain;
  if (star) return CurveClass::comb;
  return CurveClass::other;
}

inline bool is_chain_like(const NodalCurve& c) {
  const auto k = classify(c);
  return k == CurveClass::chain || k == CurveClass::chain_and_comb;
}

inline bool is_comb_like(const NodalCurve& c) {
  const auto k = classify(c);
  return k == CurveClass::comb || k == CurveClass::chain_and_comb;
}

/// The two sides obtained by deleting one node of a compact-type curve.
/// `side` is the half not containing the last component.
struct EdgeSplit {
  int node_id = 0;
  Subcurve side;
  Subcurve other;
};

inline std::vector<EdgeSplit> edge_splits(const NodalCurve& c) {
  require_compact_type(c, "edge_splits");
  const int gamma = c.num_components();
  std::vector<EdgeSplit> out;
  for (const Node& cut : c.nodes()) {
    Subcurve reached(gamma);
    std::vector<ComponentId> stack{cut.first};
    reached.insert(cut.first);
    while (!stack.empty()) {
      const ComponentId v = stack.back();
      stack.pop_back();
      for (const Node& n : c.incident_nodes(v)) {
        if (n.id == cut.id) continue;
        const ComponentId w = n.other(v);
        if (!reached.contains(w)) {
          reached.insert(w);
          stack.push_back(w);
        }
      }
    }
    Subcurve side = reached.contains(gamma) ? reached.complement() : reached;
    Subcurve other = side.complement();
    out.push_back({cut.id, std::move(side), std::move(other)});
  }
  return out;
}

/// Parses the curve section of a curve description file. The section ends at the
/// first `sheaf` line (descriptor blocks are handled by parse_document).
inline NodalCurve parse_curve(std::string_view text) {
  std::map<int, int> genera;
  std::vector<Node> nodes;
  std::set<int> node_ids;
  bool seen_node = false;
  int last_line = 0;
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& t = line.tokens;
    last_line = line.number;
    if (t[0] == "sheaf") break;
    if (t[0] == "component") {
      if (seen_node) throw ParseError(line.number, "component lines must precede node lines");
      if (t.size() != 4 || t[2] != "genus") throw ParseError(line.number, "expected 'component <id> genus <g>'");
      const auto id = detail::parse_int(t[1], line.number, "component id");
      const auto g = detail::parse_int(t[3], line.number, "genus");
      if (id < 1) throw ParseError(line.number, "component id must be positive");
      if (genera.count(static_cast<int>(id))) throw ParseError(line.number, "duplicate component id " + t[1]);
      if (g < 2) throw ParseError(line.number, "genus must be >= 2 (got " + t[3] + ")");
      genera[static_cast<int>(id)] = static_cast<int>(g);
    } else if (t[0] == "node") {
      seen_node = true;
      if (t.size() != 4) throw ParseError(line.number, "expected 'node <id> <comp_a> <comp_b>'");
      const auto id = detail::parse_int(t[1], line.number, "node id");
      const auto a = detail::parse_int(t[2], line.number, "component id");
      const auto b = detail::parse_int(t[3], line.number, "component id");
      if (id < 1) throw ParseError(line.number, "node id must be positive");
      if (!node_ids.insert(static_cast<int>(id)).second) throw ParseError(line.number, "duplicate node id " + t[1]);
      if (!genera.count(static_cast<int>(a)) || !genera.count(static_cast<int>(b)))
        throw ParseError(line.number, "node references an undeclared component");
      if (a == b) throw ParseError(line.number, "self-nodes are not supported (node joins component " + t[2] + " to itself)");
      nodes.push_back({static_cast<int>(id), static_cast<int>(a), static_cast<int>(b)});
    } else {
      throw ParseError(line.number, "unknown keyword '" + t[0] + "'");
    }
  }
  if (genera.empty()) throw ParseError(last_line, "no components declared");
  if (genera.rbegin()->first != static_cast<int>(genera.size()))
    throw ParseError(last_line, "component ids must be contiguous 1..gamma");
  std::vector<int> g;
  for (const auto& [id, genus] : genera) g.push_back(genus);
  try {
    return NodalCurve(std::move(g), std::move(nodes));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(last_line, e.what());
  }
}

/// Canonical curve file text: components by id, then nodes by id.
inline std::string format_curve(const NodalCurve& c) {
  std::string out;
  for (ComponentId i = 1; i <= c.num_components(); ++i)
    out += "component " + std::to_string(i) + " genus " + std::to_string(c.genus(i)) + "\n";
  for (const Node& n : c.nodes())
    out += "node " + std::to_string(n.id) + " " + std::to_string(n.first) + " " + std::to_string(n.second) + "\n";
  return out;
}

}  // namespace nodalbn
