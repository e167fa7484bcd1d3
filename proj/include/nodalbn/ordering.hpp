#pragma once

#include "nodalbn/curve_graph.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace nodalbn {

/// Ordering of the components of a compact-type curve ending at a chosen root,
/// together with the subcurves A_1..A_{gamma-1} and their separating nodes.
/// Index j is 1-based throughout, matching the j of the stability conditions.
struct OrderedDecomposition {
  ComponentId root = 0;
  std::vector<ComponentId> order;
  std::vector<Subcurve> pieces;
  std::vector<int> separating_nodes;

  int gamma() const { return static_cast<int>(order.size()); }
  ComponentId at(int j) const { return order[static_cast<std::size_t>(j - 1)]; }
  const Subcurve& piece(int j) const { return pieces[static_cast<std::size_t>(j - 1)]; }
  int separating_node(int j) const { return separating_nodes[static_cast<std::size_t>(j - 1)]; }
  /// a_j, the number of components of A_j.
  int piece_size(int j) const { return piece(j).size(); }
};

/// A_j for the given ordering: the complement of the connected component of
/// C minus C_{order[j]} that contains the tail order[j+1..gamma].
inline Subcurve tail_complement_piece(const NodalCurve& c, const std::vector<ComponentId>& order, int j) {
  Subcurve rest = whole_curve(c);
  rest.erase(order[static_cast<std::size_t>(j - 1)]);
  const ComponentId last = order.back();
  for (auto& part : c.components_of(rest))
    if (part.contains(last)) return part.complement();
  return Subcurve::of(c.num_components(), {order[static_cast<std::size_t>(j - 1)]});
}

/// Components are listed so that every root-complement piece appears as a contiguous
/// block ending at the component adjacent to the root; blocks are taken in order of
/// their smallest component id. This is a post-order walk of the tree hung from `root`.
inline OrderedDecomposition order_components(const NodalCurve& c, ComponentId root) {
  require_compact_type(c, "order_components");
  if (!c.valid_id(root)) throw InputError("unknown root component " + std::to_string(root));
  const int gamma = c.num_components();
  const auto idx = [](ComponentId id) { return static_cast<std::size_t>(id - 1); };

  std::vector<ComponentId> parent(static_cast<std::size_t>(gamma), 0);
  std::vector<ComponentId> bfs{root};
  parent[idx(root)] = root;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const ComponentId v = bfs[head];
    for (const Node& n : c.incident_nodes(v)) {
      const ComponentId w = n.other(v);
      if (parent[idx(w)] == 0) {
        parent[idx(w)] = v;
        bfs.push_back(w);
      }
    }
  }

  std::vector<ComponentId> subtree_min(static_cast<std::size_t>(gamma));
  for (ComponentId v = 1; v <= gamma; ++v) subtree_min[idx(v)] = v;
  std::vector<std::vector<ComponentId>> children(static_cast<std::size_t>(gamma));
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    const ComponentId v = *it;
    if (v == root) continue;
    const ComponentId p = parent[idx(v)];
    subtree_min[idx(p)] = std::min(subtree_min[idx(p)], subtree_min[idx(v)]);
    children[idx(p)].push_back(v);
  }
  for (auto& kids : children)
    std::sort(kids.begin(), kids.end(),
              [&](ComponentId a, ComponentId b) { return subtree_min[idx(a)] < subtree_min[idx(b)]; });

  OrderedDecomposition out;
  out.root = root;
  // Explicit-stack post-order: (vertex, next child index).
  std::vector<std::pair<ComponentId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[idx(v)].size()) {
      const ComponentId child = children[idx(v)][next++];
      stack.emplace_back(child, 0);
    } else {
      out.order.push_back(v);
      stack.pop_back();
    }
  }

  for (int j = 1; j < gamma; ++j) {
    Subcurve a = tail_complement_piece(c, out.order, j);
    const auto cross = crossing_nodes(c, a);
    out.separating_nodes.push_back(cross.empty() ? 0 : cross.front());
    out.pieces.push_back(std::move(a));
  }
  return out;
}

struct Violation {
  std::string clause;
  int j = 0;
  std::string detail;
};

struct DecompositionCheck {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// Checks the ordering properties literally: (a) the root is last, (b) every tail is
/// connected, (c) C_{order[j]} lies in A_j, A_j and its complement are connected and
/// meet in exactly the node p_j, plus triangularity (C_{order[i]} in A_j implies i <= j).
inline DecompositionCheck verify_decomposition(const NodalCurve& c, const OrderedDecomposition& d) {
  DecompositionCheck check;
  const int gamma = c.num_components();
  auto fail = [&](std::string clause, int j, std::string detail) {
    check.violations.push_back({std::move(clause), j, std::move(detail)});
  };

  std::vector<ComponentId> sorted = d.order;
  std::sort(sorted.begin(), sorted.end());
  bool permutation = static_cast<int>(sorted.size()) == gamma;
  for (int i = 0; permutation && i < gamma; ++i) permutation = sorted[static_cast<std::size_t>(i)] == i + 1;
  if (!permutation || static_cast<int>(d.pieces.size()) != gamma - 1 ||
      static_cast<int>(d.separating_nodes.size()) != gamma - 1) {
    fail("shape", 0, "order must be a permutation of 1..gamma with gamma-1 pieces and nodes");
    return check;
  }
  for (const auto& piece : d.pieces)
    if (piece.gamma() != gamma) {
      fail("shape", 0, "piece defined on a different number of components");
      return check;
    }

  if (d.order.back() != d.root) fail("a", gamma, "last component is not the chosen root");

  for (int j = 1; j < gamma; ++j) {
    Subcurve tail(gamma);
    for (int i = j + 1; i <= gamma; ++i) tail.insert(d.at(i));
    if (!is_connected(c, tail)) fail("b", j, "tail " + tail.str() + " is disconnected");

    const Subcurve& a = d.piece(j);
    const Subcurve ac = a.complement();
    if (!a.contains(d.at(j))) fail("c", j, "component " + std::to_string(d.at(j)) + " not in A_j");
    if (a.empty() || !is_connected(c, a)) fail("c", j, "A_j " + a.str() + " is disconnected or empty");
    if (ac.empty() || !is_connected(c, ac)) fail("c", j, "complement " + ac.str() + " is disconnected or empty");
    const auto cross = crossing_nodes(c, a);
    if (cross.size() != 1 || cross.front() != d.separating_node(j))
      fail("c", j, "A_j meets its complement in nodes {" + join(cross) + "}, expected {" +
                       std::to_string(d.separating_node(j)) + "}");
    for (int i = j + 1; i <= gamma; ++i)
      if (a.contains(d.at(i)))
        fail("triangularity", j, "component " + std::to_string(d.at(i)) + " at position " + std::to_string(i) +
                                     " lies in A_j");
  }
  return check;
}

}  // namespace nodalbn
