#pragma once

#include "nodalbn/curve_graph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nodalbn {

/// Weights w_1..w_gamma with 0 < w_i < 1 and sum exactly 1.
/// A smooth curve (gamma = 1) carries the single weight 1.
class Polarization {
 public:
  explicit Polarization(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InputError("a polarization needs at least one weight");
    Rational total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      const Rational& w = weights_[i];
      if (weights_.size() > 1 && (w <= 0 || w >= 1))
        throw InputError("weight w_" + std::to_string(i + 1) + " = " + to_string(w) + " is outside (0,1)");
      total += w;
    }
    if (total != 1) throw InputError("weights sum to " + to_string(total) + ", not 1");
  }

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(ComponentId i) const {
    if (i < 1 || i > size()) throw InputError("unknown component id " + std::to_string(i));
    return weights_[static_cast<std::size_t>(i - 1)];
  }
  std::string str() const { return join(weights_); }

  friend bool operator==(const Polarization&, const Polarization&) = default;

 private:
  std::vector<Rational> weights_;
};

inline void require_matching(const NodalCurve& c, const Polarization& w) {
  if (c.num_components() != w.size())
    throw InputError("polarization has " + std::to_string(w.size()) + " weights but the curve has " +
                     std::to_string(c.num_components()) + " components");
}

/// The polarization induced by the dualizing sheaf: eta_i = (2g_i - 2 + delta_i) / (2p_a - 2).
inline Polarization canonical_polarization(const NodalCurve& c) {
  const int pa = arithmetic_genus(c);
  if (pa < 2) throw InputError("canonical polarization needs p_a >= 2");
  std::vector<Rational> eta;
  for (ComponentId i = 1; i <= c.num_components(); ++i)
    eta.emplace_back(2 * c.genus(i) - 2 + node_degree(c, i), 2 * pa - 2);
  return Polarization(std::move(eta));
}

/// `canonical`, or a comma-separated `p/q` list.
inline Polarization parse_polarization(std::string_view spec, const NodalCurve& c) {
  if (spec == "canonical") return canonical_polarization(c);
  Polarization w(parse_rational_list(spec));
  require_matching(c, w);
  return w;
}

/// omega-rank of O_B: the total weight carried by B.
inline Rational wrank_subcurve(const Polarization& w, const Subcurve& b) {
  Rational total = 0;
  for (ComponentId i : b.ids()) total += w.weight(i);
  return total;
}

/// chi(O_B) = sum over B of (1 - g_i), minus the nodes internal to B.
/// For connected B on a compact-type curve this is 1 - sum g_i.
inline Integer structure_sheaf_euler(const NodalCurve& c, const Subcurve& b) {
  Integer chi = 0;
  for (ComponentId i : b.ids()) chi += 1 - c.genus(i);
  return chi - internal_node_count(c, b);
}

/// Delta_omega(O_B) = wdeg(O_B) = chi(O_B) - wrank(O_B) chi(O_C); restriction degrees of O_B vanish.
inline Rational delta_structure_sheaf(const NodalCurve& c, const Polarization& w, const Subcurve& b) {
  require_matching(c, w);
  if (b.empty()) throw InputError("subcurve must be nonempty");
  return Rational(structure_sheaf_euler(c, b)) - wrank_subcurve(w, b) * (1 - arithmetic_genus(c));
}

struct SplitDelta {
  int node_id = 0;
  Subcurve side;
  Rational delta;
  bool in_range = false;
};

struct GoodnessProxyReport {
  bool pass = true;
  std::vector<SplitDelta> splits;
};

/// Edge-split criterion 0 < Delta_omega(O_B) < 1 over every one-node split.
/// This is a proxy for goodness, not the full quantification over depth-one sheaves.
inline GoodnessProxyReport goodness_proxy(const NodalCurve& c, const Polarization& w) {
  require_compact_type(c, "goodness_proxy");
  require_matching(c, w);
  GoodnessProxyReport report;
  for (auto& split : edge_splits(c)) {
    Rational delta = delta_structure_sheaf(c, w, split.side);
    const bool ok = delta > 0 && delta < 1;
    report.pass = report.pass && ok;
    report.splits.push_back({split.node_id, std::move(split.side), std::move(delta), ok});
  }
  return report;
}

/// omega + epsilon; epsilon must sum to exactly zero and the result must stay a polarization.
inline Polarization perturb(const Polarization& w, std::span<const Rational> eps) {
  if (static_cast<int>(eps.size()) != w.size()) throw InputError("perturbation length does not match polarization");
  Rational total = 0;
  std::vector<Rational> out = w.weights();
  for (std::size_t i = 0; i < eps.size(); ++i) {
    total += eps[i];
    out[i] += eps[i];
  }
  if (total != 0) throw InputError("perturbation sums to " + to_string(total) + ", not 0");
  return Polarization(std::move(out));
}

/// Components with weight at least 1/2 (the grip criterion compares these with
/// delta_j >= p_a - 2 g_j + 1 under the canonical polarization).
inline std::vector<ComponentId> heavy_components(const Polarization& w) {
  std::vector<ComponentId> out;
  for (ComponentId i = 1; i <= w.size(); ++i)
    if (w.weight(i) * 2 >= 1) out.push_back(i);
  return out;
}

}  // namespace nodalbn
