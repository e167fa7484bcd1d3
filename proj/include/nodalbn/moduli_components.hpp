#pragma once

#include "nodalbn/curve_graph.hpp"
#include "nodalbn/ordering.hpp"
#include "nodalbn/polarization.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nodalbn {

/// Restriction degrees (d_1..d_gamma) in component-id order for multirank s.1.
struct ComponentTuple {
  long long rank = 1;
  std::vector<long long> degrees;

  long long total() const {
    long long t = 0;
    for (auto d : degrees) t += d;
    return t;
  }
  long long degree(ComponentId i) const { return degrees[static_cast<std::size_t>(i - 1)]; }
  std::string str() const { return join(degrees); }

  friend bool operator==(const ComponentTuple&, const ComponentTuple&) = default;
  friend auto operator<=>(const ComponentTuple& a, const ComponentTuple& b) {
    if (auto c = a.degrees <=> b.degrees; c != 0) return c;
    return a.rank <=> b.rank;
  }
};

using Catalog = std::vector<ComponentTuple>;

/// Open interval (lower, upper) that sigma_j = sum_{C_i in A_j} d_i must lie in.
struct StarBound {
  int j = 0;
  Subcurve piece;
  Rational lower;
  Rational upper;
};

struct StarRow {
  int j = 0;
  Subcurve piece;
  Rational lower;
  Rational sigma;
  Rational upper;
  bool pass = false;

  Rational slack_lower() const { return sigma - lower; }
  Rational slack_upper() const { return upper - sigma; }
};

struct StabilityReport {
  std::vector<StarRow> rows;
  bool pass = true;
};

namespace detail {

inline void require_decomposition_inputs(const NodalCurve& c, const Polarization& w, const OrderedDecomposition& d) {
  require_compact_type(c, "stability conditions");
  require_matching(c, w);
  if (d.gamma() != c.num_components() || static_cast<int>(d.pieces.size()) != c.num_components() - 1)
    throw InputError("ordered decomposition does not match the curve");
}

}  // namespace detail

/// Bounds of the conditions (star)_j for rank s and total degree d:
///   wrank(O_{A_j}) d - s Delta(O_{A_j})  <  sigma_j  <  wrank(O_{A_j}) d + s (1 - Delta(O_{A_j})).
inline std::vector<StarBound> star_bounds(const NodalCurve& c, const Polarization& w, const OrderedDecomposition& d,
                                          long long s, long long degree) {
  detail::require_decomposition_inputs(c, w, d);
  std::vector<StarBound> out;
  for (int j = 1; j < c.num_components(); ++j) {
    const Subcurve& a = d.piece(j);
    const Rational rk = wrank_subcurve(w, a);
    const Rational delta = delta_structure_sheaf(c, w, a);
    out.push_back({j, a, rk * degree - s * delta, rk * degree + s * (1 - delta)});
  }
  return out;
}

inline StabilityReport star_conditions(const NodalCurve& c, const Polarization& w, const OrderedDecomposition& d,
                                       const ComponentTuple& tuple) {
  if (static_cast<int>(tuple.degrees.size()) != c.num_components())
    throw InputError("tuple has " + std::to_string(tuple.degrees.size()) + " entries but the curve has " +
                     std::to_string(c.num_components()) + " components");
  if (tuple.rank < 1) throw InputError("rank s must be positive");
  StabilityReport report;
  for (auto& bound : star_bounds(c, w, d, tuple.rank, tuple.total())) {
    long long sigma = 0;
    for (ComponentId i : bound.piece.ids()) sigma += tuple.degree(i);
    const bool ok = bound.lower < sigma && sigma < bound.upper;
    report.pass = report.pass && ok;
    report.rows.push_back({bound.j, std::move(bound.piece), std::move(bound.lower), Rational(sigma),
                           std::move(bound.upper), ok});
  }
  return report;
}

/// All tuples with sum d satisfying every (star)_j, sorted lexicographically.
///
/// A_j contains C_{order[j]} and otherwise only earlier components, so each choice of
/// the integer sigma_j (at most s candidates in an open interval of width s) fixes
/// d_{order[j]} by back-substitution; the root takes the remainder.
inline Catalog enumerate_components(const NodalCurve& c, const Polarization& w, const OrderedDecomposition& d,
                                    long long s, long long degree) {
  if (s < 1) throw InputError("rank s must be positive");
  const int gamma = c.num_components();
  const auto bounds = star_bounds(c, w, d, s, degree);

  std::vector<std::vector<ComponentId>> earlier(static_cast<std::size_t>(gamma));
  std::vector<long long> lo, hi;
  for (int j = 1; j < gamma; ++j) {
    const Subcurve& a = d.piece(j);
    if (!a.contains(d.at(j))) throw InputError("decomposition violates C_{order[j]} in A_j");
    for (int i = j + 1; i <= gamma; ++i)
      if (a.contains(d.at(i))) throw InputError("decomposition is not triangular");
    for (ComponentId id : a.ids())
      if (id != d.at(j)) earlier[static_cast<std::size_t>(j - 1)].push_back(id);
    lo.push_back(static_cast<long long>(floor_of(bounds[static_cast<std::size_t>(j - 1)].lower) + 1));
    hi.push_back(static_cast<long long>(ceil_of(bounds[static_cast<std::size_t>(j - 1)].upper) - 1));
  }

  Catalog out;
  std::vector<long long> degrees(static_cast<std::size_t>(gamma), 0);
  const auto at = [&](ComponentId id) -> long long& { return degrees[static_cast<std::size_t>(id - 1)]; };
  // Explicit DFS over j with the current sigma candidate per level.
  std::vector<long long> sigma(static_cast<std::size_t>(gamma), 0);
  int level = 1;
  if (gamma > 1) sigma[0] = lo[0] - 1;
  while (true) {
    if (level == gamma) {
      long long partial = 0;
      for (int j = 1; j < gamma; ++j) partial += at(d.at(j));
      at(d.root) = degree - partial;
      out.push_back({s, degrees});
      if (gamma == 1) break;
      --level;
      continue;
    }
    auto& current = sigma[static_cast<std::size_t>(level - 1)];
    if (++current > hi[static_cast<std::size_t>(level - 1)]) {
      if (level == 1) break;
      --level;
      continue;
    }
    long long rest = 0;
    for (ComponentId id : earlier[static_cast<std::size_t>(level - 1)]) rest += at(id);
    at(d.at(level)) = current - rest;
    ++level;
    if (level < gamma) sigma[static_cast<std::size_t>(level - 1)] = lo[static_cast<std::size_t>(level - 1)] - 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Enumeration with the decomposition rooted at `root` (default: the last component).
inline Catalog enumerate_components(const NodalCurve& c, const Polarization& w, long long s, long long degree,
                                    std::optional<ComponentId> root = std::nullopt) {
  return enumerate_components(c, w, order_components(c, root.value_or(c.num_components())), s, degree);
}

/// Keeps tuples with 0 < d_i <= s for every i.
inline Catalog small_slope_filter(const Catalog& catalog, long long s) {
  Catalog out;
  for (const auto& t : catalog)
    if (std::all_of(t.degrees.begin(), t.degrees.end(), [&](long long x) { return x > 0 && x <= s; }))
      out.push_back(t);
  return out;
}

inline Catalog small_slope_filter(const Catalog& catalog) {
  Catalog out;
  for (const auto& t : catalog) {
    auto kept = small_slope_filter(Catalog{t}, t.rank);
    out.insert(out.end(), kept.begin(), kept.end());
  }
  return out;
}

/// The condition with the smallest normalized slack, i.e. the one that breaks first.
struct BindingCondition {
  int j = 0;
  bool lower_side = true;
  Rational slack;
};

/// Guaranteed infinity-norm radius: any zero-sum epsilon with |epsilon|_inf < rho keeping
/// omega + epsilon a polarization preserves every (star)_j. Both bounds of (star)_j move by
/// (d + s chi(O_C)) sum_{A_j} epsilon_i, and |sum_{A_j} epsilon_i| <= a_j |epsilon|_inf.
/// nullopt means unbounded (the shift coefficient vanishes, or there are no conditions).
inline std::optional<Rational> robustness_radius(const NodalCurve& c, const Polarization& w,
                                                 const OrderedDecomposition& d, const ComponentTuple& tuple,
                                                 BindingCondition* binding = nullptr) {
  const auto report = star_conditions(c, w, d, tuple);
  if (!report.pass) throw HypothesisError("tuple (" + tuple.str() + ") fails the stability conditions at omega");
  Integer coefficient = Integer(tuple.total()) + Integer(tuple.rank) * (1 - arithmetic_genus(c));
  if (coefficient < 0) coefficient = -coefficient;
  if (coefficient == 0 || report.rows.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& row : report.rows) {
    const bool lower_side = row.slack_lower() <= row.slack_upper();
    const Rational slack = lower_side ? row.slack_lower() : row.slack_upper();
    Rational rho = slack / (Rational(coefficient) * d.piece_size(row.j));
    if (!best || rho < *best) {
      best = rho;
      if (binding) *binding = {row.j, lower_side, slack};
    }
  }
  return best;
}

struct InvarianceReport {
  bool pass = true;
  Catalog reference;
  /// (root, tuples in the symmetric difference with the reference catalog).
  std::vector<std::pair<ComponentId, Catalog>> differences;
};

/// Enumerates with every root choice and compares against the catalog for root 1.
inline InvarianceReport catalog_invariance_check(const NodalCurve& c, const Polarization& w, long long s,
                                                 long long degree) {
  require_compact_type(c, "catalog_invariance_check");
  InvarianceReport report;
  report.reference = enumerate_components(c, w, s, degree, 1);
  for (ComponentId root = 2; root <= c.num_components(); ++root) {
    const auto other = enumerate_components(c, w, s, degree, root);
    Catalog diff;
    std::set_symmetric_difference(report.reference.begin(), report.reference.end(), other.begin(), other.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) {
      report.pass = false;
      report.differences.emplace_back(root, std::move(diff));
    }
  }
  return report;
}

enum class BuildCase { a, b, c, smooth, none };

inline std::string_view to_string(BuildCase k) {
  switch (k) {
    case BuildCase::a: return "a";
    case BuildCase::b: return "b";
    case BuildCase::c: return "c";
    case BuildCase::smooth: return "smooth";
    case BuildCase::none: return "none";
  }
  return "none";
}

struct BuildResult {
  BuildCase kind = BuildCase::none;
  std::optional<ComponentTuple> tuple;
  /// Root of the decomposition the construction was carried out in.
  ComponentId root = 0;
};

namespace detail {

inline void require_small_slope_member(const NodalCurve& c, const Polarization& eta, ComponentId root,
                                       const ComponentTuple& t, std::string_view builder) {
  const bool stable = star_conditions(c, eta, order_components(c, root), t).pass;
  if (!stable || small_slope_filter(Catalog{t}).empty())
    throw std::logic_error(std::string(builder) + " produced (" + t.str() + ") outside the small-slope catalog");
}

inline ComponentTuple ones_with_special(int gamma, long long s, long long degree, ComponentId special) {
  ComponentTuple t{s, std::vector<long long>(static_cast<std::size_t>(gamma), 1)};
  t.degrees[static_cast<std::size_t>(special - 1)] = degree - gamma + 1;
  return t;
}

/// Case (b): a component with eta_i d >= s/2 (smallest id) is put last and takes d - gamma + 1.
inline std::optional<ComponentId> heavy_for_case_b(const Polarization& eta, long long s, long long degree) {
  const Rational half_s(s, 2);
  for (ComponentId i = 1; i <= eta.size(); ++i)
    if (eta.weight(i) * degree >= half_s) return i;
  return std::nullopt;
}

}  // namespace detail

/// Constructive existence of a small-slope component at the canonical polarization,
/// testing the three numerical cases in order (a), (b), (c).
inline BuildResult tec_builder(const NodalCurve& c, long long s, long long degree) {
  require_compact_type(c, "tec_builder");
  if (s < 1) throw InputError("rank s must be positive");
  const int gamma = c.num_components();
  if (gamma == 1) {
    if (degree > 0 && degree <= s) return {BuildCase::smooth, ComponentTuple{s, {degree}}, 1};
    return {};
  }
  const Polarization eta = canonical_polarization(c);
  const Rational half_s(s, 2);
  const bool wide = half_s >= gamma - 1;
  BuildResult result;

  if (gamma <= degree && degree <= half_s + 1) {
    result = {BuildCase::a, detail::ones_with_special(gamma, s, degree, gamma), gamma};
  } else if (half_s + 1 < degree && degree <= s && wide && detail::heavy_for_case_b(eta, s, degree)) {
    const ComponentId special = *detail::heavy_for_case_b(eta, s, degree);
    result = {BuildCase::b, detail::ones_with_special(gamma, s, degree, special), special};
  } else if (half_s + 1 < degree && degree <= s * gamma && wide) {
    const long long n = degree / gamma;
    const long long m = degree % gamma;
    const Rational width(s, 2 * (gamma - 1));
    std::vector<ComponentId> outside;
    for (ComponentId i = 1; i <= gamma; ++i) {
      const Rational x = eta.weight(i) * degree;
      if (!(n + 1 - width < x && x < n + width)) outside.push_back(i);
    }
    if (outside.size() <= 1) {
      ComponentTuple t{s, std::vector<long long>(static_cast<std::size_t>(gamma), n)};
      for (long long i = 0; i < m; ++i) t.degrees[static_cast<std::size_t>(i)] = n + 1;
      result = {BuildCase::c, std::move(t), outside.empty() ? gamma : outside.front()};
    }
  }
  if (result.tuple) detail::require_small_slope_member(c, eta, result.root, *result.tuple, "tec_builder");
  return result;
}

namespace detail {

inline void require_builder_range(int gamma, long long s, long long degree) {
  if (s < 2LL * (gamma - 1))
    throw HypothesisError("s >= 2(gamma-1) fails: s = " + std::to_string(s) + ", 2(gamma-1) = " +
                          std::to_string(2 * (gamma - 1)));
  if (degree < gamma || degree > s)
    throw HypothesisError("gamma <= d <= s fails: gamma = " + std::to_string(gamma) + ", d = " +
                          std::to_string(degree) + ", s = " + std::to_string(s));
}

}  // namespace detail

/// Chain-like curves: walk the chain from its smallest-id end and pick, for each prefix,
/// the smallest integer prefix sum x with
///   sigma_{j-1} + 1 <= x <= d - (gamma - j),
///   d P_j - s/2 < x < d P_j + s/2 - (gamma - j - 1),   P_j = eta-weight of the prefix.
inline ComponentTuple chain_builder(const NodalCurve& c, long long s, long long degree) {
  if (!is_chain_like(c))
    throw HypothesisError("chain_builder needs a chain-like curve, got " + std::string(to_string(classify(c))));
  const int gamma = c.num_components();
  detail::require_builder_range(gamma, s, degree);
  if (gamma == 1) return {s, {degree}};

  std::vector<ComponentId> ends;
  for (ComponentId i = 1; i <= gamma; ++i)
    if (node_degree(c, i) == 1) ends.push_back(i);
  const ComponentId root = ends.back();
  const auto order = order_components(c, root);
  const Polarization eta = canonical_polarization(c);
  const Rational half_s(s, 2);

  ComponentTuple t{s, std::vector<long long>(static_cast<std::size_t>(gamma), 0)};
  long long previous = 0;
  Rational prefix_weight = 0;
  for (int j = 1; j < gamma; ++j) {
    prefix_weight += eta.weight(order.at(j));
    const long long lo =
        std::max(previous + 1, static_cast<long long>(floor_of(prefix_weight * degree - half_s) + 1));
    const long long hi = std::min(degree - (gamma - j),
                                  static_cast<long long>(ceil_of(prefix_weight * degree + half_s - (gamma - j - 1)) - 1));
    if (lo > hi) throw HypothesisError("prefix system for j = " + std::to_string(j) + " has no integer solution");
    t.degrees[static_cast<std::size_t>(order.at(j) - 1)] = lo - previous;
    previous = lo;
  }
  t.degrees[static_cast<std::size_t>(root - 1)] = degree - previous;
  detail::require_small_slope_member(c, eta, root, t, "chain_builder");
  return t;
}

/// Comb-like curves rooted at the grip: every tooth takes degree 1 and the grip the rest,
/// unless some eta_j d >= s/2 + 1, in which case the case (b) construction applies.
inline ComponentTuple comb_builder(const NodalCurve& c, long long s, long long degree) {
  if (!is_comb_like(c))
    throw HypothesisError("comb_builder needs a comb-like curve, got " + std::string(to_string(classify(c))));
  const int gamma = c.num_components();
  detail::require_builder_range(gamma, s, degree);
  if (gamma == 1) return {s, {degree}};

  ComponentId grip = 0;
  for (ComponentId i = 1; i <= gamma; ++i)
    if (node_degree(c, i) == gamma - 1) grip = i;
  const Polarization eta = canonical_polarization(c);
  const Rational threshold = Rational(s, 2) + 1;
  for (ComponentId i = 1; i <= gamma; ++i) {
    if (eta.weight(i) * degree >= threshold) {
      const ComponentId special = *detail::heavy_for_case_b(eta, s, degree);
      auto t = detail::ones_with_special(gamma, s, degree, special);
      detail::require_small_slope_member(c, eta, special, t, "comb_builder");
      return t;
    }
  }
  auto t = detail::ones_with_special(gamma, s, degree, grip);
  detail::require_small_slope_member(c, eta, grip, t, "comb_builder");
  return t;
}

}  // namespace nodalbn
