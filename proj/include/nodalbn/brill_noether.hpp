#pragma once

#include "nodalbn/curve_graph.hpp"
#include "nodalbn/moduli_components.hpp"
#include "nodalbn/ordering.hpp"
#include "nodalbn/polarization.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nodalbn {

/// beta_C(r,d,k) = r^2 (p_a - 1) + 1 - k (k - d + r (p_a - 1)).
inline Integer bn_number(long long pa, long long r, long long d, long long k) {
  if (pa < 2) throw InputError("bn_number needs p_a >= 2");
  if (r < 1) throw InputError("bn_number needs r >= 1");
  if (k < 0) throw InputError("bn_number needs k >= 0");
  const Integer P = pa - 1;
  const Integer R = r;
  return R * R * P + 1 - Integer(k) * (Integer(k) - d + R * P);
}

/// Upper bound k (k - d + r (p_a - 1)) on the codimension of a component, r = sum w_i r_i.
inline Rational expected_codim(const Polarization& w, const std::vector<long long>& multirank, long long d, long long k,
                               long long pa) {
  if (static_cast<int>(multirank.size()) != w.size()) throw InputError("multirank length does not match polarization");
  Rational r = 0;
  for (ComponentId i = 1; i <= w.size(); ++i) r += w.weight(i) * multirank[static_cast<std::size_t>(i - 1)];
  return Rational(k) * (Rational(k - d) + r * (pa - 1));
}

/// Necessary numerics for a nonempty locus under a good polarization:
/// d >= 0 always, and d > 0 once 1 <= k < sum w_i r_i.
inline Verdict necessary_conditions(const Polarization& w, const std::vector<long long>& multirank, long long d,
                                    long long k) {
  if (k < 1) throw InputError("necessary_conditions needs k >= 1");
  if (static_cast<int>(multirank.size()) != w.size()) throw InputError("multirank length does not match polarization");
  Rational r = 0;
  for (ComponentId i = 1; i <= w.size(); ++i) r += w.weight(i) * multirank[static_cast<std::size_t>(i - 1)];
  Verdict v;
  v.require(d >= 0, "d >= 0 fails (d = " + std::to_string(d) + ")");
  if (d >= 0 && k < r) v.require(d > 0, "k < wrank = " + to_string(r) + " forces d > 0 (d = " + std::to_string(d) + ")");
  return v;
}

/// d > 0, k < r and r <= d + (r - k) p_a.
inline Verdict bgn_bounds(long long pa, long long r, long long d, long long k) {
  if (r < 2) throw InputError("bgn_bounds needs r >= 2");
  if (k < 1) throw InputError("bgn_bounds needs k >= 1");
  Verdict v;
  v.require(d > 0, "d > 0 fails (d = " + std::to_string(d) + ")");
  v.require(k < r, "k < r fails (k = " + std::to_string(k) + ", r = " + std::to_string(r) + ")");
  const Integer rhs = Integer(d) + Integer(r - k) * pa;
  v.require(Integer(r) <= rhs, "r <= d + (r-k) p_a fails (" + std::to_string(r) + " > " + rhs.str() + ")");
  return v;
}

/// k <= (d_i + r (g_i - 1)) / g_i for each component, compared exactly.
inline std::vector<bool> per_component_bgn(long long r, long long k, const std::vector<long long>& degrees,
                                           const std::vector<int>& genera) {
  if (degrees.size() != genera.size()) throw InputError("degrees and genera have different lengths");
  std::vector<bool> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    out.push_back(Rational(k) <= Rational(degrees[i] + r * (genera[i] - 1), genera[i]));
  return out;
}

/// Upper end M = d / (r - k) of the open alpha-interval (0, M) for a good polarization.
inline Rational alpha_range(long long r, long long d, long long k) {
  if (k >= r) throw InputError("alpha_range needs k < r");
  if (d <= 0) throw InputError("alpha_range needs d > 0");
  return Rational(d, r - k);
}

/// mu_omega(E) + alpha k / wrank(E).
inline Rational coherent_slope(const Rational& wrank_value, const Rational& wdeg_value, long long k,
                               const Rational& alpha) {
  if (wrank_value <= 0) throw InputError("coherent_slope needs positive omega-rank");
  return wdeg_value / wrank_value + alpha * k / wrank_value;
}

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every number an external checker needs to re-verify the claim without recomputation.
struct BNCertificate {
  std::vector<int> genera;
  std::vector<Node> nodes;
  int arithmetic_genus = 0;
  Polarization omega{std::vector<Rational>{1}};
  long long s = 0, k = 0, d = 0, r = 0;
  ComponentTuple tuple;
  ComponentId root = 0;
  StabilityReport stability;
  std::optional<Rational> radius;
  Integer beta;
  Integer moduli_dimension;
  Integer h1_dual;
  Integer fiber_dimension;
  bool dimension_identity = false;
};

struct CertificationOutcome {
  std::vector<CheckItem> checklist;
  std::optional<BNCertificate> certificate;
  bool certified() const { return certificate.has_value(); }
  std::string first_failure() const {
    for (const auto& item : checklist)
      if (!item.pass) return item.name + ": " + item.detail;
    return {};
  }
};

/// Certifies a component of B(r.1, d, k), r = s + k, from a small-slope component of
/// U(s.1, d): checks k <= 1 + s(g_i - 1), finds a small-slope tuple, and records the
/// fibration count beta = dim X + k (h^1(F^*) - k).
inline CertificationOutcome certify_bn_component(const NodalCurve& c, const Polarization& w, long long s, long long k,
                                                 long long d) {
  require_compact_type(c, "certify_bn_component");
  require_matching(c, w);
  if (s < 1) throw InputError("certification needs s >= 1");
  if (k < 1) throw InputError("certification needs k >= 1");
  const int gamma = c.num_components();
  const int pa = arithmetic_genus(c);
  const long long r = s + k;
  CertificationOutcome out;
  auto check = [&](std::string name, bool ok, std::string detail) {
    out.checklist.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  check("compact_type", true, "dual graph is a tree");
  const auto proxy = goodness_proxy(c, w);
  std::string deltas;
  for (const auto& sp : proxy.splits) deltas += (deltas.empty() ? "" : ",") + to_string(sp.delta);
  if (!check("goodness_proxy", proxy.pass, "split deltas {" + deltas + "} must lie in (0,1)")) return out;

  bool ok = true;
  for (ComponentId i = 1; i <= gamma; ++i) {
    const long long bound = 1 + s * (c.genus(i) - 1);
    ok = check("k_bound_" + std::to_string(i), k <= bound,
               "k = " + std::to_string(k) + " <= 1 + s(g_" + std::to_string(i) + " - 1) = " + std::to_string(bound)) &&
         ok;
  }

  const ComponentId root = gamma;
  const auto decomposition = order_components(c, root);
  const auto catalog = small_slope_filter(enumerate_components(c, w, decomposition, s, d), s);
  ok = check("small_slope_tuple", !catalog.empty(),
             catalog.empty() ? "no tuple with 0 < d_i <= s satisfies the stability conditions"
                             : std::to_string(catalog.size()) + " small-slope tuple(s); using (" +
                                   catalog.front().str() + ")") &&
       ok;
  if (!ok) return out;
  const ComponentTuple& tuple = catalog.front();

  const auto per_component = per_component_bgn(r, k, tuple.degrees, c.genera());
  check("per_component_bgn", std::all_of(per_component.begin(), per_component.end(), [](bool b) { return b; }),
        "k g_i <= d_i + r(g_i - 1) for all i");
  check("degree_range", std::all_of(tuple.degrees.begin(), tuple.degrees.end(),
                                    [&](long long x) { return x > 0 && x <= r; }),
        "0 < d_i <= r = " + std::to_string(r));
  if (gamma == 1) {
    const int g = c.genus(1);
    check("classical_conditions", d > 0 && k * g <= r * (g - 1) + d && !(d == r && k == r),
          "d > 0, k g <= r(g-1) + d, (d,k) != (r,r)");
  } else {
    const auto bounds = bgn_bounds(pa, r, d, k);
    check("bgn_bounds", bounds.pass, bounds.pass ? "k p_a <= d + r(p_a - 1)" : bounds.failures.front());
  }

  BNCertificate cert;
  cert.genera = c.genera();
  cert.nodes = c.nodes();
  cert.arithmetic_genus = pa;
  cert.omega = w;
  cert.s = s;
  cert.k = k;
  cert.d = d;
  cert.r = r;
  cert.tuple = tuple;
  cert.root = root;
  cert.stability = star_conditions(c, w, decomposition, tuple);
  cert.radius = robustness_radius(c, w, decomposition, tuple);
  cert.beta = bn_number(pa, r, d, k);
  cert.moduli_dimension = Integer(s) * s * (pa - 1) + 1;
  cert.h1_dual = Integer(d) + Integer(s) * (pa - 1);
  cert.fiber_dimension = Integer(k) * (cert.h1_dual - k);
  check("grassmannian_nonempty", Integer(k) <= cert.h1_dual, "k <= h1(F*) = " + cert.h1_dual.str());
  cert.dimension_identity = cert.beta == cert.moduli_dimension + cert.fiber_dimension;
  check("dimension_identity", cert.dimension_identity,
        "beta = " + cert.beta.str() + " vs dim X + fiber = " + Integer(cert.moduli_dimension + cert.fiber_dimension).str());

  if (std::all_of(out.checklist.begin(), out.checklist.end(), [](const CheckItem& i) { return i.pass; }))
    out.certificate = std::move(cert);
  return out;
}

enum class Family { chain, comb };

/// Chain C_1 - C_2 - ... - C_gamma, node i joining C_i and C_{i+1}.
inline NodalCurve make_chain(std::vector<int> genera) {
  std::vector<Node> nodes;
  for (int i = 1; i < static_cast<int>(genera.size()); ++i) nodes.push_back({i, i, i + 1});
  return NodalCurve(std::move(genera), std::move(nodes));
}

/// Comb with grip C_gamma, node i joining tooth C_i to the grip.
inline NodalCurve make_comb(std::vector<int> genera) {
  const int gamma = static_cast<int>(genera.size());
  std::vector<Node> nodes;
  for (int i = 1; i < gamma; ++i) nodes.push_back({i, i, gamma});
  return NodalCurve(std::move(genera), std::move(nodes));
}

struct IntRange {
  long long first = 0;
  long long last = -1;
};

struct ScanRow {
  int gamma = 0;
  std::vector<int> genera;
  long long s = 0, d = 0, k = 0;
  bool certified = false;
  std::optional<ComponentTuple> tuple;
  Integer beta;
  std::string failure;

  std::string status() const { return certified ? "CERTIFIED" : "OPEN"; }
};

/// Whether (C, s, d, k) satisfies 2(gamma-1) <= s, gamma <= d <= s, k g_i <= 1 + s(g_i - 1).
inline bool conjecture_hypotheses(const NodalCurve& c, long long s, long long d, long long k) {
  const int gamma = c.num_components();
  if (k < 1 || s < 2LL * (gamma - 1) || d < gamma || d > s) return false;
  return std::all_of(c.genera().begin(), c.genera().end(), [&](int g) { return k * g <= 1 + s * (g - 1); });
}

/// Attempts certification at the canonical polarization for every hypothesis-satisfying
/// (C, s, d, k). Failures are reported as OPEN, never as counterexamples.
inline std::vector<ScanRow> conjecture_scan(const std::vector<NodalCurve>& curves, IntRange s_range, IntRange d_range,
                                            IntRange k_range) {
  std::vector<ScanRow> rows;
  for (const auto& c : curves) {
    require_compact_type(c, "conjecture_scan");
    const Polarization eta = canonical_polarization(c);
    for (long long s = std::max<long long>(1, s_range.first); s <= s_range.last; ++s)
      for (long long d = d_range.first; d <= d_range.last; ++d)
        for (long long k = std::max<long long>(1, k_range.first); k <= k_range.last; ++k) {
          if (!conjecture_hypotheses(c, s, d, k)) continue;
          ScanRow row;
          row.gamma = c.num_components();
          row.genera = c.genera();
          row.s = s;
          row.d = d;
          row.k = k;
          row.beta = bn_number(arithmetic_genus(c), s + k, d, k);
          const auto outcome = certify_bn_component(c, eta, s, k, d);
          row.certified = outcome.certified();
          if (row.certified) row.tuple = outcome.certificate->tuple;
          else row.failure = outcome.first_failure();
          rows.push_back(std::move(row));
        }
  }
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.gamma, a.genera, a.s, a.d, a.k) < std::tie(b.gamma, b.genera, b.s, b.d, b.k);
  });
  return rows;
}

struct ScanOptions {
  Family family = Family::chain;
  int gamma_max = 3;
  int genus_max = 3;
  long long s_max = 6;
  std::optional<long long> k_max;
};

/// Every chain (or comb) with 1 <= gamma <= gamma_max and genera in [2, genus_max].
inline std::vector<NodalCurve> family_curves(Family family, int gamma_max, int genus_max) {
  std::vector<NodalCurve> out;
  for (int gamma = 1; gamma <= gamma_max; ++gamma) {
    std::vector<int> g(static_cast<std::size_t>(gamma), 2);
    if (genus_max < 2) break;
    while (true) {
      out.push_back(family == Family::chain ? make_chain(g) : make_comb(g));
      int pos = gamma - 1;
      while (pos >= 0 && g[static_cast<std::size_t>(pos)] == genus_max) g[static_cast<std::size_t>(pos--)] = 2;
      if (pos < 0) break;
      ++g[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

inline std::vector<ScanRow> conjecture_scan(const ScanOptions& options) {
  const long long k_max = options.k_max.value_or(1 + options.s_max * (options.genus_max - 1));
  return conjecture_scan(family_curves(options.family, options.gamma_max, options.genus_max),
                         IntRange{1, options.s_max}, IntRange{1, options.s_max}, IntRange{1, k_max});
}

}  // namespace nodalbn
