// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every comparison is exact (rational or integer equality); there are no tolerances.

#include "nodalbn/nodalbn.hpp"
#include "oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace nodalbn;

namespace {

/// Outcome of one criterion: `failures` lists the first few counterexamples.
struct Tally {
  long long checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what());
    else if (!ok) failures.push_back("");
  }
};

std::string curve_str(const oracle::Tree& t) {
  std::string s = "g=(" + join(t.genera) + ") edges=";
  for (auto [a, b] : t.edges) s += std::to_string(a) + "-" + std::to_string(b) + " ";
  return s;
}

Subcurve to_subcurve(const oracle::Tree& t, oracle::Mask m) {
  Subcurve b(t.gamma());
  for (int i = 1; i <= t.gamma(); ++i)
    if (oracle::in(m, i)) b.insert(i);
  return b;
}

oracle::Mask to_mask(const Subcurve& b) {
  oracle::Mask m = 0;
  for (auto i : b.ids()) m |= 1u << (i - 1);
  return m;
}

std::set<std::vector<long long>> as_set(const Catalog& catalog) {
  std::set<std::vector<long long>> out;
  for (const auto& t : catalog) out.insert(t.degrees);
  return out;
}

// ---------------------------------------------------------------------------

Tally canonical_delta_law() {
  Tally t;
  oracle::Gen gen(1001);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tree = gen.tree(gen.uniform(1, 6), 2, 6);
    const auto c = tree.curve();
    const auto eta = canonical_polarization(c);
    t.expect(eta.weights() == oracle::canonical(tree), [&] { return "eta differs on " + curve_str(tree); });
    for (oracle::Mask m = 1; m <= oracle::full(tree); ++m) {
      if (!oracle::connected(tree, m)) continue;
      const Rational got = delta_structure_sheaf(c, eta, to_subcurve(tree, m));
      const Rational want(oracle::crossing(tree, m), 2);
      t.expect(got == want, [&] {
        return curve_str(tree) + " mask " + std::to_string(m) + ": " + to_string(got) + " != " + to_string(want);
      });
    }
  }
  return t;
}

Tally split_duality() {
  Tally t;
  oracle::Gen gen(1002);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tree = gen.tree(gen.uniform(2, 6), 2, 6);
    const auto c = tree.curve();
    for (int k = 0; k < 20; ++k) {
      const Polarization w(gen.polarization(tree.gamma()));
      for (const auto& split : edge_splits(c)) {
        const Rational sum = delta_structure_sheaf(c, w, split.side) + delta_structure_sheaf(c, w, split.other);
        t.expect(sum == 1, [&] { return curve_str(tree) + " omega " + w.str() + ": sum " + to_string(sum); });
      }
    }
  }
  return t;
}

/// Ordering properties recomputed on bitmasks.
bool decomposition_oracle(const oracle::Tree& tree, const OrderedDecomposition& d, ComponentId root) {
  const int gamma = tree.gamma();
  if (static_cast<int>(d.order.size()) != gamma || d.order.back() != root) return false;
  oracle::Mask placed = 0;
  for (int j = 1; j < gamma; ++j) {
    const oracle::Mask a = to_mask(d.piece(j));
    const ComponentId cj = d.at(j);
    placed |= 1u << (cj - 1);
    if (!oracle::in(a, cj)) return false;
    if ((a & ~placed) != 0) return false;  // triangular: A_j only holds already placed components
    if (!oracle::connected(tree, a) || !oracle::connected(tree, oracle::full(tree) & ~a)) return false;
    if (oracle::crossing(tree, a) != 1) return false;
    if (!oracle::connected(tree, oracle::full(tree) & ~placed)) return false;
  }
  return true;
}

Tally ordering_lemma() {
  Tally t;
  oracle::Gen gen(1003);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tree = gen.tree(gen.uniform(1, 7), 2, 4);
    const auto c = tree.curve();
    for (ComponentId root = 1; root <= tree.gamma(); ++root) {
      const auto d = order_components(c, root);
      const auto check = verify_decomposition(c, d);
      t.expect(check.pass(), [&] {
        return curve_str(tree) + " root " + std::to_string(root) + ": clause " + check.violations.front().clause;
      });
      t.expect(decomposition_oracle(tree, d, root),
               [&] { return curve_str(tree) + " root " + std::to_string(root) + ": oracle rejects"; });
    }
  }
  return t;
}

/// Instances of the catalog criteria: every labeled tree with gamma <= 4, three genus
/// vectors, s <= 6, 0 <= d <= 12, omega in {eta, 3 good-proxy perturbations}.
struct Instance {
  oracle::Tree tree;
  std::vector<Rational> omega;
};

std::vector<Instance> catalog_instances() {
  std::vector<Instance> out;
  oracle::Gen gen(1004);
  for (int gamma = 1; gamma <= 4; ++gamma)
    for (const auto& edges : oracle::all_trees(gamma)) {
      std::vector<std::vector<int>> genus_vectors{std::vector<int>(static_cast<std::size_t>(gamma), 2), {}, {}};
      for (int i = 0; i < gamma; ++i) genus_vectors[1].push_back(2 + i);
      for (int i = 0; i < gamma; ++i) genus_vectors[2].push_back(gen.uniform(2, 6));
      for (const auto& g : genus_vectors) {
        const oracle::Tree tree{g, edges};
        out.push_back({tree, oracle::canonical(tree)});
        for (int k = 0; k < 3; ++k) out.push_back({tree, gen.good_polarization(tree)});
      }
    }
  return out;
}

Tally catalog_equivalence(const std::vector<Instance>& instances) {
  Tally t;
  for (const auto& inst : instances) {
    const auto c = inst.tree.curve();
    const Polarization w(inst.omega);
    for (long long s = 1; s <= 6; ++s)
      for (long long d = 0; d <= 12; ++d) {
        const auto got = as_set(enumerate_components(c, w, s, d));
        const auto want = oracle::brute_force_catalog(inst.tree, inst.omega, s, d);
        t.expect(got == want, [&] {
          return curve_str(inst.tree) + " omega " + w.str() + " s=" + std::to_string(s) + " d=" + std::to_string(d);
        });
      }
  }
  return t;
}

Tally ordering_invariance(const std::vector<Instance>& instances) {
  Tally t;
  for (const auto& inst : instances) {
    const auto c = inst.tree.curve();
    const Polarization w(inst.omega);
    for (long long s = 1; s <= 6; ++s)
      for (long long d = 0; d <= 12; ++d) {
        const auto reference = enumerate_components(c, w, s, d, 1);
        for (ComponentId root = 2; root <= inst.tree.gamma(); ++root)
          t.expect(enumerate_components(c, w, s, d, root) == reference, [&] {
            return curve_str(inst.tree) + " root " + std::to_string(root) + " s=" + std::to_string(s) +
                   " d=" + std::to_string(d);
          });
        t.expect(catalog_invariance_check(c, w, s, d).pass, [&] { return curve_str(inst.tree) + " report"; });
      }
  }
  return t;
}

/// The numerical cases of the small-slope existence statement, evaluated from eta directly.
bool tec_hypotheses(const oracle::Tree& tree, long long s, long long d) {
  const int gamma = tree.gamma();
  if (gamma == 1) return 0 < d && d <= s;
  const auto eta = oracle::canonical(tree);
  const Rational half(s, 2);
  const bool case_a = gamma <= d && d <= half + 1;
  const bool wide = half >= gamma - 1;
  bool case_b = half + 1 < d && d <= s && wide;
  if (case_b) case_b = std::any_of(eta.begin(), eta.end(), [&](const Rational& x) { return x * d >= half; });
  bool case_c = half + 1 < d && d <= s * gamma && wide;
  if (case_c) {
    const long long n = d / gamma;
    const Rational width(s, 2 * (gamma - 1));
    int outside = 0;
    for (const auto& x : eta) outside += !(n + 1 - width < x * d && x * d < n + width);
    case_c = outside <= 1;
  }
  return case_a || case_b || case_c;
}

Tally builder_soundness(long long& constructions) {
  Tally t;
  constructions = 0;
  auto member = [](const oracle::Tree& tree, long long s, const std::vector<long long>& degrees) {
    return oracle::small_slope(s, degrees) && oracle::stable(tree, oracle::canonical(tree), s, degrees);
  };
  for (int gamma = 1; gamma <= 4; ++gamma)
    for (const auto& edges : oracle::all_trees(gamma)) {
      int max_degree = 0;
      oracle::Tree shape{std::vector<int>(static_cast<std::size_t>(gamma), 2), edges};
      for (int v = 1; v <= gamma; ++v) max_degree = std::max(max_degree, shape.degree(v));
      const bool path = max_degree <= 2;
      const bool star = gamma == 1 || max_degree == gamma - 1;
      std::vector<int> g(static_cast<std::size_t>(gamma), 2);
      while (true) {
        const oracle::Tree tree{g, edges};
        const auto c = tree.curve();
        for (long long s = 1; s <= 8; ++s)
          for (long long d = 1; d <= 8; ++d) {
            const std::string where =
                curve_str(tree) + " s=" + std::to_string(s) + " d=" + std::to_string(d);
            const bool expected = tec_hypotheses(tree, s, d);
            try {
              const auto r = tec_builder(c, s, d);
              t.expect(r.tuple.has_value() == expected, [&] { return where + ": tec applicability mismatch"; });
              if (r.tuple) {
                ++constructions;
                t.expect(member(tree, s, r.tuple->degrees), [&] { return where + ": tec (" + r.tuple->str() + ")"; });
              }
            } catch (const std::exception& e) {
              t.expect(false, [&] { return where + ": tec threw " + e.what(); });
            }
            const bool range = s >= 2LL * (gamma - 1) && gamma <= d && d <= s;
            for (int family = 0; family < 2; ++family) {
              if (!range || !(family == 0 ? path : star)) continue;
              try {
                const auto tuple = family == 0 ? chain_builder(c, s, d) : comb_builder(c, s, d);
                ++constructions;
                t.expect(member(tree, s, tuple.degrees), [&] {
                  return where + (family == 0 ? ": chain (" : ": comb (") + tuple.str() + ")";
                });
              } catch (const std::exception& e) {
                t.expect(false, [&] { return where + (family == 0 ? ": chain threw " : ": comb threw ") + e.what(); });
              }
            }
          }
        int pos = gamma - 1;
        while (pos >= 0 && g[static_cast<std::size_t>(pos)] == 5) g[static_cast<std::size_t>(pos--)] = 2;
        if (pos < 0) break;
        ++g[static_cast<std::size_t>(pos)];
      }
    }
  return t;
}

Tally dimension_identity() {
  Tally t;
  for (long long pa = 2; pa <= 10; ++pa)
    for (long long s = 1; s <= 10; ++s)
      for (long long k = 1; k <= 10; ++k)
        for (long long d = -10; d <= 10; ++d) {
          const Integer want = Integer(s) * s * (pa - 1) + 1 + Integer(k) * (d + s * (pa - 1) - k);
          const Integer got = bn_number(pa, s + k, d, k);
          t.expect(got == want, [&] {
            return "pa=" + std::to_string(pa) + " s=" + std::to_string(s) + " k=" + std::to_string(k) +
                   " d=" + std::to_string(d);
          });
        }
  return t;
}

Tally robustness() {
  Tally t;
  {
    const NodalCurve c({2, 3}, {{1, 1, 2}});
    const auto rho = robustness_radius(c, canonical_polarization(c), order_components(c, 2), ComponentTuple{2, {1, 1}});
    t.expect(rho && *rho == Rational(1, 8), [&] { return "worked radius " + (rho ? to_string(*rho) : "unbounded"); });
  }
  oracle::Gen gen(1008);
  int certified = 0, witnesses = 0, attempts = 0;
  while (certified < 20 && attempts < 5000) {
    ++attempts;
    const auto tree = gen.tree(gen.uniform(2, 5), 2, 5);
    const auto c = tree.curve();
    const long long s = gen.uniform(2, 8), d = gen.uniform(1, 10);
    const auto omega = gen.uniform(0, 1) ? oracle::canonical(tree) : gen.good_polarization(tree);
    const Polarization w(omega);
    const auto outcome = certify_bn_component(c, w, s, 1, d);
    if (!outcome.certified() || !outcome.certificate->radius) continue;
    ++certified;
    const auto& cert = *outcome.certificate;
    const auto decomposition = order_components(c, cert.root);
    BindingCondition binding;
    const Rational rho = *robustness_radius(c, w, decomposition, cert.tuple, &binding);
    const std::string where = curve_str(tree) + " omega " + w.str() + " s=" + std::to_string(s) + " d=" +
                              std::to_string(d) + " tuple (" + cert.tuple.str() + ")";

    for (int k = 0; k < 10; ++k) {
      std::vector<Rational> moved;
      bool valid = false;
      while (!valid) {
        const auto eps = gen.zero_sum(tree.gamma(), rho, 16);
        moved = omega;
        valid = true;
        for (std::size_t i = 0; i < moved.size(); ++i) {
          moved[i] += eps[i];
          valid = valid && 0 < moved[i] && moved[i] < 1;
        }
      }
      t.expect(oracle::stable(tree, moved, s, cert.tuple.degrees), [&] { return where + ": inside radius unstable"; });
    }

    // witness just beyond the binding slack: move the weight of A_j so its bound crosses sigma_j
    const Integer shift = Integer(d) + Integer(s) * (1 - tree.pa());
    const Rational abs_shift = shift < 0 ? Rational(-shift) : Rational(shift);
    const Rational x = binding.slack * Rational(101, 100) / abs_shift;
    const Subcurve piece = decomposition.piece(binding.j);
    const int a = piece.size(), gamma = tree.gamma();
    const int sign = (shift > 0) == binding.lower_side ? 1 : -1;
    std::vector<Rational> moved = omega;
    for (int i = 1; i <= gamma; ++i)
      moved[static_cast<std::size_t>(i - 1)] += piece.contains(i) ? sign * x / a : -sign * x / (gamma - a);
    if (!std::all_of(moved.begin(), moved.end(), [](const Rational& v) { return 0 < v && v < 1; })) continue;
    ++witnesses;
    const Rational norm = x / std::min(a, gamma - a);
    t.expect(norm > rho, [&] { return where + ": witness inside radius"; });
    const auto report = star_conditions(c, Polarization(moved), decomposition, cert.tuple);
    t.expect(!report.rows[static_cast<std::size_t>(binding.j - 1)].pass,
             [&] { return where + ": binding witness keeps the condition"; });
    t.expect(!oracle::stable(tree, moved, s, cert.tuple.degrees), [&] { return where + ": witness stable"; });
  }
  t.expect(certified == 20, [&] { return "only " + std::to_string(certified) + " certified tuples found"; });
  t.note = std::to_string(certified) + " certified, " + std::to_string(witnesses) + " witnesses";
  return t;
}

std::map<std::string, std::string> read_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

Tally worked_pipeline() {
  Tally t;
  const auto fixture = read_fixture(NODALBN_FIXTURE);
  const NodalCurve c({2, 3}, {{1, 1, 2}});
  const auto eta = canonical_polarization(c);
  const auto decomposition = order_components(c, 2);
  const auto catalog = enumerate_components(c, eta, decomposition, 2, 2);
  const auto small = small_slope_filter(catalog, 2);
  const auto bounds = star_bounds(c, eta, decomposition, 2, 2);
  auto tuples = [](const Catalog& cat) {
    std::vector<std::string> parts;
    for (const auto& x : cat) parts.push_back("(" + x.str() + ")");
    return join(parts, " ");
  };
  const auto outcome = certify_bn_component(c, eta, 2, 1, 2);
  std::map<std::string, std::string> got{
      {"arithmetic_genus", std::to_string(arithmetic_genus(c))},
      {"eta", eta.str()},
      {"split_delta", to_string(delta_structure_sheaf(c, eta, Subcurve::of(2, {1})))},
      {"lower", to_string(bounds.front().lower)},
      {"upper", to_string(bounds.front().upper)},
      {"catalog", tuples(catalog)},
      {"small_slope", tuples(small)},
  };
  if (outcome.certified()) {
    const auto& cert = *outcome.certificate;
    got["radius"] = cert.radius ? to_string(*cert.radius) : "unbounded";
    got["r"] = std::to_string(cert.r);
    got["beta"] = cert.beta.str();
    got["dim_X"] = cert.moduli_dimension.str();
    got["h1_F_dual"] = cert.h1_dual.str();
    got["fiber_dim"] = cert.fiber_dimension.str();
    got["dimension_identity"] = cert.dimension_identity ? "pass" : "fail";
  }
  t.expect(outcome.certified(), [&] { return "not certified: " + outcome.first_failure(); });
  t.expect(fixture.size() == 14, [&] { return "fixture has " + std::to_string(fixture.size()) + " keys"; });
  for (const auto& [key, value] : fixture)
    t.expect(got.count(key) && got[key] == value,
             [&, key = key, value = value] { return key + ": got '" + got[key] + "', fixture '" + value + "'"; });
  return t;
}

Tally glued_sheaf_arithmetic() {
  Tally t;
  for (int g1 = 4; g1 <= 6; ++g1)
    for (int g2 = 3; g2 < g1; ++g2) {
      const NodalCurve c({g1, g2}, {{1, 1, 2}});
      const SheafDescriptor e(c, {2, 2}, 4 - 2 * g1 - 2 * g2, std::nullopt, {{1, LocalType{1, 1, 1}}});
      const auto eta = canonical_polarization(c);
      t.expect(wrank(e, eta) == 2 && wdeg(e, eta) == 2 && wslope(e, eta) == 1, [&] {
        return "g=(" + std::to_string(g1) + "," + std::to_string(g2) + "): wdeg " + to_string(wdeg(e, eta)) +
               " slope " + to_string(wslope(e, eta));
      });
    }
  t.expect(t.checks == 6, [&] { return "expected 6 genus pairs"; });
  return t;
}

Tally local_ext_table() {
  Tally t;
  t.expect(local_ext_dim({0, 1, 0}, {0, 0, 1}) == 1, [] { return "Ext(O_x1, O_x2) != 1"; });
  t.expect(local_ext_dim({0, 0, 1}, {0, 1, 0}) == 1, [] { return "Ext(O_x2, O_x1) != 1"; });
  t.expect(local_ext_dim({0, 1, 0}, {0, 1, 0}) == 0, [] { return "Ext(O_x1, O_x1) != 0"; });
  for (long long s = 0; s <= 3; ++s)
    for (long long a1 = 0; a1 <= 3; ++a1)
      for (long long a2 = 0; a2 <= 3; ++a2)
        for (long long u = 0; u <= 3; ++u)
          for (long long b1 = 0; b1 <= 3; ++b1)
            for (long long b2 = 0; b2 <= 3; ++b2) {
              const auto got = local_ext_dim({s, a1, a2}, {u, b1, b2});
              const auto where = [&] {
                return "(" + join(std::vector<long long>{s, a1, a2}) + ") x (" +
                       join(std::vector<long long>{u, b1, b2}) + ") = " + std::to_string(got);
              };
              t.expect(got == oracle::local_ext(s, a1, a2, u, b1, b2), where);
              t.expect(got == a1 * b2 + a2 * b1, where);
              if (a1 + a2 == 0 || b1 + b2 == 0) t.expect(got == 0, where);
            }
  return t;
}

Tally scanner_regression() {
  Tally t;
  std::size_t rows = 0;
  for (Family family : {Family::chain, Family::comb}) {
    const auto result = conjecture_scan(ScanOptions{family, 4, 4, 8, std::nullopt});
    rows += result.size();
    t.expect(!result.empty(), [] { return "scan produced no rows"; });
    for (const auto& row : result)
      t.expect(row.certified, [&] {
        return std::string(family == Family::chain ? "chain" : "comb") + " g=(" + join(row.genera) +
               ") s=" + std::to_string(row.s) + " d=" + std::to_string(row.d) + " k=" + std::to_string(row.k) +
               " OPEN: " + row.failure;
      });
  }
  t.note = std::to_string(rows) + " rows";
  return t;
}

}  // namespace

int main() {
  const auto instances = catalog_instances();
  long long constructions = 0;
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
      {"canonical delta law", canonical_delta_law},
      {"split duality", split_duality},
      {"ordering lemma", ordering_lemma},
      {"catalog oracle equivalence", [&] { return catalog_equivalence(instances); }},
      {"ordering invariance", [&] { return ordering_invariance(instances); }},
      {"builder soundness",
       [&] {
         auto t = builder_soundness(constructions);
         t.note = std::to_string(constructions) + " constructions";
         return t;
       }},
      {"dimension identity", dimension_identity},
      {"robustness radius", robustness},
      {"worked pipeline", worked_pipeline},
      {"glued sheaf arithmetic", glued_sheaf_arithmetic},
      {"local ext table", local_ext_table},
      {"scanner regression", scanner_regression},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = t.failures.empty() && t.checks > 0;
    failed += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first << "  checks=" << t.checks;
    if (!t.note.empty()) line << " (" << t.note << ")";
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "  " << seconds << "s";
    std::cout << line.str() << "\n";
    for (const auto& f : t.failures)
      if (!f.empty()) std::cout << "      " << f << "\n";
    if (t.failures.size() > 5) std::cout << "      ... " << t.failures.size() << " failures in total\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
