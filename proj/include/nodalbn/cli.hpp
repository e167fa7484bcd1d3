#pragma once

// Command-line front end. Requires CLI11, nlohmann/json and OpenSSL (libcrypto).

#include "nodalbn/brill_noether.hpp"
#include "nodalbn/curve_graph.hpp"
#include "nodalbn/moduli_components.hpp"
#include "nodalbn/ordering.hpp"
#include "nodalbn/polarization.hpp"
#include "nodalbn/report.hpp"
#include "nodalbn/sheaf_descriptor.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nodalbn::cli {

enum ExitCode : int { ok = 0, hypothesis_failure = 1, input_error = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

namespace detail {

struct Options {
  std::string curve_path;
  std::string omega = "canonical";
  int root = 0;
  long long rank = 0;
  long long degree = 0;
  bool small_slope = false;
  bool echo = false;
  bool json = false;
  std::string tuple;
  std::string method = "auto";
  long long pa = 0, r = 0, d = 0, k = 0, s = 0;
  std::string family = "chain";
  int gamma_max = 3;
  int genus_max = 3;
  long long s_max = 6;
  long long k_max = 0;
};

struct Loaded {
  std::string text;
  NodalCurve curve;
};

inline Loaded load_curve(const std::string& path, Report& report) {
  std::string text = read_file(path);
  report.block().add("input", path).add("sha256", sha256_hex(text));
  NodalCurve curve = parse_curve(text);
  return {std::move(text), std::move(curve)};
}

inline std::string yes_no(bool b) { return b ? "pass" : "fail"; }

inline std::string radius_text(const std::optional<Rational>& rho) { return rho ? to_string(*rho) : "unbounded"; }

inline ComponentTuple parse_tuple(const std::string& text, long long s) {
  return {s, parse_int_list(text)};
}

inline void require_positive_rank(long long s) {
  if (s < 1) throw InputError("--rank must be a positive integer");
}

inline ComponentId choose_root(const NodalCurve& c, int root) {
  if (root == 0) return c.num_components();
  if (!c.valid_id(root)) throw InputError("--root " + std::to_string(root) + " is not a component id");
  return root;
}

inline void describe_pieces(Report& report, const OrderedDecomposition& d) {
  auto& t = report.table("pieces", {"j", "component", "A_j", "p_j"});
  for (int j = 1; j < d.gamma(); ++j)
    t.rows.push_back({std::to_string(j), std::to_string(d.at(j)), join(d.piece(j).ids()),
                      std::to_string(d.separating_node(j))});
}

inline int cmd_curve_validate(const Options& o, Report& report, std::ostream& out) {
  if (o.echo) {
    out << format_curve(parse_curve(read_file(o.curve_path)));
    return ok;
  }
  const auto [text, c] = load_curve(o.curve_path, report);
  std::vector<int> degrees;
  for (ComponentId i = 1; i <= c.num_components(); ++i) degrees.push_back(node_degree(c, i));
  report.block()
      .add("status", "valid")
      .add("gamma", std::to_string(c.num_components()))
      .add("delta", std::to_string(c.num_nodes()))
      .add("arithmetic_genus", std::to_string(arithmetic_genus(c)))
      .add("genera", join(c.genera()))
      .add("node_degrees", join(degrees))
      .add("compact_type", is_compact_type(c) ? "true" : "false")
      .add("class", std::string(to_string(classify(c))));
  return ok;
}

inline int cmd_curve_classify(const Options& o, Report& report) {
  const auto [text, c] = load_curve(o.curve_path, report);
  report.block().add("class", std::string(to_string(classify(c))));
  return ok;
}

inline int cmd_order(const Options& o, Report& report) {
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto d = order_components(c, choose_root(c, o.root));
  const auto check = verify_decomposition(c, d);
  report.block().add("root", std::to_string(d.root)).add("order", join(d.order)).add("verify", yes_no(check.pass()));
  describe_pieces(report, d);
  return check.pass() ? ok : hypothesis_failure;
}

inline void describe_proxy(Report& report, const GoodnessProxyReport& proxy) {
  auto& t = report.table("splits", {"node", "B", "delta", "in_range"});
  for (const auto& sp : proxy.splits)
    t.rows.push_back({std::to_string(sp.node_id), join(sp.side.ids()), to_string(sp.delta), sp.in_range ? "yes" : "no"});
}

inline int cmd_polarization_canonical(const Options& o, Report& report) {
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto eta = canonical_polarization(c);
  auto& b = report.block();
  b.add("eta", eta.str()).add("heavy_components", join(heavy_components(eta)));
  if (!is_compact_type(c)) {
    b.add("goodness_proxy", "n/a (not compact type)");
    return ok;
  }
  const auto proxy = goodness_proxy(c, eta);
  b.add("goodness_proxy", yes_no(proxy.pass));
  describe_proxy(report, proxy);
  return proxy.pass ? ok : hypothesis_failure;
}

inline int cmd_polarization_check(const Options& o, Report& report) {
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto w = parse_polarization(o.omega, c);
  const auto proxy = goodness_proxy(c, w);
  report.block().add("omega", w.str()).add("goodness_proxy", yes_no(proxy.pass));
  describe_proxy(report, proxy);
  return proxy.pass ? ok : hypothesis_failure;
}

inline int cmd_sheaf_info(const Options& o, Report& report) {
  const std::string text = read_file(o.curve_path);
  report.block().add("input", o.curve_path).add("sha256", sha256_hex(text));
  const auto doc = parse_document(text);
  const auto w = parse_polarization(o.omega, doc.curve);
  if (doc.sheaves.empty()) throw InputError("the file contains no 'sheaf' block");
  report.block().add("omega", w.str());
  for (const auto& [name, e] : doc.sheaves) {
    auto& b = report.block();
    b.add("sheaf", name)
        .add("multirank", join(e.multirank()))
        .add("chi", std::to_string(e.euler_characteristic()))
        .add("wrank", to_string(wrank(e, w)))
        .add("wdeg", to_string(wdeg(e, w)))
        .add("wslope", wrank(e, w) == 0 ? "undefined" : to_string(wslope(e, w)))
        .add("delta", e.degrees() ? to_string(delta(e, w)) : "n/a")
        .add("locally_free", is_locally_free(e) ? "true" : "false");
  }
  auto& t = report.table("ext_defect", {"E", "F", "defect"});
  for (const auto& e : doc.sheaves)
    for (const auto& f : doc.sheaves)
      t.rows.push_back({e.name, f.name, std::to_string(global_ext_defect(e.sheaf, f.sheaf))});
  return ok;
}

inline int cmd_components_enumerate(const Options& o, Report& report) {
  require_positive_rank(o.rank);
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto w = parse_polarization(o.omega, c);
  const auto d = order_components(c, choose_root(c, o.root));
  auto catalog = enumerate_components(c, w, d, o.rank, o.degree);
  if (o.small_slope) catalog = small_slope_filter(catalog, o.rank);
  report.block()
      .add("omega", w.str())
      .add("rank", std::to_string(o.rank))
      .add("degree", std::to_string(o.degree))
      .add("root", std::to_string(d.root))
      .add("small_slope", o.small_slope ? "true" : "false")
      .add("components", std::to_string(catalog.size()));
  std::vector<std::string> header{"tuple"};
  for (int j = 1; j < c.num_components(); ++j)
    for (const char* col : {"lower_", "sigma_", "upper_"}) header.push_back(col + std::to_string(j));
  header.push_back("verdict");
  header.push_back("radius");
  auto& t = report.table("components", header);
  for (const auto& tuple : catalog) {
    const auto star = star_conditions(c, w, d, tuple);
    std::vector<std::string> row{tuple.str()};
    for (const auto& r : star.rows) {
      row.push_back(to_string(r.lower));
      row.push_back(to_string(r.sigma));
      row.push_back(to_string(r.upper));
    }
    row.push_back(yes_no(star.pass));
    row.push_back(radius_text(robustness_radius(c, w, d, tuple)));
    t.rows.push_back(std::move(row));
  }
  return ok;
}

inline int cmd_components_check(const Options& o, Report& report) {
  require_positive_rank(o.rank);
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto w = parse_polarization(o.omega, c);
  const auto d = order_components(c, choose_root(c, o.root));
  const auto tuple = parse_tuple(o.tuple, o.rank);
  const auto star = star_conditions(c, w, d, tuple);
  report.block()
      .add("omega", w.str())
      .add("tuple", tuple.str())
      .add("rank", std::to_string(tuple.rank))
      .add("degree", std::to_string(tuple.total()))
      .add("root", std::to_string(d.root))
      .add("verdict", yes_no(star.pass))
      .add("small_slope", small_slope_filter(Catalog{tuple}).empty() ? "false" : "true");
  auto& t = report.table("conditions", {"j", "A_j", "lower", "sigma", "upper", "verdict", "slack_lower", "slack_upper"});
  for (const auto& r : star.rows)
    t.rows.push_back({std::to_string(r.j), join(r.piece.ids()), to_string(r.lower), to_string(r.sigma),
                      to_string(r.upper), yes_no(r.pass), to_string(r.slack_lower()), to_string(r.slack_upper())});
  return star.pass ? ok : hypothesis_failure;
}

inline int cmd_components_radius(const Options& o, Report& report) {
  require_positive_rank(o.rank);
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto w = parse_polarization(o.omega, c);
  const auto d = order_components(c, choose_root(c, o.root));
  const auto tuple = parse_tuple(o.tuple, o.rank);
  BindingCondition binding;
  const auto rho = robustness_radius(c, w, d, tuple, &binding);
  auto& b = report.block();
  b.add("omega", w.str()).add("tuple", tuple.str()).add("guaranteed_radius", radius_text(rho)).add("norm", "inf");
  if (rho) {
    b.add("binding_j", std::to_string(binding.j))
        .add("binding_side", binding.lower_side ? "lower" : "upper")
        .add("binding_slack", to_string(binding.slack));
  }
  return ok;
}

inline int cmd_components_invariance(const Options& o, Report& report) {
  require_positive_rank(o.rank);
  const auto [text, c] = load_curve(o.curve_path, report);
  const auto w = parse_polarization(o.omega, c);
  const auto inv = catalog_invariance_check(c, w, o.rank, o.degree);
  std::vector<std::string> tuples;
  for (const auto& t : inv.reference) tuples.push_back("(" + t.str() + ")");
  report.block()
      .add("omega", w.str())
      .add("roots", std::to_string(c.num_components()))
      .add("catalog", join(tuples, " "))
      .add("invariance", yes_no(inv.pass));
  if (!inv.pass) {
    auto& t = report.table("differences", {"root", "tuple"});
    for (const auto& [root, diff] : inv.differences)
      for (const auto& tuple : diff) t.rows.push_back({std::to_string(root), tuple.str()});
  }
  return inv.pass ? ok : hypothesis_failure;
}

inline int cmd_components_build(const Options& o, Report& report) {
  require_positive_rank(o.rank);
  const auto [text, c] = load_curve(o.curve_path, report);
  auto& b = report.block();
  b.add("method", o.method).add("rank", std::to_string(o.rank)).add("degree", std::to_string(o.degree));
  std::optional<ComponentTuple> tuple;
  std::string method = o.method;
  if (method == "auto") method = is_chain_like(c) ? "chain" : is_comb_like(c) ? "comb" : "tec";
  if (method == "tec") {
    const auto built = tec_builder(c, o.rank, o.degree);
    b.add("case", std::string(to_string(built.kind)));
    tuple = built.tuple;
  } else if (method == "chain") {
    tuple = chain_builder(c, o.rank, o.degree);
  } else if (method == "comb") {
    tuple = comb_builder(c, o.rank, o.degree);
  } else {
    throw InputError("unknown --method '" + o.method + "' (auto, tec, chain, comb)");
  }
  b.add("builder", method).add("tuple", tuple ? tuple->str() : "none");
  return tuple ? ok : hypothesis_failure;
}

inline int cmd_bn_number(const Options& o, Report& report) {
  report.block().add("beta", bn_number(o.pa, o.r, o.d, o.k).str());
  return ok;
}

inline int cmd_bn_bounds(const Options& o, Report& report) {
  const auto v = bgn_bounds(o.pa, o.r, o.d, o.k);
  auto& b = report.block();
  b.add("bgn_bounds", yes_no(v.pass));
  for (const auto& f : v.failures) b.add("failed", f);
  if (v.pass) b.add("alpha_range", "(0, " + to_string(alpha_range(o.r, o.d, o.k)) + ")");
  return v.pass ? ok : hypothesis_failure;
}

inline nlohmann::ordered_json certificate_json(const CertificationOutcome& outcome) {
  nlohmann::ordered_json j;
  j["certified"] = outcome.certified();
  auto& list = j["checklist"] = nlohmann::ordered_json::array();
  for (const auto& item : outcome.checklist) list.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  if (!outcome.certificate) return j;
  const auto& c = *outcome.certificate;
  auto& cert = j["certificate"];
  cert["genera"] = c.genera;
  auto& nodes = cert["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : c.nodes) nodes.push_back({n.id, n.first, n.second});
  cert["arithmetic_genus"] = c.arithmetic_genus;
  std::vector<std::string> omega;
  for (const auto& w : c.omega.weights()) omega.push_back(to_string(w));
  cert["omega"] = omega;
  cert["s"] = c.s;
  cert["k"] = c.k;
  cert["d"] = c.d;
  cert["r"] = c.r;
  cert["tuple"] = c.tuple.degrees;
  cert["root"] = c.root;
  auto& rows = cert["stability"] = nlohmann::ordered_json::array();
  for (const auto& r : c.stability.rows)
    rows.push_back({{"j", r.j}, {"A_j", r.piece.ids()}, {"lower", to_string(r.lower)}, {"sigma", to_string(r.sigma)},
                    {"upper", to_string(r.upper)}});
  cert["guaranteed_radius"] = radius_text(c.radius);
  cert["beta"] = c.beta.str();
  cert["moduli_dimension"] = c.moduli_dimension.str();
  cert["h1_dual"] = c.h1_dual.str();
  cert["fiber_dimension"] = c.fiber_dimension.str();
  cert["dimension_identity"] = c.dimension_identity;
  return j;
}

inline int cmd_bn_certify(const Options& o, Report& report, std::ostream& out) {
  Report header;
  const auto [text, c] = load_curve(o.curve_path, o.json ? header : report);
  const auto w = parse_polarization(o.omega, c);
  const auto proxy = goodness_proxy(c, w);
  if (!proxy.pass) throw HypothesisError("goodness proxy fails for omega = " + w.str());
  const auto outcome = certify_bn_component(c, w, o.s, o.k, o.d);
  if (o.json) {
    out << certificate_json(outcome).dump(2) << "\n";
    return outcome.certified() ? ok : hypothesis_failure;
  }
  auto& b = report.block();
  b.add("certified", outcome.certified() ? "true" : "false");
  auto& t = report.table("checklist", {"check", "verdict", "detail"});
  for (const auto& item : outcome.checklist) t.rows.push_back({item.name, yes_no(item.pass), item.detail});
  if (outcome.certificate) {
    const auto& cert = *outcome.certificate;
    report.block()
        .add("omega", cert.omega.str())
        .add("s", std::to_string(cert.s))
        .add("k", std::to_string(cert.k))
        .add("d", std::to_string(cert.d))
        .add("r", std::to_string(cert.r))
        .add("tuple", cert.tuple.str())
        .add("root", std::to_string(cert.root))
        .add("beta", cert.beta.str())
        .add("dim_X", cert.moduli_dimension.str())
        .add("h1_F_dual", cert.h1_dual.str())
        .add("fiber_dim", cert.fiber_dimension.str())
        .add("dimension_identity", yes_no(cert.dimension_identity))
        .add("guaranteed_radius", radius_text(cert.radius));
    auto& st = report.table("stability", {"j", "A_j", "lower", "sigma", "upper"});
    for (const auto& r : cert.stability.rows)
      st.rows.push_back({std::to_string(r.j), join(r.piece.ids()), to_string(r.lower), to_string(r.sigma),
                         to_string(r.upper)});
  }
  return outcome.certified() ? ok : hypothesis_failure;
}

inline int cmd_bn_scan(const Options& o, Report& report) {
  ScanOptions options;
  if (o.family == "chain") options.family = Family::chain;
  else if (o.family == "comb") options.family = Family::comb;
  else throw InputError("--family must be chain or comb");
  if (o.gamma_max < 1 || o.genus_max < 2 || o.s_max < 1) throw InputError("scan ranges must be gamma-max >= 1, genus-max >= 2, s-max >= 1");
  options.gamma_max = o.gamma_max;
  options.genus_max = o.genus_max;
  options.s_max = o.s_max;
  if (o.k_max > 0) options.k_max = o.k_max;
  const auto rows = conjecture_scan(options);
  const auto open = std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.certified; });
  report.block()
      .add("family", o.family)
      .add("rows", std::to_string(rows.size()))
      .add("certified", std::to_string(rows.size() - static_cast<std::size_t>(open)))
      .add("open", std::to_string(open));
  auto& t = report.table("scan", {"gamma", "genera", "s", "d", "k", "status", "tuple", "beta", "note"});
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.gamma), join(r.genera), std::to_string(r.s), std::to_string(r.d),
                      std::to_string(r.k), r.status(), r.tuple ? r.tuple->str() : "-", r.beta.str(),
                      r.failure.empty() ? "-" : r.failure});
  return open == 0 ? ok : hypothesis_failure;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Reports go to `out`, errors to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-rational Brill-Noether toolkit for polarized nodal curves", "nodalbn"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_curve = [&](CLI::App* cmd) { cmd->add_option("--curve", o.curve_path, "curve description file")->required(); };
  auto add_omega = [&](CLI::App* cmd) {
    cmd->add_option("--omega", o.omega, "polarization: 'canonical' or comma-separated p/q weights");
  };

  auto* curve = app.add_subcommand("curve", "curve file checks")->require_subcommand(1);
  auto* curve_validate = curve->add_subcommand("validate", "parse and summarize a curve");
  add_curve(curve_validate);
  curve_validate->add_flag("--echo", o.echo, "print the canonical curve file instead of a report");
  auto* curve_classify = curve->add_subcommand("classify", "chain / comb / other / not_compact_type");
  add_curve(curve_classify);

  auto* order = app.add_subcommand("order", "component ordering and subcurves A_j");
  add_curve(order);
  order->add_option("--root", o.root, "root component (default: last)");

  auto* pol = app.add_subcommand("polarization", "polarization queries")->require_subcommand(1);
  auto* pol_canonical = pol->add_subcommand("canonical", "canonical polarization and split deltas");
  add_curve(pol_canonical);
  auto* pol_check = pol->add_subcommand("check", "goodness proxy for a given polarization");
  add_curve(pol_check);
  pol_check->add_option("--omega", o.omega, "comma-separated p/q weights")->required();

  auto* sheaf = app.add_subcommand("sheaf", "sheaf descriptor arithmetic")->require_subcommand(1);
  auto* sheaf_info = sheaf->add_subcommand("info", "omega-invariants of the sheaf blocks in a file");
  add_curve(sheaf_info);
  add_omega(sheaf_info);

  auto* comp = app.add_subcommand("components", "moduli space components")->require_subcommand(1);
  auto add_stability = [&](CLI::App* cmd, bool needs_degree) {
    add_curve(cmd);
    add_omega(cmd);
    cmd->add_option("--rank", o.rank, "rank s")->required();
    if (needs_degree) cmd->add_option("--degree", o.degree, "total degree d")->required();
  };
  auto* comp_enum = comp->add_subcommand("enumerate", "all tuples satisfying the stability conditions");
  add_stability(comp_enum, true);
  comp_enum->add_flag("--small-slope", o.small_slope, "keep only 0 < d_i <= s");
  comp_enum->add_option("--root", o.root, "root component (default: last)");
  auto* comp_check = comp->add_subcommand("check", "evaluate the stability conditions for one tuple");
  add_stability(comp_check, false);
  comp_check->add_option("--tuple", o.tuple, "d1,...,dgamma")->required();
  comp_check->add_option("--root", o.root, "root component (default: last)");
  auto* comp_radius = comp->add_subcommand("radius", "guaranteed polarization radius for one tuple");
  add_stability(comp_radius, false);
  comp_radius->add_option("--tuple", o.tuple, "d1,...,dgamma")->required();
  comp_radius->add_option("--root", o.root, "root component (default: last)");
  auto* comp_inv = comp->add_subcommand("invariance", "compare catalogs across every root choice");
  add_stability(comp_inv, true);
  auto* comp_build = comp->add_subcommand("build", "constructive small-slope tuple at the canonical polarization");
  add_curve(comp_build);
  comp_build->add_option("--rank", o.rank, "rank s")->required();
  comp_build->add_option("--degree", o.degree, "total degree d")->required();
  comp_build->add_option("--method", o.method, "auto, tec, chain or comb");

  auto* bn = app.add_subcommand("bn", "Brill-Noether arithmetic and certification")->require_subcommand(1);
  auto add_prdk = [&](CLI::App* cmd) {
    cmd->add_option("--pa", o.pa, "arithmetic genus")->required();
    cmd->add_option("--r", o.r, "rank")->required();
    cmd->add_option("--d", o.d, "degree")->required();
    cmd->add_option("--k", o.k, "number of sections")->required();
  };
  auto* bn_number_cmd = bn->add_subcommand("number", "Brill-Noether number");
  add_prdk(bn_number_cmd);
  auto* bn_bounds_cmd = bn->add_subcommand("bounds", "numerical BGN conditions");
  add_prdk(bn_bounds_cmd);
  auto* bn_certify = bn->add_subcommand("certify", "certify a Brill-Noether component");
  add_curve(bn_certify);
  add_omega(bn_certify);
  bn_certify->add_option("--s", o.s, "rank of the quotient")->required();
  bn_certify->add_option("--k", o.k, "number of sections")->required();
  bn_certify->add_option("--d", o.d, "degree")->required();
  bn_certify->add_flag("--json", o.json, "structured output");
  auto* bn_scan = bn->add_subcommand("scan", "certification sweep over chain or comb families");
  bn_scan->add_option("--family", o.family, "chain or comb")->required();
  bn_scan->add_option("--gamma-max", o.gamma_max, "largest number of components");
  bn_scan->add_option("--genus-max", o.genus_max, "largest component genus");
  bn_scan->add_option("--s-max", o.s_max, "largest s");
  bn_scan->add_option("--k-max", o.k_max, "largest k (default: every admissible k)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  Report report;
  report.block().add("command", "nodalbn " + join(args, " "));
  int code = ok;
  try {
    if (curve_validate->parsed()) code = detail::cmd_curve_validate(o, report, out);
    else if (curve_classify->parsed()) code = detail::cmd_curve_classify(o, report);
    else if (order->parsed()) code = detail::cmd_order(o, report);
    else if (pol_canonical->parsed()) code = detail::cmd_polarization_canonical(o, report);
    else if (pol_check->parsed()) code = detail::cmd_polarization_check(o, report);
    else if (sheaf_info->parsed()) code = detail::cmd_sheaf_info(o, report);
    else if (comp_enum->parsed()) code = detail::cmd_components_enumerate(o, report);
    else if (comp_check->parsed()) code = detail::cmd_components_check(o, report);
    else if (comp_radius->parsed()) code = detail::cmd_components_radius(o, report);
    else if (comp_inv->parsed()) code = detail::cmd_components_invariance(o, report);
    else if (comp_build->parsed()) code = detail::cmd_components_build(o, report);
    else if (bn_number_cmd->parsed()) code = detail::cmd_bn_number(o, report);
    else if (bn_bounds_cmd->parsed()) code = detail::cmd_bn_bounds(o, report);
    else if (bn_certify->parsed()) code = detail::cmd_bn_certify(o, report, out);
    else if (bn_scan->parsed()) code = detail::cmd_bn_scan(o, report);
  } catch (const HypothesisError& e) {
    err << "hypothesis failure: " << e.what() << "\n";
    return hypothesis_failure;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  }
  if (!(curve_validate->parsed() && o.echo) && !(bn_certify->parsed() && o.json)) out << report.render();
  return code;
}

}  // namespace nodalbn::cli
