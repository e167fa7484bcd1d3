#pragma once

#include "nodalbn/curve_graph.hpp"
#include "nodalbn/polarization.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nodalbn {

/// Stalk type O_p^s + O_{x_1}^{a_first} + O_{x_2}^{a_second} at a node, where x_1 lies on
/// the node's first component and x_2 on its second.
struct LocalType {
  long long s = 0;
  long long a_first = 0;
  long long a_second = 0;

  bool is_free() const { return a_first == 0 && a_second == 0; }
  LocalType swapped() const { return {s, a_second, a_first}; }
  friend bool operator==(const LocalType&, const LocalType&) = default;
};

/// dim Ext^1(M, N) over the local ring of a node: a_1 b_2 + a_2 b_1.
inline long long local_ext_dim(const LocalType& m, const LocalType& n) {
  return m.a_first * n.a_second + m.a_second * n.a_first;
}

/// Numerical shadow of a depth-one sheaf on a fixed curve.
///
/// chi is an input: for a glued sheaf it cannot be recovered from restriction degrees
/// without assuming local freeness. Restriction degrees are optional.
class SheafDescriptor {
 public:
  SheafDescriptor(NodalCurve curve, std::vector<long long> multirank, long long chi,
                  std::optional<std::vector<long long>> degrees = std::nullopt,
                  std::map<int, LocalType> stalks = {})
      : curve_(std::move(curve)), multirank_(std::move(multirank)), chi_(chi), degrees_(std::move(degrees)) {
    const auto gamma = static_cast<std::size_t>(curve_.num_components());
    if (multirank_.size() != gamma) throw InputError("multirank must have one entry per component");
    for (auto r : multirank_)
      if (r < 0) throw InputError("multirank entries must be nonnegative");
    if (degrees_ && degrees_->size() != gamma) throw InputError("restriction degrees must have one entry per component");
    for (const auto& [id, t] : stalks) {
      (void)curve_.node(id);
      if (t.s < 0 || t.a_first < 0 || t.a_second < 0) throw InputError("stalk exponents must be nonnegative");
    }
    for (const Node& n : curve_.nodes()) {
      const long long r1 = rank(n.first);
      const long long r2 = rank(n.second);
      LocalType t;
      if (auto it = stalks.find(n.id); it != stalks.end()) {
        t = it->second;
      } else if (r1 == r2) {
        t = {r1, 0, 0};
      } else {
        throw InputError("node " + std::to_string(n.id) + " joins ranks " + std::to_string(r1) + " and " +
                         std::to_string(r2) + " and needs an explicit stalk type");
      }
      if (r1 != t.s + t.a_first || r2 != t.s + t.a_second)
        throw InputError("stalk at node " + std::to_string(n.id) + " is inconsistent with the multirank (need r_" +
                         std::to_string(n.first) + " = s + a_first and r_" + std::to_string(n.second) +
                         " = s + a_second)");
      stalks_.push_back(t);
    }
  }

  /// Locally free sheaf of constant rank with chi = sum d_i + r(1 - p_a).
  static SheafDescriptor locally_free(const NodalCurve& curve, long long rank, std::vector<long long> degrees) {
    if (rank < 0) throw InputError("rank must be nonnegative");
    long long total = 0;
    for (auto d : degrees) total += d;
    const long long chi = total + rank * (1 - arithmetic_genus(curve));
    return SheafDescriptor(curve, std::vector<long long>(static_cast<std::size_t>(curve.num_components()), rank), chi,
                           std::move(degrees));
  }

  /// O_C itself.
  static SheafDescriptor structure_sheaf(const NodalCurve& curve) {
    return locally_free(curve, 1, std::vector<long long>(static_cast<std::size_t>(curve.num_components()), 0));
  }

  const NodalCurve& curve() const { return curve_; }
  const std::vector<long long>& multirank() const { return multirank_; }
  long long rank(ComponentId i) const {
    if (!curve_.valid_id(i)) throw InputError("unknown component id " + std::to_string(i));
    return multirank_[static_cast<std::size_t>(i - 1)];
  }
  long long euler_characteristic() const { return chi_; }
  const std::optional<std::vector<long long>>& degrees() const { return degrees_; }
  /// Local types in node-id order.
  const std::vector<LocalType>& stalks() const { return stalks_; }
  const LocalType& stalk(int node_id) const {
    const auto& nodes = curve_.nodes();
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (nodes[k].id == node_id) return stalks_[k];
    throw InputError("unknown node id " + std::to_string(node_id));
  }

 private:
  NodalCurve curve_;
  std::vector<long long> multirank_;
  long long chi_;
  std::optional<std::vector<long long>> degrees_;
  std::vector<LocalType> stalks_;
};

inline Rational wrank(const SheafDescriptor& e, const Polarization& w) {
  require_matching(e.curve(), w);
  Rational total = 0;
  for (ComponentId i = 1; i <= w.size(); ++i) total += w.weight(i) * e.rank(i);
  return total;
}

/// wdeg(E) = chi(E) - wrank(E) chi(O_C).
inline Rational wdeg(const SheafDescriptor& e, const Polarization& w) {
  return Rational(e.euler_characteristic()) - wrank(e, w) * (1 - arithmetic_genus(e.curve()));
}

inline Rational wslope(const SheafDescriptor& e, const Polarization& w) {
  const Rational r = wrank(e, w);
  if (r == 0) throw InputError("omega-slope undefined: omega-rank is zero");
  return wdeg(e, w) / r;
}

/// Delta_omega(E) = wdeg(E) - sum of restriction degrees.
inline Rational delta(const SheafDescriptor& e, const Polarization& w) {
  if (!e.degrees()) throw InputError("Delta needs restriction degrees, which this descriptor does not carry");
  Rational total = wdeg(e, w);
  for (auto d : *e.degrees()) total -= d;
  return total;
}

inline bool is_locally_free(const SheafDescriptor& e) {
  for (const auto& t : e.stalks())
    if (!t.is_free()) return false;
  return true;
}

/// Sum over nodes of local_ext_dim(E_p, F_p): the part of dim Ext^1(E,F) coming from the
/// nodes. The h^1(Hom(E,F)) summand is not computed.
inline long long global_ext_defect(const SheafDescriptor& e, const SheafDescriptor& f) {
  if (!(e.curve() == f.curve())) throw InputError("descriptors live on different curves");
  long long total = 0;
  for (std::size_t k = 0; k < e.stalks().size(); ++k) total += local_ext_dim(e.stalks()[k], f.stalks()[k]);
  return total;
}

struct NamedSheaf {
  std::string name;
  SheafDescriptor sheaf;
};

struct CurveDocument {
  NodalCurve curve;
  std::vector<NamedSheaf> sheaves;
};

/// Parses a curve file optionally followed by descriptor blocks:
///   sheaf [name]
///   rank <r_1> ... <r_gamma>
///   chi <int>
///   degrees <d_1> ... <d_gamma>     (optional)
///   stalk <node id> <s> <a_first> <a_second>   (per non-free node)
inline CurveDocument parse_document(std::string_view text) {
  NodalCurve curve = parse_curve(text);
  const auto gamma = static_cast<std::size_t>(curve.num_components());
  CurveDocument doc{curve, {}};

  struct Pending {
    int line = 0;
    std::string name;
    std::optional<std::vector<long long>> rank;
    std::optional<long long> chi;
    std::optional<std::vector<long long>> degrees;
    std::map<int, LocalType> stalks;
  };
  std::optional<Pending> pending;
  auto finish = [&]() {
    if (!pending) return;
    if (!pending->rank) throw ParseError(pending->line, "sheaf block is missing a 'rank' line");
    if (!pending->chi) throw ParseError(pending->line, "sheaf block is missing a 'chi' line");
    try {
      doc.sheaves.push_back({pending->name, SheafDescriptor(curve, *pending->rank, *pending->chi,
                                                            pending->degrees, pending->stalks)});
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(pending->line, e.what());
    }
    pending.reset();
  };
  auto int_vector = [&](const detail::TokenLine& line, std::string_view what) {
    if (line.tokens.size() != gamma + 1)
      throw ParseError(line.number, "'" + line.tokens[0] + "' needs exactly " + std::to_string(gamma) + " values");
    std::vector<long long> out;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) out.push_back(detail::parse_int(line.tokens[i], line.number, what));
    return out;
  };

  bool in_sheaves = false;
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (!in_sheaves) {
      if (t[0] != "sheaf") continue;
      in_sheaves = true;
    }
    if (t[0] == "sheaf") {
      finish();
      if (t.size() > 2) throw ParseError(line.number, "expected 'sheaf [name]'");
      pending = Pending{line.number, t.size() == 2 ? t[1] : "E" + std::to_string(doc.sheaves.size() + 1), {}, {}, {}, {}};
    } else if (t[0] == "rank") {
      if (pending->rank) throw ParseError(line.number, "duplicate 'rank' line");
      pending->rank = int_vector(line, "rank");
    } else if (t[0] == "chi") {
      if (t.size() != 2) throw ParseError(line.number, "expected 'chi <int>'");
      if (pending->chi) throw ParseError(line.number, "duplicate 'chi' line");
      pending->chi = detail::parse_int(t[1], line.number, "chi");
    } else if (t[0] == "degrees") {
      if (pending->degrees) throw ParseError(line.number, "duplicate 'degrees' line");
      pending->degrees = int_vector(line, "degree");
    } else if (t[0] == "stalk") {
      if (t.size() != 5) throw ParseError(line.number, "expected 'stalk <node id> <s> <a_first> <a_second>'");
      const auto id = static_cast<int>(detail::parse_int(t[1], line.number, "node id"));
      try {
        (void)curve.node(id);
      } catch (const InputError&) {
        throw ParseError(line.number, "stalk refers to unknown node " + t[1]);
      }
      if (pending->stalks.count(id)) throw ParseError(line.number, "duplicate stalk for node " + t[1]);
      pending->stalks[id] = {detail::parse_int(t[2], line.number, "s"), detail::parse_int(t[3], line.number, "a_first"),
                             detail::parse_int(t[4], line.number, "a_second")};
    } else {
      throw ParseError(line.number, "unknown keyword '" + t[0] + "' inside a sheaf block");
    }
  }
  finish();
  return doc;
}

}  // namespace nodalbn
