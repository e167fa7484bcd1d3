#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace nodalbn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 1-based component index, the canonical order of every output.
using ComponentId = int;

/// Malformed or inconsistent input (bad file, bad flag value, violated type invariant).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input file syntax error; the message always starts with `line N:`.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& rule)
      : InputError("line " + std::to_string(line) + ": " + rule), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A mathematical hypothesis required by an operation does not hold.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pass/fail outcome carrying one human-readable line per failed clause.
struct Verdict {
  bool pass = true;
  std::vector<std::string> failures;

  void require(bool condition, std::string clause) {
    if (!condition) {
      pass = false;
      failures.push_back(std::move(clause));
    }
  }
};

inline Integer floor_of(const Rational& q) {
  Integer n = boost::multiprecision::numerator(q);
  const Integer& d = boost::multiprecision::denominator(q);
  Integer quotient = n / d;
  if (n < 0 && quotient * d != n) --quotient;
  return quotient;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

/// Reduced `p/q`, or `p` for integers.
inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

template <typename Range>
std::string join(const Range& values, std::string_view sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += sep;
    first = false;
    if constexpr (std::is_arithmetic_v<std::decay_t<decltype(v)>>) {
      out += std::to_string(v);
    } else if constexpr (std::is_convertible_v<decltype(v), std::string_view>) {
      out += std::string_view(v);
    } else {
      out += to_string(v);
    }
  }
  return out;
}

namespace detail {

inline bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// One non-blank line of a line-oriented input file, comments stripped.
struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TokenLine> tokenize_lines(std::string_view text) {
  std::vector<TokenLine> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto eol = text.find('\n', start);
    std::string_view line =
        text.substr(start, eol == std::string_view::npos ? std::string_view::npos : eol - start);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    TokenLine parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > pos) parsed.tokens.emplace_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  return lines;
}

inline long long parse_int(std::string_view token, int line, std::string_view what) {
  long long value = 0;
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last)
    throw ParseError(line, std::string(what) + " must be an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace detail

/// Parses `p/q` or `p` (optional sign) into a reduced rational.
inline Rational parse_rational(std::string_view token) {
  token = detail::trim(token);
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : token.substr(slash + 1);
  if (!detail::is_integer_token(num) || !detail::is_integer_token(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(token) + "' (expected p/q or p)");
  const Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
  const Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(token) + "'");
  return Rational(n, d);
}

/// Comma-separated list of rationals, e.g. `3/8,5/8`.
inline std::vector<Rational> parse_rational_list(std::string_view list) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = list.find(',');
    out.push_back(parse_rational(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

inline std::vector<long long> parse_int_list(std::string_view list) {
  std::vector<long long> out;
  while (true) {
    const auto comma = list.find(',');
    const auto token = detail::trim(list.substr(0, comma));
    if (!detail::is_integer_token(token)) throw InputError("malformed integer '" + std::string(token) + "' in list");
    out.push_back(detail::parse_int(token, 0, "list entry"));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace nodalbn
