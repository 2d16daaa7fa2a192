#pragma once

#include "zdclass/error.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdclass {

/// Exponent vector over the declared variables.
///
/// Ordering is graded: total degree first, ties broken by the exponent of the
/// last declared variable, then the one before it, and so on. With variables
/// (x, y) this gives 1 < x < y < x^2 < xy < y^2 < x^3 ...
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps[index] = power;
    return m;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps)
      d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps.begin(), exps.end(),
                       [](std::uint32_t e) { return e == 0; });
  }

  bool divides(const Monomial &other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i])
        return false;
    return true;
  }

  /// Precondition: divides(other).
  Monomial cofactor_in(const Monomial &other) const {
    Monomial q(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
      q.exps[i] = other.exps[i] - exps[i];
    return q;
  }

  /// Index of the only variable with a positive exponent, or exps.size()
  /// when the monomial is 1 or mixes variables.
  std::size_t pure_power_variable() const {
    std::size_t found = exps.size();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0)
        continue;
      if (found != exps.size())
        return exps.size();
      found = i;
    }
    return found;
  }

  friend Monomial operator*(const Monomial &a, const Monomial &b) {
    Monomial m(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      m.exps[i] = a.exps[i] + b.exps[i];
    return m;
  }

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend std::strong_ordering operator<=>(const Monomial &a,
                                          const Monomial &b) {
    if (auto c = a.degree() <=> b.degree(); c != 0)
      return c;
    for (std::size_t i = a.exps.size(); i-- > 0;)
      if (auto c = a.exps[i] <=> b.exps[i]; c != 0)
        return c;
    return std::strong_ordering::equal;
  }
};

/// Polynomial over Z_m: monomial -> coefficient in 1..m-1.
class Poly {
public:
  using Terms = std::map<Monomial, std::uint64_t>;

  Poly() = default;
  Poly(std::uint64_t modulus, std::size_t nvars)
      : modulus_(modulus), nvars_(nvars) {}

  static Poly constant(std::uint64_t modulus, std::size_t nvars,
                       std::uint64_t c) {
    Poly p(modulus, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Poly monomial(std::uint64_t modulus, const Monomial &m,
                       std::uint64_t c = 1) {
    Poly p(modulus, m.exps.size());
    p.add_term(m, c);
    return p;
  }

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::uint64_t coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Largest monomial in the order; precondition: non-zero.
  const Monomial &leading_monomial() const { return terms_.rbegin()->first; }
  std::uint64_t leading_coefficient() const { return terms_.rbegin()->second; }

  std::uint64_t degree_in(std::size_t var) const {
    std::uint64_t d = 0;
    for (const auto &[m, c] : terms_)
      d = std::max<std::uint64_t>(d, m.exps[var]);
    return d;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto &[m, c] : terms_)
      d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial &m, std::uint64_t c) {
    c %= modulus_;
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = (it->second + c) % modulus_;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly out(modulus_, nvars_);
    for (const auto &[m, c] : terms_)
      out.terms_.emplace(m, modulus_ - c);
    return out;
  }

  Poly &operator+=(const Poly &other) {
    for (const auto &[m, c] : other.terms_)
      add_term(m, c);
    return *this;
  }
  Poly &operator-=(const Poly &other) { return *this += -other; }

  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(const Poly &a, const Poly &b) {
    Poly out(a.modulus_, a.nvars_);
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_)
        out.add_term(ma * mb, mulmod(ca, cb, a.modulus_));
    return out;
  }

  Poly scaled(std::uint64_t c, const Monomial &m) const {
    Poly out(modulus_, nvars_);
    for (const auto &[mt, ct] : terms_)
      out.add_term(mt * m, mulmod(ct, c, modulus_));
    return out;
  }

  friend bool operator==(const Poly &, const Poly &) = default;

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                              std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
  }

private:
  std::uint64_t modulus_ = 2;
  std::size_t nvars_ = 0;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline bool single_char_names(const std::vector<std::string> &vars) {
  return std::all_of(vars.begin(), vars.end(),
                     [](const std::string &v) { return v.size() == 1; });
}

} // namespace detail

/// Canonical text: monomials in ascending order joined by '+', coefficient 1
/// omitted on non-constant terms. Variables are juxtaposed when every name is
/// one character, otherwise joined with '*'.
inline std::string render_monomial(const Monomial &m,
                                   const std::vector<std::string> &vars) {
  const bool compact = detail::single_char_names(vars);
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0)
      continue;
    if (!compact && !out.empty())
      out += '*';
    out += vars[i];
    if (m.exps[i] > 1)
      out += '^' + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string render(const Poly &p, const std::vector<std::string> &vars) {
  if (p.is_zero())
    return "0";
  const bool compact = detail::single_char_names(vars);
  std::string out;
  for (const auto &[m, c] : p.terms()) {
    if (!out.empty())
      out += '+';
    if (m.is_one()) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) {
      out += std::to_string(c);
      if (!compact)
        out += '*';
    }
    out += render_monomial(m, vars);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
//
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := [integer] ('*'? var ('^' integer)?)*
//
// Whitespace is insignificant. Variable names are matched longest-first.

namespace detail {

class PolyParser {
public:
  PolyParser(std::string_view text, const std::vector<std::string> &vars,
             std::uint64_t modulus)
      : text_(text), vars_(vars), modulus_(modulus) {}

  Poly parse() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError(pos_, "empty polynomial");
    Poly result(modulus_, vars_.size());
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto [mono, coeff] = parse_term();
      if (negative)
        coeff = (modulus_ - coeff % modulus_) % modulus_;
      result.add_term(mono, coeff);
      skip_ws();
      if (pos_ >= text_.size())
        break;
      const char c = peek();
      if (c != '+' && c != '-')
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

private:
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // Reads digits; when `mod` is non-zero the value is reduced as it is read.
  std::uint64_t parse_integer(std::uint64_t mod) {
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (at_digit()) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (mod != 0) {
        v = (Poly::mulmod(v, 10, mod) + d) % mod;
      } else {
        if (v > (std::uint64_t{1} << 31))
          throw ParseError(start, "integer too large");
        v = v * 10 + d;
      }
      ++pos_;
    }
    return v;
  }

  std::size_t match_variable() const {
    std::size_t best = vars_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto &v = vars_[i];
      if (v.size() > best_len && text_.substr(pos_, v.size()) == v) {
        best = i;
        best_len = v.size();
      }
    }
    return best;
  }

  std::pair<Monomial, std::uint64_t> parse_term() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t coeff = 1;
    bool any = false;
    if (at_digit()) {
      coeff = parse_integer(modulus_);
      any = true;
    }
    Monomial mono(vars_.size());
    while (true) {
      skip_ws();
      if (pos_ >= text_.size())
        break;
      const std::size_t before = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (pos_ >= text_.size() ||
          !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        if (pos_ != before)
          throw ParseError(pos_, "expected variable after '*'");
        break;
      }
      const std::size_t var = match_variable();
      if (var == vars_.size())
        throw ParseError(pos_, "unknown variable starting with '" +
                                   std::string(1, peek()) + "'");
      pos_ += vars_[var].size();
      std::uint32_t power = 1;
      skip_ws();
      if (pos_ < text_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (!at_digit())
          throw ParseError(pos_, "malformed exponent");
        power = static_cast<std::uint32_t>(parse_integer(0));
      }
      mono.exps[var] += power;
      any = true;
    }
    if (!any)
      throw ParseError(start, "expected a term");
    return {mono, coeff};
  }

  std::string_view text_;
  const std::vector<std::string> &vars_;
  std::uint64_t modulus_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `text` over Z_modulus[vars]; coefficients are reduced on read.
inline Poly parse_poly(std::string_view text,
                       const std::vector<std::string> &vars,
                       std::uint64_t modulus) {
  return detail::PolyParser(text, vars, modulus).parse();
}

} // namespace zdclass
