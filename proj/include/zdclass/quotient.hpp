#pragma once

#include "zdclass/error.hpp"
#include "zdclass/poly.hpp"
#include "zdclass/ring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace zdclass {

/// Presentation Z_m[vars]/(relations).
struct QuotientSpec {
  std::uint64_t modulus = 2;
  std::vector<std::string> vars;
  std::vector<Poly> relations;
  std::size_t basis_cap = 4096;
  std::size_t element_cap = std::size_t{1} << 20;

  std::string to_string() const {
    std::string out = "quot(Z" + std::to_string(modulus) + "; ";
    for (std::size_t i = 0; i < vars.size(); ++i)
      out += (i ? "," : "") + vars[i];
    out += "; ";
    for (std::size_t i = 0; i < relations.size(); ++i)
      out += (i ? ", " : "") + render(relations[i], vars);
    return out + ")";
  }

  friend bool operator==(const QuotientSpec &a, const QuotientSpec &b) {
    return a.modulus == b.modulus && a.vars == b.vars &&
           a.relations == b.relations;
  }
};

namespace detail {

inline bool is_identifier(const std::string &s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

} // namespace detail

/// Throws invalid-spec when the presentation is malformed.
inline void check_quotient_spec(const QuotientSpec &spec) {
  if (spec.modulus < 2)
    throw Error(ErrorKind::invalid_spec, "coefficient modulus must be at least 2");
  if (spec.modulus > (std::uint64_t{1} << 31))
    throw Error(ErrorKind::invalid_spec, "coefficient modulus too large");
  if (spec.vars.empty())
    throw Error(ErrorKind::invalid_spec, "quotient needs at least one variable");
  for (std::size_t i = 0; i < spec.vars.size(); ++i) {
    if (!detail::is_identifier(spec.vars[i]))
      throw Error(ErrorKind::invalid_spec,
                  "bad variable name '" + spec.vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.vars[i] == spec.vars[j])
        throw Error(ErrorKind::invalid_spec,
                    "variable '" + spec.vars[i] + "' declared twice");
  }
  for (const auto &rel : spec.relations) {
    if (rel.nvars() != spec.vars.size() || rel.modulus() != spec.modulus)
      throw Error(ErrorKind::invalid_spec,
                  "relation built over a different polynomial ring");
    if (rel.is_zero())
      throw Error(ErrorKind::invalid_spec, "relation reduces to zero mod " +
                                               std::to_string(spec.modulus));
  }
}

/// Builds a spec from relation texts such as {"x*y", "x^3", "x^2-y^2"}.
inline QuotientSpec make_quotient_spec(std::uint64_t modulus,
                                       std::vector<std::string> vars,
                                       const std::vector<std::string> &relations) {
  QuotientSpec spec;
  spec.modulus = modulus;
  spec.vars = std::move(vars);
  if (modulus < 2)
    throw Error(ErrorKind::invalid_spec, "coefficient modulus must be at least 2");
  for (const auto &text : relations)
    spec.relations.push_back(parse_poly(text, spec.vars, modulus));
  check_quotient_spec(spec);
  return spec;
}

/// spec plus the relation var^power; identical relations are not repeated.
inline QuotientSpec truncate(QuotientSpec spec, const std::string &var,
                             std::uint32_t power) {
  const auto it = std::find(spec.vars.begin(), spec.vars.end(), var);
  if (it == spec.vars.end())
    throw Error(ErrorKind::invalid_spec, "cannot truncate undeclared variable '" +
                                             var + "'");
  if (power < 1)
    throw Error(ErrorKind::invalid_spec, "truncation power must be at least 1");
  const auto index = static_cast<std::size_t>(it - spec.vars.begin());
  Poly rel = Poly::monomial(spec.modulus,
                            Monomial::variable(spec.vars.size(), index, power));
  if (std::find(spec.relations.begin(), spec.relations.end(), rel) ==
      spec.relations.end())
    spec.relations.push_back(std::move(rel));
  return spec;
}

// ---------------------------------------------------------------------------
// Rewrite system

/// lead -> replacement, every replacement monomial strictly below lead.
struct SubstitutionRule {
  Monomial lead;
  Poly replacement;
};

/// Coefficients of every multiple of `lead` live in Z_modulus.
struct ModulusRule {
  Monomial lead;
  std::uint64_t modulus;
};

/// Rules oriented by the graded monomial order. A relation c*mu + tail with
/// unit c becomes mu -> -c^{-1} tail; a pure term c*mu drops the coefficient
/// modulus of multiples of mu to gcd(m, c) (to 1, i.e. kills them, when c is
/// a unit).
class RewriteSystem {
public:
  explicit RewriteSystem(const QuotientSpec &spec)
      : modulus_(spec.modulus), nvars_(spec.vars.size()) {
    check_quotient_spec(spec);
    for (const auto &rel : spec.relations) {
      const Monomial lead = rel.leading_monomial();
      const std::uint64_t c = rel.leading_coefficient();
      Poly tail = rel;
      tail -= Poly::monomial(modulus_, lead, c);
      const std::uint64_t g = std::gcd(c, modulus_);
      if (tail.is_zero()) {
        moduli_.push_back({lead, g});
      } else if (g == 1) {
        const std::uint64_t inv = inverse(c);
        substitutions_.push_back({lead, (-tail).scaled(inv, Monomial(nvars_))});
      } else {
        throw Error(ErrorKind::invalid_spec,
                    "relation " + render(rel, spec.vars) +
                        " has a non-unit leading coefficient and a non-zero "
                        "tail; only pure terms may carry zero-divisor "
                        "coefficients");
      }
    }
  }

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<SubstitutionRule> &substitutions() const noexcept {
    return substitutions_;
  }
  const std::vector<ModulusRule> &moduli() const noexcept { return moduli_; }

  std::uint64_t modulus_of(const Monomial &m) const {
    std::uint64_t md = modulus_;
    for (const auto &rule : moduli_)
      if (rule.lead.divides(m))
        md = std::gcd(md, rule.modulus);
    return md;
  }

  const SubstitutionRule *substitution_for(const Monomial &m) const {
    for (const auto &rule : substitutions_)
      if (rule.lead.divides(m))
        return &rule;
    return nullptr;
  }

  /// Irreducible monomials are exactly the standard basis.
  bool is_irreducible(const Monomial &m) const {
    return substitution_for(m) == nullptr && modulus_of(m) > 1;
  }

  /// Normal form: rewrite the largest reducible monomial until none remain,
  /// then reduce each surviving coefficient by its monomial's modulus.
  Poly reduce(const Poly &p) const {
    Poly work = p;
    Poly result(modulus_, nvars_);
    while (!work.is_zero()) {
      const Monomial m = work.leading_monomial();
      const std::uint64_t c = work.leading_coefficient();
      work.add_term(m, modulus_ - c);
      if (const auto *rule = substitution_for(m)) {
        work += rule->replacement.scaled(c, rule->lead.cofactor_in(m));
        continue;
      }
      const std::uint64_t md = modulus_of(m);
      if (c % md != 0)
        result.add_term(m, c % md);
    }
    return result;
  }

private:
  std::uint64_t inverse(std::uint64_t c) const {
    // extended Euclid over signed 128-bit to stay clear of overflow
    __int128 t = 0, new_t = 1;
    __int128 r = static_cast<__int128>(modulus_), new_r = static_cast<__int128>(c);
    while (new_r != 0) {
      const __int128 q = r / new_r;
      std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
      std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0)
      t += static_cast<__int128>(modulus_);
    return static_cast<std::uint64_t>(t);
  }

  std::uint64_t modulus_;
  std::size_t nvars_;
  std::vector<SubstitutionRule> substitutions_;
  std::vector<ModulusRule> moduli_;
};

/// Closure of {1} under multiplication by the variables, restricted to
/// irreducible monomials; ascending monomial order.
inline std::vector<Monomial> standard_basis(const QuotientSpec &spec) {
  const RewriteSystem rules(spec);
  const std::size_t k = spec.vars.size();
  std::set<Monomial> seen;
  std::vector<Monomial> frontier;
  const Monomial one(k);
  if (rules.is_irreducible(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto &m : frontier) {
      for (std::size_t v = 0; v < k; ++v) {
        Monomial child = m * Monomial::variable(k, v);
        if (seen.count(child) != 0 || !rules.is_irreducible(child))
          continue;
        seen.insert(child);
        next.push_back(std::move(child));
        if (seen.size() > spec.basis_cap) {
          // A variable none of whose powers is ever reducible generates an
          // infinite basis.
          for (std::size_t var = 0; var < k; ++var) {
            bool bounded = false;
            for (const auto &r : rules.substitutions())
              bounded = bounded || r.lead.pure_power_variable() == var;
            for (const auto &r : rules.moduli())
              bounded = bounded || (r.modulus == 1 &&
                                    r.lead.pure_power_variable() == var);
            if (!bounded)
              throw Error(ErrorKind::cap_exceeded,
                          "standard basis is infinite: powers of " +
                              spec.vars[var] + " never reduce");
          }
          throw Error(ErrorKind::cap_exceeded,
                      "standard basis exceeds the cap of " +
                          std::to_string(spec.basis_cap) + " monomials");
        }
      }
    }
    frontier = std::move(next);
  }
  if (seen.empty())
    throw Error(ErrorKind::invalid_spec,
                "presentation collapses to the zero ring");
  return {seen.begin(), seen.end()};
}

/// Elements are coefficient vectors over the standard basis. Basis index 0
/// (the monomial 1) is the least significant mixed-radix digit, so among
/// elements of one class the representative with the lowest-degree support
/// has the smallest id.
class QuotientBackend final : public RingBackend {
public:
  explicit QuotientBackend(QuotientSpec spec)
      : spec_(std::move(spec)), rules_(spec_), basis_(standard_basis(spec_)) {
    order_ = 1;
    for (const auto &m : basis_) {
      const std::uint64_t md = rules_.modulus_of(m);
      moduli_.push_back(md);
      weights_.push_back(order_);
      if (order_ > spec_.element_cap / md)
        throw Error(ErrorKind::cap_exceeded,
                    "quotient ring has more than " +
                        std::to_string(spec_.element_cap) + " elements");
      order_ *= md;
    }
    const std::size_t b = basis_.size();
    products_.resize(b * b);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i; j < b; ++j) {
        const Poly nf = rules_.reduce(
            Poly::monomial(spec_.modulus, basis_[i] * basis_[j]));
        std::vector<std::pair<std::size_t, std::uint64_t>> sparse;
        for (const auto &[m, c] : nf.terms())
          sparse.emplace_back(index_of(m), c);
        products_[i * b + j] = sparse;
        products_[j * b + i] = std::move(sparse);
      }
    }
    one_ = encode_poly(Poly::constant(spec_.modulus, spec_.vars.size(), 1));

    // Over Z_2 with every digit binary, ids are bit vectors.
    binary_ = std::all_of(moduli_.begin(), moduli_.end(),
                          [](std::uint64_t md) { return md == 2; });
    if (binary_) {
      product_ids_.resize(b * b);
      for (std::size_t k = 0; k < b * b; ++k) {
        ElementId id = 0;
        for (const auto &[idx, c] : products_[k])
          if (c % 2 == 1)
            id ^= static_cast<ElementId>(weights_[idx]);
        product_ids_[k] = id;
      }
    }
  }

  const QuotientSpec &spec() const noexcept { return spec_; }
  const RewriteSystem &rules() const noexcept { return rules_; }
  const std::vector<Monomial> &basis() const noexcept { return basis_; }
  const std::vector<std::uint64_t> &coefficient_moduli() const noexcept {
    return moduli_;
  }

  std::size_t order() const override { return order_; }
  ElementId zero() const override { return 0; }
  ElementId one() const override { return one_; }

  ElementId add(ElementId a, ElementId b) const override {
    if (binary_)
      return a ^ b;
    std::size_t id = 0;
    std::size_t ra = a, rb = b;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::uint64_t md = moduli_[i];
      id += ((ra % md + rb % md) % md) * weights_[i];
      ra /= md;
      rb /= md;
    }
    return static_cast<ElementId>(id);
  }

  ElementId neg(ElementId a) const override {
    if (binary_)
      return a;
    std::size_t id = 0;
    std::size_t rest = a;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::uint64_t md = moduli_[i];
      id += ((md - rest % md) % md) * weights_[i];
      rest /= md;
    }
    return static_cast<ElementId>(id);
  }

  ElementId mul(ElementId a, ElementId b) const override {
    if (binary_) {
      ElementId out = 0;
      for (ElementId ra = a; ra != 0; ra &= ra - 1) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(ra));
        const ElementId *row = &product_ids_[i * basis_.size()];
        for (ElementId rb = b; rb != 0; rb &= rb - 1)
          out ^= row[std::countr_zero(rb)];
      }
      return out;
    }
    const std::size_t nb = basis_.size();
    if (nb <= kSmallBasis) {
      std::array<std::uint64_t, kSmallBasis> da{}, db{}, acc{};
      return mul_into(a, b, da.data(), db.data(), acc.data());
    }
    std::vector<std::uint64_t> da(nb), db(nb), acc(nb);
    return mul_into(a, b, da.data(), db.data(), acc.data());
  }

  std::vector<std::uint64_t> digit_radices() const override { return moduli_; }

  std::string element_name(ElementId a) const override {
    return render(to_poly(a), spec_.vars);
  }

  std::optional<ElementId> parse_element(std::string_view text) const override {
    try {
      return encode_poly(parse_poly(text, spec_.vars, spec_.modulus));
    } catch (const ParseError &) {
      return std::nullopt;
    }
  }

  Poly to_poly(ElementId a) const {
    Poly p(spec_.modulus, spec_.vars.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      p.add_term(basis_[i], digit(a, i));
    return p;
  }

  /// Reduces `p` to normal form and returns its id.
  ElementId encode_poly(const Poly &p) const {
    const Poly nf = rules_.reduce(p);
    std::size_t id = 0;
    for (const auto &[m, c] : nf.terms())
      id += (c % moduli_[index_of(m)]) * weights_[index_of(m)];
    return static_cast<ElementId>(id);
  }

private:
  static constexpr std::size_t kSmallBasis = 64;

  ElementId mul_into(ElementId a, ElementId b, std::uint64_t *da,
                     std::uint64_t *db, std::uint64_t *acc) const {
    const std::size_t nb = basis_.size();
    const std::uint64_t m = spec_.modulus;
    std::size_t ra = a, rb = b;
    for (std::size_t i = 0; i < nb; ++i) {
      da[i] = ra % moduli_[i];
      ra /= moduli_[i];
      db[i] = rb % moduli_[i];
      rb /= moduli_[i];
      acc[i] = 0;
    }
    for (std::size_t i = 0; i < nb; ++i) {
      if (da[i] == 0)
        continue;
      for (std::size_t j = 0; j < nb; ++j) {
        if (db[j] == 0)
          continue;
        const std::uint64_t ab = Poly::mulmod(da[i], db[j], m);
        for (const auto &[k, c] : products_[i * nb + j])
          acc[k] = (acc[k] + Poly::mulmod(ab, c, m)) % m;
      }
    }
    std::size_t id = 0;
    for (std::size_t k = 0; k < nb; ++k)
      id += (acc[k] % moduli_[k]) * weights_[k];
    return static_cast<ElementId>(id);
  }

  std::uint64_t digit(ElementId a, std::size_t i) const {
    return (a / weights_[i]) % moduli_[i];
  }

  std::vector<std::uint64_t> digits(ElementId a) const {
    std::vector<std::uint64_t> d(basis_.size());
    std::size_t rest = a;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      d[i] = rest % moduli_[i];
      rest /= moduli_[i];
    }
    return d;
  }

  std::size_t index_of(const Monomial &m) const {
    const auto it = std::lower_bound(basis_.begin(), basis_.end(), m);
    if (it == basis_.end() || *it != m)
      throw Error(ErrorKind::internal,
                  "normal form left a non-basis monomial " +
                      render_monomial(m, spec_.vars));
    return static_cast<std::size_t>(it - basis_.begin());
  }

  QuotientSpec spec_;
  RewriteSystem rules_;
  std::vector<Monomial> basis_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::size_t> weights_;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> products_;
  std::vector<ElementId> product_ids_;
  bool binary_ = false;
  std::size_t order_ = 1;
  ElementId one_ = 0;
};

struct QuotientOptions {
  std::uint64_t validation_budget = kDefaultValidationBudget;
  std::uint64_t validation_seed = kDefaultValidationSeed;
  RingOptions ring;
};

/// Constructs the quotient and certifies it with the axiom validator; a
/// failed certificate means the relations are not confluent under the
/// monomial order.
inline Ring quotient_ring(const QuotientSpec &spec, QuotientOptions options = {}) {
  auto backend = std::make_shared<const QuotientBackend>(spec);
  Ring ring(spec.to_string(), backend, options.ring);
  const auto report = validate_ring_axioms(ring, options.validation_budget,
                                           options.validation_seed);
  if (!report.passed)
    throw Error(ErrorKind::non_confluent,
                "presentation " + spec.to_string() +
                    " is not confluent under the graded monomial order (" +
                    report.describe(ring) +
                    "); add the missing consequences of the relations");
  return ring;
}

/// The quotient backend of `r`, or nullptr for other ring kinds.
inline const QuotientBackend *as_quotient(const Ring &r) {
  return dynamic_cast<const QuotientBackend *>(&r.backend());
}

} // namespace zdclass
