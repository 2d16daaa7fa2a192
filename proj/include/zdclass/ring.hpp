#pragma once

#include "zdclass/error.hpp"
#include "zdclass/id_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdclass {

using ElementId = std::uint32_t;

/// Concrete arithmetic behind a Ring. Element ids are 0..order()-1.
class RingBackend {
public:
  virtual ~RingBackend() = default;

  virtual std::size_t order() const = 0;
  virtual ElementId zero() const = 0;
  virtual ElementId one() const = 0;
  virtual ElementId add(ElementId a, ElementId b) const = 0;
  virtual ElementId mul(ElementId a, ElementId b) const = 0;
  virtual ElementId neg(ElementId a) const = 0;
  virtual std::string element_name(ElementId a) const = 0;

  /// Additive layout of the ids: an id is a mixed-radix digit vector (least
  /// significant digit first) and addition acts digitwise modulo each radix.
  virtual std::vector<std::uint64_t> digit_radices() const { return {order()}; }

  /// Element whose rendered name is `text`. Backends with a richer element
  /// syntax (polynomials) override this to accept non-canonical input.
  virtual std::optional<ElementId> parse_element(std::string_view text) const {
    for (std::size_t i = 0; i < order(); ++i)
      if (element_name(static_cast<ElementId>(i)) == text)
        return static_cast<ElementId>(i);
    return std::nullopt;
  }
};

struct RingOptions {
  /// Multiplication and addition tables are materialized up to this order.
  std::size_t table_threshold = 4096;
};

/// Immutable finite commutative ring with unity over dense element ids.
/// Copies share state.
class Ring {
public:
  Ring(std::string name, std::shared_ptr<const RingBackend> backend,
       RingOptions options = {})
      : name_(std::move(name)), backend_(std::move(backend)),
        order_(backend_->order()), zero_(backend_->zero()),
        one_(backend_->one()) {
    if (order_ <= options.table_threshold) {
      auto tables = std::make_shared<Tables>();
      tables->mul.resize(order_ * order_);
      tables->add.resize(order_ * order_);
      for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = a; b < order_; ++b) {
          const auto ia = static_cast<ElementId>(a);
          const auto ib = static_cast<ElementId>(b);
          const ElementId m = backend_->mul(ia, ib);
          const ElementId s = backend_->add(ia, ib);
          tables->mul[a * order_ + b] = m;
          tables->mul[b * order_ + a] = backend_->mul(ib, ia);
          tables->add[a * order_ + b] = s;
          tables->add[b * order_ + a] = backend_->add(ib, ia);
        }
      }
      tables_ = std::move(tables);
    }
  }

  const std::string &name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  ElementId add(ElementId a, ElementId b) const {
    return tables_ ? tables_->add[a * order_ + b] : backend_->add(a, b);
  }
  ElementId mul(ElementId a, ElementId b) const {
    return tables_ ? tables_->mul[a * order_ + b] : backend_->mul(a, b);
  }
  ElementId neg(ElementId a) const { return backend_->neg(a); }
  std::vector<std::uint64_t> digit_radices() const {
    return backend_->digit_radices();
  }

  std::string element_name(ElementId a) const {
    return backend_->element_name(a);
  }
  std::optional<ElementId> find(std::string_view text) const {
    return backend_->parse_element(text);
  }

  /// Like find(), but throws when the element does not exist.
  ElementId element(std::string_view text) const {
    if (auto id = find(text))
      return *id;
    throw Error(ErrorKind::domain, "no element '" + std::string(text) +
                                       "' in " + name_);
  }

  bool has_tables() const noexcept { return tables_ != nullptr; }
  const RingBackend &backend() const noexcept { return *backend_; }

private:
  struct Tables {
    std::vector<ElementId> mul;
    std::vector<ElementId> add;
  };

  std::string name_;
  std::shared_ptr<const RingBackend> backend_;
  std::shared_ptr<const Tables> tables_;
  std::size_t order_;
  ElementId zero_;
  ElementId one_;
};

namespace detail {

class ModBackend final : public RingBackend {
public:
  explicit ModBackend(std::uint64_t n) : n_(n) {}

  std::size_t order() const override { return n_; }
  ElementId zero() const override { return 0; }
  ElementId one() const override { return 1; }
  ElementId add(ElementId a, ElementId b) const override {
    return static_cast<ElementId>((std::uint64_t{a} + b) % n_);
  }
  ElementId mul(ElementId a, ElementId b) const override {
    return static_cast<ElementId>((std::uint64_t{a} * b) % n_);
  }
  ElementId neg(ElementId a) const override {
    return static_cast<ElementId>((n_ - a) % n_);
  }
  std::string element_name(ElementId a) const override {
    return std::to_string(a);
  }
  std::optional<ElementId> parse_element(std::string_view text) const override {
    if (text.empty())
      return std::nullopt;
    std::uint64_t v = 0;
    for (char c : text) {
      if (c < '0' || c > '9')
        return std::nullopt;
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > (std::uint64_t{1} << 40))
        return std::nullopt;
    }
    return static_cast<ElementId>(v % n_);
  }

private:
  std::uint64_t n_;
};

// Mixed radix: the first component is the most significant digit, so ids
// enumerate tuples in lexicographic order.
class ProductBackend final : public RingBackend {
public:
  explicit ProductBackend(std::vector<Ring> parts) : parts_(std::move(parts)) {
    order_ = 1;
    for (const auto &p : parts_)
      order_ *= p.order();
  }

  std::size_t order() const override { return order_; }
  ElementId zero() const override {
    return combine([](const Ring &r, ElementId) { return r.zero(); }, 0);
  }
  ElementId one() const override {
    return combine([](const Ring &r, ElementId) { return r.one(); }, 0);
  }
  ElementId add(ElementId a, ElementId b) const override {
    return combine2(a, b, [](const Ring &r, ElementId x, ElementId y) {
      return r.add(x, y);
    });
  }
  ElementId mul(ElementId a, ElementId b) const override {
    return combine2(a, b, [](const Ring &r, ElementId x, ElementId y) {
      return r.mul(x, y);
    });
  }
  ElementId neg(ElementId a) const override {
    return combine([](const Ring &r, ElementId x) { return r.neg(x); }, a);
  }
  std::vector<std::uint64_t> digit_radices() const override {
    std::vector<std::uint64_t> out;
    for (std::size_t i = parts_.size(); i-- > 0;) {
      const auto part = parts_[i].digit_radices();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::string element_name(ElementId a) const override {
    const auto digits = split(a);
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i != 0)
        out += ',';
      out += parts_[i].element_name(digits[i]);
    }
    return out + ")";
  }

private:
  std::vector<ElementId> split(ElementId id) const {
    std::vector<ElementId> digits(parts_.size());
    std::size_t rest = id;
    for (std::size_t i = parts_.size(); i-- > 0;) {
      digits[i] = static_cast<ElementId>(rest % parts_[i].order());
      rest /= parts_[i].order();
    }
    return digits;
  }

  ElementId join(const std::vector<ElementId> &digits) const {
    std::size_t id = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      id = id * parts_[i].order() + digits[i];
    return static_cast<ElementId>(id);
  }

  template <typename F> ElementId combine(F f, ElementId a) const {
    auto digits = split(a);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      digits[i] = f(parts_[i], digits[i]);
    return join(digits);
  }

  template <typename F>
  ElementId combine2(ElementId a, ElementId b, F f) const {
    auto da = split(a);
    const auto db = split(b);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      da[i] = f(parts_[i], da[i], db[i]);
    return join(da);
  }

  std::vector<Ring> parts_;
  std::size_t order_ = 1;
};

} // namespace detail

/// Z_n with id i representing residue i.
inline Ring mod_ring(std::int64_t n, RingOptions options = {}) {
  if (n < 2)
    throw Error(ErrorKind::invalid_spec,
                "modulus must be at least 2, got " + std::to_string(n));
  if (n > (std::int64_t{1} << 31))
    throw Error(ErrorKind::cap_exceeded,
                "modulus " + std::to_string(n) + " exceeds the id range");
  return Ring("Z" + std::to_string(n),
              std::make_shared<detail::ModBackend>(static_cast<std::uint64_t>(n)),
              options);
}

/// Componentwise product; element names render as tuples.
inline Ring product_ring(const std::vector<Ring> &parts,
                         std::size_t element_cap = std::size_t{1} << 20,
                         RingOptions options = {}) {
  if (parts.empty())
    throw Error(ErrorKind::invalid_spec, "product of an empty list of rings");
  std::size_t order = 1;
  std::string name = "product(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    order *= parts[i].order();
    if (order > element_cap)
      throw Error(ErrorKind::cap_exceeded,
                  "product ring has more than " + std::to_string(element_cap) +
                      " elements");
    if (i != 0)
      name += ',';
    name += parts[i].name();
  }
  name += ')';
  return Ring(std::move(name), std::make_shared<detail::ProductBackend>(parts),
              options);
}

// ---------------------------------------------------------------------------
// Axiom validation

/// Seed used for sampled validation unless ZDCLASS_SEED overrides it.
inline constexpr std::uint64_t kDefaultValidationSeed = 0x5A44434C41535331ULL;
/// Triple budget: exhaustive when order^3 fits, otherwise this many samples.
inline constexpr std::uint64_t kDefaultValidationBudget = std::uint64_t{1} << 22;

/// ZDCLASS_SEED when set to an unsigned integer, else the default seed.
inline std::uint64_t validation_seed_from_env() {
  if (const char *env = std::getenv("ZDCLASS_SEED")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end != env && *end == '\0')
      return v;
  }
  return kDefaultValidationSeed;
}

struct AxiomViolation {
  std::string law;
  ElementId a = 0, b = 0, c = 0;
};

struct ValidationReport {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::uint64_t seed = 0;
  std::optional<AxiomViolation> violation;

  std::string describe(const Ring &r) const {
    std::string out = passed ? "pass" : "FAIL";
    out += exhaustive ? " (exhaustive, " : " (sampled, ";
    out += std::to_string(triples_checked) + " triples";
    if (!exhaustive)
      out += ", seed " + std::to_string(seed);
    out += ")";
    if (violation) {
      out += ": " + violation->law + " violated at (" +
             r.element_name(violation->a) + ", " +
             r.element_name(violation->b) + ", " +
             r.element_name(violation->c) + ")";
    }
    return out;
  }
};

namespace detail {

inline std::optional<AxiomViolation> check_unary(const Ring &r, ElementId a) {
  if (r.add(a, r.zero()) != a)
    return AxiomViolation{"additive identity", a, a, a};
  if (r.add(a, r.neg(a)) != r.zero())
    return AxiomViolation{"additive inverse", a, a, a};
  if (r.mul(a, r.zero()) != r.zero())
    return AxiomViolation{"zero absorption", a, a, a};
  if (r.mul(a, r.one()) != a)
    return AxiomViolation{"multiplicative identity", a, a, a};
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_binary(const Ring &r, ElementId a,
                                                  ElementId b) {
  if (r.add(a, b) != r.add(b, a))
    return AxiomViolation{"additive commutativity", a, b, b};
  if (r.mul(a, b) != r.mul(b, a))
    return AxiomViolation{"multiplicative commutativity", a, b, b};
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_ternary(const Ring &r, ElementId a,
                                                   ElementId b, ElementId c) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
    return AxiomViolation{"additive associativity", a, b, c};
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
    return AxiomViolation{"multiplicative associativity", a, b, c};
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
    return AxiomViolation{"distributivity", a, b, c};
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_triple(const Ring &r, ElementId a,
                                                  ElementId b, ElementId c) {
  if (auto v = check_unary(r, a))
    return v;
  if (auto v = check_binary(r, a, b))
    return v;
  return check_ternary(r, a, b, c);
}

} // namespace detail

/// Checks the commutative-ring-with-unity axioms on triples: all of them when
/// order^3 <= budget, otherwise `budget` uniformly sampled triples.
inline ValidationReport
validate_ring_axioms(const Ring &r,
                     std::uint64_t budget = kDefaultValidationBudget,
                     std::uint64_t seed = kDefaultValidationSeed) {
  ValidationReport report;
  report.seed = seed;
  const std::uint64_t n = r.order();
  const bool exhaustive = n <= 2097151 && n * n * n <= budget;
  report.exhaustive = exhaustive;

  auto fail = [&](AxiomViolation v) {
    report.passed = false;
    report.violation = std::move(v);
  };

  if (r.zero() == r.one() && n > 1) {
    fail({"zero distinct from one", r.zero(), r.one(), r.one()});
    return report;
  }

  if (exhaustive) {
    for (ElementId a = 0; a < n; ++a) {
      if (auto v = detail::check_unary(r, a)) {
        fail(*v);
        return report;
      }
      for (ElementId b = 0; b < n; ++b) {
        if (auto v = detail::check_binary(r, a, b)) {
          fail(*v);
          return report;
        }
        for (ElementId c = 0; c < n; ++c) {
          ++report.triples_checked;
          if (auto v = detail::check_ternary(r, a, b, c)) {
            fail(*v);
            return report;
          }
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const auto a = static_cast<ElementId>(pick(rng));
    const auto b = static_cast<ElementId>(pick(rng));
    const auto c = static_cast<ElementId>(pick(rng));
    ++report.triples_checked;
    if (auto v = detail::check_triple(r, a, b, c)) {
      fail(*v);
      return report;
    }
  }
  return report;
}

/// Smallest k >= 1 with k * 1 = 0.
inline std::uint64_t characteristic(const Ring &r) {
  std::uint64_t k = 1;
  ElementId acc = r.one();
  while (acc != r.zero()) {
    acc = r.add(acc, r.one());
    ++k;
  }
  return k;
}

/// Computes ann(x) = { y : xy = 0 } for many x over one ring.
///
/// Rings with tables are scanned directly. Otherwise the digit layout splits
/// every y as y_lo + y_hi, and xy = 0 becomes x*y_lo = -(x*y_hi): both sides
/// are tabulated by repeated addition and matched after sorting, so each x
/// costs O(sqrt(n) log n) operations plus the size of its annihilator.
class AnnihilatorScanner {
public:
  explicit AnnihilatorScanner(const Ring &r) : ring_(r) {
    radices_ = r.digit_radices();
    std::uint64_t product = 1;
    for (auto d : radices_)
      product *= d;
    if (r.has_tables() || radices_.size() < 2 || product != r.order())
      return;
    const double target = std::sqrt(static_cast<double>(r.order()));
    split_ = 0;
    low_size_ = 1;
    while (split_ + 1 < radices_.size() &&
           static_cast<double>(low_size_ * radices_[split_]) <= target) {
      low_size_ *= radices_[split_];
      ++split_;
    }
    if (split_ == 0)
      return;
    high_size_ = r.order() / low_size_;
    std::uint64_t w = 1;
    for (auto d : radices_) {
      weights_.push_back(w);
      w *= d;
    }
    low_step_ = steps(0, split_, low_size_);
    high_step_ = steps(split_, radices_.size(), high_size_);
    fast_ = true;
  }

  IdSet operator()(ElementId x) const {
    const Ring &r = ring_;
    IdSet ann(r.order());
    if (!fast_) {
      for (ElementId y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == r.zero())
          ann.insert(y);
      return ann;
    }
    std::vector<ElementId> unit_images(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i)
      unit_images[i] = r.mul(x, static_cast<ElementId>(weights_[i]));

    std::vector<std::pair<ElementId, ElementId>> low(low_size_);
    low[0] = {r.zero(), 0};
    std::vector<ElementId> value(low_size_);
    value[0] = r.zero();
    for (std::size_t l = 1; l < low_size_; ++l) {
      const auto [prev, digit] = low_step_[l];
      value[l] = r.add(value[prev], unit_images[digit]);
      low[l] = {value[l], static_cast<ElementId>(l)};
    }
    std::sort(low.begin(), low.end());

    std::vector<ElementId> high(high_size_);
    high[0] = r.zero();
    for (std::size_t h = 0; h < high_size_; ++h) {
      if (h != 0) {
        const auto [prev, digit] = high_step_[h];
        high[h] = r.add(high[prev], unit_images[split_ + digit]);
      }
      const ElementId target = r.neg(high[h]);
      auto it = std::lower_bound(low.begin(), low.end(),
                                 std::pair<ElementId, ElementId>{target, 0});
      for (; it != low.end() && it->first == target; ++it)
        ann.insert(h * low_size_ + it->second);
    }
    return ann;
  }

private:
  // For each index t in [1, size), (t - unit of its lowest non-zero digit,
  // that digit's position relative to `first`).
  std::vector<std::pair<std::size_t, std::size_t>>
  steps(std::size_t first, std::size_t last, std::size_t size) const {
    std::vector<std::pair<std::size_t, std::size_t>> out(size, {0, 0});
    for (std::size_t t = 1; t < size; ++t) {
      std::size_t rest = t, unit = 1;
      for (std::size_t i = first; i < last; ++i) {
        if (rest % radices_[i] != 0) {
          out[t] = {t - unit, i - first};
          break;
        }
        rest /= radices_[i];
        unit *= radices_[i];
      }
    }
    return out;
  }

  const Ring &ring_;
  std::vector<std::uint64_t> radices_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::pair<std::size_t, std::size_t>> low_step_, high_step_;
  std::size_t split_ = 0;
  std::size_t low_size_ = 1;
  std::size_t high_size_ = 1;
  bool fast_ = false;
};

/// Membership mask of Z(R) = {0} ∪ zero divisors. In a finite ring these
/// are exactly the non-units.
inline std::vector<bool> zero_divisor_mask(const Ring &r) {
  const std::size_t n = r.order();
  std::vector<bool> mask(n, false);
  mask[r.zero()] = true;
  if (!r.has_tables()) {
    const AnnihilatorScanner scan(r);
    for (ElementId x = 0; x < n; ++x)
      if (x != r.zero() && scan(x).count() > 1)
        mask[x] = true;
    return mask;
  }
  for (ElementId x = 0; x < n; ++x) {
    if (x == r.zero())
      continue;
    for (ElementId y = 0; y < n; ++y) {
      if (y != r.zero() && r.mul(x, y) == r.zero()) {
        mask[x] = true;
        break;
      }
    }
  }
  return mask;
}

/// Orders up to this size get the direct closure test in is_local().
inline constexpr std::size_t kLocalClosureLimit = 4096;

/// True iff the non-units form an ideal. Small rings test closure of Z(R)
/// under addition and multiplication directly; larger ones use the
/// equivalent condition that 1 + z is a unit for every non-unit z.
inline bool is_local(const Ring &r) {
  const auto mask = zero_divisor_mask(r);
  std::vector<ElementId> nonunits;
  for (ElementId x = 0; x < r.order(); ++x)
    if (mask[x])
      nonunits.push_back(x);
  if (r.order() > kLocalClosureLimit) {
    for (ElementId z : nonunits)
      if (mask[r.add(r.one(), z)])
        return false;
    return true;
  }
  for (ElementId a : nonunits) {
    for (ElementId b : nonunits)
      if (!mask[r.add(a, b)])
        return false;
    for (ElementId s = 0; s < r.order(); ++s)
      if (!mask[r.mul(a, s)])
        return false;
  }
  return true;
}

} // namespace zdclass
