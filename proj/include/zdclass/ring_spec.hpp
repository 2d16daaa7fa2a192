#pragma once

#include "zdclass/error.hpp"
#include "zdclass/quotient.hpp"
#include "zdclass/ring.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zdclass {

struct RingSpec;

struct ZmodSpec {
  std::uint64_t modulus = 2;
  friend bool operator==(const ZmodSpec &, const ZmodSpec &) = default;
};

struct ProductSpec {
  std::vector<RingSpec> parts;
  friend bool operator==(const ProductSpec &, const ProductSpec &);
};

/// Text form:
///   spec  := 'Z' int
///          | 'product(' spec (',' spec)* ')'
///          | 'quot(Z' int ';' var (',' var)* ';' poly (',' poly)* ')' trunc*
///   trunc := 'trunc(' var ',' int ')'
struct RingSpec {
  std::variant<ZmodSpec, ProductSpec, QuotientSpec> node;

  friend bool operator==(const RingSpec &a, const RingSpec &b) {
    return a.node == b.node;
  }
};

inline bool operator==(const ProductSpec &a, const ProductSpec &b) {
  return a.parts == b.parts;
}

inline std::string render(const RingSpec &spec) {
  if (const auto *z = std::get_if<ZmodSpec>(&spec.node))
    return "Z" + std::to_string(z->modulus);
  if (const auto *p = std::get_if<ProductSpec>(&spec.node)) {
    std::string out = "product(";
    for (std::size_t i = 0; i < p->parts.size(); ++i)
      out += (i ? "," : "") + render(p->parts[i]);
    return out + ")";
  }
  return std::get<QuotientSpec>(spec.node).to_string();
}

namespace detail {

class RingSpecParser {
public:
  explicit RingSpecParser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    RingSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, "trailing input");
    return spec;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!try_consume(token))
      throw ParseError(pos_, "expected '" + std::string(token) + "'");
  }

  std::uint64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40))
        throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError(pos_, "expected an integer");
    return v;
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start ||
        std::isdigit(static_cast<unsigned char>(text_[start])))
      throw ParseError(start, "expected a variable name");
    return std::string(text_.substr(start, pos_ - start));
  }

  RingSpec parse_spec() {
    skip_ws();
    const std::size_t start = pos_;
    if (try_consume("product(")) {
      ProductSpec product;
      product.parts.push_back(parse_spec());
      while (try_consume(","))
        product.parts.push_back(parse_spec());
      expect(")");
      return RingSpec{std::move(product)};
    }
    if (try_consume("quot(")) {
      expect("Z");
      return RingSpec{parse_quotient(start)};
    }
    if (try_consume("Z")) {
      const std::size_t at = pos_;
      const std::uint64_t n = parse_int();
      if (n < 2)
        throw Error(ErrorKind::invalid_spec,
                    "modulus must be at least 2 (position " +
                        std::to_string(at) + ")");
      return RingSpec{ZmodSpec{n}};
    }
    throw ParseError(pos_, "expected 'Z', 'product(' or 'quot('");
  }

  QuotientSpec parse_quotient(std::size_t start) {
    const std::size_t at = pos_;
    const std::uint64_t m = parse_int();
    if (m < 2)
      throw Error(ErrorKind::invalid_spec,
                  "coefficient modulus must be at least 2 (position " +
                      std::to_string(at) + ")");
    expect(";");
    std::vector<std::string> vars{parse_ident()};
    while (try_consume(","))
      vars.push_back(parse_ident());
    expect(";");

    QuotientSpec spec;
    spec.modulus = m;
    spec.vars = vars;
    while (true) {
      skip_ws();
      const std::size_t poly_start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')')
        ++pos_;
      const auto poly_text = text_.substr(poly_start, pos_ - poly_start);
      try {
        spec.relations.push_back(parse_poly(poly_text, spec.vars, m));
      } catch (const ParseError &e) {
        throw ParseError(poly_start + e.position(),
                         "in relation '" + std::string(poly_text) + "'");
      }
      if (try_consume(","))
        continue;
      expect(")");
      break;
    }
    try {
      check_quotient_spec(spec);
    } catch (const Error &e) {
      throw Error(e.kind(), std::string(e.what()) + " (spec at position " +
                                std::to_string(start) + ")");
    }
    while (try_consume("trunc(")) {
      const std::string var = parse_ident();
      expect(",");
      const std::uint64_t n = parse_int();
      expect(")");
      spec = truncate(std::move(spec), var, static_cast<std::uint32_t>(n));
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline RingSpec parse_ring_spec(std::string_view text) {
  return detail::RingSpecParser(text).parse();
}

struct BuildOptions {
  std::size_t element_cap = std::size_t{1} << 20;
  std::size_t basis_cap = 4096;
  QuotientOptions quotient;
};

/// Constructs the ring described by `spec`; its name is render(spec).
inline Ring build_ring(const RingSpec &spec, const BuildOptions &options = {}) {
  if (const auto *z = std::get_if<ZmodSpec>(&spec.node)) {
    if (z->modulus > options.element_cap)
      throw Error(ErrorKind::cap_exceeded,
                  "Z" + std::to_string(z->modulus) + " exceeds the element cap");
    return mod_ring(static_cast<std::int64_t>(z->modulus), options.quotient.ring);
  }
  if (const auto *p = std::get_if<ProductSpec>(&spec.node)) {
    std::vector<Ring> parts;
    for (const auto &part : p->parts)
      parts.push_back(build_ring(part, options));
    return product_ring(parts, options.element_cap, options.quotient.ring);
  }
  QuotientSpec q = std::get<QuotientSpec>(spec.node);
  q.element_cap = options.element_cap;
  q.basis_cap = options.basis_cap;
  return quotient_ring(q, options.quotient);
}

inline Ring build_ring(std::string_view text, const BuildOptions &options = {}) {
  return build_ring(parse_ring_spec(text), options);
}

} // namespace zdclass
