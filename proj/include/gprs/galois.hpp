#pragma once

// Arithmetic in GF(p^s).
//
// Elements are identified with their canonical encoding: the coefficient
// vector (c_0, ..., c_{s-1}) of the residue modulo the field's defining
// polynomial, read as the base-p integer sum c_i * p^i. The encoding is a
// bijection onto 0..q-1 and gives the total order used for evaluation sets,
// subset scans and witnesses throughout the library.
//
// A Field is a cheap, immutable handle over shared lookup tables. Hot loops
// work on raw encodings (Symbol) through the Field methods; FieldElement is
// the checked value type for everything else.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gprs/errors.hpp"
#include "gprs/number_theory.hpp"

namespace gprs {

using Symbol = std::uint32_t;

class FieldElement;

namespace detail {

/// Upper bound on q: tables are O(q) and subset scans are exponential anyway.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

// Polynomials over GF(p) as degree-ascending digit vectors, used only while
// building a field (irreducibility scan and table generation).
using DigitPoly = std::vector<std::uint32_t>;

inline void trim(DigitPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

/// Remainder of f modulo the monic-or-not nonzero g over GF(p).
inline DigitPoly poly_mod(DigitPoly f, const DigitPoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inverse_mod_prime(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

/// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const DigitPoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    DigitPoly g(d + 1, 0);
    g[d] = 1;
    const std::uint64_t count = saturating_pow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t q = 0;
  DigitPoly modulus;              // c_0..c_s, monic; empty for prime fields
  std::vector<std::uint32_t> pw;  // p^i, i < s
  std::vector<Symbol> exp;        // generator^i, i < 2(q-1)
  std::vector<std::uint32_t> log; // log[0] unused
  std::vector<Symbol> neg;
  std::vector<Symbol> add_table;  // q*q, only for small q
  Symbol generator = 1;

  Symbol add_digits(Symbol a, Symbol b) const {
    if (s == 1) {
      const std::uint32_t r = a + b;
      return r >= p ? r - p : r;
    }
    Symbol r = 0;
    for (std::uint32_t i = 0; i < s; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      std::uint32_t d = da + db;
      if (d >= p) d -= p;
      r += d * pw[i];
    }
    return r;
  }

  DigitPoly digits(Symbol a) const {
    DigitPoly d(s, 0);
    for (std::uint32_t i = 0; i < s; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }

  Symbol encode(const DigitPoly& d) const {
    Symbol r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) r += d[i] * pw[i];
    return r;
  }

  Symbol mul_slow(Symbol a, Symbol b) const {
    if (s == 1) return static_cast<Symbol>(std::uint64_t{a} * b % p);
    const DigitPoly da = digits(a), db = digits(b);
    DigitPoly prod(2 * s - 1, 0);
    for (std::uint32_t i = 0; i < s; ++i)
      for (std::uint32_t j = 0; j < s; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    return encode(poly_mod(std::move(prod), modulus, p));
  }

  std::uint64_t order_slow(Symbol a) const {
    std::uint64_t ord = 1;
    for (Symbol x = a; x != 1; x = mul_slow(x, a)) ++ord;
    return ord;
  }

  void build_tables() {
    pw.assign(s, 1);
    for (std::uint32_t i = 1; i < s; ++i) pw[i] = pw[i - 1] * p;

    generator = 1;
    if (q > 2) {
      for (Symbol g = 2; g < q; ++g) {
        if (order_slow(g) == q - 1) {
          generator = g;
          break;
        }
      }
    }
    exp.assign(2 * (q - 1), 0);
    log.assign(q, 0);
    Symbol x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      exp[i] = exp[i + q - 1] = x;
      log[x] = i;
      x = mul_slow(x, generator);
    }

    neg.assign(q, 0);
    for (Symbol a = 0; a < q; ++a) {
      DigitPoly d = digits(a);
      for (auto& c : d) c = (p - c) % p;
      neg[a] = encode(d);
    }

    if (q <= 256) {
      add_table.assign(std::size_t{q} * q, 0);
      for (Symbol a = 0; a < q; ++a)
        for (Symbol b = 0; b < q; ++b) add_table[std::size_t{a} * q + b] = add_digits(a, b);
    }
  }
};

}  // namespace detail

/// Descriptor and arithmetic for GF(p^s).
class Field {
 public:
  /// Builds GF(p^s). Without an explicit modulus the smallest monic
  /// irreducible of degree s is used, ordered by the base-p value of its
  /// lower coefficients (c_0 least significant). An explicit modulus lists
  /// c_0..c_s and must be monic, irreducible and of degree s.
  static Field create(std::uint64_t p, std::uint32_t s,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (s < 1) throw InvalidArgument("extension degree must be at least 1");
    const std::uint64_t q = saturating_pow(p, s);
    if (q > detail::kMaxFieldOrder)
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(s) + " exceeds supported size");

    auto data = std::make_shared<detail::FieldData>();
    data->p = static_cast<std::uint32_t>(p);
    data->s = s;
    data->q = static_cast<std::uint32_t>(q);

    if (modulus) {
      if (s == 1) throw InvalidArgument("a prime field takes no modulus");
      const auto& m = *modulus;
      if (m.size() != s + 1 || m.back() != 1)
        throw InvalidArgument("modulus must be monic of degree " + std::to_string(s));
      for (auto c : m)
        if (c >= p) throw InvalidArgument("modulus coefficient out of range 0.." + std::to_string(p - 1));
      if (!detail::is_irreducible(m, data->p)) throw InvalidArgument("modulus is reducible");
      data->modulus = m;
    } else if (s > 1) {
      detail::DigitPoly m(s + 1, 0);
      m[s] = 1;
      const std::uint64_t count = saturating_pow(p, s);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < s; ++i) {
          m[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        if (detail::is_irreducible(m, data->p)) {
          data->modulus = m;
          break;
        }
      }
    }
    data->build_tables();
    return Field(std::move(data));
  }

  /// Convenience for a field given by its order q = p^s.
  static Field of_order(std::uint64_t q) {
    const auto pp = decompose_prime_power(q);
    if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return create(pp->p, pp->s);
  }

  std::uint32_t characteristic() const noexcept { return data_->p; }
  std::uint32_t degree() const noexcept { return data_->s; }
  std::uint32_t order() const noexcept { return data_->q; }
  bool is_prime_field() const noexcept { return data_->s == 1; }
  bool is_odd_characteristic() const noexcept { return data_->p != 2; }
  /// c_0..c_s; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

  bool contains(Symbol a) const noexcept { return a < data_->q; }

  Symbol add(Symbol a, Symbol b) const noexcept {
    if (!data_->add_table.empty()) return data_->add_table[std::size_t{a} * data_->q + b];
    return data_->add_digits(a, b);
  }
  Symbol neg(Symbol a) const noexcept { return data_->neg[a]; }
  Symbol sub(Symbol a, Symbol b) const noexcept { return add(a, data_->neg[b]); }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return data_->exp[data_->log[a] + data_->log[b]];
  }
  Symbol inv(Symbol a) const {
    if (a == 0) throw DivisionByZero();
    return data_->exp[(data_->q - 1 - data_->log[a]) % (data_->q - 1)];
  }
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  /// Square-and-multiply; exponents are reduced mod q-1 for nonzero bases.
  Symbol pow(Symbol a, std::int64_t n) const {
    if (a == 0) {
      if (n < 0) throw DivisionByZero();
      return n == 0 ? 1 : 0;
    }
    const std::int64_t period = data_->q - 1;
    std::uint64_t e = static_cast<std::uint64_t>(((n % period) + period) % period);
    Symbol result = 1, base = a;
    for (; e != 0; e >>= 1) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  /// n * e, the image of an integer in the prime subfield.
  Symbol from_integer(std::int64_t n) const noexcept {
    const std::int64_t p = data_->p;
    return static_cast<Symbol>(((n % p) + p) % p);
  }

  /// Coefficient vector (c_0..c_{s-1}) of an encoding.
  std::vector<std::uint32_t> coefficients(Symbol a) const { return data_->digits(a); }

  Symbol from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != data_->s) throw InvalidArgument("coefficient vector length must equal extension degree");
    Symbol r = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] >= data_->p) throw InvalidArgument("coefficient out of range");
      r += coeffs[i] * data_->pw[i];
    }
    return r;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Symbol a) const {
    if (a == 0) throw InvalidArgument("zero has no multiplicative order");
    const std::uint64_t period = data_->q - 1;
    const std::uint64_t l = data_->log[a];
    std::uint64_t g = period, r = l;
    while (r != 0) {
      const std::uint64_t t = g % r;
      g = r;
      r = t;
    }
    return period / g;
  }

  FieldElement element(Symbol a) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// Smallest element (by encoding) of multiplicative order q-1. Requires q >= 3.
  FieldElement primitive_element() const;
  /// All elements in ascending encoding order, optionally without zero.
  std::vector<FieldElement> elements(bool nonzero_only = false) const;

  /// "p^s", or "p" for prime fields.
  std::string to_string() const {
    return data_->s == 1 ? std::to_string(data_->p) : std::to_string(data_->p) + "^" + std::to_string(data_->s);
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    if (a.data_ == b.data_) return true;
    return a.data_->p == b.data_->p && a.data_->s == b.data_->s && a.data_->modulus == b.data_->modulus;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

/// A checked element of a Field.
class FieldElement {
 public:
  FieldElement(Field field, Symbol value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_))
      throw InvalidArgument("encoding " + std::to_string(value_) + " outside GF(" + field_.to_string() + ")");
  }

  const Field& field() const noexcept { return field_; }
  Symbol value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(value_); }

  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inv() const { return {field_, field_.inv(value_)}; }
  FieldElement pow(std::int64_t n) const { return {field_, field_.pow(value_, n)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

 private:
  static void same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
  }

  Field field_;
  Symbol value_;
};

inline FieldElement Field::element(Symbol a) const { return {*this, a}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

inline FieldElement Field::primitive_element() const {
  if (data_->q < 3) throw InvalidArgument("primitive element requires q >= 3");
  return {*this, data_->generator};
}

inline std::vector<FieldElement> Field::elements(bool nonzero_only) const {
  std::vector<FieldElement> out;
  out.reserve(data_->q);
  for (Symbol a = nonzero_only ? 1 : 0; a < data_->q; ++a) out.emplace_back(*this, a);
  return out;
}

}  // namespace gprs
