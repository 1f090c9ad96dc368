#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gprs/galois.hpp"

namespace gprs {

/// Polynomial degree with a dedicated value for the zero polynomial that
/// orders below every integer. Never converts to -1.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(std::size_t d) : value_(d) {}

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const noexcept { return !value_.has_value(); }
  /// Requires a finite degree.
  std::size_t value() const {
    if (!value_) throw InvalidArgument("degree of the zero polynomial is -infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Degree& a, std::int64_t b) {
    return a.value_ && b >= 0 && *a.value_ == static_cast<std::size_t>(b);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, std::int64_t b) {
    if (!a.value_) return std::strong_ordering::less;
    if (b < 0) return std::strong_ordering::greater;
    return *a.value_ <=> static_cast<std::size_t>(b);
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  std::optional<std::size_t> value_;
};

/// Univariate polynomial over a Field. Coefficients are degree-ascending
/// encodings with no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}

  Polynomial(Field field, std::vector<Symbol> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Symbol c : coeffs_)
      if (!field_.contains(c)) throw InvalidArgument("polynomial coefficient outside the field");
    trim();
  }

  static Polynomial constant(const FieldElement& c) { return monomial(c, 0); }

  /// c * x^d
  static Polynomial monomial(const FieldElement& c, std::size_t d) {
    std::vector<Symbol> v(d + 1, 0);
    v[d] = c.value();
    return Polynomial(c.field(), std::move(v));
  }

  /// x - a
  static Polynomial linear_root(const FieldElement& a) {
    const Field& f = a.field();
    return Polynomial(f, {f.neg(a.value()), 1});
  }

  const Field& field() const noexcept { return field_; }
  std::span<const Symbol> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
  }

  /// c_i(f); zero past the degree.
  Symbol coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElement coefficient(std::size_t i) const { return field_.element(coeff(i)); }

  /// Horner evaluation on a raw encoding.
  Symbol eval(Symbol x) const noexcept {
    Symbol acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  FieldElement operator()(const FieldElement& x) const {
    check(x.field());
    return field_.element(eval(x.value()));
  }

  Polynomial scaled(Symbol c) const {
    std::vector<Symbol> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
    return Polynomial(field_, std::move(v));
  }
  Polynomial scaled(const FieldElement& c) const {
    check(c.field());
    return scaled(c.value());
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check(b.field_);
    std::vector<Symbol> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check(b.field_);
    std::vector<Symbol> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& f = a.field_;
    std::vector<Symbol> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(f, std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check(b.field_);
    return a.coeffs_ == b.coeffs_;
  }

  /// Quotient by (x - a); the remainder f(a) is discarded.
  Polynomial divided_by_linear(Symbol a) const {
    if (coeffs_.size() <= 1) return Polynomial(field_);
    std::vector<Symbol> quot(coeffs_.size() - 1, 0);
    Symbol carry = 0;
    for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
      carry = field_.add(coeffs_[i], field_.mul(carry, a));
      quot[i - 1] = carry;
    }
    return Polynomial(field_, std::move(quot));
  }

  /// "c0,c1,...,cd"; empty string for the zero polynomial.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coeffs_[i]);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  void check(const Field& other) const {
    if (!(field_ == other)) throw FieldMismatch();
  }

  Field field_;
  std::vector<Symbol> coeffs_;
};

/// Lagrange interpolant through (nodes[i], values[i]) by the product formula
/// sum_i v_i * prod_{j != i} (x - x_j) / (x_i - x_j).
inline Polynomial lagrange_interpolate(const Field& field, std::span<const Symbol> nodes,
                                       std::span<const Symbol> values) {
  if (nodes.size() != values.size()) throw InvalidArgument("interpolation nodes and values differ in length");
  if (nodes.empty()) throw InvalidArgument("interpolation needs at least one node");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!field.contains(nodes[i]) || !field.contains(values[i])) throw InvalidArgument("interpolation data outside the field");
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i] == nodes[j]) throw InvalidArgument("duplicate interpolation node " + std::to_string(nodes[i]));
  }

  // N(x) = prod_j (x - x_j); the i-th basis numerator is N(x) / (x - x_i).
  Polynomial full(field, {1});
  for (Symbol x : nodes) full = full * Polynomial(field, {field.neg(x), 1});

  std::vector<Symbol> acc(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (values[i] == 0) continue;
    Symbol denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != i) denom = field.mul(denom, field.sub(nodes[i], nodes[j]));
    const Symbol scale = field.div(values[i], denom);
    const Polynomial basis = full.divided_by_linear(nodes[i]);
    for (std::size_t d = 0; d < basis.coefficients().size(); ++d)
      acc[d] = field.add(acc[d], field.mul(scale, basis.coefficients()[d]));
  }
  return Polynomial(field, std::move(acc));
}

inline Polynomial lagrange_interpolate(std::span<const FieldElement> nodes, std::span<const FieldElement> values) {
  if (nodes.empty() || nodes.size() != values.size())
    throw InvalidArgument("interpolation needs equally many (at least one) nodes and values");
  const Field& field = nodes.front().field();
  std::vector<Symbol> xs, ys;
  for (const auto& n : nodes) {
    if (!(n.field() == field)) throw FieldMismatch();
    xs.push_back(n.value());
  }
  for (const auto& v : values) {
    if (!(v.field() == field)) throw FieldMismatch();
    ys.push_back(v.value());
  }
  return lagrange_interpolate(field, xs, ys);
}

/// (x - a)^m by square-and-multiply.
inline Polynomial expand_shifted_power(const FieldElement& a, std::uint64_t m) {
  const Field& field = a.field();
  Polynomial result(field, {1});
  Polynomial base = Polynomial::linear_root(a);
  for (; m != 0; m >>= 1) {
    if (m & 1u) result = result * base;
    if (m > 1) base = base * base;
  }
  return result;
}

}  // namespace gprs
