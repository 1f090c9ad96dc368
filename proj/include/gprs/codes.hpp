#pragma once

// Generalized projective Reed-Solomon codes GPRS_q(D, k), where D is F_q
// minus the excluded points, together with the plain GRS codes used for the
// Li-Wan distance bounds. Codewords are (f(y_1), ..., f(y_n), c_{k-1}(f)) for
// deg f <= k-1; D is kept in ascending encoding order.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gprs/combinations.hpp"
#include "gprs/matrix.hpp"
#include "gprs/polynomial.hpp"

namespace gprs {

/// Cap on codewords visited by one exhaustive distance computation.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;
/// Cap on (word, codeword) pairs visited by the covering-radius brute force.
inline constexpr std::uint64_t kDefaultCoveringBudget = 100'000'000;

enum class Mode { formula, bruteforce };

enum class DistanceMethod {
  exhaustive,       ///< scan all q^k codewords
  information_set,  ///< re-encode from every k-subset of coordinates (exact for MDS codes)
  automatic,        ///< whichever of the two exact methods is cheaper
};

/// A word of a code's ambient space F_q^length.
class ReceivedWord {
 public:
  ReceivedWord(Field field, std::vector<Symbol> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    for (Symbol c : coords_)
      if (!field_.contains(c)) throw InvalidArgument("word coordinate outside the field");
  }

  const Field& field() const noexcept { return field_; }
  std::span<const Symbol> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Symbol operator[](std::size_t i) const noexcept { return coords_[i]; }

  friend ReceivedWord operator+(const ReceivedWord& a, const ReceivedWord& b) {
    a.check(b);
    std::vector<Symbol> v(a.coords_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coords_[i], b.coords_[i]);
    return {a.field_, std::move(v)};
  }

  ReceivedWord scaled(Symbol lambda) const {
    std::vector<Symbol> v(coords_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coords_[i], lambda);
    return {field_, std::move(v)};
  }

  friend bool operator==(const ReceivedWord& a, const ReceivedWord& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

  /// Comma-separated canonical encodings.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coords_[i]);
    }
    return out;
  }

 private:
  void check(const ReceivedWord& other) const {
    if (!(field_ == other.field_)) throw FieldMismatch();
    if (coords_.size() != other.coords_.size()) throw InvalidArgument("word lengths differ");
  }

  Field field_;
  std::vector<Symbol> coords_;
};

inline std::size_t hamming_distance(std::span<const Symbol> u, std::span<const Symbol> v) {
  if (u.size() != v.size()) throw InvalidArgument("Hamming distance of words with different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

inline std::size_t hamming_distance(const ReceivedWord& u, const ReceivedWord& v) {
  if (!(u.field() == v.field())) throw FieldMismatch();
  return hamming_distance(u.coords(), v.coords());
}

/// Visits every codeword m * G (m ranging over F_q^k) exactly once, starting
/// with zero. Codewords are reached by an odometer over the F_p-basis
/// {p^t * row_i}, so each step costs one vector addition. The visitor returns
/// false to stop.
template <typename Visitor>
void for_each_codeword(const Matrix& g, Visitor&& visit) {
  const Field& f = g.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t len = g.cols();

  std::vector<std::vector<Symbol>> basis;
  Symbol unit = 1;
  std::vector<Symbol> scalars;
  for (std::uint32_t t = 0; t < f.degree(); ++t, unit *= p) scalars.push_back(unit);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (Symbol a : scalars) {
      std::vector<Symbol> v(len);
      for (std::size_t c = 0; c < len; ++c) v[c] = f.mul(a, g(r, c));
      basis.push_back(std::move(v));
    }
  }

  std::vector<Symbol> cw(len, 0);
  std::vector<std::uint32_t> digits(basis.size(), 0);
  if (!visit(static_cast<const std::vector<Symbol>&>(cw))) return;
  while (true) {
    std::size_t j = 0;
    for (; j < basis.size(); ++j) {
      for (std::size_t c = 0; c < len; ++c) cw[c] = f.add(cw[c], basis[j][c]);
      if (++digits[j] < p) break;
      digits[j] = 0;  // p additions returned cw to its previous value; carry
    }
    if (j == basis.size()) return;
    if (!visit(static_cast<const std::vector<Symbol>&>(cw))) return;
  }
}

namespace detail {

inline std::uint64_t exhaustive_cost(std::uint64_t q, std::size_t k) { return saturating_pow(q, k); }

/// Minimum distance from u to the row space of g by scanning all codewords.
inline std::size_t exhaustive_distance(const Matrix& g, std::span<const Symbol> u, std::uint64_t budget) {
  const std::uint64_t cost = exhaustive_cost(g.field().order(), g.rows());
  if (cost > budget)
    throw BudgetExceeded("exhaustive distance needs " + std::to_string(cost) + " codewords; budget is " +
                         std::to_string(budget));
  std::size_t best = u.size();
  for_each_codeword(g, [&](const std::vector<Symbol>& cw) {
    best = std::min(best, hamming_distance(u, cw));
    return best != 0;
  });
  return best;
}

/// Distance from u to the row space of an MDS generator g: every codeword that
/// agrees with u somewhere on k coordinates is the re-encoding of those k
/// coordinates, and some codeword agrees with u on at least k of them.
inline std::size_t information_set_distance(const Matrix& g, std::span<const Symbol> u, std::uint64_t budget) {
  const std::size_t k = g.rows(), len = g.cols();
  const std::uint64_t cost = saturating_binomial(len, k);
  if (cost > budget)
    throw BudgetExceeded("information-set distance needs " + std::to_string(cost) + " subsets; budget is " +
                         std::to_string(budget));
  const Field& f = g.field();
  std::size_t best_agree = 0;
  std::vector<Symbol> rhs(k), cw(len);
  for_each_combination(len, k, [&](const std::vector<std::size_t>& cols) {
    for (std::size_t i = 0; i < k; ++i) rhs[i] = u[cols[i]];
    const auto msg = solve_left(g.select_columns(cols), rhs);
    if (!msg) return true;
    std::size_t agree = 0;
    for (std::size_t c = 0; c < len; ++c) {
      Symbol acc = 0;
      for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul((*msg)[r], g(r, c)));
      agree += acc == u[c];
    }
    best_agree = std::max(best_agree, agree);
    return best_agree != len;
  });
  return len - best_agree;
}

inline std::size_t distance_by(const Matrix& g, std::span<const Symbol> u, DistanceMethod method,
                               std::uint64_t budget) {
  if (method == DistanceMethod::automatic) {
    const std::uint64_t k = g.rows(), len = g.cols();
    const std::uint64_t ex = saturating_mul(exhaustive_cost(g.field().order(), g.rows()), len);
    const std::uint64_t is = saturating_mul(saturating_binomial(len, k), k * k * k + k * len);
    method = ex <= is ? DistanceMethod::exhaustive : DistanceMethod::information_set;
    if (method == DistanceMethod::exhaustive && exhaustive_cost(g.field().order(), g.rows()) > budget)
      method = DistanceMethod::information_set;
  }
  return method == DistanceMethod::exhaustive ? exhaustive_distance(g, u, budget)
                                              : information_set_distance(g, u, budget);
}

}  // namespace detail

/// GPRS_q(D, k) with D = F_q minus `excluded`.
class GprsCode {
 public:
  /// Requires q >= 4, a nonempty duplicate-free exclusion set, and
  /// 2 <= k <= q - l - 1.
  static GprsCode create(const Field& field, std::vector<Symbol> excluded, std::size_t k) {
    const std::uint32_t q = field.order();
    if (q < 4) throw InvalidArgument("GPRS codes need q >= 4");
    if (excluded.empty()) throw InvalidArgument("exclusion set must be nonempty (D must be a proper subset of F_q)");
    std::sort(excluded.begin(), excluded.end());
    for (std::size_t i = 0; i < excluded.size(); ++i) {
      if (!field.contains(excluded[i])) throw InvalidArgument("excluded point outside the field");
      if (i && excluded[i] == excluded[i - 1])
        throw InvalidArgument("duplicate excluded point " + std::to_string(excluded[i]));
    }
    const std::size_t l = excluded.size();
    if (l + 1 >= q) throw InvalidArgument("too many excluded points for any valid dimension");
    if (k < 2 || k > q - l - 1)
      throw InvalidArgument("dimension k=" + std::to_string(k) + " outside 2.." + std::to_string(q - l - 1));
    return GprsCode(field, std::move(excluded), k);
  }

  static GprsCode create(const Field& field, const std::vector<FieldElement>& excluded, std::size_t k) {
    std::vector<Symbol> raw;
    for (const auto& e : excluded) {
      if (!(e.field() == field)) throw FieldMismatch();
      raw.push_back(e.value());
    }
    return create(field, std::move(raw), k);
  }

  const Field& field() const noexcept { return field_; }
  std::span<const Symbol> excluded() const noexcept { return excluded_; }
  std::span<const Symbol> evaluation_set() const noexcept { return domain_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return domain_.size(); }
  std::size_t length() const noexcept { return domain_.size() + 1; }
  std::size_t excluded_count() const noexcept { return excluded_.size(); }
  const Matrix& generator() const noexcept { return generator_; }

  bool is_excluded(Symbol a) const noexcept { return std::binary_search(excluded_.begin(), excluded_.end(), a); }
  /// D = F_q^*, i.e. the primitive projective code PPRS_q.
  bool is_primitive_projective() const noexcept { return excluded_.size() == 1 && excluded_[0] == 0; }

  /// "q=<p^s>;exclude=<e1,...>;k=<k>"
  std::string to_string() const {
    std::string out = "q=" + field_.to_string() + ";exclude=";
    for (std::size_t i = 0; i < excluded_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(excluded_[i]);
    }
    return out + ";k=" + std::to_string(k_);
  }

 private:
  GprsCode(Field field, std::vector<Symbol> excluded, std::size_t k)
      : field_(std::move(field)), excluded_(std::move(excluded)), k_(k), generator_(field_, k, 1) {
    for (Symbol a = 0; a < field_.order(); ++a)
      if (!std::binary_search(excluded_.begin(), excluded_.end(), a)) domain_.push_back(a);
    Matrix g(field_, k_, domain_.size() + 1);
    for (std::size_t c = 0; c < domain_.size(); ++c) {
      Symbol v = 1;
      for (std::size_t r = 0; r < k_; ++r) {
        g(r, c) = v;
        v = field_.mul(v, domain_[c]);
      }
    }
    g(k_ - 1, domain_.size()) = 1;
    generator_ = std::move(g);
  }

  Field field_;
  std::vector<Symbol> excluded_;
  std::vector<Symbol> domain_;
  std::size_t k_;
  Matrix generator_;
};

namespace detail {

inline void check_word(const GprsCode& code, const ReceivedWord& u) {
  if (!(u.field() == code.field())) throw FieldMismatch();
  if (u.size() != code.length())
    throw InvalidArgument("word length " + std::to_string(u.size()) + " differs from code length " +
                          std::to_string(code.length()));
}

inline ReceivedWord evaluate_projective(const GprsCode& code, const Polynomial& f) {
  if (!(f.field() == code.field())) throw FieldMismatch();
  std::vector<Symbol> coords;
  coords.reserve(code.length());
  for (Symbol y : code.evaluation_set()) coords.push_back(f.eval(y));
  coords.push_back(f.coeff(code.k() - 1));
  return {code.field(), std::move(coords)};
}

}  // namespace detail

/// (f(D), c_{k-1}(f)) for deg f <= k-1.
inline ReceivedWord encode(const GprsCode& code, const Polynomial& f) {
  if (f.degree() >= static_cast<std::int64_t>(code.k()))
    throw InvalidArgument("message polynomial degree " + f.degree().to_string() + " must be below k=" +
                          std::to_string(code.k()));
  return detail::evaluate_projective(code, f);
}

/// (u(D), c_{k-1}(u)) for any u with deg u <= q-2.
inline ReceivedWord word_from_poly(const GprsCode& code, const Polynomial& u) {
  if (u.degree() >= static_cast<std::int64_t>(code.field().order()) - 1)
    throw InvalidArgument("polynomial degree must be at most q-2");
  return detail::evaluate_projective(code, u);
}

/// Lagrange interpolant of the first n coordinates of u over D.
inline Polynomial interpolant(const GprsCode& code, const ReceivedWord& u) {
  detail::check_word(code, u);
  return lagrange_interpolate(code.field(), code.evaluation_set(), u.coords().first(code.n()));
}

/// Membership: interpolant degree at most k-1 and its c_{k-1} equal to the last coordinate.
inline bool is_codeword(const GprsCode& code, const ReceivedWord& u) {
  const Polynomial f = interpolant(code, u);
  return f.degree() <= static_cast<std::int64_t>(code.k()) - 1 && f.coeff(code.k() - 1) == u[code.n()];
}

/// Exact error distance d(u, C) by scanning all q^k codewords.
inline std::size_t error_distance(const GprsCode& code, const ReceivedWord& u,
                                  std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::check_word(code, u);
  return detail::exhaustive_distance(code.generator(), u.coords(), budget);
}

/// Exact error distance with an explicit method. The budget caps codewords
/// (exhaustive) or coordinate subsets (information set).
inline std::size_t error_distance(const GprsCode& code, const ReceivedWord& u, DistanceMethod method,
                                  std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::check_word(code, u);
  return detail::distance_by(code.generator(), u.coords(), method, budget);
}

inline std::size_t minimum_distance(const GprsCode& code, Mode mode,
                                    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (mode == Mode::formula) return code.length() - code.k() + 1;
  const std::uint64_t cost = detail::exhaustive_cost(code.field().order(), code.k());
  if (cost > budget)
    throw BudgetExceeded("minimum distance brute force needs " + std::to_string(cost) + " codewords");
  std::size_t best = code.length();
  bool first = true;
  for_each_codeword(code.generator(), [&](const std::vector<Symbol>& cw) {
    if (first) {  // zero codeword
      first = false;
      return true;
    }
    std::size_t w = 0;
    for (Symbol c : cw) w += c != 0;
    best = std::min(best, w);
    return true;
  });
  return best;
}

/// Covering radius. Brute force maximizes the exhaustive error distance over
/// all q^(n+1) words; its budget caps q^(n+1) * q^k.
inline std::size_t covering_radius(const GprsCode& code, Mode mode, std::uint64_t budget = kDefaultCoveringBudget) {
  if (mode == Mode::formula) return code.length() - code.k();
  const std::uint64_t q = code.field().order();
  const std::size_t len = code.length();
  const std::uint64_t cost = saturating_mul(saturating_pow(q, len), saturating_pow(q, code.k()));
  if (cost > budget)
    throw BudgetExceeded("covering radius brute force needs " + std::to_string(cost) + " distance evaluations");

  std::vector<Symbol> codewords;
  for_each_codeword(code.generator(), [&](const std::vector<Symbol>& cw) {
    codewords.insert(codewords.end(), cw.begin(), cw.end());
    return true;
  });
  const std::size_t count = codewords.size() / len;

  std::vector<Symbol> word(len, 0);
  std::size_t radius = 0;
  while (true) {
    std::size_t best = len;
    for (std::size_t c = 0; c < count && best > radius; ++c) {
      const Symbol* cw = codewords.data() + c * len;
      std::size_t d = 0;
      for (std::size_t i = 0; i < len; ++i) d += word[i] != cw[i];
      best = std::min(best, d);
    }
    radius = std::max(radius, best);
    std::size_t i = 0;
    while (i < len && ++word[i] == q) word[i++] = 0;
    if (i == len) break;
  }
  return radius;
}

/// GRS_q(D, k): (f(x_1), ..., f(x_n)) for deg f <= k-1, no projective coordinate.
class GrsCode {
 public:
  /// Requires distinct points and 1 <= k < n.
  static GrsCode create(const Field& field, std::vector<Symbol> points, std::size_t k) {
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!field.contains(points[i])) throw InvalidArgument("evaluation point outside the field");
      if (i && points[i] == points[i - 1]) throw InvalidArgument("duplicate evaluation point");
    }
    if (k < 1 || k >= points.size()) throw InvalidArgument("GRS dimension must satisfy 1 <= k < n");
    return GrsCode(field, std::move(points), k);
  }

  const Field& field() const noexcept { return field_; }
  std::span<const Symbol> evaluation_set() const noexcept { return points_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return points_.size(); }
  const Matrix& generator() const noexcept { return generator_; }

 private:
  GrsCode(Field field, std::vector<Symbol> points, std::size_t k)
      : field_(std::move(field)), points_(std::move(points)), k_(k), generator_(field_, k, points_.size()) {
    for (std::size_t c = 0; c < points_.size(); ++c) {
      Symbol v = 1;
      for (std::size_t r = 0; r < k_; ++r) {
        generator_(r, c) = v;
        v = field_.mul(v, points_[c]);
      }
    }
  }

  Field field_;
  std::vector<Symbol> points_;
  std::size_t k_;
  Matrix generator_;
};

/// Exact d(u, GRS_q(D, k)) by scanning all q^k codewords.
inline std::size_t grs_error_distance(const GrsCode& code, const ReceivedWord& u,
                                      std::uint64_t budget = kDefaultEnumerationBudget) {
  if (!(u.field() == code.field())) throw FieldMismatch();
  if (u.size() != code.n()) throw InvalidArgument("word length differs from GRS code length");
  return detail::exhaustive_distance(code.generator(), u.coords(), budget);
}

}  // namespace gprs
