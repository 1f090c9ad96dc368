#pragma once

// Deep-hole tests for GPRS_q(D, k).
//
// A word u is a deep hole when d(u, C) equals the covering radius
// q - l + 1 - k. Four independent routes decide this:
//   oracle         exact error distance compared with the radius
//   mds_extension  [G; u] generates an MDS code (all (k+1)-minors nonzero)
//   thm14          words with deg u(x) = k: no k-subset of D sums to zero
//   thm15          words lambda (x - a_j)^{q-2} + nu x^{k-1} + f_{<=k-2}:
//                  C(q-2, k-1) a_j^{q-1-k} prod_{y in I} (y - a_j) + e != 0
//                  for every k-subset I of D
// Criterion routes only run inside their hypotheses (odd characteristic,
// parameter ranges) and report the lexicographically first violating subset
// as a witness.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gprs/codes.hpp"
#include "gprs/combinations.hpp"
#include "gprs/matrix.hpp"
#include "gprs/number_theory.hpp"
#include "gprs/polynomial.hpp"

namespace gprs {

enum class Method { oracle, mds_extension, thm14, thm15 };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::mds_extension: return "mds_extension";
    case Method::thm14: return "thm14";
    case Method::thm15: return "thm15";
  }
  return "unknown";
}

struct Witness {
  enum class Kind {
    subset,   ///< element encodings of a k-subset I of D, ascending
    columns,  ///< column indices of a singular (k+1)-minor, ascending
  };
  Kind kind = Kind::subset;
  std::vector<std::uint32_t> values;
};

struct DeepHoleVerdict {
  bool is_deep_hole = false;
  Method method = Method::oracle;
  std::optional<Witness> witness;
  /// Oracle only: the exact error distance and the radius it was compared to.
  std::optional<std::size_t> distance;
  std::optional<std::size_t> covering_radius;
};

/// Witness as sorted comma-separated text. Column witnesses are labelled by
/// the D element of each column and "inf" for the projective coordinate.
inline std::string witness_to_string(const GprsCode& code, const Witness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (i) out += ',';
    if (w.kind == Witness::Kind::subset)
      out += std::to_string(w.values[i]);
    else if (w.values[i] == code.n())
      out += "inf";
    else
      out += std::to_string(code.evaluation_set()[w.values[i]]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binomial coefficients modulo p

namespace detail {

inline std::uint64_t small_binomial_mod(std::uint64_t m, std::uint64_t r, std::uint64_t p) {
  if (r > m) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    num = num * ((m - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a product of integers below p, hence invertible.
  std::uint64_t inv = 1, b = den, e = p - 2;
  for (; e != 0; e >>= 1) {
    if (e & 1u) inv = inv * b % p;
    b = b * b % p;
  }
  return num * inv % p;
}

}  // namespace detail

/// C(m, r) mod p as an element of the prime subfield, by Lucas' digit product.
inline FieldElement binom_mod_p(std::uint64_t m, std::uint64_t r, const Field& field) {
  if (r > m) throw InvalidArgument("binomial C(m, r) needs 0 <= r <= m");
  const std::uint64_t p = field.characteristic();
  std::uint64_t acc = 1;
  while ((m != 0 || r != 0) && acc != 0) {
    acc = acc * detail::small_binomial_mod(m % p, r % p, p) % p;
    m /= p;
    r /= p;
  }
  return field.element(field.from_integer(static_cast<std::int64_t>(acc)));
}

/// v_p(C(q-2, t-1)) for q a power of the odd prime p and 2 <= t <= q-1,
/// evaluated through the identity v_p(C(q-2, t-1)) = v_p(t).
inline unsigned vp_binomial(std::uint64_t q, std::uint64_t t) {
  const auto pp = decompose_prime_power(q);
  if (!pp || pp->p == 2) throw InvalidArgument(std::to_string(q) + " is not a power of an odd prime");
  if (t < 2 || t > q - 1) throw InvalidArgument("t must satisfy 2 <= t <= q-1");
  return p_adic_valuation(t, pp->p);
}

// ---------------------------------------------------------------------------
// Zero-sum subsets of F_q^*

/// A k-subset of F_q^* summing to zero, built constructively: F_q^* splits
/// into pairs {z, -z} (scanned in encoding order, z the smaller encoding).
/// Even k takes the first k/2 pairs. Odd k starts from a zero-sum triple in
/// three distinct pairs and fills up with whole pairs:
///   p = 3:  z' = e, z'' the first element outside {0, +-z'}, -(z' + z'')
///   p = 5:  z' = e, z'' the first element outside {0, +-z', +-2z'}, -(z' + z'')
///   p >= 7: e, 2e, -3e
/// Requires odd p and 2 <= k <= q-3. The result is sorted by encoding.
inline std::vector<FieldElement> zero_sum_subset(const Field& field, std::size_t k) {
  if (!field.is_odd_characteristic()) throw HypothesisViolation("zero-sum construction needs odd characteristic");
  const std::uint32_t q = field.order();
  if (k < 2 || k + 3 > q) throw HypothesisViolation("zero-sum construction needs 2 <= k <= q-3");

  std::vector<Symbol> chosen;
  std::vector<bool> blocked(q, false);  // pairs already consumed, indexed by element
  blocked[0] = true;

  if (k % 2 == 1) {
    const std::uint32_t p = field.characteristic();
    const Symbol e = 1;
    Symbol a = 0, b = 0, c = 0;
    if (p == 3 || p == 5) {
      std::vector<bool> avoid(q, false);
      avoid[0] = true;
      const std::int64_t multiples = p == 3 ? 1 : 2;
      for (std::int64_t m = 1; m <= multiples; ++m) {
        const Symbol me = field.mul(field.from_integer(m), e);
        avoid[me] = avoid[field.neg(me)] = true;
      }
      a = e;
      b = 1;
      while (avoid[b]) ++b;
      c = field.neg(field.add(a, b));
    } else {
      a = e;
      b = field.from_integer(2);
      c = field.neg(field.from_integer(3));
    }
    for (Symbol t : {a, b, c}) {
      chosen.push_back(t);
      blocked[t] = blocked[field.neg(t)] = true;
    }
  }

  for (Symbol z = 1; z < q && chosen.size() < k; ++z) {
    if (blocked[z]) continue;
    blocked[z] = blocked[field.neg(z)] = true;
    chosen.push_back(z);
    chosen.push_back(field.neg(z));
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<FieldElement> out;
  for (Symbol z : chosen) out.push_back(field.element(z));
  return out;
}

// ---------------------------------------------------------------------------
// Criterion expressions and witness validators

namespace detail {

inline bool is_k_subset_of_domain(const GprsCode& code, std::span<const Symbol> subset) {
  if (subset.size() != code.k()) return false;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (!code.field().contains(subset[i]) || code.is_excluded(subset[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (subset[i] == subset[j]) return false;
  }
  return true;
}

/// C(q-2, k-1) * a_j^{q-1-k}
inline Symbol thm15_coefficient(const GprsCode& code, Symbol a_j) {
  const Field& f = code.field();
  const std::uint64_t q = f.order(), k = code.k();
  const Symbol binom = binom_mod_p(q - 2, k - 1, f).value();
  return f.mul(binom, f.pow(a_j, static_cast<std::int64_t>(q - 1 - k)));
}

inline Symbol thm15_expression(const GprsCode& code, Symbol a_j, Symbol coefficient, std::span<const Symbol> subset) {
  const Field& f = code.field();
  Symbol prod = 1;
  for (Symbol y : subset) prod = f.mul(prod, f.sub(y, a_j));
  return f.add(f.mul(coefficient, prod), 1);
}

inline void require_odd(const Field& f) {
  if (!f.is_odd_characteristic()) throw HypothesisViolation("criterion requires odd characteristic");
}

}  // namespace detail

/// Sum of I is zero, I a k-subset of D.
inline bool validate_thm14_witness(const GprsCode& code, std::span<const Symbol> subset) {
  if (!detail::is_k_subset_of_domain(code, subset)) return false;
  Symbol sum = 0;
  for (Symbol y : subset) sum = code.field().add(sum, y);
  return sum == 0;
}

/// C(q-2,k-1) a_j^{q-1-k} prod_{y in I}(y - a_j) + e = 0, I a k-subset of D.
inline bool validate_thm15_witness(const GprsCode& code, Symbol a_j, std::span<const Symbol> subset) {
  if (!detail::is_k_subset_of_domain(code, subset) || !code.is_excluded(a_j)) return false;
  return detail::thm15_expression(code, a_j, detail::thm15_coefficient(code, a_j), subset) == 0;
}

/// [G; u] with the word appended as row k+1.
inline Matrix extended_generator(const GprsCode& code, const ReceivedWord& u) {
  detail::check_word(code, u);
  return code.generator().with_row(u.coords());
}

/// The columns index a singular (k+1)-minor of [G; u].
inline bool validate_mds_witness(const GprsCode& code, const ReceivedWord& u, std::span<const std::uint32_t> columns) {
  if (columns.size() != code.k() + 1) return false;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] >= code.length() || (i && columns[i] <= columns[i - 1])) return false;
    cols.push_back(columns[i]);
  }
  return minor_determinant(extended_generator(code, u), cols) == 0;
}

// ---------------------------------------------------------------------------
// Deep-hole routes

struct OracleOptions {
  DistanceMethod method = DistanceMethod::automatic;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Ground truth: exact error distance against the covering radius. Codewords
/// are reported as non-deep-holes with distance 0.
inline DeepHoleVerdict is_deep_hole_oracle(const GprsCode& code, const ReceivedWord& u, OracleOptions options = {}) {
  DeepHoleVerdict v;
  v.method = Method::oracle;
  v.covering_radius = covering_radius(code, Mode::formula);
  v.distance = is_codeword(code, u) ? 0 : error_distance(code, u, options.method, options.budget);
  v.is_deep_hole = *v.distance == *v.covering_radius;
  return v;
}

/// Deep hole iff [G; u] is the generator of an MDS code. u must not be a codeword.
inline DeepHoleVerdict is_deep_hole_mds_extension(const GprsCode& code, const ReceivedWord& u) {
  if (is_codeword(code, u)) throw InvalidArgument("word is a codeword; the MDS-extension test needs u outside the code");
  const MdsCheck check = mds_generator_check(extended_generator(code, u), code.k() + 1);
  DeepHoleVerdict v;
  v.method = Method::mds_extension;
  v.is_deep_hole = check.is_mds;
  if (check.singular_columns) {
    Witness w{Witness::Kind::columns, {}};
    for (std::size_t c : *check.singular_columns) w.values.push_back(static_cast<std::uint32_t>(c));
    v.witness = std::move(w);
  }
  return v;
}

/// Verdict shared by every word (u(D), c_{k-1}(u)) with deg u = k.
/// Hypotheses: odd p, q >= 5, 2 <= k <= min(q-3, q-l-1).
inline DeepHoleVerdict thm14_criterion(const GprsCode& code) {
  const Field& f = code.field();
  detail::require_odd(f);
  const std::size_t q = f.order(), l = code.excluded_count(), k = code.k();
  if (q < 5) throw HypothesisViolation("degree-k criterion needs q >= 5");
  if (k < 2 || k > std::min(q - 3, q - l - 1)) throw HypothesisViolation("degree-k criterion needs 2 <= k <= min(q-3, q-l-1)");

  DeepHoleVerdict v;
  v.method = Method::thm14;
  v.is_deep_hole = true;
  const auto domain = code.evaluation_set();
  for_each_combination(domain.size(), k, [&](const std::vector<std::size_t>& idx) {
    Symbol sum = 0;
    for (std::size_t i : idx) sum = f.add(sum, domain[i]);
    if (sum != 0) return true;
    Witness w{Witness::Kind::subset, {}};
    for (std::size_t i : idx) w.values.push_back(domain[i]);
    v.is_deep_hole = false;
    v.witness = std::move(w);
    return false;
  });
  return v;
}

/// Verdict shared by every word of the family
/// lambda (x - a_j)^{q-2} + nu x^{k-1} + f_{<=k-2}.
/// Hypotheses: a_j excluded, odd p, q >= 4, 2 <= k <= q-l-1.
inline DeepHoleVerdict thm15_criterion(const GprsCode& code, Symbol a_j) {
  const Field& f = code.field();
  if (!f.contains(a_j) || !code.is_excluded(a_j)) throw InvalidArgument("a_j must be one of the excluded points");
  detail::require_odd(f);
  const std::size_t q = f.order(), l = code.excluded_count(), k = code.k();
  if (q < 4 || k < 2 || k > q - l - 1) throw HypothesisViolation("shifted criterion needs q >= 4 and 2 <= k <= q-l-1");

  DeepHoleVerdict v;
  v.method = Method::thm15;
  v.is_deep_hole = true;
  if (k % f.characteristic() == 0) return v;  // C(q-2, k-1) vanishes mod p

  const Symbol coefficient = detail::thm15_coefficient(code, a_j);
  if (coefficient == 0) return v;
  const auto domain = code.evaluation_set();
  std::vector<Symbol> subset(k);
  for_each_combination(domain.size(), k, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = domain[idx[i]];
    if (detail::thm15_expression(code, a_j, coefficient, subset) != 0) return true;
    v.is_deep_hole = false;
    v.witness = Witness{Witness::Kind::subset, subset};
    return false;
  });
  return v;
}

inline DeepHoleVerdict thm15_criterion(const GprsCode& code, const FieldElement& a_j) {
  if (!(a_j.field() == code.field())) throw FieldMismatch();
  return thm15_criterion(code, a_j.value());
}

// ---------------------------------------------------------------------------
// Word families

enum class FamilyKind {
  degree_k,         ///< lambda x^k + nu x^{k-1} + f_{<=k-2}
  shifted_qminus2,  ///< lambda (x - a_j)^{q-2} + nu x^{k-1} + f_{<=k-2}
};

struct WordFamilySpec {
  FamilyKind kind = FamilyKind::degree_k;
  Symbol lambda = 1;
  Symbol nu = 0;
  Symbol a_j = 0;           // shifted kind only
  std::vector<Symbol> low;  // coefficients of f_{<=k-2}, degree-ascending
};

inline Polynomial family_polynomial(const GprsCode& code, const WordFamilySpec& spec) {
  const Field& f = code.field();
  const std::size_t k = code.k();
  if (!f.contains(spec.lambda) || spec.lambda == 0) throw InvalidArgument("family scale lambda must be nonzero");
  if (!f.contains(spec.nu)) throw InvalidArgument("family coefficient outside the field");
  const Polynomial low(f, spec.low);
  if (low.degree() > static_cast<std::int64_t>(k) - 2) throw InvalidArgument("low-order part must have degree <= k-2");

  Polynomial head(f);
  if (spec.kind == FamilyKind::degree_k) {
    head = Polynomial::monomial(f.element(spec.lambda), k);
  } else {
    if (!f.contains(spec.a_j) || !code.is_excluded(spec.a_j)) throw InvalidArgument("a_j must be one of the excluded points");
    head = expand_shifted_power(f.element(spec.a_j), f.order() - 2).scaled(spec.lambda);
  }
  return head + Polynomial::monomial(f.element(spec.nu), k - 1) + low;
}

/// (u(D), c_{k-1}(u)) for the family member described by spec.
inline ReceivedWord build_family_word(const GprsCode& code, const WordFamilySpec& spec) {
  return word_from_poly(code, family_polynomial(code, spec));
}

/// Recovers (lambda, nu, f) when u = (u(D), c_{k-1}(u)) with deg u = k.
inline std::optional<WordFamilySpec> match_degree_k_family(const GprsCode& code, const ReceivedWord& u) {
  const Polynomial f = interpolant(code, u);
  const std::size_t k = code.k();
  if (f.degree() != static_cast<std::int64_t>(k) || f.coeff(k - 1) != u[code.n()]) return std::nullopt;
  WordFamilySpec spec;
  spec.kind = FamilyKind::degree_k;
  spec.lambda = f.coeff(k);
  spec.nu = f.coeff(k - 1);
  spec.low.assign(f.coefficients().begin(), f.coefficients().begin() + static_cast<std::ptrdiff_t>(k - 1));
  return spec;
}

/// Recovers (lambda, nu, f) when u is the word of
/// lambda (x - a_j)^{q-2} + nu x^{k-1} + f_{<=k-2}. On D the shifted power
/// equals 1 / (y - a_j); at most one lambda leaves a remainder of degree < k.
inline std::optional<WordFamilySpec> match_shifted_family(const GprsCode& code, const ReceivedWord& u, Symbol a_j) {
  detail::check_word(code, u);
  const Field& f = code.field();
  if (!f.contains(a_j) || !code.is_excluded(a_j)) throw InvalidArgument("a_j must be one of the excluded points");
  const std::size_t k = code.k(), n = code.n();
  const auto domain = code.evaluation_set();
  const Symbol c_shift = f.mul(binom_mod_p(f.order() - 2, k - 1, f).value(),
                               f.pow(f.neg(a_j), static_cast<std::int64_t>(f.order()) - static_cast<std::int64_t>(k) - 1));
  std::vector<Symbol> rest(n);
  for (Symbol lambda = 1; lambda < f.order(); ++lambda) {
    for (std::size_t i = 0; i < n; ++i) rest[i] = f.sub(u[i], f.div(lambda, f.sub(domain[i], a_j)));
    const Polynomial r = lagrange_interpolate(f, domain, rest);
    if (r.degree() > static_cast<std::int64_t>(k) - 1) continue;
    const Symbol nu = r.coeff(k - 1);
    if (f.add(f.mul(lambda, c_shift), nu) != u[n]) return std::nullopt;
    WordFamilySpec spec;
    spec.kind = FamilyKind::shifted_qminus2;
    spec.lambda = lambda;
    spec.nu = nu;
    spec.a_j = a_j;
    for (std::size_t d = 0; d + 1 < k; ++d) spec.low.push_back(r.coeff(d));
    return spec;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed forms for the (k+1)-minors through the projective column

/// det of [G; (x^k(D), 0)] restricted to the columns of ys and the last
/// column equals -(sum ys) * V(ys).
inline Symbol degree_k_minor_closed_form(const Field& f, std::span<const Symbol> ys) {
  Symbol sum = 0;
  for (Symbol y : ys) sum = f.add(sum, y);
  return f.neg(f.mul(sum, vandermonde_det(f, ys)));
}

/// det of [G; ((y - a_j)^{-1} on D, c)] restricted to the columns of ys and
/// the last column equals (c + prod (a_j - y)^{-1}) * V(ys), where
/// c = c_{k-1}((x - a_j)^{q-2}).
inline Symbol shifted_minor_closed_form(const Field& f, Symbol a_j, Symbol c, std::span<const Symbol> ys) {
  Symbol prod = 1;
  for (Symbol y : ys) prod = f.mul(prod, f.sub(a_j, y));
  return f.mul(f.add(c, f.inv(prod)), vandermonde_det(f, ys));
}

}  // namespace gprs
