#pragma once

// Seeded parameter sweeps that machine-check the deep-hole results against
// exhaustive oracles. Every row pairs a predicted value (closed form or
// criterion) with an observed one (oracle); rows are sorted before
// serialization so reports are byte-identical for equal configurations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "gprs/codes.hpp"
#include "gprs/deepholes.hpp"
#include "gprs/number_theory.hpp"

namespace gprs {

enum class Claim { thm14, thm15, thm16, thm17, lemma25, lemma26, lemma28, lemma29, thm11 };

inline constexpr Claim kAllClaims[] = {Claim::thm14,   Claim::thm15,   Claim::thm16,   Claim::thm17, Claim::lemma25,
                                       Claim::lemma26, Claim::lemma28, Claim::lemma29, Claim::thm11};

inline std::string to_string(Claim c) {
  switch (c) {
    case Claim::thm14: return "thm14";
    case Claim::thm15: return "thm15";
    case Claim::thm16: return "thm16";
    case Claim::thm17: return "thm17";
    case Claim::lemma25: return "lemma25";
    case Claim::lemma26: return "lemma26";
    case Claim::lemma28: return "lemma28";
    case Claim::lemma29: return "lemma29";
    case Claim::thm11: return "thm11";
  }
  return "unknown";
}

inline Claim parse_claim(const std::string& name) {
  for (Claim c : kAllClaims)
    if (to_string(c) == name) return c;
  throw InvalidArgument("unknown claim '" + name + "'");
}

struct SweepConfig {
  std::vector<Claim> claims;
  std::vector<std::uint64_t> q_list;
  /// Exclusion sets per (q, l): all of them when C(q, l) fits, else a seeded sample.
  std::size_t max_exclusion_sets_per_q = 35;
  std::size_t words_per_config = 20;
  std::size_t liwan_trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::uint64_t covering_budget = kDefaultCoveringBudget;
};

enum class RowStatus { agreed, refuted, skipped };

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::agreed: return "agreed";
    case RowStatus::refuted: return "refuted";
    case RowStatus::skipped: return "skipped";
  }
  return "unknown";
}

struct SweepRow {
  Claim claim = Claim::thm14;
  std::uint64_t q = 0;
  std::vector<Symbol> excluded;
  std::optional<std::size_t> k;
  std::optional<Symbol> a_j;
  std::optional<std::uint64_t> t;  // lemma29 index
  std::string predicted;
  std::string observed;
  RowStatus status = RowStatus::agreed;
  std::string witness;
  std::string detail;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t agreed = 0;
  std::size_t refuted = 0;
  std::size_t skipped = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  SweepSummary summary;

  bool refuted() const noexcept { return summary.refuted != 0; }
};

/// Portable seeded generator: mt19937_64 with explicit unbiased range reduction
/// (std distributions are implementation-defined).
class SweepRng {
 public:
  explicit SweepRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }
  Symbol element(const Field& f) { return static_cast<Symbol>(below(f.order())); }
  Symbol nonzero(const Field& f) { return static_cast<Symbol>(1 + below(f.order() - 1)); }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream per (seed, claim, q) so adding claims never shifts others.
inline SweepRng stream(std::uint64_t seed, Claim claim, std::uint64_t q) {
  return SweepRng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(claim) * 1000003ULL + q)));
}

inline std::string join(std::span<const Symbol> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string verdict_word(bool deep) { return deep ? "deep_hole" : "not_deep_hole"; }

/// l-subsets of F_q, exhaustive when C(q, l) <= cap, else `cap` distinct
/// seeded samples (Floyd's algorithm). Sorted lexicographically.
inline std::vector<std::vector<Symbol>> exclusion_sets(std::uint32_t q, std::size_t l, std::size_t cap, SweepRng& rng) {
  std::vector<std::vector<Symbol>> out;
  if (saturating_binomial(q, l) <= cap) {
    for_each_combination(q, l, [&](const std::vector<std::size_t>& idx) {
      out.emplace_back(idx.begin(), idx.end());
      return true;
    });
    return out;
  }
  std::set<std::vector<Symbol>> seen;
  while (seen.size() < cap) {
    std::set<Symbol> pick;
    for (std::uint64_t j = q - l; j < q; ++j) {
      const auto t = static_cast<Symbol>(rng.below(j + 1));
      if (!pick.insert(t).second) pick.insert(static_cast<Symbol>(j));
    }
    seen.emplace(pick.begin(), pick.end());
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

inline std::vector<Symbol> random_low_part(const Field& f, std::size_t k, SweepRng& rng) {
  std::vector<Symbol> low(k - 1);
  for (auto& c : low) c = rng.element(f);
  return low;
}

/// v_p(C(n, r)) by Legendre's formula on the three factorials.
inline unsigned legendre_binomial_valuation(std::uint64_t n, std::uint64_t r, std::uint64_t p) {
  auto fact = [p](std::uint64_t m) {
    std::uint64_t v = 0;
    for (std::uint64_t pk = p; pk <= m; pk *= p) v += m / pk;
    return v;
  };
  return static_cast<unsigned>(fact(n) - fact(r) - fact(n - r));
}

struct Sweeper {
  const SweepConfig& cfg;
  std::vector<SweepRow>& rows;

  SweepRow base(Claim claim, std::uint64_t q) const {
    SweepRow r;
    r.claim = claim;
    r.q = q;
    return r;
  }

  void skip(Claim claim, std::uint64_t q, const std::string& why) {
    SweepRow r = base(claim, q);
    r.status = RowStatus::skipped;
    r.detail = why;
    rows.push_back(std::move(r));
  }

  OracleOptions oracle_options() const { return {DistanceMethod::automatic, cfg.enumeration_budget}; }

  /// All valid codes: l from 1 to q-3, sampled exclusion sets, k from 2 to kmax(l).
  template <typename KMax, typename Visit>
  void for_each_code(const Field& f, SweepRng& rng, KMax&& kmax, Visit&& visit) {
    const std::uint32_t q = f.order();
    for (std::size_t l = 1; l + 3 <= q; ++l) {
      const std::size_t top = kmax(l);
      if (top < 2) continue;
      for (const auto& ex : exclusion_sets(q, l, cfg.max_exclusion_sets_per_q, rng))
        for (std::size_t k = 2; k <= top; ++k) visit(GprsCode::create(f, ex, k));
    }
  }

  SweepRow code_row(Claim claim, const GprsCode& code) const {
    SweepRow r = base(claim, code.field().order());
    r.excluded.assign(code.excluded().begin(), code.excluded().end());
    r.k = code.k();
    return r;
  }

  /// Compares a predicted verdict with oracle and MDS-extension verdicts on
  /// sample words; fills observed/status/detail.
  void compare_words(SweepRow& row, const GprsCode& code, bool predicted, const std::vector<ReceivedWord>& words,
                     bool with_mds) {
    row.predicted = verdict_word(predicted);
    row.observed = row.predicted;
    row.status = RowStatus::agreed;
    for (const auto& w : words) {
      const bool oracle = is_deep_hole_oracle(code, w, oracle_options()).is_deep_hole;
      const bool mds = with_mds ? is_deep_hole_mds_extension(code, w).is_deep_hole : oracle;
      if (oracle != predicted || mds != predicted) {
        row.status = RowStatus::refuted;
        row.observed = verdict_word(oracle != predicted ? oracle : mds);
        row.detail = "word=" + w.to_string() + ";oracle=" + verdict_word(oracle) + ";mds=" + verdict_word(mds);
        return;
      }
    }
    row.detail = std::to_string(words.size()) + " words";
  }

  void thm14(const Field& f, SweepRng& rng) {
    const std::uint32_t q = f.order();
    if (!f.is_odd_characteristic() || q < 5) return skip(Claim::thm14, q, "needs odd q >= 5");
    for_each_code(f, rng, [q](std::size_t l) { return std::min<std::size_t>(q - 3, q - l - 1); },
                  [&](const GprsCode& code) {
                    SweepRow row = code_row(Claim::thm14, code);
                    const DeepHoleVerdict v = thm14_criterion(code);
                    std::vector<ReceivedWord> words;
                    for (std::size_t i = 0; i < cfg.words_per_config; ++i) {
                      WordFamilySpec spec{FamilyKind::degree_k, rng.nonzero(f), rng.element(f), 0,
                                          random_low_part(f, code.k(), rng)};
                      words.push_back(build_family_word(code, spec));
                    }
                    compare_words(row, code, v.is_deep_hole, words, true);
                    if (v.witness) {
                      row.witness = witness_to_string(code, *v.witness);
                      if (!validate_thm14_witness(code, v.witness->values)) {
                        row.status = RowStatus::refuted;
                        row.detail = "witness does not sum to zero";
                      }
                    }
                    rows.push_back(std::move(row));
                  });
  }

  void thm15(const Field& f, SweepRng& rng) {
    const std::uint32_t q = f.order();
    if (!f.is_odd_characteristic() || q < 4) return skip(Claim::thm15, q, "needs odd q >= 4");
    for_each_code(f, rng, [q](std::size_t l) { return q - l - 1; }, [&](const GprsCode& code) {
      for (Symbol a_j : code.excluded()) {
        SweepRow row = code_row(Claim::thm15, code);
        row.a_j = a_j;
        const DeepHoleVerdict v = thm15_criterion(code, a_j);
        std::vector<ReceivedWord> words;
        for (std::size_t i = 0; i < cfg.words_per_config; ++i) {
          WordFamilySpec spec{FamilyKind::shifted_qminus2, rng.nonzero(f), rng.element(f), a_j,
                              random_low_part(f, code.k(), rng)};
          words.push_back(build_family_word(code, spec));
        }
        compare_words(row, code, v.is_deep_hole, words, true);
        if (v.witness) {
          row.witness = witness_to_string(code, *v.witness);
          if (!validate_thm15_witness(code, a_j, v.witness->values)) {
            row.status = RowStatus::refuted;
            row.detail = "witness does not annihilate the criterion";
          }
        }
        if (code.k() % f.characteristic() == 0 && !v.is_deep_hole) {
          row.status = RowStatus::refuted;
          row.detail = "p | k but criterion reports no deep hole";
        }
        rows.push_back(std::move(row));
      }
    });
  }

  void thm16(const Field& f, SweepRng& rng) {
    const std::uint32_t q = f.order();
    if (!f.is_odd_characteristic() || q < 5) return skip(Claim::thm16, q, "needs odd q >= 5");
    for (std::size_t k = 2; k + 3 <= q; ++k) {
      const GprsCode code = GprsCode::create(f, std::vector<Symbol>{0}, k);
      SweepRow row = code_row(Claim::thm16, code);
      std::vector<ReceivedWord> words;
      for (std::size_t i = 0; i < cfg.words_per_config; ++i) {
        WordFamilySpec spec{FamilyKind::degree_k, rng.nonzero(f), rng.element(f), 0, random_low_part(f, k, rng)};
        words.push_back(build_family_word(code, spec));
      }
      compare_words(row, code, false, words, true);
      std::vector<Symbol> subset;
      for (const auto& z : zero_sum_subset(f, k)) subset.push_back(z.value());
      row.witness = join(subset);
      const DeepHoleVerdict v = thm14_criterion(code);
      if (!validate_thm14_witness(code, subset) || v.is_deep_hole) {
        row.status = RowStatus::refuted;
        row.observed = verdict_word(v.is_deep_hole);
        row.detail = "zero-sum witness rejected or criterion reports a deep hole";
      }
      rows.push_back(std::move(row));
    }
  }

  void thm17(const Field& f, SweepRng& rng) {
    const std::uint32_t q = f.order();
    if (q < 4) return skip(Claim::thm17, q, "needs q >= 4");
    for (std::size_t k = 2; k + 2 <= q; ++k) {
      const GprsCode code = GprsCode::create(f, std::vector<Symbol>{0}, k);
      SweepRow row = code_row(Claim::thm17, code);
      row.a_j = 0;
      std::vector<ReceivedWord> words;
      for (std::size_t i = 0; i < cfg.words_per_config; ++i) {
        WordFamilySpec spec{FamilyKind::shifted_qminus2, rng.nonzero(f), rng.element(f), 0, random_low_part(f, k, rng)};
        words.push_back(build_family_word(code, spec));
      }
      compare_words(row, code, true, words, true);
      if (f.is_odd_characteristic() && !thm15_criterion(code, Symbol{0}).is_deep_hole) {
        row.status = RowStatus::refuted;
        row.detail = "shifted criterion at a_j = 0 reports no deep hole";
      }
      rows.push_back(std::move(row));
    }
  }

  void lemma25(const Field& f, SweepRng& rng) {
    const std::uint32_t q = f.order();
    if (q < 4) return skip(Claim::lemma25, q, "codes need q >= 4");
    for_each_code(f, rng, [q](std::size_t l) { return q - l - 1; }, [&](const GprsCode& code) {
      SweepRow row = code_row(Claim::lemma25, code);
      row.predicted = "d=" + std::to_string(minimum_distance(code, Mode::formula));
      try {
        row.observed = "d=" + std::to_string(minimum_distance(code, Mode::bruteforce, cfg.enumeration_budget));
      } catch (const BudgetExceeded& e) {
        row.status = RowStatus::skipped;
        row.detail = e.what();
        rows.push_back(std::move(row));
        return;
      }
      const MdsCheck mds = mds_generator_check(code.generator(), code.k());
      row.status = row.observed == row.predicted && mds.is_mds ? RowStatus::agreed : RowStatus::refuted;
      if (!mds.is_mds) {
        std::vector<Symbol> cols(mds.singular_columns->begin(), mds.singular_columns->end());
        row.witness = join(cols);
        row.detail = "generator has a singular k-minor";
      }
      rows.push_back(std::move(row));
    });
  }

  void lemma26(const Field& f, SweepRng& rng) {
    const std::uint32_t q = f.order();
    if (q < 4) return skip(Claim::lemma26, q, "codes need q >= 4");
    for_each_code(f, rng, [q](std::size_t l) { return q - l - 1; }, [&](const GprsCode& code) {
      SweepRow row = code_row(Claim::lemma26, code);
      row.predicted = "rho=" + std::to_string(covering_radius(code, Mode::formula));
      try {
        row.observed = "rho=" + std::to_string(covering_radius(code, Mode::bruteforce, cfg.covering_budget));
        row.status = row.observed == row.predicted ? RowStatus::agreed : RowStatus::refuted;
      } catch (const BudgetExceeded& e) {
        row.status = RowStatus::skipped;
        row.detail = e.what();
      }
      rows.push_back(std::move(row));
    });
  }

  void lemma28(const Field& f) {
    const std::uint32_t q = f.order();
    if (!f.is_odd_characteristic() || q < 5) return skip(Claim::lemma28, q, "needs odd q >= 5");
    for (std::size_t k = 2; k + 3 <= q; ++k) {
      SweepRow row = base(Claim::lemma28, q);
      row.k = k;
      row.predicted = "zero_sum";
      std::vector<Symbol> subset;
      Symbol sum = 0;
      for (const auto& z : zero_sum_subset(f, k)) {
        subset.push_back(z.value());
        sum = f.add(sum, z.value());
      }
      const bool distinct = std::adjacent_find(subset.begin(), subset.end()) == subset.end();
      const bool nonzero = std::find(subset.begin(), subset.end(), Symbol{0}) == subset.end();
      const bool ok = subset.size() == k && distinct && nonzero && sum == 0;
      row.observed = ok ? "zero_sum" : "invalid";
      row.status = ok ? RowStatus::agreed : RowStatus::refuted;
      row.witness = join(subset);
      rows.push_back(std::move(row));
    }
  }

  void lemma29(std::uint64_t q) {
    const auto pp = decompose_prime_power(q);
    if (!pp || pp->p == 2) return skip(Claim::lemma29, q, "needs a power of an odd prime");
    for (std::uint64_t t = 2; t + 1 <= q; ++t) {
      SweepRow row = base(Claim::lemma29, q);
      row.t = t;
      const unsigned predicted = vp_binomial(q, t);
      const unsigned observed = legendre_binomial_valuation(q - 2, t - 1, pp->p);
      row.predicted = std::to_string(predicted);
      row.observed = std::to_string(observed);
      row.status = predicted == observed ? RowStatus::agreed : RowStatus::refuted;
      rows.push_back(std::move(row));
    }
  }
};

}  // namespace detail

/// Li-Wan bounds n - deg u(x) <= d(u, GRS_q(F_q, k)) <= n - k on seeded random
/// non-codewords. Each trial draws k with q^k within budget, then a degree in
/// [k, n-1] and a random polynomial of exactly that degree.
inline std::vector<SweepRow> check_liwan_bounds(std::uint64_t q, std::size_t trials, std::uint64_t seed,
                                                std::uint64_t budget = kDefaultEnumerationBudget) {
  const Field f = Field::of_order(q);
  std::vector<SweepRow> rows;
  SweepRng rng = detail::stream(seed, Claim::thm11, q);
  std::vector<Symbol> points(q);
  for (Symbol a = 0; a < q; ++a) points[a] = a;
  const std::size_t n = q;
  std::size_t kmax = 0;
  while (kmax + 1 < n && saturating_pow(q, kmax + 1) <= budget) ++kmax;
  if (kmax < 1) throw BudgetExceeded("no GRS dimension fits the enumeration budget for q=" + std::to_string(q));

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t k = 1 + rng.below(kmax);
    const GrsCode code = GrsCode::create(f, points, k);
    const std::size_t degree = k + rng.below(n - k);
    std::vector<Symbol> coeffs(degree + 1);
    for (auto& c : coeffs) c = rng.element(f);
    coeffs[degree] = rng.nonzero(f);
    const Polynomial u(f, coeffs);
    std::vector<Symbol> word;
    for (Symbol y : code.evaluation_set()) word.push_back(u.eval(y));
    const std::size_t d = grs_error_distance(code, ReceivedWord(f, word), budget);

    SweepRow row;
    row.claim = Claim::thm11;
    row.q = q;
    row.k = k;
    row.predicted = std::to_string(n - degree) + ".." + std::to_string(n - k);
    row.observed = std::to_string(d);
    row.status = (n - degree <= d && d <= n - k) ? RowStatus::agreed : RowStatus::refuted;
    row.detail = "trial=" + std::to_string(trial) + ";deg=" + std::to_string(degree) + ";word=" + detail::join(word);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline SweepReport run_sweep(const SweepConfig& config) {
  SweepReport report;
  report.config = config;
  detail::Sweeper sweeper{config, report.rows};

  for (Claim claim : config.claims) {
    for (std::uint64_t q : config.q_list) {
      const auto pp = decompose_prime_power(q);
      if (!pp || q > detail::kMaxFieldOrder) {
        sweeper.skip(claim, q, "not a supported prime power");
        continue;
      }
      SweepRng rng = detail::stream(config.seed, claim, q);
      try {
        const Field f = Field::of_order(q);
        switch (claim) {
          case Claim::thm14: sweeper.thm14(f, rng); break;
          case Claim::thm15: sweeper.thm15(f, rng); break;
          case Claim::thm16: sweeper.thm16(f, rng); break;
          case Claim::thm17: sweeper.thm17(f, rng); break;
          case Claim::lemma25: sweeper.lemma25(f, rng); break;
          case Claim::lemma26: sweeper.lemma26(f, rng); break;
          case Claim::lemma28: sweeper.lemma28(f); break;
          case Claim::lemma29: sweeper.lemma29(q); break;
          case Claim::thm11: {
            auto rows = check_liwan_bounds(q, config.liwan_trials, config.seed, config.enumeration_budget);
            report.rows.insert(report.rows.end(), rows.begin(), rows.end());
            break;
          }
        }
      } catch (const BudgetExceeded& e) {
        sweeper.skip(claim, q, e.what());
      }
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.claim, a.q, a.excluded, a.k, a.a_j, a.t) < std::tie(b.claim, b.q, b.excluded, b.k, b.a_j, b.t);
  });

  for (const auto& r : report.rows) {
    ++report.summary.total;
    switch (r.status) {
      case RowStatus::agreed: ++report.summary.agreed; break;
      case RowStatus::refuted: ++report.summary.refuted; break;
      case RowStatus::skipped: ++report.summary.skipped; break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const SweepConfig& c) {
  nlohmann::ordered_json j;
  std::vector<std::string> claims;
  for (Claim claim : c.claims) claims.push_back(to_string(claim));
  j["claims"] = claims;
  j["q_list"] = c.q_list;
  j["max_exclusion_sets_per_q"] = c.max_exclusion_sets_per_q;
  j["words_per_config"] = c.words_per_config;
  j["liwan_trials"] = c.liwan_trials;
  j["seed"] = c.seed;
  j["enumeration_budget"] = c.enumeration_budget;
  j["covering_budget"] = c.covering_budget;
  return j;
}

inline nlohmann::ordered_json to_json(const SweepRow& r) {
  nlohmann::ordered_json j;
  j["claim"] = to_string(r.claim);
  j["q"] = r.q;
  j["excluded"] = detail::join(r.excluded);
  j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  j["a_j"] = r.a_j ? nlohmann::ordered_json(*r.a_j) : nlohmann::ordered_json(nullptr);
  j["t"] = r.t ? nlohmann::ordered_json(*r.t) : nlohmann::ordered_json(nullptr);
  j["predicted"] = r.predicted;
  j["observed"] = r.observed;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["detail"] = r.detail;
  return j;
}

inline nlohmann::ordered_json to_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["config"] = to_json(report.config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) j["rows"].push_back(to_json(r));
  j["summary"] = {{"total", report.summary.total},
                  {"agreed", report.summary.agreed},
                  {"refuted", report.summary.refuted},
                  {"skipped", report.summary.skipped}};
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace detail

/// One header line plus one line per row, RFC 4180 quoting, CRLF line breaks.
inline std::string to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "claim,q,excluded,k,a_j,t,predicted,observed,status,witness,detail\r\n";
  for (const auto& r : report.rows) {
    const std::string fields[] = {to_string(r.claim),
                                  std::to_string(r.q),
                                  detail::join(r.excluded),
                                  detail::optional_text(r.k),
                                  detail::optional_text(r.a_j),
                                  detail::optional_text(r.t),
                                  r.predicted,
                                  r.observed,
                                  to_string(r.status),
                                  r.witness,
                                  r.detail};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) os << ',';
      os << detail::csv_field(fields[i]);
    }
    os << "\r\n";
  }
  return os.str();
}

}  // namespace gprs
