#pragma once

// Textual forms used on the command line:
//   field   "p^s" or "q", optionally with "mod=c0,c1,...,cs"
//   code    "q=<p^s>;exclude=<e1,e2,...>;k=<k>[;mod=c0,...,cs]"
//   lists   comma-separated decimal encodings (words, polynomials, sets)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gprs/codes.hpp"
#include "gprs/galois.hpp"

namespace gprs::text {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s) {
  s = strip(s);
  if (s.empty() || s.size() > 19) throw InvalidArgument("expected a non-negative integer, got '" + std::string(s) + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw InvalidArgument("expected a non-negative integer, got '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

inline std::vector<std::uint64_t> parse_uint_list(std::string_view s) {
  std::vector<std::uint64_t> out;
  s = strip(s);
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_uint(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

inline std::vector<Symbol> parse_symbols(const Field& f, std::string_view s) {
  std::vector<Symbol> out;
  for (std::uint64_t v : parse_uint_list(s)) {
    if (v >= f.order()) throw InvalidArgument("encoding " + std::to_string(v) + " outside GF(" + f.to_string() + ")");
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

/// "p^s" or a prime power "q"; `modulus` lists c0..cs when given.
inline Field parse_field(std::string_view spec, std::optional<std::string_view> modulus = std::nullopt) {
  spec = strip(spec);
  std::uint64_t p = 0;
  std::uint32_t s = 0;
  if (const auto caret = spec.find('^'); caret != std::string_view::npos) {
    p = parse_uint(spec.substr(0, caret));
    const std::uint64_t e = parse_uint(spec.substr(caret + 1));
    if (e == 0 || e > 64) throw InvalidArgument("bad extension degree in field spec '" + std::string(spec) + "'");
    s = static_cast<std::uint32_t>(e);
  } else {
    const auto pp = decompose_prime_power(parse_uint(spec));
    if (!pp) throw InvalidArgument("'" + std::string(spec) + "' is not a prime power");
    p = pp->p;
    s = pp->s;
  }
  std::optional<std::vector<std::uint32_t>> mod;
  if (modulus) {
    std::vector<std::uint32_t> m;
    for (std::uint64_t c : parse_uint_list(*modulus)) {
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
      m.push_back(static_cast<std::uint32_t>(c));
    }
    mod = std::move(m);
  }
  return Field::create(p, s, std::move(mod));
}

/// "q=<p^s>;exclude=<e1,...>;k=<k>[;mod=c0,...,cs]"
inline GprsCode parse_code(std::string_view spec) {
  std::optional<std::string_view> q, exclude, k, mod;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string_view part = strip(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("code spec entry '" + std::string(part) + "' lacks '='");
    const std::string_view key = strip(part.substr(0, eq)), value = part.substr(eq + 1);
    std::optional<std::string_view>* slot = key == "q" ? &q : key == "exclude" ? &exclude : key == "k" ? &k : key == "mod" ? &mod : nullptr;
    if (!slot) throw InvalidArgument("unknown code spec key '" + std::string(key) + "'");
    if (*slot) throw InvalidArgument("repeated code spec key '" + std::string(key) + "'");
    *slot = value;
  }
  if (!q || !exclude || !k) throw InvalidArgument("code spec needs q=, exclude= and k=");
  const Field f = parse_field(*q, mod);
  return GprsCode::create(f, parse_symbols(f, *exclude), parse_uint(*k));
}

inline ReceivedWord parse_word(const GprsCode& code, std::string_view s) {
  auto coords = parse_symbols(code.field(), s);
  if (coords.size() != code.length())
    throw InvalidArgument("word has " + std::to_string(coords.size()) + " coordinates; code length is " +
                          std::to_string(code.length()));
  return {code.field(), std::move(coords)};
}

}  // namespace gprs::text
