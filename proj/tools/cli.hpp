#pragma once

// Command-line front end. Exit codes: 0 success / claim verified,
// 1 claim refuted (the counterexample is on the data stream), 2 usage,
// input or budget error (diagnostics only).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gprs/gprs.hpp"
#include "gprs/text.hpp"

namespace gprs::cli {

using Record = nlohmann::ordered_json;

inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;

/// Enumeration budget default, overridable through GPRS_BUDGET.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("GPRS_BUDGET")) return text::parse_uint(env);
  return kDefaultEnumerationBudget;
}

namespace detail {

inline std::string scalar_text(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

/// Prints a flat record as JSON, one-row CSV, or "key: value" lines.
inline void emit(std::ostream& out, const Record& record, const std::string& format) {
  if (format == "json") {
    out << record.dump(2) << '\n';
  } else if (format == "csv") {
    std::string header, row;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
      if (!first) {
        header += ',';
        row += ',';
      }
      first = false;
      header += gprs::detail::csv_field(key);
      row += gprs::detail::csv_field(scalar_text(value));
    }
    out << header << "\r\n" << row << "\r\n";
  } else {
    for (const auto& [key, value] : record.items()) out << key << ": " << scalar_text(value) << '\n';
  }
}

inline Record verdict_record(const GprsCode& code, const ReceivedWord& word, const DeepHoleVerdict& v,
                             std::optional<Symbol> a_j) {
  Record r;
  r["code"] = code.to_string();
  r["word"] = word.to_string();
  r["method"] = to_string(v.method);
  r["is_deep_hole"] = v.is_deep_hole;
  r["witness"] = v.witness ? Record(witness_to_string(code, *v.witness)) : Record(nullptr);
  r["a_j"] = a_j ? Record(*a_j) : Record(nullptr);
  r["distance"] = v.distance ? Record(*v.distance) : Record(nullptr);
  r["covering_radius"] = covering_radius(code, Mode::formula);
  return r;
}

}  // namespace detail

/// Runs one invocation; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized projective Reed-Solomon codes: distances, covering radii and deep holes", "gprs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "Cap on codewords/subsets per distance computation (env GPRS_BUDGET)");

  auto* field_cmd = app.add_subcommand("field", "Print the field table and its primitive element");
  std::string q_spec, mod_spec;
  field_cmd->add_option("--q", q_spec, "Field as p^s or q")->required();
  field_cmd->add_option("--mod", mod_spec, "Modulus coefficients c0,...,cs");

  auto* code_cmd = app.add_subcommand("code", "Print generator matrix, d, rho and the MDS check");
  std::string exclude_spec;
  std::size_t k_value = 0;
  bool bruteforce = false;
  code_cmd->add_option("--q", q_spec, "Field as p^s or q")->required();
  code_cmd->add_option("--mod", mod_spec, "Modulus coefficients c0,...,cs");
  code_cmd->add_option("--exclude", exclude_spec, "Excluded points e1,e2,...")->required();
  code_cmd->add_option("--k", k_value, "Dimension")->required();
  code_cmd->add_flag("--bruteforce", bruteforce, "Also compute d and rho exhaustively");

  std::string code_spec, poly_spec, word_spec, method = "oracle", aj_spec;
  auto* encode_cmd = app.add_subcommand("encode", "Encode a message polynomial");
  encode_cmd->add_option("--code", code_spec, "q=<p^s>;exclude=<e1,...>;k=<k>")->required();
  encode_cmd->add_option("--poly", poly_spec, "Coefficients c0,c1,...")->required();

  auto* distance_cmd = app.add_subcommand("distance", "Exact error distance of a word");
  distance_cmd->add_option("--code", code_spec, "q=<p^s>;exclude=<e1,...>;k=<k>")->required();
  distance_cmd->add_option("--word", word_spec, "Coordinates w1,...,w(n+1)")->required();

  auto* deephole_cmd = app.add_subcommand("deephole", "Decide whether a word is a deep hole");
  deephole_cmd->add_option("--code", code_spec, "q=<p^s>;exclude=<e1,...>;k=<k>")->required();
  deephole_cmd->add_option("--word", word_spec, "Coordinates w1,...,w(n+1)")->required();
  deephole_cmd->add_option("--method", method, "Decision route")
      ->check(CLI::IsMember({"oracle", "mds", "thm14", "thm15"}));
  deephole_cmd->add_option("--aj", aj_spec, "Excluded point a_j (thm15)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Machine-check claims over parameter ranges");
  std::string claims_spec, qlist_spec, out_path;
  SweepConfig config;
  sweep_cmd->add_option("--claims", claims_spec, "Comma-separated claims")->required();
  sweep_cmd->add_option("--q-list", qlist_spec, "Comma-separated field orders")->required();
  sweep_cmd->add_option("--seed", config.seed, "RNG seed");
  sweep_cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
  sweep_cmd->add_option("--words", config.words_per_config, "Random words per configuration");
  sweep_cmd->add_option("--max-sets", config.max_exclusion_sets_per_q, "Exclusion sets per (q, l) before sampling");
  sweep_cmd->add_option("--trials", config.liwan_trials, "Random words per q for thm11");
  sweep_cmd->add_option("--covering-budget", config.covering_budget, "Cap on covering-radius brute force");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (budget == 0) budget = default_budget();
    std::optional<std::string_view> mod;
    if (!mod_spec.empty()) mod = mod_spec;

    if (field_cmd->parsed()) {
      const Field f = text::parse_field(q_spec, mod);
      Record r;
      r["field"] = f.to_string();
      r["p"] = f.characteristic();
      r["s"] = f.degree();
      r["q"] = f.order();
      r["modulus"] = gprs::detail::join(f.modulus());
      r["primitive_element"] = f.order() >= 3 ? Record(f.primitive_element().value()) : Record(nullptr);
      if (format == "json") {
        Record table = Record::array();
        for (const auto& a : f.elements()) {
          Record e;
          e["encoding"] = a.value();
          e["coefficients"] = a.coefficients();
          e["negation"] = (-a).value();
          e["inverse"] = a.is_zero() ? Record(nullptr) : Record(a.inv().value());
          e["order"] = a.is_zero() ? Record(nullptr) : Record(f.multiplicative_order(a.value()));
          table.push_back(e);
        }
        r["elements"] = table;
      }
      detail::emit(out, r, format);
      return kOk;
    }

    if (code_cmd->parsed()) {
      const Field f = text::parse_field(q_spec, mod);
      const GprsCode code = GprsCode::create(f, text::parse_symbols(f, exclude_spec), k_value);
      const MdsCheck mds = mds_generator_check(code.generator(), code.k());
      Record r;
      r["code"] = code.to_string();
      r["n"] = code.n();
      r["length"] = code.length();
      r["k"] = code.k();
      r["evaluation_set"] = gprs::detail::join(code.evaluation_set());
      std::string rows;
      for (std::size_t i = 0; i < code.generator().rows(); ++i) {
        if (i) rows += ';';
        rows += gprs::detail::join(code.generator().row(i));
      }
      r["generator"] = rows;
      r["minimum_distance"] = minimum_distance(code, Mode::formula);
      r["covering_radius"] = covering_radius(code, Mode::formula);
      if (bruteforce) {
        r["minimum_distance_bruteforce"] = minimum_distance(code, Mode::bruteforce, budget);
        r["covering_radius_bruteforce"] = covering_radius(code, Mode::bruteforce, config.covering_budget);
      }
      r["mds"] = mds.is_mds;
      detail::emit(out, r, format);
      return kOk;
    }

    if (encode_cmd->parsed()) {
      const GprsCode code = text::parse_code(code_spec);
      const Polynomial f(code.field(), text::parse_symbols(code.field(), poly_spec));
      Record r;
      r["code"] = code.to_string();
      r["poly"] = f.to_string();
      r["word"] = encode(code, f).to_string();
      detail::emit(out, r, format);
      return kOk;
    }

    if (distance_cmd->parsed()) {
      const GprsCode code = text::parse_code(code_spec);
      const ReceivedWord word = text::parse_word(code, word_spec);
      Record r;
      r["code"] = code.to_string();
      r["word"] = word.to_string();
      r["distance"] = error_distance(code, word, DistanceMethod::automatic, budget);
      r["is_codeword"] = is_codeword(code, word);
      r["covering_radius"] = covering_radius(code, Mode::formula);
      detail::emit(out, r, format);
      return kOk;
    }

    if (deephole_cmd->parsed()) {
      const GprsCode code = text::parse_code(code_spec);
      const ReceivedWord word = text::parse_word(code, word_spec);
      std::optional<Symbol> a_j;
      DeepHoleVerdict v;
      if (method == "oracle") {
        v = is_deep_hole_oracle(code, word, {DistanceMethod::automatic, budget});
      } else if (method == "mds") {
        v = is_deep_hole_mds_extension(code, word);
      } else if (method == "thm14") {
        if (!match_degree_k_family(code, word))
          throw InvalidArgument("word is not (u(D), c_{k-1}(u)) for a polynomial u of degree k");
        v = thm14_criterion(code);
      } else {
        if (aj_spec.empty()) throw InvalidArgument("--method thm15 needs --aj");
        const auto parsed = text::parse_symbols(code.field(), aj_spec);
        if (parsed.size() != 1) throw InvalidArgument("--aj takes a single element");
        a_j = parsed.front();
        if (!match_shifted_family(code, word, *a_j))
          throw InvalidArgument("word is not in the family lambda (x - a_j)^(q-2) + nu x^(k-1) + f_{<=k-2}");
        v = thm15_criterion(code, *a_j);
      }
      detail::emit(out, detail::verdict_record(code, word, v, a_j), format);
      return v.is_deep_hole ? kOk : kRefuted;
    }

    if (sweep_cmd->parsed()) {
      config.claims.clear();
      std::string_view rest = claims_spec;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string name(text::strip(rest.substr(0, comma)));
        if (!name.empty()) config.claims.push_back(parse_claim(name));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
      if (config.claims.empty()) throw InvalidArgument("--claims is empty");
      config.q_list = text::parse_uint_list(qlist_spec);
      config.enumeration_budget = budget;

      const auto start = std::chrono::steady_clock::now();
      const SweepReport report = run_sweep(config);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "sweep: " << report.summary.total << " rows, " << report.summary.agreed << " agreed, "
          << report.summary.refuted << " refuted, " << report.summary.skipped << " skipped in " << seconds << " s\n";

      const std::string body = format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
      if (out_path.empty()) {
        out << body;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw InvalidArgument("cannot open '" + out_path + "' for writing");
        file << body;
      }
      return report.refuted() ? kRefuted : kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gprs::cli
