#include "fibre/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "fibre/coproduct.hpp"
#include "fibre/lowering.hpp"
#include "fibre/oracle.hpp"
#include "fibre/ordinary.hpp"
#include "fibre/weighted.hpp"

namespace fibre {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kMaxAlphabet = 16;

struct RunConfig {
  std::vector<std::string> alphabet;
  long max_degree = 5;
  long max_degree_cap = 12;
  std::string format = "text";
  std::string decomposition = "multiset";
  std::string forest_sigma = "mult-times-sigma";
};

ordered_json json_integer(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json json_rational(const Rational& q) {
  return {{"num", json_integer(q.get_num())}, {"den", json_integer(q.get_den())}};
}

// Explicit --alphabet wins; otherwise the identifiers found in the inputs,
// falling back to the single decoration "a".
Alphabet resolve_alphabet(const RunConfig& config, const std::vector<std::string>& specs) {
  std::vector<std::string> names = config.alphabet;
  if (names.empty()) {
    for (const auto& s : specs) {
      auto found = scan_decoration_names(s);
      names.insert(names.end(), found.begin(), found.end());
    }
  }
  if (names.empty()) names.push_back("a");
  Alphabet alphabet(names);
  if (alphabet.size() > kMaxAlphabet) {
    throw CapExceeded("alphabet has " + std::to_string(alphabet.size()) +
                      " decorations, at most " + std::to_string(kMaxAlphabet) + " allowed");
  }
  return alphabet;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_count(const RunConfig& config, const std::string& spec, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(config, {spec});
  const MultiIndex k = parse_multiindex(spec, alphabet);
  if (k.empty() || weight(k) != -1) throw DomainError("weight must be -1");
  const WeightedCounts w = weighted_counts(k);
  const BigInt f = ordinary_count(k);
  const std::string text = to_string(k, alphabet);
  if (config.format == "json") {
    ordered_json j;
    j["k"] = text;
    j["degree"] = degree(k);
    j["weight"] = weight(k);
    j["F"] = json_integer(f);
    j["W"] = json_rational(w.weighted);
    j["J"] = json_integer(w.mass);
    j["L"] = json_integer(w.labelled);
    emit(out, j);
  } else {
    out << "k = " << text << "\n"
        << "degree = " << degree(k) << "\n"
        << "weight = " << weight(k) << "\n"
        << "F = " << to_string(f) << "\n"
        << "W = " << to_string(w.weighted) << "\n"
        << "J = " << to_string(w.mass) << "\n"
        << "L = " << to_string(w.labelled) << "\n";
  }
  return kExitOk;
}

int cmd_series(const RunConfig& config, const std::string& mode, long m, std::ostream& out) {
  if (config.max_degree < 1) throw DomainError("series degree must be >= 1");
  if (config.max_degree > config.max_degree_cap) {
    throw CapExceeded("series degree " + std::to_string(config.max_degree) + " exceeds cap " +
                      std::to_string(config.max_degree_cap));
  }
  const Alphabet alphabet = resolve_alphabet(config, {});
  const auto decos = alphabet.ids();
  TruncatedSeries s;
  if (mode == "weighted") {
    s = weighted_series(decos, config.max_degree);
  } else if (mode == "ordinary") {
    s = ordinary_series(decos, config.max_degree);
  } else {
    if (m < 0) throw DomainError("multiset size must be >= 0");
    s = h_series(decos, m, config.max_degree);
  }
  if (config.format == "json") {
    ordered_json j;
    j["series"] = mode;
    if (mode == "h") j["m"] = m;
    j["max_degree"] = config.max_degree;
    j["alphabet"] = alphabet.names();
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : s.terms()) {
      terms.push_back({{"k", to_string(k, alphabet)}, {"c", to_string(c)}});
    }
    j["coefficients"] = terms;
    emit(out, j);
  } else {
    out << to_string(s, alphabet);
  }
  return kExitOk;
}

int cmd_lower(const RunConfig& config, const std::string& spec, long r, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(config, {spec});
  const MultiIndex k = parse_multiindex(spec, alphabet);
  const auto cs = c_coefficients(k, r);
  if (config.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [l, c] : cs) {
      terms.push_back({{"l", to_string(l, alphabet)},
                       {"C", json_integer(c)},
                       {"D", json_integer(d_coefficient(k, l))},
                       {"target", to_string(*shift_target(k, l), alphabet)}});
    }
    emit(out, {{"k", to_string(k, alphabet)}, {"r", r}, {"terms", terms}});
  } else {
    if (cs.empty()) out << "0\n";
    for (const auto& [l, c] : cs) {
      out << "ℓ = " << to_string(l, alphabet) << ", C = " << to_string(c) << ", target "
          << to_string(*shift_target(k, l), alphabet) << "\n";
    }
  }
  return kExitOk;
}

int cmd_transition(const RunConfig& config, const std::string& k_spec, const std::string& b_spec,
                   std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(config, {k_spec, b_spec});
  const MultiIndex k = parse_multiindex(k_spec, alphabet);
  const MultiIndex b = parse_multiindex(b_spec, alphabet);
  const UPolynomial gf = transition_gf(k, b);
  if (config.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [d, c] : gf.terms()) terms.push_back({{"degree", d}, {"c", to_string(c)}});
    const ShiftResult shift = find_shift(k, b);
    emit(out, {{"k", to_string(k, alphabet)},
               {"b", to_string(b, alphabet)},
               {"gf", to_string(gf)},
               {"l", shift ? ordered_json(to_string(*shift, alphabet)) : ordered_json(nullptr)},
               {"terms", terms}});
  } else {
    out << to_string(gf) << "\n";
  }
  return kExitOk;
}

int cmd_coproduct(const RunConfig& config, const std::string& spec, const std::string& form_name,
                  std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(config, {spec});
  const MultiIndex k = parse_multiindex(spec, alphabet);
  const CoproductForm form = form_name == "refined-C"   ? CoproductForm::RefinedC
                             : form_name == "refined-D" ? CoproductForm::RefinedD
                                                        : CoproductForm::RawDbar;
  const DecompositionMode mode = config.decomposition == "ordered" ? DecompositionMode::Ordered
                                                                   : DecompositionMode::Multiset;
  const ForestSigma sigma = config.forest_sigma == "sigma-only" ? ForestSigma::SigmaOnly
                            : config.forest_sigma == "mult-only" ? ForestSigma::MultOnly
                                                                 : ForestSigma::MultTimesSigma;
  const TensorExpansion e = coproduct(k, form, mode, sigma);
  if (config.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : e) {
      ordered_json forest = ordered_json::array();
      for (const auto& [factor, m] : key.first) {
        for (long i = 0; i < m; ++i) forest.push_back(to_string(factor, alphabet));
      }
      terms.push_back({{"forest", forest},
                       {"monomial", to_string(key.second, alphabet)},
                       {"c", to_string(c)}});
    }
    emit(out, {{"k", to_string(k, alphabet)},
               {"form", form_name},
               {"decomposition", config.decomposition},
               {"forest_sigma", config.forest_sigma},
               {"terms", terms}});
  } else {
    out << to_string(e, alphabet);
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& config, const OracleOptions& options, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(config, {});
  const OracleReport report = run_oracle(alphabet, options);
  if (config.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"quantity", row.quantity}, {"cases", row.cases}, {"failures", row.failures}});
    }
    ordered_json j{{"max_n", options.max_n}, {"alphabet", alphabet.names()}, {"rows", rows}};
    j["result"] = report.passed() ? "pass" : "fail";
    if (report.first_failure) {
      const auto& f = *report.first_failure;
      j["first_failure"] = {{"quantity", f.quantity},
                            {"subject", f.subject},
                            {"expected", f.expected},
                            {"got", f.got}};
    }
    emit(out, j);
  } else {
    print_oracle_report(out, report, alphabet, options.max_n);
  }
  return report.passed() ? kExitOk : kExitOracleMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of fertility-map fibres of decorated rooted trees",
               "fibrecount"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--alphabet", config.alphabet, "Decoration names, comma separated")
      ->delimiter(',');
  app.add_option("--max-degree", config.max_degree, "Truncation degree for series");
  app.add_option("--max-degree-cap", config.max_degree_cap, "Hard cap on --max-degree");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--decomposition", config.decomposition, "Coproduct decomposition convention")
      ->check(CLI::IsMember({"multiset", "ordered"}));
  app.add_option("--forest-sigma", config.forest_sigma, "Forest symmetry factor convention")
      ->check(CLI::IsMember({"mult-times-sigma", "sigma-only", "mult-only"}));

  std::string k_spec, b_spec, mode = "weighted", form = "raw-dbar";
  long order = 1, m = 1;
  OracleOptions oracle;

  auto* count = app.add_subcommand("count", "F_k, W_k, J_k and L_k of a weight -1 multi-index");
  count->add_option("k", k_spec, "Multi-index, e.g. a:-1=2,a:1=1")->required();

  auto* series = app.add_subcommand("series", "Truncated generating series");
  series->add_option("mode", mode, "weighted, ordinary or h")
      ->check(CLI::IsMember({"weighted", "ordinary", "h"}));
  series->add_option("--m", m, "Multiset size for the h series");

  auto* lower = app.add_subcommand("lower", "Lowering coefficients C_{k,l} with |l| = r");
  lower->add_option("k", k_spec, "Source multi-index")->required();
  lower->add_option("r", order, "Number of lowering steps")->check(CLI::NonNegativeNumber);

  auto* transition = app.add_subcommand("transition", "Coefficient generating function C_{k,b}(u)");
  transition->add_option("k", k_spec, "Source multi-index")->required();
  transition->add_option("b", b_spec, "Target multi-index")->required();

  auto* cop = app.add_subcommand("coproduct", "Expansion of the coproduct of x^k");
  cop->add_option("k", k_spec, "Weight -1 multi-index")->required();
  cop->add_option("--form", form, "Right-leg expansion")
      ->check(CLI::IsMember({"raw-dbar", "refined-C", "refined-D"}));

  auto* orc = app.add_subcommand("oracle", "Brute-force cross-checks with a pass/fail table");
  orc->add_option("--max-n", oracle.max_n, "Largest degree checked");
  orc->add_option("--threads", oracle.threads, "Worker threads")->check(CLI::PositiveNumber);
  orc->add_option("--max-n-cap", oracle.max_n_cap, "Hard cap on --max-n");
  orc->add_option("--max-decorations", oracle.max_decorations, "Hard cap on the alphabet size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*count) return cmd_count(config, k_spec, out);
    if (*series) return cmd_series(config, mode, m, out);
    if (*lower) return cmd_lower(config, k_spec, order, out);
    if (*transition) return cmd_transition(config, k_spec, b_spec, out);
    if (*cop) return cmd_coproduct(config, k_spec, form, out);
    return cmd_oracle(config, oracle, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  }
}

}  // namespace fibre
