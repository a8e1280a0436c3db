/**
 * Command-line front end: parse a form-collection description, dispatch the
 * library computations, and emit deterministic machine-readable reports.
 *
 * Exit codes:
 *   0  success (and, with --check, every requested verification passed)
 *   1  a requested verification failed (--check)
 *   2  parse or input errors: malformed documents, bad parameters, bounds
 *   3  hypothesis violations (e.g. non-generic support where required)
 *   4  command-line usage errors
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "foldprod/betti.hpp"
#include "foldprod/decomp.hpp"
#include "foldprod/errors.hpp"
#include "foldprod/field.hpp"
#include "foldprod/fold.hpp"
#include "foldprod/graded.hpp"
#include "foldprod/sigma.hpp"
#include "foldprod/star.hpp"
#include "foldprod/star_model.hpp"
#include "foldprod/version.hpp"
#include "json.hpp"

namespace {

using foldprod::Rat;
using ojson = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitHypothesisViolated = 3;
constexpr int kExitUsageError = 4;

enum class Format { json, csv };

/// Parsed and validated input document, held exactly (over the rationals)
/// until the working field is chosen.
struct InputSpec {
  bool prime_field = false;
  std::uint64_t prime = 0;
  int num_vars = 0;
  std::vector<std::pair<std::vector<Rat>, int>> forms;
  std::vector<std::string> labels;  // one per form; may be empty strings
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw foldprod::ParseError("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Rat coefficient_from_json(const ojson& value, const std::string& where) {
  if (value.is_number_integer())
    return Rat(value.get<long long>());
  if (value.is_string()) return foldprod::rat_from_string(value.get<std::string>());
  throw foldprod::ParseError(where + ": expected an integer or a rational string");
}

InputSpec parse_input_spec(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw foldprod::ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw foldprod::ParseError("top level: expected an object");

  InputSpec spec;
  if (doc.contains("field")) {
    const ojson& f = doc["field"];
    if (f.is_string() && f.get<std::string>() == "rational") {
      spec.prime_field = false;
    } else if (f.is_object() && f.contains("prime") &&
               f["prime"].is_number_unsigned()) {
      spec.prime_field = true;
      spec.prime = f["prime"].get<std::uint64_t>();
    } else {
      throw foldprod::ParseError(
          "field: expected \"rational\" or {\"prime\": p}");
    }
  }
  if (!doc.contains("num_vars") || !doc["num_vars"].is_number_integer())
    throw foldprod::ParseError("num_vars: expected an integer");
  spec.num_vars = doc["num_vars"].get<int>();
  if (spec.num_vars < 1)
    throw foldprod::ParseError("num_vars: must be at least 1");

  if (!doc.contains("forms") || !doc["forms"].is_array() || doc["forms"].empty())
    throw foldprod::ParseError("forms: expected a non-empty array");
  std::size_t index = 0;
  for (const ojson& entry : doc["forms"]) {
    const std::string where = "forms[" + std::to_string(index) + "]";
    if (!entry.is_object())
      throw foldprod::ParseError(where + ": expected an object");
    if (!entry.contains("coeffs") || !entry["coeffs"].is_array())
      throw foldprod::ParseError(where + ".coeffs: expected an array");
    std::vector<Rat> coeffs;
    std::size_t ci = 0;
    for (const ojson& c : entry["coeffs"]) {
      coeffs.push_back(coefficient_from_json(
          c, where + ".coeffs[" + std::to_string(ci) + "]"));
      ++ci;
    }
    if (static_cast<int>(coeffs.size()) != spec.num_vars)
      throw foldprod::ParseError(where + ".coeffs: expected " +
                                 std::to_string(spec.num_vars) + " entries");
    int mult = 1;
    if (entry.contains("multiplicity")) {
      if (!entry["multiplicity"].is_number_integer())
        throw foldprod::ParseError(where + ".multiplicity: expected an integer");
      mult = entry["multiplicity"].get<int>();
      if (mult < 1)
        throw foldprod::ParseError(where + ".multiplicity: must be positive");
    }
    std::string label;
    if (entry.contains("label")) {
      if (!entry["label"].is_string())
        throw foldprod::ParseError(where + ".label: expected a string");
      label = entry["label"].get<std::string>();
    }
    spec.forms.emplace_back(std::move(coeffs), mult);
    spec.labels.push_back(std::move(label));
    ++index;
  }
  return spec;
}

/// Apply a --field override on top of the document's own field choice.
void apply_field_override(InputSpec& spec, const std::string& override_text) {
  if (override_text.empty()) return;
  if (override_text == "rational") {
    spec.prime_field = false;
    spec.prime = 0;
    return;
  }
  std::uint64_t p = 0;
  for (char ch : override_text) {
    if (ch < '0' || ch > '9')
      throw foldprod::ParseError(
          "--field: expected \"rational\" or a prime number");
    p = p * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  spec.prime_field = true;
  spec.prime = p;
}

template <foldprod::ExactField K>
K scalar_from_rat(const Rat& q);

template <>
Rat scalar_from_rat<Rat>(const Rat& q) {
  return q;
}

template <>
foldprod::Fp64 scalar_from_rat<foldprod::Fp64>(const Rat& q) {
  using boost::multiprecision::mpz_int;
  const mpz_int p(foldprod::Fp64::modulus());
  mpz_int num = numerator(q) % p;
  if (num < 0) num += p;
  const mpz_int den = denominator(q) % p;
  if (den == 0)
    throw foldprod::FieldError("coefficient denominator vanishes modulo the prime");
  const foldprod::Fp64 n(num.convert_to<long long>());
  const foldprod::Fp64 d(den.convert_to<long long>());
  return n * d.inverse();
}

template <foldprod::ExactField K>
foldprod::FormCollection<K> collection_from_spec(const InputSpec& spec) {
  std::vector<std::pair<std::vector<K>, int>> raw;
  raw.reserve(spec.forms.size());
  for (const auto& [coeffs, mult] : spec.forms) {
    std::vector<K> row;
    row.reserve(coeffs.size());
    for (const Rat& c : coeffs) row.push_back(scalar_from_rat<K>(c));
    raw.emplace_back(std::move(row), mult);
  }
  return foldprod::build_collection<K>(spec.num_vars, raw);
}

std::string variable_name(int nvars, int i) {
  static constexpr const char* kShort[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return kShort[i];
  return "x" + std::to_string(i);
}

std::string monomial_to_string(const foldprod::Expo& e) {
  const int nvars = static_cast<int>(e.size());
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(nvars, i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

template <foldprod::ExactField K>
std::string poly_to_string(const foldprod::Poly<K>& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<foldprod::Expo, K>> terms(f.terms().begin(),
                                                  f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return foldprod::grevlex_less(b.first, a.first);
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_to_string(e);
    const std::string coeff = foldprod::scalar_to_string(c);
    if (mono == "1") {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

const char* verdict_name(foldprod::Verdict v) {
  switch (v) {
    case foldprod::Verdict::verified: return "verified";
    case foldprod::Verdict::failed: return "failed";
    case foldprod::Verdict::hypothesis_violated: return "hypothesis_violated";
  }
  return "unknown";
}

ojson check_result_json(const foldprod::CheckResult& r) {
  ojson out;
  out["verdict"] = verdict_name(r.verdict);
  out["equal"] = r.equal;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

template <foldprod::ExactField K>
ojson collection_echo(const foldprod::FormCollection<K>& sigma,
                      const InputSpec& spec) {
  ojson forms = ojson::array();
  for (const auto& entry : sigma.entries) {
    ojson f;
    std::vector<std::string> coeffs;
    for (const K& c : entry.form.coeffs)
      coeffs.push_back(foldprod::scalar_to_string(c));
    f["coeffs"] = coeffs;
    f["multiplicity"] = entry.multiplicity;
    forms.push_back(std::move(f));
  }
  ojson echo;
  echo["num_vars"] = sigma.nvars;
  echo["support_size"] = sigma.support_size();
  echo["total_multiplicity"] = sigma.total_multiplicity();
  echo["forms"] = std::move(forms);
  bool any_label = false;
  for (const auto& l : spec.labels) any_label = any_label || !l.empty();
  if (any_label) echo["labels"] = spec.labels;
  return echo;
}

template <foldprod::ExactField K>
ojson provenance_block(const foldprod::FormCollection<K>& sigma,
                       ojson degree_bounds) {
  ojson p;
  p["tool_version"] = foldprod::kVersion;
  p["field"] = foldprod::field_name<K>();
  p["degree_bounds"] = std::move(degree_bounds);
  p["support_rank"] = foldprod::rank_of(sigma);
  p["generic_support"] = foldprod::is_generic_support(sigma);
  return p;
}

void emit(const ojson& report) { std::cout << report.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// gens

template <foldprod::ExactField K>
int run_gens(const InputSpec& spec, int a, std::optional<int> bound,
             Format format, bool /*check*/) {
  if (format == Format::csv)
    throw CLI::ValidationError("--format csv applies to betti and resurgence");
  const foldprod::FormCollection<K> sigma = collection_from_spec<K>(spec);
  const foldprod::FoldIdeal<K> ideal(sigma, a);
  const int D = std::max(bound.value_or(a + 4), a);

  ojson gens = ojson::array();
  const auto& exponents = ideal.generator_exponents();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    ojson g;
    g["support_exponents"] = exponents[i];
    g["polynomial"] = poly_to_string(ideal.generator(i));
    gens.push_back(std::move(g));
  }

  ojson profile = ojson::array();
  const foldprod::GenDegreeProfile degrees =
      foldprod::min_gen_degrees(ideal.generators(), sigma.nvars, D);
  for (const auto& [degree, count] : degrees.counts) {
    ojson row;
    row["degree"] = degree;
    row["count"] = count;
    profile.push_back(std::move(row));
  }

  ojson piece_dims = ojson::array();
  for (int d = 0; d <= D; ++d)
    piece_dims.push_back(ojson::array({d, ideal.piece(d).dim()}));

  ojson report;
  report["command"] = "gens";
  report["parameters"] = {{"fold", a}, {"degree_bound", D}};
  report["input"] = collection_echo(sigma, spec);
  report["results"]["generator_count"] = gens.size();
  report["results"]["generators"] = std::move(gens);
  report["results"]["min_generator_degrees"] = std::move(profile);
  report["results"]["equigenerated"] = degrees.equigenerated;
  report["results"]["piece_dims"] = std::move(piece_dims);
  report["provenance"] = provenance_block(sigma, ojson{{"piece_table", D}});
  emit(report);
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// decompose

template <foldprod::ExactField K>
int run_decompose(const InputSpec& spec, int a, std::optional<int> bound,
                  Format format, bool check) {
  if (format == Format::csv)
    throw CLI::ValidationError("--format csv applies to betti and resurgence");
  const foldprod::FormCollection<K> sigma = collection_from_spec<K>(spec);
  const int D = std::max(bound.value_or(a + 4), a);

  ojson results;
  bool generic = foldprod::is_generic_support(sigma);
  if (generic) {
    const foldprod::Decomposition<K> decomp =
        foldprod::cor24_decomposition(sigma, a);
    ojson comps = ojson::array();
    for (const auto& comp : decomp.components) {
      ojson c;
      c["support_indices"] = comp.prime.support;
      bool any_label = false;
      for (const auto& l : spec.labels) any_label = any_label || !l.empty();
      if (any_label) {
        std::vector<std::string> names;
        for (std::size_t idx : comp.prime.support)
          names.push_back(idx < spec.labels.size() ? spec.labels[idx]
                                                   : std::string());
        c["support_labels"] = names;
      }
      c["codim"] = comp.prime.codim();
      c["exponent"] = comp.exponent;
      ojson basis = ojson::array();
      for (std::size_t r = 0; r < comp.prime.span.basis.rows(); ++r) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < comp.prime.span.basis.cols(); ++j)
          row.push_back(foldprod::scalar_to_string(comp.prime.span.basis(r, j)));
        basis.push_back(row);
      }
      c["span_basis"] = std::move(basis);
      comps.push_back(std::move(c));
    }
    results["components"] = std::move(comps);
    results["includes_irrelevant"] = decomp.includes_irrelevant;
  } else {
    results["components"] = nullptr;
    results["note"] =
        "support is not generic; the component formula is not asserted";
  }

  const foldprod::CheckResult lemma = foldprod::verify_lemma21(sigma, a, D);
  const foldprod::CheckResult equality = foldprod::verify_cor24(sigma, a, D);
  const foldprod::CheckResult saturation = foldprod::verify_prop22(sigma, a, D);
  results["containment_in_components"] = check_result_json(lemma);
  results["component_equality"] = check_result_json(equality);
  results["saturation_match"] = check_result_json(saturation);

  ojson report;
  report["command"] = "decompose";
  report["parameters"] = {{"fold", a}, {"degree_bound", D}};
  report["input"] = collection_echo(sigma, spec);
  report["results"] = std::move(results);
  report["provenance"] = provenance_block(sigma, ojson{{"verification", D}});
  emit(report);

  if (check) {
    const auto bad = [](const foldprod::CheckResult& r) {
      return r.verdict == foldprod::Verdict::failed;
    };
    if (bad(lemma) || bad(equality) || bad(saturation))
      return kExitVerificationFailed;
    const auto violated = [](const foldprod::CheckResult& r) {
      return r.verdict == foldprod::Verdict::hypothesis_violated;
    };
    if (violated(lemma) || violated(equality) || violated(saturation))
      return kExitHypothesisViolated;
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// betti

void emit_betti_csv(const foldprod::BettiTable& table) {
  int max_strand = 0;
  for (const auto& [ij, v] : table.entries)
    max_strand = std::max(max_strand, ij.second - ij.first);
  std::ostringstream out;
  out << "i\\j-i";
  for (int s = 0; s <= max_strand; ++s) out << "," << s;
  out << "\n";
  for (int i = 0; i <= table.max_homological_index(); ++i) {
    out << i;
    for (int s = 0; s <= max_strand; ++s) out << "," << table.value(i, i + s);
    out << "\n";
  }
  std::cout << out.str();
}

template <foldprod::ExactField K>
int run_betti(const InputSpec& spec, int a, std::optional<int> bound,
              Format format, bool check) {
  const foldprod::FormCollection<K> sigma = collection_from_spec<K>(spec);
  const foldprod::FoldIdeal<K> ideal(sigma, a);
  const int D = std::max(bound.value_or(a + sigma.nvars + 2), a);
  const int i_max = sigma.nvars;

  foldprod::BettiTable table;
  ojson linearity;
  bool linear_ok = true;
  if (ideal.is_zero()) {
    table = foldprod::koszul_tor_dims(foldprod::GeneratorSet<K>{}, sigma.nvars,
                                      i_max, D);
    linearity = nullptr;
  } else {
    const foldprod::LinearityReport report = foldprod::is_linear_resolution(
        ideal.generators(), sigma.nvars, a, i_max, D);
    table = report.table;
    linearity["linear"] = report.linear;
    linearity["generation_degree"] = report.generation_degree;
    if (report.regularity >= 0) linearity["regularity"] = report.regularity;
    if (!report.detail.empty()) linearity["detail"] = report.detail;
    linear_ok = report.linear;
  }

  if (format == Format::csv) {
    emit_betti_csv(table);
  } else {
    ojson entries = ojson::array();
    for (const auto& [ij, v] : table.entries)
      entries.push_back(ojson::array({ij.first, ij.second, v}));

    ojson report;
    report["command"] = "betti";
    report["parameters"] = {
        {"fold", a}, {"homological_bound", i_max}, {"degree_bound", D}};
    report["input"] = collection_echo(sigma, spec);
    report["results"]["betti_entries"] = std::move(entries);
    report["results"]["window_certified"] = table.window_certified();
    if (table.window_certified() && !table.entries.empty())
      report["results"]["quotient_regularity"] = table.regularity();
    else
      report["results"]["quotient_regularity"] = nullptr;
    report["results"]["linear_resolution"] = std::move(linearity);
    report["provenance"] = provenance_block(
        sigma, ojson{{"internal_degree", D}, {"homological_index", i_max}});
    emit(report);
  }

  if (check && !linear_ok) return kExitVerificationFailed;
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// ghw

template <foldprod::ExactField K>
int run_ghw(const InputSpec& spec, Format format, bool /*check*/) {
  if (format == Format::csv)
    throw CLI::ValidationError("--format csv applies to betti and resurgence");
  const foldprod::FormCollection<K> sigma = collection_from_spec<K>(spec);

  const bool full_rank = foldprod::rank_of(sigma) == sigma.nvars;
  const foldprod::FormCollection<K>* effective = &sigma;
  foldprod::Reembedding<K> re;
  if (!full_rank) {
    re = foldprod::reembed(sigma);
    effective = &re.collection;
  }

  ojson report;
  report["command"] = "ghw";
  report["parameters"] = ojson::object();
  report["input"] = collection_echo(sigma, spec);
  report["results"]["weights"] = foldprod::generalized_hamming_weights(*effective);
  report["results"]["heights"] = foldprod::height_profile(sigma);
  report["results"]["reembedded"] = !full_rank;
  if (!full_rank) report["results"]["kept_coordinates"] = re.kept_coords;
  report["provenance"] = provenance_block(sigma, ojson::object());
  emit(report);
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// star

template <foldprod::ExactField K>
int run_star(const InputSpec& spec, int c, int m, std::optional<int> bound,
             Format format, bool check) {
  if (format == Format::csv)
    throw CLI::ValidationError("--format csv applies to betti and resurgence");
  const foldprod::FormCollection<K> sigma = collection_from_spec<K>(spec);
  const foldprod::StarConfig<K> config = foldprod::make_star(sigma, c);
  const int D = std::max(bound.value_or(m * config.fold() + 4),
                         m * config.fold());

  const foldprod::FoldIdeal<K> ideal = foldprod::star_ideal(config);
  ojson symbolic = ojson::array();
  ojson ordinary = ojson::array();
  for (int d = 0; d <= D; ++d) {
    symbolic.push_back(
        ojson::array({d, foldprod::symbolic_power_piece(config, m, d).dim()}));
    ordinary.push_back(
        ojson::array({d, foldprod::power_piece(config, m, d).dim()}));
  }

  const foldprod::GhmReport<K> ghm = foldprod::verify_ghm(config, m, D);
  ojson verdict;
  verdict["verdict"] = ghm.ok() ? "verified" : "failed";
  verdict["power_equals_symbolic_intersection"] = ghm.rhs_equality;
  verdict["power_equals_scaled_fold"] = ghm.scaled_fold_matches;
  verdict["components_match"] = ghm.components_match;
  if (!ghm.detail.empty()) verdict["detail"] = ghm.detail;

  ojson report;
  report["command"] = "star";
  report["parameters"] = {{"codim", c}, {"power", m}, {"degree_bound", D}};
  report["input"] = collection_echo(sigma, spec);
  report["results"]["fold"] = config.fold();
  report["results"]["generator_count"] = ideal.generators().size();
  report["results"]["symbolic_dims"] = std::move(symbolic);
  report["results"]["ordinary_dims"] = std::move(ordinary);
  report["results"]["power_decomposition"] = std::move(verdict);
  report["provenance"] = provenance_block(sigma, ojson{{"verification", D}});
  emit(report);

  if (check && !ghm.ok()) return kExitVerificationFailed;
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// resurgence

void emit_resurgence_csv(const foldprod::ResurgenceScan& scan) {
  std::ostringstream out;
  out << "m\\r";
  for (int r = 1; r <= scan.r_max; ++r) out << "," << r;
  out << "\n";
  for (int m = 1; m <= scan.m_max; ++m) {
    out << m;
    for (int r = 1; r <= scan.r_max; ++r)
      out << "," << (scan.contained[m - 1][r - 1] ? 1 : 0);
    out << "\n";
  }
  std::cout << out.str();
}

template <foldprod::ExactField K>
ojson run_transfer(const InputSpec& spec, int s, int c, int m, int r,
                   std::optional<int> bound, bool* agree) {
  const foldprod::FormCollection<K> sigma = collection_from_spec<K>(spec);
  if (sigma.support_size() != s)
    throw foldprod::DimensionError(
        "transfer collection must have exactly the model's number of forms");
  const foldprod::StarConfig<K> config = foldprod::make_star(sigma, c);
  const int D =
      std::max(bound.value_or(r * config.fold() + 4), r * config.fold());
  const foldprod::PhiTransferReport report =
      foldprod::phi_transfer_check(config, m, r, D);
  *agree = report.verdicts_agree && report.min_gens_transfer;
  ojson out;
  out["power"] = report.m;
  out["ordinary"] = report.r;
  out["degree_bound"] = report.degree_bound;
  out["model_contained"] = report.model_contained;
  out["generic_contained"] = report.generic_contained;
  out["verdicts_agree"] = report.verdicts_agree;
  out["min_gens_transfer"] = report.min_gens_transfer;
  out["field"] = foldprod::field_name<K>();
  out["generic_support"] = foldprod::is_generic_support(sigma);
  return out;
}

int run_resurgence(int s, int c, int m_max, int r_max,
                   const std::string& transfer_path, int transfer_m,
                   int transfer_r, std::optional<int> bound,
                   const std::string& field_override, Format format,
                   bool check) {
  const foldprod::MonomialStarModel model = foldprod::make_star_model(s, c);
  const foldprod::ResurgenceScan scan =
      foldprod::resurgence_search(model, m_max, r_max);

  if (format == Format::csv) {
    emit_resurgence_csv(scan);
    return kExitSuccess;
  }

  ojson results;
  results["formula"] = {{"num", scan.formula.num}, {"den", scan.formula.den}};
  ojson table = ojson::array();
  for (int m = 1; m <= m_max; ++m) {
    ojson row = ojson::array();
    for (int r = 1; r <= r_max; ++r) row.push_back(scan.contained[m - 1][r - 1]);
    table.push_back(std::move(row));
  }
  results["contained"] = std::move(table);
  ojson fails = ojson::array();
  for (const auto& f : scan.failures)
    fails.push_back(ojson::array({f.m, f.r}));
  results["failures"] = std::move(fails);
  results["failures_all_below_formula"] = scan.failures_all_below_formula;
  if (scan.sharpest)
    results["sharpest_failure"] = ojson::array({scan.sharpest->m, scan.sharpest->r});
  else
    results["sharpest_failure"] = nullptr;
  results["witness_within_one_over_r"] = scan.witness_within_one_over_r;
  results["note"] =
      "the table reports the scanned window only; the supremum is not claimed "
      "to be attained";

  bool transfer_agrees = true;
  if (!transfer_path.empty()) {
    InputSpec spec = parse_input_spec(read_source(transfer_path));
    apply_field_override(spec, field_override);
    if (spec.prime_field) {
      foldprod::Fp64::set_modulus(spec.prime);
      results["transfer"] = run_transfer<foldprod::Fp64>(
          spec, s, c, transfer_m, transfer_r, bound, &transfer_agrees);
    } else {
      results["transfer"] = run_transfer<Rat>(spec, s, c, transfer_m,
                                              transfer_r, bound, &transfer_agrees);
    }
  }

  ojson report;
  report["command"] = "resurgence";
  report["parameters"] = {{"hyperplanes", s},
                          {"codim", c},
                          {"m_max", m_max},
                          {"r_max", r_max}};
  report["results"] = std::move(results);
  report["provenance"] = {{"tool_version", foldprod::kVersion},
                          {"field", "integer (monomial model)"}};
  emit(report);

  if (check) {
    if (!scan.failures_all_below_formula) return kExitVerificationFailed;
    if (!transfer_agrees) return kExitVerificationFailed;
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------

template <foldprod::ExactField K>
int dispatch_command(const std::string& command, const InputSpec& spec, int a,
                     int c, int m, std::optional<int> bound, Format format,
                     bool check) {
  if (command == "gens") return run_gens<K>(spec, a, bound, format, check);
  if (command == "decompose")
    return run_decompose<K>(spec, a, bound, format, check);
  if (command == "betti") return run_betti<K>(spec, a, bound, format, check);
  if (command == "ghw") return run_ghw<K>(spec, format, check);
  if (command == "star") return run_star<K>(spec, c, m, bound, format, check);
  throw foldprod::Error("unknown command dispatch");
}

int run_with_input(const std::string& command, const std::string& input_path,
                   const std::string& field_override, int a, int c, int m,
                   std::optional<int> bound, Format format, bool check) {
  InputSpec spec = parse_input_spec(read_source(input_path));
  apply_field_override(spec, field_override);
  if (spec.prime_field) {
    foldprod::Fp64::set_modulus(spec.prime);
    return dispatch_command<foldprod::Fp64>(command, spec, a, c, m, bound,
                                            format, check);
  }
  return dispatch_command<Rat>(command, spec, a, c, m, bound, format, check);
}

ojson error_report(const std::string& kind, const std::string& message) {
  ojson out;
  out["error"] = {{"kind", kind}, {"message", message}};
  out["provenance"] = {{"tool_version", foldprod::kVersion}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with ideals of products of linear forms"};
  app.require_subcommand(1);

  std::string input_path;
  std::string field_override;
  std::string format_text = "json";
  bool check = false;
  int fold = 1;
  int codim = 1;
  int power = 1;
  int degree_bound = -1;  // -1 = use the documented default, echoed in output

  const auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("input", input_path,
                      "collection document (path, or - for stdin)")
          ->required();
    cmd->add_option("--field", field_override,
                    "override the document's field: rational, or a prime");
    cmd->add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--check", check, "turn verdicts into the exit code");
    cmd->add_option("--degree-bound", degree_bound,
                    "degree window for pieces and verifications");
  };

  CLI::App* gens = app.add_subcommand("gens", "generators of the fold ideal");
  add_common(gens, true);
  gens->add_option("--fold", fold, "number of factors in each product")
      ->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "primary components and verifications");
  add_common(decompose, true);
  decompose->add_option("--fold", fold, "number of factors in each product")
      ->required();

  CLI::App* betti =
      app.add_subcommand("betti", "Betti table and linear-resolution verdict");
  add_common(betti, true);
  betti->add_option("--fold", fold, "number of factors in each product")
      ->required();

  CLI::App* ghw = app.add_subcommand(
      "ghw", "duplication weights and the height profile");
  add_common(ghw, true);

  CLI::App* star = app.add_subcommand(
      "star", "star configuration powers and their decomposition");
  add_common(star, true);
  star->add_option("--codim", codim, "codimension of the star components")
      ->required();
  star->add_option("--power", power, "power of the star ideal")->required();

  CLI::App* resurgence = app.add_subcommand(
      "resurgence", "containment table of the coordinate model");
  int s_planes = 0;
  int m_max = 0;
  int r_max = 0;
  std::string transfer_path;
  int transfer_m = 2;
  int transfer_r = 2;
  resurgence->add_option("-s,--hyperplanes", s_planes, "number of hyperplanes")
      ->required();
  resurgence->add_option("-c,--codim", codim, "codimension of the components")
      ->required();
  resurgence->add_option("--m-max", m_max, "largest symbolic power")
      ->required();
  resurgence->add_option("--r-max", r_max, "largest ordinary power")
      ->required();
  resurgence->add_option("--transfer", transfer_path,
                         "collection document for the generic cross-check");
  resurgence->add_option("--transfer-power", transfer_m,
                         "symbolic power for the cross-check");
  resurgence->add_option("--transfer-ordinary", transfer_r,
                         "ordinary power for the cross-check");
  resurgence->add_option("--field", field_override,
                         "field override for the cross-check document");
  resurgence->add_option("--format", format_text, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  resurgence->add_flag("--check", check, "turn verdicts into the exit code");
  resurgence->add_option("--degree-bound", degree_bound,
                         "degree window for the cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  const Format format = format_text == "csv" ? Format::csv : Format::json;
  const std::optional<int> bound =
      degree_bound >= 0 ? std::optional<int>(degree_bound) : std::nullopt;

  try {
    if (resurgence->parsed()) {
      return run_resurgence(s_planes, codim, m_max, r_max, transfer_path,
                            transfer_m, transfer_r, bound, field_override,
                            format, check);
    }
    const std::string command = app.get_subcommands().front()->get_name();
    return run_with_input(command, input_path, field_override, fold, codim,
                          power, bound, format, check);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsageError;
  } catch (const foldprod::HypothesisError& e) {
    emit(error_report("hypothesis_violation", e.what()));
    return kExitHypothesisViolated;
  } catch (const foldprod::ParseError& e) {
    emit(error_report("parse_error", e.what()));
    return kExitInputError;
  } catch (const foldprod::BoundError& e) {
    emit(error_report("bound_error", e.what()));
    return kExitInputError;
  } catch (const foldprod::Error& e) {
    emit(error_report("input_error", e.what()));
    return kExitInputError;
  } catch (const std::exception& e) {
    emit(error_report("error", e.what()));
    return kExitInputError;
  }
}
