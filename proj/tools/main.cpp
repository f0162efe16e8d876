// kmshadow: exact k-binomial representations, shadow functions, and
// brute-force verification sweeps, with text/json/csv reports.
//
// Exit codes: 0 all checks pass, 1 mathematical failure (minimal witness
// reported), 2 usage or parse error, 3 budget exhausted.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmshadow/binrep.hpp"
#include "kmshadow/families.hpp"
#include "kmshadow/verify.hpp"

namespace {

using kmshadow::BigInt;
using kmshadow::Budget;
using kmshadow::CheckReport;
using kmshadow::EqualityCatalog;
using kmshadow::EwObservations;
using kmshadow::Family;
using kmshadow::FamilyKind;
using kmshadow::KBinomialRep;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Text listings are capped so sweeps with tens of thousands of rows stay
// readable; json and csv always carry the complete payload.
constexpr std::size_t kTextRowCap = 20;

enum class Format { kText, kJson, kCsv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format: " + name);
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes the payload to stdout, or to --output when given (with a note on
// stderr so pipelines stay quiet on stdout).
int emit(const std::string& payload, const std::string& output_path, int code) {
  if (output_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot open " << output_path << " for writing\n";
      return kExitUsage;
    }
    out << payload;
    std::cerr << "wrote " << output_path << "\n";
  }
  return code;
}

// ---- rendering helpers -------------------------------------------------

std::string coeffs_to_text(const std::vector<long>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(coeffs[i]);
  }
  out += "]";
  return out;
}

ordered_json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : kv) obj[key] = value;
  return obj;
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["params"] = pairs_to_json(r.params);
  j["lhs"] = kmshadow::to_string(r.lhs);
  j["rhs"] = kmshadow::to_string(r.rhs);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["witness"] = pairs_to_json(r.witness);
  return j;
}

std::string report_text(const CheckReport& r, const char* tag = nullptr) {
  std::string line = tag ? tag : (r.holds ? "[PASS]" : "[FAIL]");
  line += " " + r.check_id;
  for (const auto& [key, value] : r.params) line += " " + key + "=" + value;
  line += " lhs=" + kmshadow::to_string(r.lhs) +
          " rhs=" + kmshadow::to_string(r.rhs);
  line += r.equality ? " equality=true" : " equality=false";
  line += "\n";
  if (!r.holds && !r.witness.empty()) {
    line += "  witness:";
    for (const auto& [key, value] : r.witness) line += " " + key + "=" + value;
    line += "\n";
  }
  return line;
}

void append_rows_capped(std::string& out, const std::vector<std::string>& rows) {
  const std::size_t shown = std::min(rows.size(), kTextRowCap);
  for (std::size_t i = 0; i < shown; ++i) out += rows[i] + "\n";
  if (rows.size() > shown)
    out += "# ... " + std::to_string(rows.size() - shown) +
           " more rows; use --format csv or --format json for the full list\n";
}

ordered_json make_document(const std::string& command, ordered_json params,
                           ordered_json results, ordered_json summary) {
  ordered_json doc;
  doc["version"] = kmshadow::kVersion;
  doc["command"] = command;
  doc["timestamp"] = iso_timestamp();
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  doc["summary"] = std::move(summary);
  return doc;
}

std::string dump_document(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// Prints "label: NN% (done/total)" to stderr at each new decile.
kmshadow::ProgressFn make_progress(std::string label) {
  auto last_decile = std::make_shared<std::atomic<int>>(-1);
  return [label = std::move(label), last_decile](std::uint64_t done,
                                                 std::uint64_t total) {
    const int decile =
        total == 0 ? 10 : static_cast<int>(done * 10 / std::max<std::uint64_t>(total, 1));
    int prev = last_decile->load(std::memory_order_relaxed);
    if (decile <= prev) return;
    if (!last_decile->compare_exchange_strong(prev, decile)) return;
    std::fprintf(stderr, "%s: %3d%% (%llu/%llu)\n", label.c_str(), decile * 10,
                 static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
  };
}

ordered_json catalog_to_json(const EqualityCatalog& cat) {
  ordered_json j;
  j["check_id"] = "main-inequality-sweep";
  j["params"] = ordered_json{{"k", std::to_string(cat.k)},
                             {"n_max", kmshadow::to_string(cat.n_max)}};
  // The sweep throws on any failure, so a returned catalog means every
  // admissible pair passed: lhs = rhs = #checked.
  j["lhs"] = std::to_string(cat.stats.checked);
  j["rhs"] = std::to_string(cat.stats.checked);
  j["holds"] = true;
  j["equality"] = true;
  j["witness"] = ordered_json::object();
  j["stats"] = ordered_json{{"checked", cat.stats.checked},
                            {"strict", cat.stats.strict},
                            {"equal", cat.stats.equal}};
  ordered_json pairs = ordered_json::array();
  for (const auto& [n, a] : cat.pairs)
    pairs.push_back(ordered_json::array(
        {kmshadow::to_string(n), kmshadow::to_string(a)}));
  j["pairs"] = std::move(pairs);
  return j;
}

std::string catalog_text(const EqualityCatalog& cat) {
  std::string out = "[PASS] main-inequality-sweep k=" + std::to_string(cat.k) +
                    " n_max=" + kmshadow::to_string(cat.n_max) +
                    " checked=" + std::to_string(cat.stats.checked) +
                    " strict=" + std::to_string(cat.stats.strict) +
                    " equal=" + std::to_string(cat.stats.equal) +
                    " pairs=" + std::to_string(cat.pairs.size()) + "\n";
  if (!cat.pairs.empty()) {
    out += "equality pairs (k,n,a):\n";
    std::vector<std::string> rows;
    rows.reserve(cat.pairs.size());
    for (const auto& [n, a] : cat.pairs)
      rows.push_back(std::to_string(cat.k) + "," + kmshadow::to_string(n) + "," +
                     kmshadow::to_string(a));
    append_rows_capped(out, rows);
  }
  return out;
}

std::string catalog_csv(const EqualityCatalog& cat) {
  std::string out = "k,n,a\n";
  for (const auto& [n, a] : cat.pairs)
    out += std::to_string(cat.k) + "," + kmshadow::to_string(n) + "," +
           kmshadow::to_string(a) + "\n";
  return out;
}

// ---- rep / translates ----------------------------------------------------

int cmd_rep(const std::string& n_str, int k, bool extended, Format format,
            const std::string& output) {
  const BigInt n = kmshadow::parse_bigint(n_str);
  const KBinomialRep rep = kmshadow::decompose(n, k);
  const BigInt km = kmshadow::kruskal_macaulay(n, k);
  const BigInt kk = kmshadow::kruskal_katona(n, k);
  const bool is_short = kmshadow::classify(n, k) == kmshadow::Parity::Short;
  std::optional<kmshadow::ExtendedRep> ext;
  if (extended && n >= 1) ext = kmshadow::extended_decompose(n, k);

  if (format == Format::kCsv)
    throw std::invalid_argument("csv output is only available for flat sweeps");
  if (format == Format::kText) {
    std::string out;
    out += "n = " + kmshadow::to_string(n) + "\n";
    out += "k = " + std::to_string(k) + "\n";
    out += "representation = " + coeffs_to_text(rep.coeffs) + "\n";
    out += "del^k(n) = " + kmshadow::to_string(km) + "\n";
    out += "del_k(n) = " + kmshadow::to_string(kk) + "\n";
    out += std::string("class = ") + (is_short ? "short" : "long") + "\n";
    if (extended)
      out += "extended = " + (ext ? coeffs_to_text(ext->coeffs) : "(none)") + "\n";
    return emit(out, output, kExitOk);
  }

  ordered_json result;
  result["type"] = "representation";
  result["n"] = kmshadow::to_string(n);
  result["k"] = k;
  result["coefficients"] = rep.coeffs;
  result["kruskal_macaulay"] = kmshadow::to_string(km);
  result["kruskal_katona"] = kmshadow::to_string(kk);
  result["class"] = is_short ? "short" : "long";
  if (extended) {
    if (ext)
      result["extended"] = ext->coeffs;
    else
      result["extended"] = nullptr;
  }
  ordered_json params{{"n", kmshadow::to_string(n)},
                      {"k", k},
                      {"extended", extended}};
  const ordered_json doc =
      make_document("rep", params, ordered_json::array({result}),
                    ordered_json{{"exit", kExitOk}});
  return emit(dump_document(doc), output, kExitOk);
}

int cmd_translates(const std::string& n_str, int k, Format format,
                   const std::string& output) {
  const BigInt n = kmshadow::parse_bigint(n_str);
  const KBinomialRep rep = kmshadow::decompose(n, k);
  const BigInt km = kmshadow::kruskal_macaulay(n, k);
  const BigInt translates = kmshadow::max_translates(n, k);

  if (format == Format::kCsv)
    throw std::invalid_argument("csv output is only available for flat sweeps");
  if (format == Format::kText) {
    std::string out;
    out += "n = " + kmshadow::to_string(n) + "\n";
    out += "k = " + std::to_string(k) + "\n";
    out += "representation = " + coeffs_to_text(rep.coeffs) + "\n";
    out += "del^k(n) = " + kmshadow::to_string(km) + "\n";
    out += "translates = " + kmshadow::to_string(translates) + "\n";
    return emit(out, output, kExitOk);
  }

  ordered_json result;
  result["type"] = "translates";
  result["n"] = kmshadow::to_string(n);
  result["k"] = k;
  result["coefficients"] = rep.coeffs;
  result["kruskal_macaulay"] = kmshadow::to_string(km);
  result["translates"] = kmshadow::to_string(translates);
  const ordered_json doc = make_document(
      "translates", ordered_json{{"n", kmshadow::to_string(n)}, {"k", k}},
      ordered_json::array({result}), ordered_json{{"exit", kExitOk}});
  return emit(dump_document(doc), output, kExitOk);
}

// ---- shadow / enumerate ----------------------------------------------------

ordered_json members_to_json(const Family& fam) {
  ordered_json arr = ordered_json::array();
  for (const kmshadow::Seq& s : fam.members) arr.push_back(s);
  return arr;
}

int cmd_shadow(const std::string& path, Format format, const std::string& output) {
  const Family fam = path == "-" ? kmshadow::parse_family(std::cin)
                                 : kmshadow::parse_family_file(path);
  const Family shade = kmshadow::shadow(fam);
  const BigInt size(static_cast<unsigned long>(fam.size()));
  const BigInt bound = fam.kind == FamilyKind::kMultiset
                           ? kmshadow::kruskal_macaulay(size, fam.length)
                           : kmshadow::kruskal_katona(size, fam.length);
  const BigInt shadow_size(static_cast<unsigned long>(shade.size()));
  const bool equality = shadow_size == bound;

  if (format == Format::kCsv)
    throw std::invalid_argument("csv output is only available for flat sweeps");
  if (format == Format::kText) {
    // Stats ride along as comment lines so the whole payload still parses
    // as a family file.
    std::string out;
    out += "# size = " + std::to_string(fam.size()) + "\n";
    out += "# shadow_size = " + std::to_string(shade.size()) + "\n";
    out += "# bound = " + kmshadow::to_string(bound) + "\n";
    out += std::string("# equality = ") + (equality ? "true" : "false") + "\n";
    if (shade.length >= 1)
      out += kmshadow::format_family(shade);
    else
      out += "# shadow members are empty sequences; family block omitted\n";
    return emit(out, output, kExitOk);
  }

  ordered_json result;
  result["type"] = "shadow";
  result["kind"] = kmshadow::to_string(fam.kind);
  result["k"] = fam.length;
  result["size"] = fam.size();
  result["shadow_size"] = shade.size();
  result["bound"] = kmshadow::to_string(bound);
  result["equality"] = equality;
  result["shadow"] = members_to_json(shade);
  const ordered_json doc = make_document(
      "shadow", ordered_json{{"input", path}},
      ordered_json::array({result}), ordered_json{{"exit", kExitOk}});
  return emit(dump_document(doc), output, kExitOk);
}

int cmd_enumerate(const std::string& kind_str, int k, const std::string& n_str,
                  Format format, const std::string& output) {
  const FamilyKind kind =
      kind_str == "set" ? FamilyKind::kSet : FamilyKind::kMultiset;
  const BigInt n = kmshadow::parse_bigint(n_str);
  const Family fam = kmshadow::enumerate_prefix(kind, k, n);

  if (format == Format::kCsv)
    throw std::invalid_argument("csv output is only available for flat sweeps");
  if (format == Format::kText)
    return emit(kmshadow::format_family(fam), output, kExitOk);

  ordered_json result;
  result["type"] = "family";
  result["kind"] = kmshadow::to_string(kind);
  result["k"] = k;
  result["n"] = kmshadow::to_string(n);
  result["members"] = members_to_json(fam);
  const ordered_json doc = make_document(
      "enumerate",
      ordered_json{{"kind", kmshadow::to_string(kind)},
                   {"k", k},
                   {"n", kmshadow::to_string(n)}},
      ordered_json::array({result}), ordered_json{{"exit", kExitOk}});
  return emit(dump_document(doc), output, kExitOk);
}

// ---- verify / sweep-equality -------------------------------------------

struct VerifyParams {
  int k = 0;        // order (suite-specific default)
  int k1 = 0;       // family length for subset suites
  int m = -1;       // subset count / sample count
  std::string n;    // single-check n (theorem1, ew)
  std::string a;    // single-check a (theorem1, ew)
  std::string n_max;
  int jobs = 1;
  double budget_seconds = 0.0;
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  std::optional<EqualityCatalog> catalog;
  std::optional<EwObservations> observations;
};

SuiteResult run_suite(const std::string& suite, VerifyParams& p) {
  const Budget budget = p.budget_seconds > 0.0
                            ? Budget::from_seconds(p.budget_seconds)
                            : Budget::unlimited();
  SuiteResult out;
  auto default_int = [](int& slot, int value) {
    if (slot <= 0) slot = value;
  };
  auto default_str = [](std::string& slot, const char* value) {
    if (slot.empty()) slot = value;
  };

  if (suite == "theorem1") {
    default_int(p.k, 1);
    if (!p.n.empty() || !p.a.empty()) {
      if (p.n.empty() || p.a.empty())
        throw std::invalid_argument(
            "theorem1 single check needs both --n and --a");
      out.reports.push_back(kmshadow::check_main_inequality(
          p.k, kmshadow::parse_bigint(p.n), kmshadow::parse_bigint(p.a)));
      return out;
    }
    default_str(p.n_max, "2000");
    if (p.k >= 2) out.reports.push_back(kmshadow::sharpness_witness(p.k));
    out.catalog = kmshadow::sweep_main_inequality(
        p.k, kmshadow::parse_bigint(p.n_max), p.jobs, budget,
        make_progress("theorem1 sweep"));
  } else if (suite == "macaulay" || suite == "kk") {
    default_int(p.k1, 2);
    default_int(p.m, 12);
    const FamilyKind kind =
        suite == "macaulay" ? FamilyKind::kMultiset : FamilyKind::kSet;
    out.reports.push_back(
        kmshadow::check_subset_shadow_bound(kind, p.k1, p.m, budget));
  } else if (suite == "identity") {
    default_int(p.k, 3);
    default_str(p.n_max, "2000");
    out.reports.push_back(kmshadow::sweep_shadow_identity(
        p.k, kmshadow::parse_bigint(p.n_max), budget));
  } else if (suite == "lemmas") {
    default_int(p.k, 5);
    default_str(p.n_max, "10000");
    const BigInt bound = kmshadow::parse_bigint(p.n_max);
    for (int k = 1; k <= p.k; ++k)
      out.reports.push_back(kmshadow::check_step_property(k, bound));
    for (int k = 1; k <= p.k; ++k)
      out.reports.push_back(kmshadow::check_extended_agreement(k, bound));
    const BigInt chain_bound = std::min(bound, BigInt(500));
    for (int k = 1; k <= std::min(p.k, 3); ++k)
      out.reports.push_back(
          kmshadow::sweep_coefficient_chain(k, chain_bound, budget));
  } else if (suite == "bv") {
    default_int(p.k, 4);
    default_int(p.m, 2000);
    default_str(p.n_max, "1000");
    const long part_max = std::stol(p.n_max);
    out.reports.push_back(kmshadow::sweep_bjorner_vrecica(
        p.k, static_cast<std::uint64_t>(p.m), part_max, budget,
        make_progress("bv sweep")));
  } else if (suite == "ew") {
    default_int(p.k, 1);
    if (!p.n.empty() || !p.a.empty()) {
      if (p.n.empty() || p.a.empty())
        throw std::invalid_argument("ew single check needs both --n and --a");
      out.reports.push_back(kmshadow::check_eckhoff_wegner(
          p.k, kmshadow::parse_bigint(p.n), kmshadow::parse_bigint(p.a)));
      return out;
    }
    default_str(p.n_max, "200");
    out.observations = kmshadow::sweep_eckhoff_wegner(
        p.k, kmshadow::parse_bigint(p.n_max), budget,
        make_progress("ew sweep"));
  } else if (suite == "decomposition") {
    default_int(p.k1, 2);
    default_int(p.m, 12);
    out.reports.push_back(
        kmshadow::sweep_decomposition_identity(p.k1, p.m, budget));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

// True when all violations stay outside the region {a = 0 or 2a <= n} where
// the max-term inequality is provable.
bool violations_outside_safe_region(const EwObservations& obs) {
  for (const CheckReport& v : obs.violations) {
    BigInt n = 0, a = 0;
    for (const auto& [key, value] : v.params) {
      if (key == "n") n = kmshadow::parse_bigint(value);
      if (key == "a") a = kmshadow::parse_bigint(value);
    }
    if (a == 0 || 2 * a <= n) return false;
  }
  return true;
}

int render_suite(const std::string& command, const std::string& suite,
                 const VerifyParams& p, const SuiteResult& result,
                 Format format, const std::string& output) {
  int code = kExitOk;
  for (const CheckReport& r : result.reports)
    if (!r.holds) code = kExitMathFailure;
  // The ew suite reports violations as data, not failure.
  if (suite == "ew") code = kExitOk;

  if (format == Format::kCsv) {
    if (result.catalog) return emit(catalog_csv(*result.catalog), output, code);
    if (result.observations) {
      std::string out = "k,n,a,lhs,rhs\n";
      for (const CheckReport& v : result.observations->violations) {
        out += std::to_string(result.observations->k);
        for (const auto& [key, value] : v.params)
          if (key == "n" || key == "a") out += "," + value;
        out += "," + kmshadow::to_string(v.lhs) + "," +
               kmshadow::to_string(v.rhs) + "\n";
      }
      return emit(out, output, code);
    }
    if (suite == "lemmas") {
      std::string out = "check,k,bound,checked,passed\n";
      for (const CheckReport& r : result.reports) {
        std::string k, bound, checked, passed;
        for (const auto& [key, value] : r.params) {
          if (key == "k") k = value;
          if (key == "a_max" || key == "n_max") bound = value;
          if (key == "checked") checked = value;
          if (key == "passed") passed = value;
        }
        out += r.check_id + "," + k + "," + bound + "," + checked + "," +
               passed + "\n";
      }
      return emit(out, output, code);
    }
    throw std::invalid_argument("csv output is only available for flat sweeps");
  }

  if (format == Format::kText) {
    std::string out;
    for (const CheckReport& r : result.reports) out += report_text(r);
    if (result.catalog) out += catalog_text(*result.catalog);
    if (result.observations) {
      const EwObservations& obs = *result.observations;
      out += "[DATA] eckhoff-wegner-sweep k=" + std::to_string(obs.k) +
             " n_max=" + kmshadow::to_string(obs.n_max) +
             " checked=" + std::to_string(obs.stats.checked) +
             " strict=" + std::to_string(obs.stats.strict) +
             " equal=" + std::to_string(obs.stats.equal) +
             " violations=" + std::to_string(obs.violations.size()) + "\n";
      out += std::string("all violations have a >= 1 and 2a > n: ") +
             (violations_outside_safe_region(obs) ? "true" : "false") + "\n";
      if (!obs.violations.empty()) {
        out += "violations (k,n,a,lhs,rhs):\n";
        std::vector<std::string> rows;
        rows.reserve(obs.violations.size());
        for (const CheckReport& v : obs.violations) {
          std::string row = std::to_string(obs.k);
          for (const auto& [key, value] : v.params)
            if (key == "n" || key == "a") row += "," + value;
          row += "," + kmshadow::to_string(v.lhs) + "," +
                 kmshadow::to_string(v.rhs);
          rows.push_back(std::move(row));
        }
        append_rows_capped(out, rows);
      }
    }
    return emit(out, output, code);
  }

  ordered_json results = ordered_json::array();
  for (const CheckReport& r : result.reports) results.push_back(report_to_json(r));
  ordered_json summary;
  if (result.catalog) {
    results.push_back(catalog_to_json(*result.catalog));
    summary["equality_pairs"] = result.catalog->pairs.size();
  }
  if (result.observations) {
    const EwObservations& obs = *result.observations;
    ordered_json agg;
    agg["check_id"] = "eckhoff-wegner-sweep";
    agg["params"] = ordered_json{{"k", std::to_string(obs.k)},
                                 {"n_max", kmshadow::to_string(obs.n_max)}};
    agg["lhs"] = std::to_string(obs.stats.checked - obs.violations.size());
    agg["rhs"] = std::to_string(obs.stats.checked);
    agg["holds"] = obs.violations.empty();
    agg["equality"] = obs.violations.empty();
    agg["witness"] = ordered_json::object();
    agg["stats"] = ordered_json{{"checked", obs.stats.checked},
                                {"strict", obs.stats.strict},
                                {"equal", obs.stats.equal}};
    agg["outside_safe_region"] = violations_outside_safe_region(obs);
    results.push_back(std::move(agg));
    for (const CheckReport& v : obs.violations) results.push_back(report_to_json(v));
    summary["violations"] = obs.violations.size();
  }
  std::uint64_t passed = 0, failed = 0;
  for (const ordered_json& r : results) {
    if (r.value("holds", false))
      ++passed;
    else
      ++failed;
  }
  summary["checks"] = results.size();
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["exit"] = code;
  ordered_json params;
  params["suite"] = suite;
  if (p.k > 0) params["k"] = p.k;
  if (p.k1 > 0) params["k1"] = p.k1;
  if (p.m >= 0) params["m"] = p.m;
  if (!p.n.empty()) params["n"] = p.n;
  if (!p.a.empty()) params["a"] = p.a;
  if (!p.n_max.empty()) params["n_max"] = p.n_max;
  params["jobs"] = p.jobs;
  const ordered_json doc =
      make_document(command, std::move(params), std::move(results),
                    std::move(summary));
  return emit(dump_document(doc), output, code);
}

// Renders the minimal witness of a sweep failure in the requested format.
int render_failure(const kmshadow::VerificationFailure& failure, Format format,
                   const std::string& output) {
  const CheckReport& r = failure.report();
  if (format == Format::kJson) {
    const ordered_json doc = make_document(
        "verify", ordered_json{{"suite", "(failed)"}},
        ordered_json::array({report_to_json(r)}),
        ordered_json{{"checks", 1},
                     {"passed", 0},
                     {"failed", 1},
                     {"exit", kExitMathFailure}});
    return emit(dump_document(doc), output, kExitMathFailure);
  }
  return emit(report_text(r), output, kExitMathFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kmshadow: exact k-binomial representations, Kruskal-Macaulay and "
      "Kruskal-Katona shadow functions, lexicographic prefix families, and "
      "brute-force verification sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kmshadow::kVersion));
  // --format/--output live on the parent; let them appear after the
  // subcommand too.
  app.fallthrough();

  std::string format_name = "text";
  std::string output_path;
  app.add_option("--format", format_name, "output format: text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output_path, "write the payload to this file");

  // rep <n> --k K [--extended]
  auto* rep_cmd = app.add_subcommand(
      "rep", "print the k-binomial representation of n, del^k(n), del_k(n), "
             "and whether n is k-short or k-long");
  std::string rep_n;
  int rep_k = 0;
  bool rep_extended = false;
  rep_cmd->add_option("n", rep_n, "the value to represent (decimal)")->required();
  rep_cmd->add_option("--k", rep_k, "representation order (>= 1)")->required();
  rep_cmd->add_flag("--extended", rep_extended,
                    "also print the extended representation when it exists");

  // translates <n> --k K
  auto* translates_cmd = app.add_subcommand(
      "translates", "print n - del^k(n), the greatest number of disjoint "
                    "lexicographic translates");
  std::string translates_n;
  int translates_k = 0;
  translates_cmd->add_option("n", translates_n, "the value (decimal)")->required();
  translates_cmd->add_option("--k", translates_k, "representation order (>= 1)")
      ->required();

  // shadow <file>
  auto* shadow_cmd = app.add_subcommand(
      "shadow", "read a family file ('-' for stdin), print its shadow and the "
                "Kruskal-Macaulay/Kruskal-Katona lower bound");
  std::string shadow_path;
  shadow_cmd->add_option("file", shadow_path, "family file path or '-'")->required();

  // enumerate --kind KIND --k K --n N
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "dump the first n members of M_k or S_k in lexicographic "
                   "order as a family file");
  std::string enumerate_kind = "multiset";
  int enumerate_k = 0;
  std::string enumerate_n;
  enumerate_cmd->add_option("--kind", enumerate_kind, "multiset or set")
      ->check(CLI::IsMember({"multiset", "set"}))
      ->capture_default_str();
  enumerate_cmd->add_option("--k", enumerate_k, "sequence length (>= 1)")->required();
  enumerate_cmd->add_option("--n", enumerate_n, "number of members (decimal)")
      ->required();

  // verify <suite> [flags]
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a verification suite: theorem1, macaulay, kk, identity, "
                "lemmas, bv, ew, or decomposition");
  std::string suite;
  VerifyParams vp;
  verify_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"theorem1", "macaulay", "kk", "identity", "lemmas",
                             "bv", "ew", "decomposition"}));
  verify_cmd->add_option("--k", vp.k,
                         "order (theorem1: 1; identity: max length 3; lemmas: "
                         "max order 5; bv: max order 4; ew: 1)");
  verify_cmd->add_option("--k1", vp.k1,
                         "family length for the subset suites macaulay, kk, "
                         "and decomposition (default 2)");
  verify_cmd->add_option("--m", vp.m,
                         "prefix size for exhaustive subset suites (default "
                         "12, max 20); sample count for bv (default 2000)");
  verify_cmd->add_option("--n", vp.n, "single-check n for theorem1/ew (decimal)");
  verify_cmd->add_option("--a", vp.a, "single-check a for theorem1/ew (decimal)");
  verify_cmd->add_option("--n-max", vp.n_max,
                         "sweep ceiling (theorem1/identity: 2000; lemmas: "
                         "10000; ew: 200; bv part ceiling: 1000)");
  verify_cmd->add_option("--jobs", vp.jobs, "worker threads for theorem1 (>= 1)")
      ->capture_default_str();
  verify_cmd->add_option("--budget-seconds", vp.budget_seconds,
                         "wall-clock budget; 0 means unlimited")
      ->capture_default_str();

  // sweep-equality --k K --n-max N [--jobs J]
  auto* sweep_cmd = app.add_subcommand(
      "sweep-equality", "catalog every equality case of the main inequality "
                        "del^k(a) + del^{k+1}(n-a) >= del^{k+1}(n)");
  int sweep_k = 1;
  std::string sweep_n_max = "2000";
  int sweep_jobs = 1;
  double sweep_budget = 0.0;
  sweep_cmd->add_option("--k", sweep_k, "order (>= 1)")->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_n_max, "sweep ceiling (decimal)")
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (>= 1)")
      ->capture_default_str();
  sweep_cmd->add_option("--budget-seconds", sweep_budget,
                        "wall-clock budget; 0 means unlimited")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Format format = Format::kText;
  try {
    format = parse_format(format_name);
    if (*rep_cmd) return cmd_rep(rep_n, rep_k, rep_extended, format, output_path);
    if (*translates_cmd)
      return cmd_translates(translates_n, translates_k, format, output_path);
    if (*shadow_cmd) return cmd_shadow(shadow_path, format, output_path);
    if (*enumerate_cmd)
      return cmd_enumerate(enumerate_kind, enumerate_k, enumerate_n, format,
                           output_path);
    if (*verify_cmd) {
      const SuiteResult result = run_suite(suite, vp);
      return render_suite("verify " + suite, suite, vp, result, format,
                          output_path);
    }
    if (*sweep_cmd) {
      VerifyParams p;
      p.k = sweep_k;
      p.n_max = sweep_n_max;
      p.jobs = sweep_jobs;
      const Budget budget = sweep_budget > 0.0 ? Budget::from_seconds(sweep_budget)
                                               : Budget::unlimited();
      SuiteResult result;
      result.catalog = kmshadow::sweep_main_inequality(
          p.k, kmshadow::parse_bigint(p.n_max), p.jobs, budget,
          make_progress("sweep-equality"));
      return render_suite("sweep-equality", "sweep-equality", p, result, format,
                          output_path);
    }
  } catch (const kmshadow::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const kmshadow::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return render_failure(e, format, output_path);
  } catch (const kmshadow::FamilyParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
