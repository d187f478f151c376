#include "tracecodes/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tracecodes/codes.hpp"
#include "tracecodes/cyclotomy.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/poly.hpp"

namespace tracecodes::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  u64 p = 0;
  unsigned s = 1;
  unsigned m = 1;
  u64 N = 0;
  std::string variant = "c1";
  std::string method;
  std::string output = "text";
  u64 max_pairs = kDefaultMaxPairs;
  bool force = false;
  u64 max_r = 4096;
};

// Outcome of a subcommand: the report and the exit code it implies.
struct Result {
  json report;
  int code = kOk;
};

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, clean(x));
  return buf;
}

json period_entry(const CyclotomicInteger& v, u64 order, std::optional<u64> index, const std::string& source) {
  const auto z = v.embed();
  return {{"order", order},
          {"index", index ? json(*index) : json(nullptr)},
          {"coeffs", v.coeffs()},
          {"value", v.to_string()},
          {"embedding_re", clean(z.real())},
          {"embedding_im", clean(z.imag())},
          {"source", source}};
}

json period_list(const GaussPeriodSet& set, const std::string& source) {
  json out = json::array();
  for (u64 i = 0; i < set.N; ++i) out.push_back(period_entry(set.values[i], set.N, i, source));
  return out;
}

json closed_entries(const ClosedFormSet& closed) {
  json out = json::array();
  for (const auto& cv : closed.values) {
    const auto z = cv.value.embed();
    json coeffs = json::array();
    try {
      coeffs = surd_to_cyclotomic(cv.value, closed.p).coeffs();
    } catch (const ParameterError&) {
      // value not expressible over Z[zeta_p]: embeddings only
    }
    out.push_back({{"order", closed.N},
                   {"index", cv.index ? json(*cv.index) : json(nullptr)},
                   {"coeffs", coeffs},
                   {"value", cv.value.to_string()},
                   {"embedding_re", clean(z.real())},
                   {"embedding_im", clean(z.imag())},
                   {"source", "closed:" + closed.family}});
  }
  return out;
}

json field_json(const Field& f) {
  return {{"p", f.characteristic()},
          {"degree", f.degree()},
          {"size", f.size()},
          {"modulus", f.modulus().coeffs},
          {"modulus_text", to_string(f.modulus())},
          {"primitive_element", f.coefficients(f.primitive_element())},
          {"primitive_element_text", f.to_string(f.primitive_element())},
          {"log_tables", f.has_tables()}};
}

json spec_json(const CodeSpec& spec, std::optional<unsigned> dimension) {
  return {{"variant", to_string(spec.variant)},
          {"p", spec.p},
          {"s", spec.s},
          {"m", spec.m},
          {"q", spec.q},
          {"r", spec.r},
          {"n", spec.n},
          {"N", spec.N},
          {"dimension", dimension ? json(*dimension) : json(nullptr)}};
}

// Published values known to disagree with exact computation.
std::vector<std::string> known_errata(u64 p, unsigned sm, u64 N, const CodeSpec* spec) {
  std::vector<std::string> out;
  if (p == 5 && sm == 4 && N == 4) {
    out.emplace_back(
        "published order-4 periods over GF(5^4) give {eta_1, eta_3} = {1, 11}; exact computation gives {16, -4}");
    if (spec != nullptr && spec->variant == Variant::C1 && spec->s == 1) {
      out.emplace_back(
          "published enumerator 1+156x^116+624x^112+312x^124+1248x^125+624x^127+156x^136+4x^156 follows from "
          "{1, 11} with 624x^122 misprinted as 624x^112; the oracle gives "
          "1+156x^112+624x^122+780x^124+624x^125+780x^128+156x^136+4x^156 (minimum weight 112, not 116)");
    }
  }
  return out;
}

std::string index2_swap_note(u64 p, unsigned sm, u64 N) {
  return "index-2 closed form for p=" + std::to_string(p) + " sm=" + std::to_string(sm) + " N=" + std::to_string(N) +
         " pairs residue and non-residue classes the other way round for this primitive element (multisets agree)";
}

std::vector<std::string> diff_distributions(const WeightDistribution& a, const std::string& a_name,
                                            const WeightDistribution& b, const std::string& b_name,
                                            const std::string& context) {
  std::vector<std::string> out;
  std::set<u64> weights;
  for (const auto& [w, c] : a.entries()) weights.insert(w);
  for (const auto& [w, c] : b.entries()) weights.insert(w);
  for (u64 w : weights) {
    if (a.count(w) != b.count(w)) {
      out.push_back(context + ": weight " + std::to_string(w) + " " + a_name + "=" + std::to_string(a.count(w)) + " " +
                    b_name + "=" + std::to_string(b.count(w)));
    }
  }
  return out;
}

void append(std::vector<std::string>& dst, const std::vector<std::string>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// ---------------------------------------------------------------------------
// field

Result run_field(const Options& o) {
  const unsigned degree = o.s * o.m;
  if (!is_prime(o.p)) throw ParameterError("p = " + std::to_string(o.p) + " is not prime");
  const Field f = build_field(o.p, degree);
  Result res;
  res.report = {{"method", "field"}, {"field", field_json(f)}, {"errata", json::array()}};
  return res;
}

// ---------------------------------------------------------------------------
// periods

Result run_periods(const Options& o) {
  const std::string method = o.method.empty() ? "both" : o.method;
  if (method != "brute" && method != "closed" && method != "both") {
    throw ParameterError("periods --method must be brute, closed or both");
  }
  if (!is_prime(o.p)) throw ParameterError("p = " + std::to_string(o.p) + " is not prime");
  const unsigned sm = o.s * o.m;
  const Field f = build_field(o.p, sm);
  if (o.N < 1 || f.group_order() % o.N != 0) {
    throw ParameterError("N = " + std::to_string(o.N) + " does not divide r-1 = " + std::to_string(f.group_order()));
  }

  Result res;
  json& rep = res.report;
  rep["method"] = method;
  rep["params"] = {{"p", o.p}, {"sm", sm}, {"r", f.size()}, {"N", o.N}};
  rep["periods"] = json::array();
  rep["closed_forms"] = json::array();
  rep["mismatches"] = json::array();
  rep["notes"] = json::array();
  json errata = json::array();
  for (const auto& e : known_errata(o.p, sm, o.N, nullptr)) errata.push_back(e);

  std::optional<GaussPeriodSet> brute;
  if (method != "closed") {
    brute = gauss_periods(f, o.N);
    for (auto& e : period_list(*brute, "brute")) rep["periods"].push_back(e);
    if (!(brute->sum() == CyclotomicInteger::from_integer(brute->p, -1))) {
      rep["mismatches"].push_back("period sum is " + brute->sum().to_string() + ", expected -1");
    }
  }
  if (method != "brute") {
    const auto closed = applicable_closed_forms(o.p, sm, o.N);
    if (closed.empty()) {
      if (method == "closed") {
        throw ParameterError("no closed form applies to p=" + std::to_string(o.p) + " sm=" + std::to_string(sm) +
                             " N=" + std::to_string(o.N));
      }
      rep["notes"].push_back("no closed form applies; brute force only");
    }
    for (const auto& c : closed) {
      for (auto& e : closed_entries(c)) rep["periods"].push_back(e);
      json entry = {{"family", c.family}, {"unordered", c.has_unordered()}, {"notes", c.notes}};
      if (brute) {
        const bool multiset = closed_form_matches(c, *brute);
        entry["multiset_match"] = multiset;
        if (!multiset) rep["mismatches"].push_back(c.family + " closed form disagrees with brute force");
        if (!c.has_unordered()) {
          const bool indexed = closed_form_indices_match(c, *brute);
          entry["index_match"] = indexed;
          if (!indexed && multiset) {
            if (c.family == "index2") {
              errata.push_back(index2_swap_note(o.p, sm, o.N));
            } else {
              rep["mismatches"].push_back(c.family + " closed form assigns values to the wrong classes");
            }
          }
        } else {
          entry["index_match"] = nullptr;
        }
      } else {
        entry["multiset_match"] = nullptr;
        entry["index_match"] = nullptr;
      }
      rep["closed_forms"].push_back(entry);
    }
  }
  rep["errata"] = errata;
  res.code = rep["mismatches"].empty() ? kOk : kMismatch;
  return res;
}

// ---------------------------------------------------------------------------
// code

// Period sets of one field, computed once per order. Sweeps ask for the same
// orders repeatedly (d, N, N/d and 2N across specs); the cache is dropped
// whenever it grows past a few hundred megabytes of coefficients.
class PeriodCache {
 public:
  explicit PeriodCache(const Field& f) : f_(f) {}

  const GaussPeriodSet& full(u64 N) { return get(f_.degree(), N); }
  const GaussPeriodSet& sub(unsigned s, u64 L) { return get(s, L); }

 private:
  const GaussPeriodSet& get(unsigned s, u64 N) {
    const auto key = std::pair{s, N};
    if (auto it = sets_.find(key); it != sets_.end()) return it->second;
    const u64 cost = N * f_.characteristic();
    if (held_ + cost > kMaxHeld) {
      sets_.clear();
      held_ = 0;
    }
    held_ += cost;
    auto set = s == f_.degree() ? gauss_periods(f_, N) : subfield_gauss_periods(f_, s, N);
    return sets_.emplace(key, std::move(set)).first->second;
  }

  static constexpr u64 kMaxHeld = u64{1} << 25;
  const Field& f_;
  std::map<std::pair<unsigned, u64>, GaussPeriodSet> sets_;
  u64 held_ = 0;
};

struct CodeRun {
  std::optional<WeightDistribution> table;
  std::optional<WeightDistribution> semiprimitive;
  std::optional<OracleResult> oracle;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
};

bool semiprimitive_applies(const CodeSpec& spec) {
  if (!c2_table_obstacle(spec).empty()) return false;
  const auto e = semiprimitive_exponent(spec.p, 2 * spec.N);
  return e && spec.s % *e == 0;
}

// Runs the requested routes and cross-checks whatever was computed.
CodeRun evaluate_code(const Code& code, PeriodCache& periods, const std::string& method,
                      const OracleOptions& oracle_opts) {
  const auto& spec = code.spec();
  CodeRun run;
  const bool want_table = method != "oracle";
  const bool want_oracle = method != "table";
  if (want_table) {
    if (spec.variant == Variant::C1) {
      run.table = table_distribution_c1(spec, periods.full(spec.d), periods.full(spec.N),
                                        periods.sub(spec.s, spec.N / spec.d));
    } else if (auto why = c2_table_obstacle(spec); why.empty()) {
      run.table = table_distribution_c2(spec, periods.full(spec.N), periods.full(2 * spec.N));
      if (semiprimitive_applies(spec)) run.semiprimitive = table_distribution_c2_semiprimitive(spec);
    } else if (method == "table") {
      throw ParameterError(why);
    } else {
      run.notes.push_back("table not applicable: " + why);
    }
  }
  if (want_oracle) run.oracle = oracle_distribution(code, oracle_opts);

  const std::string ctx = spec.describe();
  if (run.table && run.oracle) append(run.mismatches, diff_distributions(*run.table, "table", run.oracle->pairs, "oracle", ctx));
  if (run.table && run.semiprimitive) {
    append(run.mismatches, diff_distributions(*run.table, "table", *run.semiprimitive, "semiprimitive", ctx));
  }
  if (run.oracle && run.oracle->distinct_codewords) {
    const u64 expected = static_cast<u64>(checked_pow(static_cast<i64>(spec.q), run.oracle->dimension));
    if (*run.oracle->distinct_codewords != expected) {
      run.mismatches.push_back(ctx + ": " + std::to_string(*run.oracle->distinct_codewords) +
                               " distinct codewords, expected q^dim = " + std::to_string(expected));
    }
  }
  const WeightDistribution& pairs = run.oracle ? run.oracle->pairs : *run.table;
  if (static_cast<u128>(pairs.weight_sum()) * spec.q != static_cast<u128>(spec.n) * (spec.q - 1) * spec.pair_total()) {
    run.mismatches.push_back(ctx + ": mean weight differs from n(q-1)/q");
  }
  if (run.oracle && pairs.min_weight() + run.oracle->dimension > spec.n + 1) {
    run.mismatches.push_back(ctx + ": minimum weight exceeds the Singleton bound");
  }
  const auto bound = min_weight_bound(spec);
  if (bound &&!bound->at_most(static_cast<i64>(pairs.min_weight()), 1)) {
    run.mismatches.push_back(ctx + ": minimum weight " + std::to_string(pairs.min_weight()) + " is below the bound " +
                             bound->to_string());
  }
  return run;
}

Result run_code(const Options& o, const OracleOptions& oracle_opts) {
  const std::string method = o.method.empty() ? "both" : o.method;
  if (method != "table" && method != "oracle" && method != "both") {
    throw ParameterError("code --method must be table, oracle or both");
  }
  const auto spec = CodeSpec::make(parse_variant(o.variant), o.p, o.s, o.m, o.N);
  const Code code(spec);
  const FieldPoly h = code.parity_check();
  const auto dimension = static_cast<unsigned>(h.degree());
  PeriodCache periods(code.field());
  const auto run = evaluate_code(code, periods, method, oracle_opts);

  Result res;
  json& rep = res.report;
  rep["method"] = method;
  rep["code"] = spec_json(spec, dimension);
  rep["parity_check"] = code.field().to_string(h);

  const WeightDistribution& pairs = run.oracle ? run.oracle->pairs : *run.table;
  const u64 size = static_cast<u64>(checked_pow(static_cast<i64>(spec.q), dimension));
  const u64 pair_total = spec.pair_total();
  const u64 dedupe = static_cast<u64>(exact_div(static_cast<i64>(pair_total), static_cast<i64>(size), "dedupe factor"));
  const auto words = pairs.to_codeword_counts(dedupe);
  rep["dedupe_factor"] = dedupe;
  rep["weight_distribution"] = json::array();
  for (const auto& [w, c] : pairs.entries()) {
    rep["weight_distribution"].push_back({{"weight", w}, {"pair_count", c}, {"codeword_count", words.count(w)}});
  }
  rep["enumerator"] = enumerator_string(words);
  rep["min_weight"] = pairs.min_weight();

  const auto bound = min_weight_bound(spec);
  if (bound) {
    rep["bound"] = {{"applicable", true},
                    {"value", bound->to_string()},
                    {"approx", bound->embed().real()},
                    {"holds", bound->at_most(static_cast<i64>(pairs.min_weight()), 1)},
                    {"attained", *bound == SurdValue::integer(static_cast<i64>(pairs.min_weight()))}};
  } else {
    rep["bound"] = {{"applicable", false}, {"reason", "hypotheses unmet: " + bound.reason()}};
  }

  json comparison = json::object();
  if (run.table && run.oracle) comparison["table_equals_oracle"] = run.table == run.oracle->pairs;
  if (run.semiprimitive) comparison["semiprimitive_equals_table"] = run.semiprimitive == run.table;
  if (run.oracle && run.oracle->distinct_codewords) comparison["distinct_codewords"] = *run.oracle->distinct_codewords;
  rep["comparison"] = comparison;

  // Periods feeding the tables.
  rep["periods"] = period_list(periods.full(spec.N), "brute");
  if (spec.variant == Variant::C2) {
    for (auto& e : period_list(periods.full(2 * spec.N), "brute")) rep["periods"].push_back(e);
  }
  rep["mismatches"] = run.mismatches;
  rep["notes"] = run.notes;
  rep["errata"] = known_errata(spec.p, spec.extension_degree(), spec.N, &spec);
  res.code = run.mismatches.empty() ? kOk : kMismatch;
  return res;
}

// ---------------------------------------------------------------------------
// verify

Result run_verify(const Options& o, OracleOptions oracle_opts) {
  if (o.max_r < 4) throw ParameterError("--max-r must be at least 4");
  if (o.max_r > Field::kMaxSize) throw ParameterError("--max-r exceeds the field size bound 2^31");
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> mismatches, skipped, errata;
  std::map<std::string, u64> checked{{"fields", 0}, {"period_sets", 0}, {"closed_forms", 0}, {"c1", 0}, {"c2", 0}};

  for (u64 p = 2; p <= o.max_r; ++p) {
    if (!is_prime(p)) continue;
    u64 r = p;
    for (unsigned sm = 1; r <= o.max_r; ++sm, r *= p) {
      const Field f = build_field(p, sm);
      PeriodCache periods(f);
      ++checked["fields"];
      for (u64 N : divisors(r - 1)) {
        if (N < 2 || (r - 1) / N < 2) continue;
        const std::string where = "p=" + std::to_string(p) + " sm=" + std::to_string(sm) + " N=" + std::to_string(N);
        const auto& brute = periods.full(N);
        ++checked["period_sets"];
        if (!(brute.sum() == CyclotomicInteger::from_integer(brute.p, -1))) mismatches.push_back(where + ": period sum");
        if (!check_period_bound(brute)) mismatches.push_back(where + ": period bound");
        for (const auto& c : applicable_closed_forms(p, sm, N)) {
          ++checked["closed_forms"];
          if (!closed_form_matches(c, brute)) {
            mismatches.push_back(where + ": " + c.family + " closed form disagrees with brute force");
          } else if (!c.has_unordered() && !closed_form_indices_match(c, brute)) {
            if (c.family == "index2") {
              errata.push_back(index2_swap_note(p, sm, N));
            } else {
              mismatches.push_back(where + ": " + c.family + " closed form assigns values to the wrong classes");
            }
          }
        }
        for (unsigned s = 1; s <= sm; ++s) {
          if (sm % s != 0) continue;
          for (Variant v : {Variant::C1, Variant::C2}) {
            if (v == Variant::C2 && ((r - 1) / N) % 2 != 0) continue;
            const auto spec = CodeSpec::make(v, p, s, sm / s, N);
            // Without tables a C2 spec has nothing to compare against.
            if (v == Variant::C2 && !c2_table_obstacle(spec).empty()) continue;
            if (spec.pair_total() > oracle_opts.max_pairs && !oracle_opts.force) {
              skipped.push_back(spec.describe());
              continue;
            }
            const Code code(spec, f);
            auto opts = oracle_opts;
            opts.hash_dedupe = spec.pair_total() <= 16384;
            try {
              append(mismatches, evaluate_code(code, periods, "both", opts).mismatches);
            } catch (const IntegralityError& e) {
              mismatches.push_back(spec.describe() + ": " + e.what());
            }
            ++checked[to_string(v)];
          }
        }
      }
    }
  }

  Result res;
  json& rep = res.report;
  rep["method"] = "verify";
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep["verify"] = {{"max_r", o.max_r}, {"checked", checked}, {"skipped", skipped}, {"seconds", seconds}};
  rep["mismatches"] = mismatches;
  rep["errata"] = errata;
  res.code = mismatches.empty() ? kOk : kMismatch;
  return res;
}

// ---------------------------------------------------------------------------
// text rendering

void render_list(std::ostream& out, const json& list, const std::string& heading, std::size_t limit = SIZE_MAX) {
  if (!list.is_array() || list.empty()) return;
  out << heading << ":\n";
  std::size_t shown = 0;
  for (const auto& item : list) {
    if (shown++ == limit) {
      out << "  ... " << list.size() - limit << " more (see --output json)\n";
      break;
    }
    out << "  " << item.get<std::string>() << "\n";
  }
}

void render_periods(std::ostream& out, const json& periods) {
  std::string source;
  u64 order = 0;
  for (const auto& e : periods) {
    if (e["source"] != source || e["order"] != order) {
      source = e["source"];
      order = e["order"];
      out << source << " (order " << e["order"].get<u64>() << "):\n";
    }
    const std::string idx = e["index"].is_null() ? "?" : std::to_string(e["index"].get<u64>());
    out << "  eta_" << idx << " = " << e["value"].get<std::string>() << "  ~ " << fixed(e["embedding_re"]);
    if (e["embedding_im"].get<double>() != 0.0) {
      const double im = e["embedding_im"];
      out << (im < 0 ? " - " : " + ") << fixed(std::abs(im)) << "i";
    }
    out << "\n";
  }
}

void render_text(std::ostream& out, const json& rep) {
  const std::string method = rep["method"];
  if (method == "field") {
    const auto& f = rep["field"];
    out << "field GF(" << f["p"].get<u64>() << "^" << f["degree"].get<unsigned>() << "), size " << f["size"].get<u64>()
        << "\n";
    out << "modulus: " << f["modulus_text"].get<std::string>() << "\n";
    out << "primitive element: " << f["primitive_element_text"].get<std::string>() << "\n";
    out << "log tables: " << (f["log_tables"].get<bool>() ? "yes" : "no") << "\n";
  } else if (method == "verify") {
    const auto& v = rep["verify"];
    out << "verify max_r=" << v["max_r"].get<u64>() << "\n";
    for (const auto& [k, c] : v["checked"].items()) out << "  " << k << ": " << c.get<u64>() << "\n";
    out << "  skipped (guardrail): " << v["skipped"].size() << "\n";
    out << "  seconds: " << fixed(v["seconds"], 2) << "\n";
    render_list(out, v["skipped"], "skipped", 10);
    render_list(out, rep["errata"], "errata");
    render_list(out, rep["mismatches"], "mismatches");
    out << (rep["mismatches"].empty() ? "result: all checks agree\n" : "result: MISMATCH\n");
  } else if (rep.contains("code")) {
    const auto& c = rep["code"];
    out << "code " << c["variant"].get<std::string>() << " p=" << c["p"].get<u64>() << " s=" << c["s"].get<unsigned>()
        << " m=" << c["m"].get<unsigned>() << " N=" << c["N"].get<u64>() << ": q=" << c["q"].get<u64>()
        << " r=" << c["r"].get<u64>() << " n=" << c["n"].get<u64>() << "\n";
    out << "dimension: " << c["dimension"].get<unsigned>() << "\n";
    out << "parity check: " << rep["parity_check"].get<std::string>() << "\n";
    out << "method: " << method;
    const auto& cmp = rep["comparison"];
    if (cmp.contains("table_equals_oracle")) out << (cmp["table_equals_oracle"].get<bool>() ? " (table = oracle)" : " (table != oracle)");
    out << "\n";
    if (cmp.contains("semiprimitive_equals_table")) {
      out << "semi-primitive table: " << (cmp["semiprimitive_equals_table"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    }
    if (cmp.contains("distinct_codewords")) out << "distinct codewords: " << cmp["distinct_codewords"].get<u64>() << "\n";
    out << "dedupe factor: " << rep["dedupe_factor"].get<u64>() << "\n";
    out << "weight  pairs  codewords\n";
    for (const auto& row : rep["weight_distribution"]) {
      out << "  " << row["weight"].get<u64>() << "  " << row["pair_count"].get<u64>() << "  "
          << row["codeword_count"].get<u64>() << "\n";
    }
    out << "enumerator: " << rep["enumerator"].get<std::string>() << "\n";
    out << "minimum weight: " << rep["min_weight"].get<u64>() << "\n";
    const auto& b = rep["bound"];
    if (b["applicable"].get<bool>()) {
      out << "bound: " << b["value"].get<std::string>() << " ~ " << fixed(b["approx"])
          << (b["attained"].get<bool>() ? " (attained)" : b["holds"].get<bool>() ? " (holds)" : " (VIOLATED)") << "\n";
    } else {
      out << "bound: " << b["reason"].get<std::string>() << "\n";
    }
    render_periods(out, rep["periods"]);
    render_list(out, rep["notes"], "notes");
    render_list(out, rep["errata"], "errata");
    render_list(out, rep["mismatches"], "mismatches");
  } else {
    const auto& pr = rep["params"];
    out << "periods of order " << pr["N"].get<u64>() << " over GF(" << pr["p"].get<u64>() << "^" << pr["sm"].get<unsigned>()
        << ")\n";
    render_periods(out, rep["periods"]);
    for (const auto& c : rep["closed_forms"]) {
      out << c["family"].get<std::string>() << ":";
      if (c["unordered"].get<bool>()) out << " unordered values";
      if (!c["multiset_match"].is_null()) out << " multiset " << (c["multiset_match"].get<bool>() ? "agrees" : "DISAGREES");
      if (!c["index_match"].is_null()) out << ", by index " << (c["index_match"].get<bool>() ? "agrees" : "differs");
      out << "\n";
      for (const auto& n : c["notes"]) out << "  " << n.get<std::string>() << "\n";
    }
    render_list(out, rep["notes"], "notes");
    render_list(out, rep["errata"], "errata");
    render_list(out, rep["mismatches"], "mismatches");
  }
}

std::optional<u64> env_max_pairs() {
  const char* text = std::getenv(kMaxPairsEnv);
  if (text == nullptr || *text == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v == 0) throw ParameterError(std::string(kMaxPairsEnv) + " must be a positive integer");
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Trace codes over finite fields: Gauss periods and weight distributions", "tracecodes"};
  app.require_subcommand(1);
  auto* field = app.add_subcommand("field", "Print field parameters");
  auto* periods = app.add_subcommand("periods", "Gauss periods by brute force and closed forms");
  auto* code = app.add_subcommand("code", "Weight distribution of a trace code");
  auto* verify = app.add_subcommand("verify", "Cross-check tables, oracle and closed forms over a sweep");

  for (auto* sub : {field, periods, code}) {
    sub->add_option("--p", o.p, "Characteristic")->required();
    sub->add_option("--s", o.s, "q = p^s")->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "r = q^m")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {periods, code}) sub->add_option("--N", o.N, "Order of the cyclotomic classes")->required();
  periods->add_option("--method", o.method, "brute | closed | both")->check(CLI::IsMember({"brute", "closed", "both"}));
  code->add_option("--variant", o.variant, "c1 | c2");
  code->add_option("--method", o.method, "table | oracle | both")->check(CLI::IsMember({"table", "oracle", "both"}));
  verify->add_option("--max-r", o.max_r, "Largest field size swept");
  for (auto* sub : {code, verify}) {
    sub->add_option("--max-pairs", o.max_pairs, "Guardrail on the enumerated pair space")
                        ->check(CLI::PositiveNumber);
    sub->add_flag("--force", o.force, "Ignore the guardrail");
  }
  for (auto* sub : {field, periods, code, verify}) {
    sub->add_option("--output", o.output, "text | json")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalid;
  }

  Result res;
  try {
    const bool explicit_max = (code->parsed() && code->count("--max-pairs") > 0) ||
                              (verify->parsed() && verify->count("--max-pairs") > 0);
    if (!explicit_max) {
      if (auto v = env_max_pairs()) o.max_pairs = *v;
    }
    OracleOptions oracle_opts;
    oracle_opts.max_pairs = o.max_pairs;
    oracle_opts.force = o.force;
    if (field->parsed()) res = run_field(o);
    else if (periods->parsed()) res = run_periods(o);
    else if (code->parsed()) res = run_code(o, oracle_opts);
    else res = run_verify(o, oracle_opts);
  } catch (const ParameterError& e) {
    res = {{{"error", e.what()}, {"exit_code", kInvalid}}, kInvalid};
  } catch (const GuardrailError& e) {
    res = {{{"error", e.what()}, {"exit_code", kGuardrail}}, kGuardrail};
  } catch (const IntegralityError& e) {
    res = {{{"error", e.what()}, {"exit_code", kMismatch}}, kMismatch};
  }

  if (res.report.contains("error")) {
    err << "error: " << res.report["error"].get<std::string>() << "\n";
    if (o.output == "json") out << res.report.dump(2) << "\n";
    return res.code;
  }
  if (o.output == "json") {
    out << res.report.dump(2) << "\n";
  } else {
    render_text(out, res.report);
  }
  return res.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tracecodes");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tracecodes::cli
