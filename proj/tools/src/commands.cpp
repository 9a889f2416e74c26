#include "commands.hpp"

#include <numeric>

#include "nsg/enumeration.hpp"
#include "nsg/family.hpp"
#include "nsg/reduction.hpp"
#include "nsg/reference_table.hpp"

namespace nsg::cli {

namespace {

constexpr int kApproxPlaces = 4;

Json rational_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json surd_json(const QuadraticSurd& s) {
  return Json{{"p", s.p()},
              {"d", s.d()},
              {"q", s.q()},
              {"sign", s.sign() < 0 ? "-" : "+"},
              {"approx", to_decimal(s, kApproxPlaces, DecimalMode::RoundHalfAway)}};
}

Json value_json(const SpecialValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) return rational_json(x);
        else return surd_json(x);
      },
      v);
}

Json ints_json(std::span<const Int> xs) { return Json(std::vector<Int>(xs.begin(), xs.end())); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

void add_diagnostic(Output& out, const std::string& text) { out.doc["diagnostics"].push_back(text); }

Json classification_json(const KClassification& c, Output& out) {
  Json j;
  j["k"] = c.k;
  j["triple"] = ints_json(c.triple);
  j["kind"] = to_string(c.kind);
  j["reduced"] = c.reduced ? ints_json(c.reduced->generators()) : Json(nullptr);
  j["frobenius"] = optional_json(c.frobenius);
  j["genus"] = optional_json(c.genus);
  j["symmetric"] = c.symmetric;
  j["phi_match"] = c.phi_match;
  Json predicted = Json::array();
  for (TripleKind kind : c.predicted) predicted.push_back(to_string(kind));
  j["predicted"] = predicted;
  for (const auto& d : c.diagnostics) add_diagnostic(out, d);
  return j;
}

Json family_inputs(const FamilyParams& p) {
  return Json{{"r1", p.r1()}, {"r2", p.r2()}, {"r3", p.r3()}};
}

Json special_k_json(const FamilyParams& p) {
  const SpecialKProfile sk = special_k_profile(p);
  Json values = Json::array();
  auto add = [&](const char* name, const std::optional<SpecialValue>& v) {
    Json row{{"name", name}};
    if (v) {
      row["value"] = value_json(*v);
      row["approx"] = to_decimal(*v, kApproxPlaces, DecimalMode::RoundHalfAway);
      row["floor"] = floor(*v);
    } else {
      row["value"] = nullptr;
      row["approx"] = "none";
      row["floor"] = nullptr;
    }
    values.push_back(std::move(row));
  };
  add("k1", sk.k1);
  add("k2", sk.k2);
  add("k3", sk.k3);
  add("k4", sk.k4);
  add("k5", sk.k5);
  add("k6", sk.k6);
  add("k7", sk.k7 ? std::optional<SpecialValue>(*sk.k7) : std::nullopt);
  add("k8", sk.k8 ? std::optional<SpecialValue>(*sk.k8) : std::nullopt);
  add("k9", sk.k9);
  add("k10", sk.k10);

  Json j;
  j["phi"] = sk.phi;
  j["k4_integral"] = sk.k4_integral();
  j["mu1"] = value_json(sk.mu1);
  j["mu2"] = value_json(sk.mu2);
  j["xi"] = sk.xi;
  j["special_k"] = values;
  return j;
}

Json table_row_json(const FamilyParams& p, const OracleLimits& limits, Output& out) {
  const SpecialKTable table = special_k_table(p, limits);
  Json entries = Json::array();
  for (const auto& e : table.entries) {
    Json row{{"name", e.name}};
    row["value"] = e.value ? value_json(*e.value) : Json(nullptr);
    row["approx"] = e.value ? Json(to_decimal(*e.value, 2)) : Json("none");
    row["floor"] = optional_json(e.floor);
    if (e.at_floor) {
      row["triple"] = ints_json(e.at_floor->triple);
      row["kind"] = to_string(e.at_floor->kind);
      row["frobenius"] = optional_json(e.at_floor->frobenius);
    } else {
      row["triple"] = nullptr;
      row["kind"] = nullptr;
      row["frobenius"] = nullptr;
    }
    entries.push_back(std::move(row));
  }

  Json j;
  j["phi"] = table.phi;
  j["entries"] = entries;

  const PublishedRow* published = find_published_row(p);
  if (!published) {
    j["published"] = nullptr;
    return j;
  }
  const RowComparison rc = compare_with_published(p, table, *published, limits);
  Json cells = Json::array();
  for (const auto& c : rc.cells) {
    cells.push_back(Json{{"name", c.name},
                         {"published_value", c.published_value},
                         {"truncated", optional_json(c.truncated)},
                         {"rounded", optional_json(c.rounded)},
                         {"value_matches", c.value_matches},
                         {"sign_flipped", c.sign_flipped},
                         {"published_frobenius", optional_json(c.published_frobenius)},
                         {"computed_frobenius", optional_json(c.computed_frobenius)},
                         {"frobenius_matches", c.frobenius_matches}});
  }
  j["published"] = Json{{"phi", published->phi}, {"phi_matches", rc.phi_matches}, {"cells", cells}};
  for (const auto& d : rc.diagnostics) add_diagnostic(out, d);
  return j;
}

Json reduction_json(const FamilyParams& p, const OracleLimits& limits) {
  const ReductionAnalysis a = solve_reduction(p, limits);
  Json solutions = Json::array();
  for (const auto& s : a.solutions)
    solutions.push_back(Json{{"k_star", s.k_star},
                             {"g_star", s.g_star},
                             {"divisor", s.divisor},
                             {"reduced_pair", ints_json(s.reduced_pair.generators())},
                             {"frobenius", s.frobenius}});
  Json j;
  j["n"] = a.n;
  j["divisors"] = a.divisors;
  j["sigma0"] = a.sigma0;
  j["q"] = a.q;
  j["prime_certificate"] = a.prime_certificate;
  j["prime_square"] = to_string(a.prime_square);
  j["solutions"] = solutions;
  return j;
}

Json ordering_json(const FamilyParams& p, Output& out) {
  const OrderingReport report = ordering_relations(p);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"relation", c.relation == Relation::Equivalent ? "iff" : "implies"},
                          {"by_criterion", c.by_criterion},
                          {"by_comparison", c.by_comparison},
                          {"agrees", c.agrees()}});
    if (!c.agrees()) add_diagnostic(out, "ordering check disagrees: " + c.name);
  }
  out.verified = report.all_agree();
  return Json{{"regime", report.regime}, {"all_agree", report.all_agree()}, {"checks", checks}};
}

}  // namespace

Output make_output(std::string command, Json inputs) {
  Output out;
  out.doc["schema_version"] = "1";
  out.doc["command"] = std::move(command);
  out.doc["inputs"] = std::move(inputs);
  out.doc["results"] = Json::object();
  out.doc["diagnostics"] = Json::array();
  return out;
}

Output cmd_profile(const std::vector<Int>& generators, bool allow_scaled,
                   const OracleLimits& limits) {
  Output out = make_output("profile", Json{{"generators", generators},
                                            {"allow_scaled", allow_scaled}});
  std::vector<Int> gens = generators;
  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (allow_scaled && g > 1) {
    for (Int& x : gens) x /= g;
    add_diagnostic(out, "generators share the factor " + std::to_string(g) +
                            "; profiling the semigroup of the scaled tuple");
  }
  const GeneratorTuple tuple = GeneratorTuple::from(gens);
  const SemigroupProfile prof = profile(tuple, limits);
  const GeneratorTuple reduced = reduce_to_minimal(tuple, limits);

  Json& r = out.doc["results"];
  r["tuple"] = ints_json(tuple.generators());
  r["scale"] = allow_scaled && g > 1 ? g : 1;
  r["frobenius"] = prof.frobenius;
  r["conductor"] = prof.conductor;
  r["genus"] = prof.genus;
  r["symmetric"] = prof.symmetric;
  r["minimal"] = prof.minimal;
  r["reduced"] = ints_json(reduced.generators());
  r["gaps"] = prof.gaps;
  return out;
}

Output cmd_family(const FamilyArgs& args, const OracleLimits& limits) {
  const FamilyParams p = FamilyParams::make(args.r1, args.r2, args.r3);
  Json inputs = family_inputs(p);
  inputs["action"] = args.action;
  if (args.action == "classify") inputs["k"] = args.k;
  if (args.action == "scan") {
    inputs["from"] = args.from;
    inputs["to"] = args.to;
  }
  Output out = make_output("family", std::move(inputs));
  Json& r = out.doc["results"];

  if (args.action == "special-k") {
    r = special_k_json(p);
  } else if (args.action == "classify") {
    r = classification_json(classify_k(p, args.k, limits), out);
  } else if (args.action == "scan") {
    const ScanResult scan = scan_range(p, args.from, args.to, limits);
    Json entries = Json::array();
    for (const auto& c : scan.entries) entries.push_back(classification_json(c, out));
    r["phi"] = scan.table.phi;
    r["entries"] = entries;
  } else if (args.action == "window") {
    const WindowReport w = ambiguous_window(p, limits);
    r["mu1"] = value_json(w.mu1);
    r["mu2"] = value_json(w.mu2);
    r["xi"] = w.xi;
    Json verdicts = Json::array();
    for (const auto& c : w.verdicts) verdicts.push_back(classification_json(c, out));
    r["verdicts"] = verdicts;
  } else if (args.action == "reduce") {
    r = reduction_json(p, limits);
  } else if (args.action == "table1-row") {
    r = table_row_json(p, limits, out);
  } else if (args.action == "ordering") {
    r = ordering_json(p, out);
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown family action: " + args.action);
  }
  return out;
}

Output cmd_verify_arnold(const OracleLimits& limits) {
  Output out = make_output("verify-arnold", Json::object());

  struct Sequence {
    Int r1, r2, r3, k_lo, k_hi;
    std::vector<Int> two_dim;  // k values whose triple is claimed to reduce to a pair
    Int (*expected)(Int k);
  };
  const Sequence sequences[] = {
      {2, 3, 87, -1, 21, {-1, 15, 16, 17, 18, 19, 20, 21},
       [](Int k) -> Int { return k <= 14 ? 89 : 89 - 12 * (k - 14); }},
      {3, 1, 85, 0, 9, {0, 7, 8, 9},
       [](Int k) -> Int { return k <= 7 ? 167 : (k == 8 ? 95 : 23); }},
  };

  Json all = Json::array();
  bool all_pass = true;
  for (const auto& s : sequences) {
    const FamilyParams p = FamilyParams::make(s.r1, s.r2, s.r3);
    const SpecialKProfile sk = special_k_profile(p);
    Json checks = Json::array();
    bool seq_pass = true;
    for (Int k = s.k_lo; k <= s.k_hi; ++k) {
      const KClassification c = classify_k(p, sk, k, limits);
      const Int dim = c.reduced ? static_cast<Int>(c.reduced->size()) : 0;
      const bool claimed_2d =
          std::find(s.two_dim.begin(), s.two_dim.end(), k) != s.two_dim.end();
      const bool pass = c.frobenius == s.expected(k) && c.symmetric && (!claimed_2d || dim == 2);
      if (!pass) add_diagnostic(out, "mismatch at (" + std::to_string(s.r1) + "," +
                                         std::to_string(s.r2) + "," + std::to_string(s.r3) +
                                         ") k=" + std::to_string(k));
      seq_pass = seq_pass && pass;
      checks.push_back(Json{{"k", k},
                            {"triple", ints_json(c.triple)},
                            {"expected_frobenius", s.expected(k)},
                            {"frobenius", optional_json(c.frobenius)},
                            {"expected_dimension", claimed_2d ? Json(2) : Json(nullptr)},
                            {"dimension", dim},
                            {"symmetric", c.symmetric},
                            {"pass", pass}});
    }
    all_pass = all_pass && seq_pass;
    all.push_back(Json{{"r1", s.r1}, {"r2", s.r2}, {"r3", s.r3}, {"pass", seq_pass},
                       {"checks", checks}});
  }
  out.doc["results"]["all_pass"] = all_pass;
  out.doc["results"]["sequences"] = all;
  out.verified = all_pass;
  return out;
}

Output cmd_enumerate_small(std::optional<Int> r1, const OracleLimits& limits) {
  Output out = make_output("enumerate-small", Json{{"r1", optional_json(r1)}});
  const EnumerationReport report = enumerate_all(limits);
  Json records = Json::array();
  for (const auto& rec : report.records) {
    if (r1 && rec.r1 != *r1) continue;
    records.push_back(Json{{"r1", rec.r1},
                           {"r2", rec.r2},
                           {"r3", rec.r3},
                           {"k", rec.k},
                           {"case", to_string(rec.boundary_case)},
                           {"e", rec.e},
                           {"triple", ints_json(rec.triple)},
                           {"reduced", ints_json(rec.reduced.generators())},
                           {"frobenius", rec.frobenius},
                           {"symmetric", rec.symmetric}});
  }
  if (r1) {
    const auto feasible = feasible_r1();
    if (std::find(feasible.begin(), feasible.end(), *r1) == feasible.end())
      add_diagnostic(out, "r1=" + std::to_string(*r1) + " admits no records; feasible r1 are 2, 3, 4");
  }
  Json& r = out.doc["results"];
  r["count"] = records.size();
  r["dropped"] = report.dropped;
  r["records"] = records;
  return out;
}

}  // namespace nsg::cli
