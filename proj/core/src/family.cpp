#include "nsg/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nsg {

namespace {

using std::is_eq;
using std::is_gt;
using std::is_gteq;
using std::is_lt;
using std::is_lteq;

std::string triple_str(const RawTriple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

bool contains_kind(const std::vector<TripleKind>& kinds, TripleKind k) {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

void push_unique(std::vector<TripleKind>& kinds, TripleKind k) {
  if (!contains_kind(kinds, k)) kinds.push_back(k);
}

// Kinds forced by the sufficient-condition k-ranges. Inside the ambiguous
// window none of them applies.
std::vector<TripleKind> predicted_kinds(const SpecialKProfile& sk, Int k) {
  const Rational kr(k);
  std::vector<TripleKind> out;
  if (sk.k4_integral() && kr == sk.k4) push_unique(out, TripleKind::TwoDimR1);
  if (is_gt(kr <=> sk.k4) && is_lteq(kr <=> sk.k3)) push_unique(out, TripleKind::ThreeDimSymmetric);
  if (sk.k6.is_integer() && kr == sk.k6) push_unique(out, TripleKind::TwoDimR1Squared);
  if (is_gt(kr <=> sk.k5) && is_lteq(kr <=> sk.k2)) push_unique(out, TripleKind::TwoDimR1Squared);
  if (sk.k7 && is_gteq(kr <=> sk.k1) && is_lteq(compare(kr, *sk.k7)))
    push_unique(out, TripleKind::TwoDimPair);
  if (sk.k8 && is_gteq(compare(kr, *sk.k8)) && is_lteq(kr <=> sk.k2))
    push_unique(out, TripleKind::TwoDimPair);
  return out;
}

}  // namespace

FamilyParams FamilyParams::make(Int r1, Int r2, Int r3) {
  if (r1 < 2) throw Error(ErrorCode::InvalidParams, "constraint violated: r1 >= 2");
  if (r2 < 1) throw Error(ErrorCode::InvalidParams, "constraint violated: r2 must be a positive integer");
  if (r3 < 1) throw Error(ErrorCode::InvalidParams, "constraint violated: r3 must be a positive integer");
  if (std::gcd(r1, r2) != 1) throw Error(ErrorCode::InvalidParams, "constraint violated: gcd(r1, r2) = 1");
  if (std::gcd(r1, r3) != 1) throw Error(ErrorCode::InvalidParams, "constraint violated: gcd(r1, r3) = 1");
  return FamilyParams(r1, r2, r3, add(mul(r1, r2), r3));
}

RawTriple triple_at(const FamilyParams& p, Int k) {
  const Int sq = mul(p.r1(), p.r1());
  return {sq, add(mul(p.r1(), p.r2()), mul(sq, k)), sub(p.r3(), mul(sq, k))};
}

Int universal_phi(const FamilyParams& p) {
  return sub(mul(p.r1() - 1, p.sum()), mul(p.r1(), p.r1()));
}

GeneralFamilyParams GeneralFamilyParams::make(Int u, Int v, Int w, Int t, Int k) {
  if (u < 1 || v < 1 || w < 1 || t < 1)
    throw Error(ErrorCode::InvalidParams, "constraint violated: u, v, w, t must be positive");
  if (mul(u, v) < 2) throw Error(ErrorCode::InvalidParams, "constraint violated: u*v >= 2");
  if (std::gcd(u, v) != 1 || std::gcd(u, w) != 1 || std::gcd(v, w) != 1)
    throw Error(ErrorCode::InvalidParams, "constraint violated: u, v, w pairwise coprime");
  if (std::gcd(u, t) != 1 || std::gcd(v, t) != 1)
    throw Error(ErrorCode::InvalidParams, "constraint violated: gcd(u,t) = gcd(v,t) = 1");
  return GeneralFamilyParams{u, v, w, t, k};
}

Int general_family_frobenius(const GeneralFamilyParams& g) {
  const Int u2 = mul(g.u, g.u);
  const Int head = mul(add(g.t, mul(mul(u2, g.v), g.w)), g.v - 1);
  const Int tail = mul(u2, mul(g.v, g.v));
  const Int slope = mul(mul(u2, mul(mul(g.v, g.v), g.v)), 1 - u2);
  return add(sub(head, tail), mul(g.k, slope));
}

SpecialKProfile special_k_profile(const FamilyParams& p) {
  const Int r1 = p.r1(), r2 = p.r2(), r3 = p.r3();
  const Int sq = mul(r1, r1);
  const Int e = p.sum();

  std::optional<QuadraticSurd> k7, k8;
  if (e >= 2 + 2 * r1) {
    const Int disc = sub(mul(e - 2, e - 2), mul(4, sq));
    k7 = QuadraticSurd(sub(r3, mul(r1, r2)), -1, disc, mul(2, sq));
    k8 = QuadraticSurd(sub(r3, mul(r1, r2)), +1, disc, mul(2, sq));
  }

  SpecialKProfile sk{
      Rational(2 - r2, r1),
      Rational(r3 - 3, sq),
      Rational(sub(r3, mul(r1 - 1, r2 - 1)), mul(r1, 2 * r1 - 1)),
      Rational(1 - r2, r1),
      Rational(sub(mul(r3 - 1, sq), e), mul(sq, sq)),
      Rational(r3 - r2, mul(r1, r1 + 1)),
      k7,
      k8,
      Rational(r3 - r1, sq),
      Rational(1 - r2, r1),
      universal_phi(p),
      Rational(0),
      Rational(0),
      {},
  };

  SpecialValue mu1 = std::max(sk.k1, sk.k3);
  if (k7 && is_gt(compare(SpecialValue(*k7), mu1))) mu1 = *k7;
  SpecialValue mu2 = std::min(sk.k2, sk.k5);
  if (k8 && is_lt(compare(SpecialValue(*k8), mu2))) mu2 = *k8;
  sk.mu1 = mu1;
  sk.mu2 = mu2;

  Int lo = floor(mu1) + 1;
  Int hi = floor(mu2);
  if (is_eq(compare(SpecialValue(Rational(hi)), mu2))) --hi;
  for (Int k = lo; k <= hi; ++k) sk.xi.push_back(k);
  return sk;
}

std::string_view to_string(TripleKind kind) noexcept {
  switch (kind) {
    case TripleKind::Invalid: return "Invalid";
    case TripleKind::Degenerate: return "Degenerate";
    case TripleKind::TwoDimR1: return "TwoDim_r1";
    case TripleKind::TwoDimR1Squared: return "TwoDim_r1sq";
    case TripleKind::TwoDimPair: return "TwoDim_pair";
    case TripleKind::ThreeDimSymmetric: return "ThreeDimSymmetric";
    case TripleKind::ThreeDimNonsymmetric: return "ThreeDimNonsymmetric";
  }
  return "Unknown";
}

KClassification classify_k(const FamilyParams& p, Int k, const OracleLimits& limits) {
  return classify_k(p, special_k_profile(p), k, limits);
}

KClassification classify_k(const FamilyParams& p, const SpecialKProfile& sk, Int k,
                           const OracleLimits& limits) {
  KClassification out{};
  out.k = k;
  out.triple = triple_at(p, k);
  const RawTriple& t = out.triple;

  if (std::any_of(t.begin(), t.end(), [](Int x) { return x <= 0; })) {
    out.kind = TripleKind::Invalid;
    return out;
  }
  if (std::gcd(std::gcd(t[0], t[1]), t[2]) != 1) {
    out.kind = TripleKind::Invalid;
    out.diagnostics.push_back("triple " + triple_str(t) + " is not coprime");
    return out;
  }
  if (std::any_of(t.begin(), t.end(), [](Int x) { return x == 1; })) {
    out.kind = TripleKind::Degenerate;
    return out;
  }

  const GeneratorTuple tuple = GeneratorTuple::from(std::span<const Int>(t));
  GeneratorTuple reduced = reduce_to_minimal(tuple, limits);
  const SemigroupProfile prof = profile(reduced, limits);
  out.frobenius = prof.frobenius;
  out.genus = prof.genus;
  out.symmetric = prof.symmetric;
  out.phi_match = prof.frobenius == sk.phi;

  auto kept = [&](Int x) {
    const auto g = reduced.generators();
    return std::find(g.begin(), g.end(), x) != g.end();
  };
  if (reduced.size() == 3) {
    out.kind = prof.symmetric ? TripleKind::ThreeDimSymmetric : TripleKind::ThreeDimNonsymmetric;
  } else if (!kept(t[0]) && kept(t[1]) && kept(t[2])) {
    out.kind = t[1] == p.r1() ? TripleKind::TwoDimR1 : TripleKind::TwoDimPair;
  } else if (!kept(t[1]) && kept(t[0]) && kept(t[2])) {
    out.kind = TripleKind::TwoDimR1Squared;
  } else {
    // gcd(r1, r3) = 1 keeps the third generator out of S(r1^2, second).
    throw std::logic_error("unexpected reduction of family triple " + triple_str(t));
  }
  out.reduced = std::move(reduced);

  out.predicted = predicted_kinds(sk, k);
  if (!out.predicted.empty() && !contains_kind(out.predicted, out.kind)) {
    std::string expected;
    for (TripleKind kind : out.predicted) {
      if (!expected.empty()) expected += "|";
      expected += to_string(kind);
    }
    out.diagnostics.push_back("k=" + std::to_string(k) + ": k-ranges predict " + expected +
                              ", oracle found " + std::string(to_string(out.kind)));
  }
  return out;
}

SpecialKTable special_k_table(const FamilyParams& p, const OracleLimits& limits) {
  const SpecialKProfile sk = special_k_profile(p);
  SpecialKTable table{sk.phi, {}};
  auto add_entry = [&](std::string name, std::optional<SpecialValue> value) {
    SpecialKEntry entry{std::move(name), std::move(value), std::nullopt, std::nullopt};
    if (entry.value) {
      entry.floor = floor(*entry.value);
      entry.at_floor = classify_k(p, sk, *entry.floor, limits);
    }
    table.entries.push_back(std::move(entry));
  };
  add_entry("k1", sk.k1);
  add_entry("k2", sk.k2);
  add_entry("k3", sk.k3);
  add_entry("k4", sk.k4);
  add_entry("k5", sk.k5);
  add_entry("k6", sk.k6);
  add_entry("k7", sk.k7 ? std::optional<SpecialValue>(*sk.k7) : std::nullopt);
  add_entry("k8", sk.k8 ? std::optional<SpecialValue>(*sk.k8) : std::nullopt);
  add_entry("k9", sk.k9);
  return table;
}

ScanResult scan_range(const FamilyParams& p, Int k_lo, Int k_hi, const OracleLimits& limits) {
  if (k_lo > k_hi) throw Error(ErrorCode::InvalidParams, "scan range needs k_lo <= k_hi");
  const SpecialKProfile sk = special_k_profile(p);
  ScanResult result{{}, special_k_table(p, limits)};
  for (Int k = k_lo; k <= k_hi; ++k) result.entries.push_back(classify_k(p, sk, k, limits));
  return result;
}

WindowReport ambiguous_window(const FamilyParams& p, const OracleLimits& limits) {
  const SpecialKProfile sk = special_k_profile(p);
  WindowReport report{sk.mu1, sk.mu2, sk.xi, {}};
  for (Int k : sk.xi) report.verdicts.push_back(classify_k(p, sk, k, limits));
  return report;
}

bool OrderingReport::all_agree() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.agrees(); });
}

const OrderingCheck* OrderingReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

OrderingReport ordering_relations(const FamilyParams& p) {
  const SpecialKProfile sk = special_k_profile(p);
  const Int r1 = p.r1();
  const Rational e(p.sum());
  const Rational upper_b(r1 * r1 + 5 * r1 - 3, r1 - 1);
  const Rational k8_bound = Rational(4) + Rational(r1 * r1, 2);
  const Rational k7_bound(5 * r1 * r1 - 1, 2 * r1 - 1);
  const Rational two_sq(2 * r1 * r1);

  const bool k1_le_k2 = sk.k1 <= sk.k2;
  const bool k2_le_k3 = sk.k2 <= sk.k3;
  const bool k1_le_k3 = sk.k1 <= sk.k3;
  const bool k3_le_k2 = sk.k3 <= sk.k2;
  const bool k3_le_k1 = sk.k3 <= sk.k1;
  const bool k2_ge_k5 = sk.k2 >= sk.k5;
  const bool k8_ge_k2 = sk.k8 && is_gteq(compare(*sk.k8, sk.k2));
  const bool k1_ge_k7 = sk.k7 && is_lteq(compare(*sk.k7, sk.k1));

  OrderingReport report;
  auto add_check = [&](std::string name, Relation rel, bool crit, bool cmp) {
    report.checks.push_back(OrderingCheck{std::move(name), rel, crit, cmp});
  };

  add_check("k1<=k2<=k3", Relation::Equivalent,
            Rational(2 * r1 + 3) <= e && e <= upper_b, k1_le_k2 && k2_le_k3);
  add_check("k1<=k3<=k2", Relation::Equivalent,
            upper_b <= e && Rational(3 * r1 - 1) <= e, k1_le_k3 && k3_le_k2);
  add_check("k3<=k1<=k2", Relation::Equivalent,
            Rational(2 * r1 + 3) <= e && e <= Rational(3 * r1 - 1), k3_le_k1 && k1_le_k2);
  add_check("k2>=k5", Relation::Equivalent, e >= two_sq, k2_ge_k5);
  add_check("k8>=k2", Relation::Equivalent, e >= k8_bound, k8_ge_k2);
  add_check("k1>=k7", Relation::CriterionImplies, e >= k7_bound, k1_ge_k7);
  add_check("k2>=k5 => k7<=k1 && k2<=k8", Relation::Equivalent,
            !(e >= two_sq) || (e >= k7_bound && e >= k8_bound),
            !k2_ge_k5 || (k1_ge_k7 && k8_ge_k2));
  add_check("window => k7<=k1 && k2<=k8 && k2<=k5", Relation::CriterionImplies,
            std::max(k8_bound, k7_bound) <= e && e <= two_sq,
            k1_ge_k7 && k8_ge_k2 && sk.k2 <= sk.k5);
  add_check("k9>k2", Relation::Equivalent, r1 == 2, sk.k9 > sk.k2);
  add_check("k9=k2", Relation::Equivalent, r1 == 3, sk.k9 == sk.k2);
  add_check("k9<k2", Relation::Equivalent, r1 >= 4, sk.k9 < sk.k2);

  if (k1_le_k2 && k2_le_k3) report.regime = "k1<=k2<=k3";
  else if (k1_le_k3 && k3_le_k2) report.regime = "k1<=k3<=k2";
  else if (k3_le_k1 && k1_le_k2) report.regime = "k3<=k1<=k2";
  else report.regime = "none";
  return report;
}

std::optional<Int> nonsymmetric_k_star(const FamilyParams& p, const OracleLimits& limits) {
  const Int r1 = p.r1(), r2 = p.r2(), r3 = p.r3();
  const Int num = r3 - r2 - 1;
  const Int den = mul(r1, r1 + 1);
  if (num % den != 0 || std::gcd(r1, r2 + 1) != 1) return std::nullopt;
  const Int k_star = num / den;
  const Int c = add(r2, mul(r1, k_star));
  if (c < 2) return std::nullopt;
  const Int gap = sub(r3, mul(mul(r1, r1), k_star));
  if (gap != c + 1) return std::nullopt;
  const Int pair[] = {r1, c};
  if (representable(pair, gap, limits)) return std::nullopt;
  return k_star;
}

FamilyParams nonsymmetric_family(Int p_param, Int k_star) {
  if (p_param < 2) throw Error(ErrorCode::InvalidParams, "construction needs p >= 2");
  const Int r1 = sub(mul(2, p_param), 1);
  const Int r2 = sub(mul(4, p_param), 1);
  const Int r3 = add(mul(mul(mul(2, p_param), k_star), r1), mul(4, p_param));
  if (r3 < 1)
    throw Error(ErrorCode::InvalidParams, "construction gives non-positive r3 for this k*");
  return FamilyParams::make(r1, r2, r3);
}

}  // namespace nsg
