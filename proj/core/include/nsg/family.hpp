#pragma once

// The one-parameter family of triples
//     T(k) = { r1^2, r1*r2 + r1^2*k, r3 - r1^2*k },   k in Z,
// with r1 >= 2 and gcd(r1, r2) = gcd(r1, r3) = 1. For a wide range of k these
// triples generate symmetric semigroups sharing one Frobenius number
//     phi = (r1 - 1)(r1*r2 + r3) - r1^2.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"
#include "nsg/surd.hpp"

namespace nsg {

class FamilyParams {
 public:
  /// Throws InvalidParams naming the violated constraint.
  static FamilyParams make(Int r1, Int r2, Int r3);

  Int r1() const noexcept { return r1_; }
  Int r2() const noexcept { return r2_; }
  Int r3() const noexcept { return r3_; }
  /// r1*r2 + r3, the quantity most family criteria are phrased in.
  Int sum() const noexcept { return sum_; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  FamilyParams(Int r1, Int r2, Int r3, Int sum) : r1_(r1), r2_(r2), r3_(r3), sum_(sum) {}
  Int r1_, r2_, r3_, sum_;
};

using RawTriple = std::array<Int, 3>;

/// The three family generators at k, in family order, unfiltered.
RawTriple triple_at(const FamilyParams& p, Int k);

Int universal_phi(const FamilyParams& p);

/// Triples {u^2 v^2, u^2 v w + u^2 v^2 k, t - u^2 v^2 k}; the family above is
/// the u = 1 slice.
struct GeneralFamilyParams {
  Int u, v, w, t, k;

  /// Throws InvalidParams unless u,v,w,t >= 1, u*v >= 2 and the pairwise
  /// gcd conditions (u,v), (u,w), (v,w), (u,t), (v,t) all equal 1.
  static GeneralFamilyParams make(Int u, Int v, Int w, Int t, Int k);
};

/// (t + u^2 v w)(v - 1) - u^2 v^2 + k u^2 v^3 (1 - u^2); the k-term vanishes
/// iff u = 1.
Int general_family_frobenius(const GeneralFamilyParams& g);

struct SpecialKProfile {
  Rational k1;   // r1*k + r2 >= 2 lower edge
  Rational k2;   // r3 - r1^2 k >= 3 upper edge
  Rational k3;   // third generator reaches the conductor of S(r1, r1 k + r2)
  Rational k4;   // r1*k + r2 = 1
  Rational k5;   // second generator exceeds F(r1^2, third)
  Rational k6;   // F(r1^2, third) = phi
  std::optional<QuadraticSurd> k7;  // r1^2 above F(second, third), lower root
  std::optional<QuadraticSurd> k8;  // upper root
  Rational k9;   // F(second, third) = phi, second root
  Rational k10;  // always equal to k4
  Int phi;
  SpecialValue mu1;     // max{k1, k3, k7}
  SpecialValue mu2;     // min{k2, k5, k8}
  std::vector<Int> xi;  // integers strictly between mu1 and mu2

  bool k4_integral() const noexcept { return k4.is_integer(); }
};

SpecialKProfile special_k_profile(const FamilyParams& p);

enum class TripleKind {
  Invalid,               // a generator <= 0
  Degenerate,            // a generator equals 1
  TwoDimR1,              // r1*k + r2 = 1: reduces to {r1, r3 - r1^2 k}
  TwoDimR1Squared,       // second generator redundant: {r1^2, r3 - r1^2 k}
  TwoDimPair,            // r1^2 redundant: {second, third}
  ThreeDimSymmetric,
  ThreeDimNonsymmetric,
};

std::string_view to_string(TripleKind kind) noexcept;

struct KClassification {
  Int k;
  RawTriple triple;
  TripleKind kind;
  std::optional<GeneratorTuple> reduced;  // minimal generating set, when valid
  std::optional<Int> frobenius;
  std::optional<Int> genus;
  bool symmetric = false;
  bool phi_match = false;
  /// Kinds allowed by the closed-form k-ranges; empty when the ranges do
  /// not decide (e.g. inside the ambiguous window).
  std::vector<TripleKind> predicted;
  std::vector<std::string> diagnostics;
};

/// Oracle-backed classification; the closed-form prediction is attached and
/// any disagreement is reported as a diagnostic, never as the verdict.
KClassification classify_k(const FamilyParams& p, Int k, const OracleLimits& limits = {});
KClassification classify_k(const FamilyParams& p, const SpecialKProfile& sk, Int k,
                           const OracleLimits& limits = {});

struct SpecialKEntry {
  std::string name;                  // "k1" ... "k9"
  std::optional<SpecialValue> value; // nullopt for a nonexistent k7/k8
  std::optional<Int> floor;
  std::optional<KClassification> at_floor;
};

/// Special values k1..k9 with the classification at floor(k_i).
struct SpecialKTable {
  Int phi;
  std::vector<SpecialKEntry> entries;
};

SpecialKTable special_k_table(const FamilyParams& p, const OracleLimits& limits = {});

struct ScanResult {
  std::vector<KClassification> entries;
  SpecialKTable table;
};

/// Throws InvalidParams if k_lo > k_hi.
ScanResult scan_range(const FamilyParams& p, Int k_lo, Int k_hi, const OracleLimits& limits = {});

struct WindowReport {
  SpecialValue mu1;
  SpecialValue mu2;
  std::vector<Int> xi;
  std::vector<KClassification> verdicts;
};

WindowReport ambiguous_window(const FamilyParams& p, const OracleLimits& limits = {});

enum class Relation {
  Equivalent,        // criterion holds iff the comparison holds
  CriterionImplies,  // criterion is sufficient only
};

struct OrderingCheck {
  std::string name;
  Relation relation;
  bool by_criterion;   // stated in terms of r1, r2, r3
  bool by_comparison;  // exact comparison of the k-values

  bool agrees() const noexcept {
    return relation == Relation::Equivalent ? by_criterion == by_comparison
                                            : (!by_criterion || by_comparison);
  }
};

struct OrderingReport {
  std::vector<OrderingCheck> checks;
  /// "k1<=k2<=k3", "k1<=k3<=k2", "k3<=k1<=k2" or "none", by exact comparison.
  std::string regime;

  bool all_agree() const noexcept;
  const OrderingCheck* find(std::string_view name) const noexcept;
};

OrderingReport ordering_relations(const FamilyParams& p);

/// The k at which the third generator equals r2 + r1 k + 1, a gap of
/// S(r1, r2 + r1 k), making the triple nonsymmetric. nullopt unless integral,
/// gcd(r1, r2 + 1) = 1 and the gap is confirmed by the oracle.
std::optional<Int> nonsymmetric_k_star(const FamilyParams& p, const OracleLimits& limits = {});

/// Two-parameter construction r1 = 2p-1, r2 = 4p-1, r3 = 2p k*(2p-1) + 4p.
/// Throws InvalidParams for p < 2 or when r3 would not be positive.
FamilyParams nonsymmetric_family(Int p_param, Int k_star);

}  // namespace nsg
