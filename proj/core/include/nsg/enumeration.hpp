#pragma once

// Finite enumeration of the regime k1 <= k2 <= k3, where every integer k in
// [k1, k2] gives a symmetric semigroup with Frobenius number phi. The regime
// is non-empty only for r1 in {2, 3, 4}, and there r1*r2 + r3 is confined to
// a short window, so the whole regime can be listed.

#include <vector>

#include "nsg/family.hpp"

namespace nsg {

/// r1 >= 2 for which 2r1 + 3 <= (r1^2 + 5r1 - 3)/(r1 - 1), i.e.
/// r1(r1 - 4)/(r1 - 1) <= 0.
std::vector<Int> feasible_r1();

/// Inclusive window for e = r1*r2 + r3 in the k1 <= k2 <= k3 regime.
struct SumWindow {
  Int lo;
  Int hi;
};
SumWindow sum_window(Int r1);

struct CountBound {
  Int count;               // integers k in [k1, k2]; always < 2
  Int floor_span;          // floor(k2) - floor(k1) + 1, a coarser bound
  Rational length;         // k2 - k1 = (e - 2r1 - 3) / r1^2
  Rational length_bound;   // (4 - r1) / (r1 (r1 - 1)), the window's cap on length
};

/// Throws RegimeMismatch unless k1 <= k2 <= k3 holds for p.
CountBound count_bound(const FamilyParams& p);

enum class BoundaryCase {
  Generic,     // r1*k + r2 != 1
  Degenerate,  // r1*k + r2 == 1, second generator equals r1
};

std::string_view to_string(BoundaryCase c) noexcept;

struct EnumerationRecord {
  Int r1, r2, r3, k;
  BoundaryCase boundary_case;
  RawTriple triple;        // family order
  GeneratorTuple tuple;    // canonical
  GeneratorTuple reduced;  // minimal generating set
  Int frobenius;
  bool symmetric;
  Int e;                   // r1*r2 + r3
};

struct EnumerationReport {
  std::vector<EnumerationRecord> records;  // sorted by r1, e, r2, case
  Int dropped;  // (family, case) cells without an integral k
};

EnumerationReport enumerate_all(const OracleLimits& limits = {});

}  // namespace nsg
