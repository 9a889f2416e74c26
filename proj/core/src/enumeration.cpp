#include "nsg/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace nsg {

std::vector<Int> feasible_r1() {
  // Sign of r1(r1 - 4)/(r1 - 1) is that of r1 - 4 for r1 >= 2, and it stays
  // positive once it turns positive.
  std::vector<Int> out;
  for (Int r1 = 2;; ++r1) {
    if (Rational(r1 * (r1 - 4), r1 - 1) > Rational(0)) break;
    out.push_back(r1);
  }
  return out;
}

SumWindow sum_window(Int r1) {
  return {2 * r1 + 3, floor_div(r1 * r1 + 5 * r1 - 3, r1 - 1)};
}

std::string_view to_string(BoundaryCase c) noexcept {
  return c == BoundaryCase::Generic ? "generic" : "degenerate";
}

CountBound count_bound(const FamilyParams& p) {
  const SpecialKProfile sk = special_k_profile(p);
  if (!(sk.k1 <= sk.k2 && sk.k2 <= sk.k3))
    throw Error(ErrorCode::RegimeMismatch, "count bound needs k1 <= k2 <= k3");
  const Int r1 = p.r1();
  CountBound b{std::max<Int>(0, sk.k2.floor() - sk.k1.ceil() + 1),
               sk.k2.floor() - sk.k1.floor() + 1, sk.k2 - sk.k1,
               Rational(4 - r1, r1 * (r1 - 1))};
  return b;
}

EnumerationReport enumerate_all(const OracleLimits& limits) {
  EnumerationReport report{{}, 0};
  auto make_record = [&](const FamilyParams& p, Int k, BoundaryCase c) {
    const RawTriple t = triple_at(p, k);
    GeneratorTuple tuple = GeneratorTuple::from(std::span<const Int>(t));
    GeneratorTuple reduced = reduce_to_minimal(tuple, limits);
    const SemigroupProfile prof = profile(tuple, limits);
    report.records.push_back(EnumerationRecord{p.r1(), p.r2(), p.r3(), k, c, t, std::move(tuple),
                                               std::move(reduced), prof.frobenius,
                                               prof.symmetric, p.sum()});
  };

  for (Int r1 : feasible_r1()) {
    const SumWindow window = sum_window(r1);
    for (Int e = window.lo; e <= window.hi; ++e) {
      // e = r3 (mod r1), so gcd(r1, e) = 1 is gcd(r1, r3) = 1.
      if (std::gcd(r1, e) != 1) continue;
      for (Int r2 = 1; r1 * r2 < e; ++r2) {
        if (std::gcd(r1, r2) != 1) continue;
        const FamilyParams p = FamilyParams::make(r1, r2, e - r1 * r2);
        const SpecialKProfile sk = special_k_profile(p);

        bool any_generic = false;
        for (Int k = sk.k1.ceil(); k <= sk.k2.floor(); ++k) {
          if (r1 * k + r2 == 1) continue;
          make_record(p, k, BoundaryCase::Generic);
          any_generic = true;
        }
        if (!any_generic) ++report.dropped;

        if (sk.k4_integral()) make_record(p, sk.k4.num(), BoundaryCase::Degenerate);
        else ++report.dropped;
      }
    }
  }

  std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.r1, a.e, a.r2, a.boundary_case) <
           std::tuple(b.r1, b.e, b.r2, b.boundary_case);
  });
  return report;
}

}  // namespace nsg
