#include "nsg/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsg {

std::vector<Int> divisors(Int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "divisors of a non-positive integer");
  std::vector<Int> small, large;
  for (Int d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::string_view to_string(PrimeSquareVerdict v) noexcept {
  switch (v) {
    case PrimeSquareVerdict::NotApplicable: return "not-applicable";
    case PrimeSquareVerdict::QZeroCertified: return "q-zero-certified";
    case PrimeSquareVerdict::CandidateRemains: return "candidate-remains";
  }
  return "unknown";
}

bool prime_sum_certificate(const FamilyParams& p) { return is_prime(p.sum()); }

PrimeSquareVerdict prime_square_verdict(const FamilyParams& p) {
  const Int n = p.sum();
  const Int root = isqrt(n);
  if (root * root != n || !is_prime(root)) return PrimeSquareVerdict::NotApplicable;
  return (root - 1) % p.r1() == 0 ? PrimeSquareVerdict::CandidateRemains
                                  : PrimeSquareVerdict::QZeroCertified;
}

ReductionAnalysis solve_reduction(const FamilyParams& p, const OracleLimits& limits) {
  const Int r1 = p.r1();
  const Int sq = mul(r1, r1);
  const Int n = p.sum();

  ReductionAnalysis out{p, n, divisors(n), 0, {}, 0, prime_sum_certificate(p),
                        prime_square_verdict(p)};
  out.sigma0 = static_cast<Int>(out.divisors.size());

  // X = 1 would need g = 0 and X = n leaves the generator 1; both excluded.
  for (Int x : out.divisors) {
    if (x < 2 || x >= n) continue;
    const Int third = n / x;
    const Int shift = p.r3() - third;
    if (shift % sq != 0) continue;
    const Int k = shift / sq;
    const Int g = x - 1;
    if (g % r1 != 0 || third < 2) continue;

    const RawTriple t = triple_at(p, k);
    if (t[1] != mul(g, t[2]))
      throw std::logic_error("divisor solution violates the linear dependence");
    const Int pair_values[] = {sq, t[2]};
    GeneratorTuple pair = GeneratorTuple::from(pair_values);
    const GeneratorTuple reduced = reduce_to_minimal(GeneratorTuple::from(t), limits);
    if (!(reduced == pair))
      throw std::logic_error("divisor solution does not reduce to {r1^2, third}");
    const Int f = profile(pair, limits).frobenius;
    out.solutions.push_back(ReductionSolution{k, g, x, std::move(pair), f});
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const auto& a, const auto& b) { return a.k_star < b.k_star; });
  out.q = static_cast<Int>(out.solutions.size());
  return out;
}

}  // namespace nsg
