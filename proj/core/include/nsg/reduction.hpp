#pragma once

// Sporadic k at which the second family generator becomes a multiple of the
// third,
//     r1*r2 + r1^2 k = g (r3 - r1^2 k),   g >= 1,
// which collapses the triple onto the pair {r1^2, r3 - r1^2 k}. With X = g+1
// the equation reads r1^2 k - r3 + n/X = 0 for n = r1*r2 + r3, so every
// solution comes from a divisor X of n.

#include <vector>

#include "nsg/family.hpp"

namespace nsg {

/// Sorted positive divisors by trial division.
std::vector<Int> divisors(Int n);
bool is_prime(Int n);

struct ReductionSolution {
  Int k_star;
  Int g_star;
  Int divisor;                 // X = g_star + 1, a divisor of n
  GeneratorTuple reduced_pair; // {r1^2, r3 - r1^2 k_star}
  Int frobenius;
};

enum class PrimeSquareVerdict {
  NotApplicable,     // n is not the square of a prime
  QZeroCertified,    // n = p^2 and r1 does not divide p - 1
  CandidateRemains,  // n = p^2 and r1 | p - 1; only the solver decides
};

std::string_view to_string(PrimeSquareVerdict v) noexcept;

struct ReductionAnalysis {
  FamilyParams params;
  Int n;
  std::vector<Int> divisors;
  Int sigma0;
  std::vector<ReductionSolution> solutions;  // sorted by k_star
  Int q;
  bool prime_certificate;          // n prime, hence q = 0
  PrimeSquareVerdict prime_square;
};

ReductionAnalysis solve_reduction(const FamilyParams& p, const OracleLimits& limits = {});

/// n = r1*r2 + r3 is prime.
bool prime_sum_certificate(const FamilyParams& p);

PrimeSquareVerdict prime_square_verdict(const FamilyParams& p);

}  // namespace nsg
