#pragma once

// Brute-force numerical semigroup oracle plus the two classical closed
// forms (Sylvester for two generators, Herzog for glued triples). All other
// modules validate against this one.

#include <optional>
#include <span>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Caps oracle effort. The cost measure is d_min * d_max, which bounds the
/// conductor and therefore every scan the oracle performs.
struct OracleLimits {
  Int work_bound = 100'000'000;
};

/// Generators of a numerical semigroup in canonical form: sorted ascending,
/// duplicates removed, every element >= 1, gcd 1.
class GeneratorTuple {
 public:
  /// Canonicalizes and validates. Throws InvalidTuple for an empty tuple or
  /// a generator < 1, NotCoprime when the gcd exceeds 1.
  static GeneratorTuple from(std::span<const Int> generators);
  static GeneratorTuple from(std::initializer_list<Int> generators) {
    return from(std::span<const Int>(generators.begin(), generators.size()));
  }

  std::span<const Int> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  Int min() const noexcept { return gens_.front(); }
  Int max() const noexcept { return gens_.back(); }
  Int operator[](std::size_t i) const noexcept { return gens_[i]; }

  /// Contains 1, so the semigroup is all of N and has no Frobenius number.
  bool degenerate() const noexcept { return gens_.front() == 1; }

  friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;

 private:
  explicit GeneratorTuple(std::vector<Int> gens) : gens_(std::move(gens)) {}
  std::vector<Int> gens_;
};

/// Apéry set of S with respect to its smallest generator m: for every
/// residue r mod m, the least element of S congruent to r.
class AperySet {
 public:
  static AperySet compute(const GeneratorTuple& tuple, const OracleLimits& limits = {});

  Int modulus() const noexcept { return static_cast<Int>(elements_.size()); }
  std::span<const Int> elements() const noexcept { return elements_; }

  bool contains(Int s) const noexcept {
    return s >= 0 && s >= elements_[static_cast<std::size_t>(s % modulus())];
  }
  /// max(Apéry) - m; -1 for the degenerate semigroup N.
  Int frobenius() const noexcept;
  /// Number of gaps, sum over residues of (w_r - r) / m.
  Int genus() const noexcept;

 private:
  explicit AperySet(std::vector<Int> e) : elements_(std::move(e)) {}
  std::vector<Int> elements_;
};

struct SemigroupProfile {
  GeneratorTuple tuple;
  Int frobenius;          // -1 iff the semigroup is all of N
  Int conductor;          // frobenius + 1
  std::vector<Int> gaps;  // sorted
  Int genus;
  bool symmetric;         // checked on the definition, pair by pair in [0, F]
  bool minimal;
};

bool membership(const GeneratorTuple& tuple, Int s, const OracleLimits& limits = {});

/// Whether s is a non-negative combination of `generators`, which need not be
/// coprime (or non-empty). Used for minimality tests on sub-tuples.
bool representable(std::span<const Int> generators, Int s, const OracleLimits& limits = {});

/// Throws WorkBoundExceeded when d_min * d_max exceeds the bound.
SemigroupProfile profile(const GeneratorTuple& tuple, const OracleLimits& limits = {});

bool is_minimal(const GeneratorTuple& tuple, const OracleLimits& limits = {});

/// Repeatedly drops a generator representable by the others.
GeneratorTuple reduce_to_minimal(const GeneratorTuple& tuple, const OracleLimits& limits = {});

/// c1*c2 - c1 - c2. Throws NotCoprime or Degenerate (min < 2).
Int sylvester_frobenius(Int c1, Int c2);

/// A triple written as {b*c1, b*c2, a} with b >= 2, gcd(c1, c2) = 1 and
/// gcd(a, b) = 1. When a lies in S(c1, c2) the triple generates a symmetric
/// semigroup.
struct GluedTriple {
  Int b;
  Int c1;
  Int c2;
  Int a;

  friend bool operator==(const GluedTriple&, const GluedTriple&) = default;
};

/// b*c1*c2 + a*b - (b*c1 + b*c2 + a). Throws HypothesisUnverified unless the
/// decomposition is well formed and a lies in S(c1, c2).
Int herzog_frobenius(const GluedTriple& dec, const OracleLimits& limits = {});

/// Searches the three pairs for a gluing witness. Requires a 3-element tuple
/// (InvalidTuple otherwise). nullopt means no certificate, not asymmetry.
std::optional<GluedTriple> glued_decomposition(const GeneratorTuple& triple,
                                               const OracleLimits& limits = {});

}  // namespace nsg
