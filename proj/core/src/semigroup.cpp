#include "nsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace nsg {

namespace {

void check_work(Int smallest, Int largest, const OracleLimits& limits) {
  Wide cost = static_cast<Wide>(smallest) * largest;
  if (cost > limits.work_bound) {
    throw Error(ErrorCode::WorkBoundExceeded,
                "oracle work " + std::to_string(static_cast<long long>(narrow(cost))) +
                    " exceeds bound " + std::to_string(limits.work_bound));
  }
}

}  // namespace

GeneratorTuple GeneratorTuple::from(std::span<const Int> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidTuple, "empty generator tuple");
  std::vector<Int> gens(generators.begin(), generators.end());
  for (Int g : gens) {
    if (g < 1)
      throw Error(ErrorCode::InvalidTuple,
                  "generator " + std::to_string(g) + " is not a positive integer");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (Int g = gcd_of(gens); g != 1)
    throw Error(ErrorCode::NotCoprime, "generators have gcd " + std::to_string(g));
  return GeneratorTuple(std::move(gens));
}

AperySet AperySet::compute(const GeneratorTuple& tuple, const OracleLimits& limits) {
  const Int m = tuple.min();
  check_work(m, tuple.max(), limits);

  // Dijkstra over residues mod m; an edge r -> r+g carries weight g.
  constexpr Int kUnreached = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(m), kUnreached);
  using Item = std::pair<Int, Int>;  // (distance, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  dist[0] = 0;
  frontier.emplace(0, 0);
  const auto gens = tuple.generators();
  while (!frontier.empty()) {
    auto [d, r] = frontier.top();
    frontier.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens.subspan(1)) {
      Int next = (r + g) % m;
      Int nd = d + g;
      if (nd < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = nd;
        frontier.emplace(nd, next);
      }
    }
  }
  return AperySet(std::move(dist));
}

Int AperySet::frobenius() const noexcept {
  return *std::max_element(elements_.begin(), elements_.end()) - modulus();
}

Int AperySet::genus() const noexcept {
  Int total = 0;
  const Int m = modulus();
  for (Int r = 0; r < m; ++r) total += (elements_[static_cast<std::size_t>(r)] - r) / m;
  return total;
}

bool membership(const GeneratorTuple& tuple, Int s, const OracleLimits& limits) {
  if (s < 0) return false;
  if (tuple.degenerate()) return true;
  return AperySet::compute(tuple, limits).contains(s);
}

bool representable(std::span<const Int> generators, Int s, const OracleLimits& limits) {
  if (s == 0) return true;
  if (s < 0 || generators.empty()) return false;
  Int g = gcd_of(generators);
  if (s % g != 0) return false;
  std::vector<Int> scaled;
  scaled.reserve(generators.size());
  for (Int x : generators) scaled.push_back(x / g);
  return membership(GeneratorTuple::from(scaled), s / g, limits);
}

bool is_minimal(const GeneratorTuple& tuple, const OracleLimits& limits) {
  const auto gens = tuple.generators();
  std::vector<Int> others;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (representable(others, gens[i], limits)) return false;
  }
  return true;
}

GeneratorTuple reduce_to_minimal(const GeneratorTuple& tuple, const OracleLimits& limits) {
  std::vector<Int> gens(tuple.generators().begin(), tuple.generators().end());
  bool dropped = true;
  while (dropped && gens.size() > 1) {
    dropped = false;
    for (std::size_t i = gens.size(); i-- > 0;) {
      std::vector<Int> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (representable(others, gens[i], limits)) {
        gens = std::move(others);
        dropped = true;
        break;
      }
    }
  }
  return GeneratorTuple::from(gens);
}

SemigroupProfile profile(const GeneratorTuple& tuple, const OracleLimits& limits) {
  if (tuple.degenerate()) {
    return SemigroupProfile{tuple, -1, 0, {}, 0, true, is_minimal(tuple, limits)};
  }
  const AperySet apery = AperySet::compute(tuple, limits);
  const Int f = apery.frobenius();

  std::vector<Int> gaps;
  gaps.reserve(static_cast<std::size_t>(apery.genus()));
  for (Int s = 1; s <= f; ++s)
    if (!apery.contains(s)) gaps.push_back(s);

  bool symmetric = true;
  for (Int s = 0; s <= f && symmetric; ++s)
    symmetric = apery.contains(s) != apery.contains(f - s);

  const Int genus = static_cast<Int>(gaps.size());
  return SemigroupProfile{tuple, f, f + 1, std::move(gaps), genus, symmetric,
                          is_minimal(tuple, limits)};
}

Int sylvester_frobenius(Int c1, Int c2) {
  if (std::min(c1, c2) < 2)
    throw Error(ErrorCode::Degenerate, "Sylvester formula needs both generators >= 2");
  if (std::gcd(c1, c2) != 1)
    throw Error(ErrorCode::NotCoprime, "Sylvester formula needs coprime generators");
  return sub(sub(mul(c1, c2), c1), c2);
}

Int herzog_frobenius(const GluedTriple& dec, const OracleLimits& limits) {
  if (dec.b < 1 || dec.c1 < 1 || dec.c2 < 1 || dec.a < 1)
    throw Error(ErrorCode::HypothesisUnverified, "glued triple needs positive entries");
  if (std::gcd(dec.c1, dec.c2) != 1 || std::gcd(dec.a, dec.b) != 1)
    throw Error(ErrorCode::HypothesisUnverified,
                "glued triple needs gcd(c1,c2) = gcd(a,b) = 1");
  const Int pair[] = {dec.c1, dec.c2};
  if (!representable(pair, dec.a, limits))
    throw Error(ErrorCode::HypothesisUnverified,
                std::to_string(dec.a) + " is not in S(" + std::to_string(dec.c1) + "," +
                    std::to_string(dec.c2) + ")");
  Int bc1 = mul(dec.b, dec.c1);
  Int bc2 = mul(dec.b, dec.c2);
  return sub(add(mul(bc1, dec.c2), mul(dec.a, dec.b)), add(add(bc1, bc2), dec.a));
}

std::optional<GluedTriple> glued_decomposition(const GeneratorTuple& triple,
                                               const OracleLimits& limits) {
  if (triple.size() != 3)
    throw Error(ErrorCode::InvalidTuple, "glued decomposition needs exactly three generators");
  constexpr std::size_t kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& [i, j, k] : kPairs) {
    Int b = std::gcd(triple[i], triple[j]);
    Int a = triple[k];
    if (b < 2 || std::gcd(a, b) != 1) continue;
    Int c1 = triple[i] / b;
    Int c2 = triple[j] / b;
    const Int pair[] = {c1, c2};
    if (representable(pair, a, limits)) return GluedTriple{b, c1, c2, a};
  }
  return std::nullopt;
}

}  // namespace nsg
