#pragma once

// Published special-k values (two decimals, as printed) and Frobenius numbers
// at floor(k_i) for the three reference families (2,3,87), (3,1,85) and
// (3,7,80), together with a cell-by-cell comparison against computed values.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/family.hpp"

namespace nsg {

struct PublishedCell {
  std::string name;               // "k1" ... "k9"
  std::string value;              // decimal as printed
  std::optional<Int> frobenius;   // nullopt where a dash is printed
};

struct PublishedRow {
  Int r1, r2, r3;
  Int phi;
  std::vector<PublishedCell> cells;
};

const std::vector<PublishedRow>& published_rows();
const PublishedRow* find_published_row(const FamilyParams& p);

/// Exact value of a decimal literal such as "-1.24" or "21".
Rational parse_decimal(std::string_view text);

struct CellComparison {
  std::string name;
  std::string published_value;
  std::optional<std::string> truncated;   // computed, 2 places, toward zero
  std::optional<std::string> rounded;     // computed, 2 places, half away
  bool value_matches = false;             // published equals either rendering
  bool sign_flipped = false;              // published matches the negated value
  std::optional<Int> published_frobenius;
  std::optional<Int> computed_frobenius;
  TripleKind computed_kind = TripleKind::Invalid;
  bool frobenius_matches = false;         // a dash matches an Invalid triple
};

struct RowComparison {
  bool phi_matches = false;
  std::vector<CellComparison> cells;
  std::vector<std::string> diagnostics;
};

RowComparison compare_with_published(const FamilyParams& p, const SpecialKTable& table,
                                     const PublishedRow& row, const OracleLimits& limits = {});

}  // namespace nsg
