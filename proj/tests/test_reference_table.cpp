#include <gtest/gtest.h>

#include "nsg/reference_table.hpp"

using namespace nsg;

namespace {

RowComparison compare_row(Int r1, Int r2, Int r3) {
  auto p = FamilyParams::make(r1, r2, r3);
  const PublishedRow* row = find_published_row(p);
  EXPECT_NE(row, nullptr);
  return compare_with_published(p, special_k_table(p), *row);
}

const CellComparison& cell(const RowComparison& rc, std::string_view name) {
  for (const auto& c : rc.cells)
    if (c.name == name) return c;
  throw std::out_of_range(std::string(name));
}

}  // namespace

TEST(ReferenceTable, ParseDecimal) {
  EXPECT_EQ(parse_decimal("14.16"), Rational(354, 25));
  EXPECT_EQ(parse_decimal("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_decimal("21"), Rational(21));
  EXPECT_THROW(parse_decimal("1.2.3"), Error);
}

TEST(ReferenceTable, ThreeRowsPublished) {
  EXPECT_EQ(published_rows().size(), 3u);
  EXPECT_EQ(find_published_row(FamilyParams::make(2, 5, 87)), nullptr);
}

TEST(ReferenceTable, RowAMatchesWithDashAsInvalid) {
  auto rc = compare_row(2, 3, 87);
  EXPECT_TRUE(rc.phi_matches);
  for (const auto& c : rc.cells) {
    EXPECT_TRUE(c.value_matches) << c.name;
    EXPECT_TRUE(c.frobenius_matches) << c.name;
  }
  EXPECT_EQ(cell(rc, "k7").computed_kind, TripleKind::Invalid);
  EXPECT_FALSE(cell(rc, "k7").published_frobenius);
}

TEST(ReferenceTable, RowBFlagsK7Sign) {
  auto rc = compare_row(3, 1, 85);
  EXPECT_TRUE(rc.phi_matches);
  for (const auto& c : rc.cells) {
    if (c.name == "k7") continue;
    EXPECT_TRUE(c.value_matches) << c.name;
    EXPECT_TRUE(c.frobenius_matches) << c.name;
  }
  const auto& k7 = cell(rc, "k7");
  EXPECT_FALSE(k7.value_matches);
  EXPECT_TRUE(k7.sign_flipped);
  EXPECT_EQ(*k7.truncated, "-0.21");
  ASSERT_FALSE(rc.diagnostics.empty());
  EXPECT_NE(rc.diagnostics.front().find("k7"), std::string::npos);
}

TEST(ReferenceTable, RowCMatches) {
  auto rc = compare_row(3, 7, 80);
  EXPECT_TRUE(rc.phi_matches);
  for (const auto& c : rc.cells) {
    EXPECT_TRUE(c.value_matches) << c.name;
    EXPECT_TRUE(c.frobenius_matches) << c.name;
  }
}
