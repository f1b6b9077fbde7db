#include <gtest/gtest.h>

#include "mon_families.hpp"
#include "oracles.hpp"
#include "wrideal/mon.hpp"
#include "wrideal/reductions.hpp"

using namespace wrideal;
using oracle::FamilyShape;
using oracle::q;

namespace {

bool monotone(const std::vector<Rational>& v, Direction d) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    const bool ok = d == Direction::Increasing ? v[i - 1] < v[i] : d == Direction::Constant ? v[i - 1] == v[i]
                                                                                           : v[i - 1] > v[i];
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST(ColumnFamily, ValidatesDeclaredModes) {
  ColumnSpec bad_order{0, ColumnMode::Nondecreasing, {0, 1}, {q(1), q(0)}, ExtendedRational::finite(q(2)), 0};
  EXPECT_FALSE(ColumnFamilyDescriptor({bad_order}).issues().empty());
  ColumnSpec reaches_limit{0, ColumnMode::Nondecreasing, {0, 1}, {q(0), q(2)}, ExtendedRational::finite(q(2)), 0};
  EXPECT_FALSE(ColumnFamilyDescriptor({reaches_limit}).issues().empty());
  ColumnSpec constant{0, ColumnMode::EventuallyConstant, {0, 1, 2}, {q(0), q(3), q(3)},
                      ExtendedRational::finite(q(3)), 1};
  EXPECT_TRUE(ColumnFamilyDescriptor({constant}).issues().empty());
  constant.constant_from = 0;
  EXPECT_FALSE(ColumnFamilyDescriptor({constant}).issues().empty());
  ColumnSpec unbounded{1, ColumnMode::Nondecreasing, {0, 4}, {q(0), q(9)}, ExtendedRational::pos_inf(), 0};
  EXPECT_TRUE(ColumnFamilyDescriptor({unbounded}).issues().empty());
}

TEST(ColumnFamily, NegationSwapsModes) {
  oracle::Gen g(1);
  const auto d = oracle::random_family(FamilyShape::Dual, g, 5, 6);
  const auto n = d.negated();
  EXPECT_TRUE(n.issues().empty());
  for (const auto& s : n.columns()) EXPECT_EQ(s.mode, ColumnMode::Nondecreasing);
  EXPECT_EQ(*n.value({2, 3}), -*d.value({2, 3}));
}

TEST(ExtractMon, IncreasingLimits) {
  const auto d = ColumnFamilyDescriptor::tabulate(
      45, 60, [](Nat i, Nat j) { return q(static_cast<std::int64_t>(i)) - q(1, static_cast<std::int64_t>(j) + 2); },
      [](Nat) { return ColumnMode::Nondecreasing; },
      [](Nat i) { return ExtendedRational::finite(q(static_cast<std::int64_t>(i))); });
  const MapSpec pi = cantor_map();
  const auto c = extract_mon(pi, d, 20, 5);
  EXPECT_EQ(c.mon_case, MonCase::LimitsIncreasing);
  EXPECT_EQ(c.direction, Direction::Increasing);
  EXPECT_TRUE(monotone(c.values, Direction::Increasing));
  EXPECT_TRUE(verify_certificate(c, pi, d).ok);
}

TEST(ExtractMon, EventuallyConstantWitness) {
  oracle::Gen g(2);
  const auto d = oracle::random_family(FamilyShape::EventuallyConstant, g);
  const MapSpec pi = cantor_map();
  const auto c = extract_mon(pi, d, 20, 3);
  EXPECT_EQ(c.mon_case, MonCase::ConstantEventually);
  EXPECT_EQ(c.direction, Direction::Constant);
  ASSERT_EQ(c.witnesses.size(), 3u);
  const auto& w = c.witnesses.back();
  EXPECT_EQ(w.level, 3u);
  EXPECT_EQ(oracle::second_type(w.points), 4u);
  EXPECT_EQ(second_type_cover_number(PointSet(w.points)), 4u);
}

TEST(ExtractMon, DualPipeline) {
  oracle::Gen g(3);
  const auto d = oracle::random_family(FamilyShape::Dual, g);
  const MapSpec pi = cantor_map();
  const auto c = extract_mon(pi, d, 20, 5);
  EXPECT_TRUE(c.dual);
  EXPECT_EQ(c.direction, Direction::Decreasing);
  EXPECT_TRUE(monotone(c.values, Direction::Decreasing));
  EXPECT_TRUE(verify_certificate(c, pi, d).ok);
}

TEST(ExtractMon, EveryShapeVerifies) {
  oracle::Gen g(4);
  const MapSpec pi = cantor_map();
  const std::map<FamilyShape, MonCase> expected{{FamilyShape::IncreasingLimits, MonCase::LimitsIncreasing},
                                                {FamilyShape::EventuallyConstant, MonCase::ConstantEventually},
                                                {FamilyShape::CommonLimit, MonCase::ConstantIncreasing},
                                                {FamilyShape::DecreasingLimits, MonCase::LimitsDecreasing}};
  for (const auto& [shape, mon_case] : expected) {
    for (int t = 0; t < 5; ++t) {
      const auto d = oracle::random_family(shape, g);
      const auto c = extract_mon(pi, d, 20, 5);
      EXPECT_EQ(c.mon_case, mon_case) << oracle::to_string(shape);
      const auto check = verify_certificate(c, pi, d);
      EXPECT_TRUE(check.ok) << (check.reasons.empty() ? "" : check.reasons.front());
      for (const auto& w : c.witnesses) EXPECT_EQ(oracle::second_type(w.points), w.level + 1);
    }
  }
}

TEST(ExtractMon, OtherEnumerations) {
  oracle::Gen g(5);
  const auto d = oracle::random_family(FamilyShape::IncreasingLimits, g);
  const MapSpec pi = remark44_map();
  const auto c = extract_mon(pi, d, 20, 5);
  EXPECT_TRUE(verify_certificate(c, pi, d).ok);
}

TEST(ExtractMon, PartialResults) {
  oracle::Gen g(6);
  const auto d = oracle::random_family(FamilyShape::IncreasingLimits, g, 10, 60);
  try {
    extract_mon(cantor_map(), d, 20, 3);
    FAIL();
  } catch (const MonPartialError& e) {
    EXPECT_EQ(e.prefix().points.size(), 5u);
    EXPECT_TRUE(verify_certificate(e.prefix(), cantor_map(), d).ok);
  }
  ColumnSpec broken{0, ColumnMode::Nondecreasing, {0, 1}, {q(1), q(0)}, ExtendedRational::finite(q(2)), 0};
  try {
    extract_mon(cantor_map(), ColumnFamilyDescriptor({broken}), 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("descriptor invalid", 0), 0u);
  }
  EXPECT_THROW(extract_mon(pihat_map(), d, 4, 1), Error);
}

TEST(VerifyCertificate, RejectsTampering) {
  oracle::Gen g(7);
  const auto d = oracle::random_family(FamilyShape::IncreasingLimits, g);
  const MapSpec pi = cantor_map();
  const auto c = extract_mon(pi, d, 20, 5);
  ASSERT_TRUE(verify_certificate(c, pi, d).ok);

  auto perturbed = c;
  perturbed.values[3] = perturbed.values[2];
  EXPECT_FALSE(verify_certificate(perturbed, pi, d).ok);

  auto reordered = c;
  std::swap(reordered.witnesses[1].points[0], reordered.witnesses[1].points[1]);
  EXPECT_FALSE(verify_certificate(reordered, pi, d).ok);

  auto wrong_index = c;
  wrong_index.indices[0] += 1;
  EXPECT_FALSE(verify_certificate(wrong_index, pi, d).ok);
}

TEST(WitnessOffset, WindowsFitAndGrow) {
  EXPECT_EQ(witness_offset(1), 1u);
  EXPECT_EQ(witness_offset(2), 2u);
  EXPECT_EQ(witness_offset(3), 3u);
  EXPECT_EQ(witness_offset(5), 10u);
  for (Nat l = 1; l <= 5; ++l) EXPECT_LT(witness_offset(l) + l, 20u);
}
