#include "lgal/pipeline.hpp"
#include "lgal/report.hpp"

#include <gtest/gtest.h>

#include <set>

namespace lgal {
namespace {

TEST(ClassifyTest, CertifiedSymmetric) {
  const auto c = classify(14, -2);
  EXPECT_EQ(c.group, GaloisGroup::symmetric);
  EXPECT_EQ(c.tier, Tier::certified);
  ASSERT_TRUE(c.criterion.has_value());
  EXPECT_EQ(c.criterion->prime, 11U);
  EXPECT_FALSE(c.disc_square);
  EXPECT_EQ(c.disc_certificate.kind, CertificateKind::n_mod4_shortcut);
  EXPECT_TRUE(c.frobenius_samples.empty());
}

TEST(ClassifyTest, AlternatingPairs) {
  const auto a = classify(16, -9);
  EXPECT_EQ(a.group, GaloisGroup::alternating);
  EXPECT_TRUE(a.disc_square);

  const auto b = classify(8, -5);
  EXPECT_EQ(b.group, GaloisGroup::alternating);
  EXPECT_EQ(b.tier, Tier::heuristic);
  ASSERT_GE(b.frobenius_samples.size(), 50U);
  for (const auto& s : b.frobenius_samples) EXPECT_TRUE(s.cycle_type.is_even());
  // Even degree A_n has no n-cycle, so irreducibility is the known-range label.
  EXPECT_EQ(b.irreducibility.kind, IrreducibilityEvidence::Kind::assumed);
}

TEST(ClassifyTest, WitnessRecordedWhenFound) {
  ClassifyOptions generous;
  generous.opportunistic_witness_primes = 400;
  const auto c = classify(9, -3, generous);
  ASSERT_EQ(c.irreducibility.kind, IrreducibilityEvidence::Kind::witness);
  EXPECT_TRUE(is_irreducible(reduce_mod(curly_l(LaguerreParams(9, -3)), *c.irreducibility.prime)));
}

TEST(ClassifyTest, InvalidInputs) {
  EXPECT_THROW(classify(1, -3), std::invalid_argument);
  EXPECT_THROW(classify(0, -3), std::invalid_argument);
}

TEST(ClassifyTest, OutsideKnownRangeNeedsWitness) {
  // n odd: an n-cycle exists, so a witness is found and the cell is labelled.
  const auto c = classify(7, 3);
  EXPECT_EQ(c.irreducibility.kind, IrreducibilityEvidence::Kind::witness);
  // No witness budget outside the known range: refuse rather than guess.
  ClassifyOptions starved;
  starved.required_witness_primes = 0;
  EXPECT_THROW(classify(5, 4, starved), NotCertifiable);
}

TEST(TableTest, SmallTableIsAllSymmetric) {
  const auto t = classification_table({7, -18, -2});
  EXPECT_EQ(t.size(), 6U * 17U);
  EXPECT_TRUE(alternating_pairs(t).empty());
  for (std::size_t i = 1; i < t.size(); ++i)
    ASSERT_TRUE(std::make_pair(t[i - 1].n, t[i - 1].u) < std::make_pair(t[i].n, t[i].u));
}

TEST(TableTest, ParallelMatchesSerialAndIsDeterministic) {
  const TableRequest req{12, -10, -4};
  const auto a = classification_table(req);
  const auto b = classification_table_serial(req);
  const auto c = classification_table(req);
  EXPECT_EQ(emit_report(a, ReportFormat::json), emit_report(b, ReportFormat::json));
  EXPECT_EQ(emit_report(a, ReportFormat::json), emit_report(c, ReportFormat::json));
  EXPECT_EQ(alternating_pairs(a), (std::vector<std::pair<long, long>>{{8, -6}, {8, -5}, {9, -6}, {9, -5}}));
}

TEST(ReportTest, JsonKeys) {
  const auto j = to_json(classify(14, -2));
  std::set<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.insert(k);
  EXPECT_EQ(keys, (std::set<std::string>{"n", "u", "group", "tier", "irreducibility", "criterion_prime",
                                         "hajir_conditions", "disc_square", "disc_certificate_kind",
                                         "frobenius_samples"}));
  EXPECT_EQ(j["group"], "S_n");
  EXPECT_EQ(j["tier"], "certified");
  EXPECT_EQ(j["criterion_prime"], 11);
  EXPECT_EQ(j["disc_certificate_kind"], "n_mod4_shortcut");

  const auto h = to_json(classify(8, -5));
  EXPECT_TRUE(h["criterion_prime"].is_null());
  EXPECT_TRUE(h["hajir_conditions"].is_null());
  EXPECT_EQ(h["frobenius_samples"].size(), 50U);
  EXPECT_EQ(h["frobenius_samples"][0]["parity"], "even");
}

TEST(ReportTest, EmptyAndCsv) {
  EXPECT_EQ(emit_report({}, ReportFormat::json), "[]");
  EXPECT_EQ(emit_report({}, ReportFormat::csv), "n,u,group,tier,criterion_prime,disc_square\n");
  EXPECT_EQ(emit_report({classify(14, -2)}, ReportFormat::csv),
            "n,u,group,tier,criterion_prime,disc_square\n14,-2,S_n,certified,11,false\n");
}

}  // namespace
}  // namespace lgal
