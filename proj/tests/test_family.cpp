#include <gtest/gtest.h>

#include <cmath>

#include "coil/error.hpp"
#include "coil/family.hpp"
#include "coil/report.hpp"

using namespace coil;

namespace {

CoilFamily fixed_slope(std::int64_t p, std::int64_t q, std::int64_t n2, std::int64_t from, std::int64_t to) {
  CoilFamily f;
  f.kind = FamilyKind::FixedSlopeVaryTwists;
  f.p = p;
  f.q = q;
  f.n2 = n2;
  f.start = from;
  f.end = to;
  return f;
}

CoilFamily vary_slope(SlopeSequence seq, std::int64_t n, std::int64_t from, std::int64_t to) {
  CoilFamily f;
  f.kind = FamilyKind::VarySlopeFixedTwists;
  f.sequence = seq;
  f.n = n;
  f.start = from;
  f.end = to;
  return f;
}

CoilFamily custom(std::vector<Slope> slopes, std::int64_t n) {
  CoilFamily f = vary_slope(SlopeSequence::CustomList, n, 1, static_cast<std::int64_t>(slopes.size()));
  f.custom = std::move(slopes);
  return f;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::PreconditionViolation;
}

}  // namespace

TEST(Sequences, Slopes) {
  EXPECT_EQ(sequence_slope(SlopeSequence::Fibonacci, 1), Slope(1, 2));
  EXPECT_EQ(sequence_slope(SlopeSequence::Fibonacci, 2), Slope(2, 3));
  EXPECT_EQ(sequence_slope(SlopeSequence::Fibonacci, 3), Slope(3, 5));
  EXPECT_EQ(sequence_slope(SlopeSequence::Fibonacci, 4), Slope(5, 8));
  EXPECT_EQ(sequence_slope(SlopeSequence::Fibonacci, 20), Slope(10946, 17711));
  for (std::int64_t m = 1; m <= 40; ++m) {
    EXPECT_EQ(cfrac_expand(sequence_slope(SlopeSequence::Fibonacci, m)).length(), static_cast<std::size_t>(m));
    EXPECT_EQ(sequence_slope(SlopeSequence::OddDenominators, m), Slope(1, 2 * m + 1));
  }
}

TEST(AnalyzeFamily, FixedSlopeHasConstantUpperColumn) {
  const FamilyReport r = analyze_family(fixed_slope(2, 5, 6, 4, 100), {4, 20000});
  ASSERT_EQ(r.rows.size(), 97u);
  EXPECT_TRUE(r.uncertified.empty());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    EXPECT_EQ(row.index, static_cast<std::int64_t>(4 + i));
    EXPECT_EQ(row.k, 2);
    EXPECT_NEAR(row.volume.upper, 8 * 3.6638623767088760602, 1e-9);
    EXPECT_EQ(row.crossings, 20 * (row.index + 6));
    EXPECT_EQ(row.lambda.lower, r.rows.front().lambda.lower);
    EXPECT_EQ(row.generalized_twist_regions, 2u);
    ASSERT_TRUE(row.twist_regions.has_value());
    if (i > 0) EXPECT_GT(*row.twist_regions, *r.rows[i - 1].twist_regions);
  }
  ASSERT_TRUE(r.verdict.has_value());
  EXPECT_EQ(*r.verdict, Verdict::ExpandingCertified);
  EXPECT_NEAR(r.summary->inf_lambda_lower, 1.020e-17, 0.001e-17);
  EXPECT_NEAR(r.summary->inf_lambda_lower, constants::lambda_floor_numerator / std::pow(8 * constants::v8, 2), 1e-30);
}

TEST(AnalyzeFamily, FibonacciSlopesAreNotExpanding) {
  const FamilyReport r = analyze_family(vary_slope(SlopeSequence::Fibonacci, 4, 1, 20), {4, 20000});
  ASSERT_EQ(r.rows.size(), 20u);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    const double k = static_cast<double>(i + 1);
    EXPECT_EQ(row.k, static_cast<std::int64_t>(i + 1));
    EXPECT_NEAR(row.volume.lower, 0.9718 * k - 0.3241, 2e-4 * k);
    EXPECT_EQ(row.generalized_twist_regions, 2u);
    if (i > 0) {
      EXPECT_GT(row.volume.lower, r.rows[i - 1].volume.lower);
      EXPECT_LT(row.lambda.upper, r.rows[i - 1].lambda.upper);
    }
  }
  EXPECT_LT(r.rows.back().lambda.upper, r.rows.front().lambda.upper / 10);
  EXPECT_EQ(r.summary->lambda_upper_trend, Trend::StrictlyDecreasing);
  EXPECT_EQ(*r.verdict, Verdict::NotExpandingCertified);
  // Large members are not drawn; their t(D) stays empty.
  EXPECT_FALSE(r.rows.back().twist_regions.has_value());
  EXPECT_EQ(r.rows.back().crossings, 17711LL * 17710LL * 8LL);
}

TEST(AnalyzeFamily, OddDenominatorsKeepKFixed) {
  const FamilyReport r = analyze_family(vary_slope(SlopeSequence::OddDenominators, 5, 1, 6));
  EXPECT_EQ(r.rows.size(), 6u);
  EXPECT_EQ(*r.verdict, Verdict::ExpandingCertified);
  EXPECT_EQ(r.summary->k_trend, Trend::Constant);
}

TEST(AnalyzeFamily, CustomLists) {
  EXPECT_EQ(*analyze_family(custom({Slope(1, 2), Slope(2, 5), Slope(3, 8)}, 4)).verdict, Verdict::Inconclusive);
  EXPECT_EQ(*analyze_family(custom({Slope(1, 3), Slope(1, 7)}, 4)).verdict, Verdict::ExpandingCertified);
  EXPECT_EQ(*analyze_family(custom({Slope(3, 8), Slope(2, 5), Slope(1, 2)}, 4)).verdict, Verdict::Inconclusive);
}

TEST(AnalyzeFamily, SingleMemberIsExpanding) {
  const FamilyReport r = analyze_family(vary_slope(SlopeSequence::Fibonacci, 4, 7, 7));
  EXPECT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(*r.verdict, Verdict::ExpandingCertified);
}

TEST(AnalyzeFamily, EmptyRange) {
  EXPECT_EQ(kind_of([] { analyze_family(fixed_slope(2, 5, 6, 10, 4)); }), ErrorKind::EmptyRange);
  CoilFamily f = fixed_slope(2, 5, 6, 4, 10);
  f.step = 0;
  EXPECT_EQ(kind_of([&] { analyze_family(f); }), ErrorKind::EmptyRange);
}

TEST(AnalyzeFamily, UncertifiedMembersAreListed) {
  const FamilyReport r = analyze_family(fixed_slope(2, 5, 6, -2, 5));
  // n1 = 0 is not a double coil; |n1| < 4 with k = 2 has no certificate.
  EXPECT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.uncertified.size(), 6u);
  EXPECT_EQ(r.uncertified[0].error, "NoHyperbolicityCertificate");
  EXPECT_EQ(r.uncertified[2].error, "PreconditionViolation");

  const FamilyReport none = analyze_family(fixed_slope(1, 2, 1, 1, 3));
  EXPECT_TRUE(none.rows.empty());
  EXPECT_FALSE(none.verdict.has_value());
  EXPECT_EQ(kind_of([&] { expanding_verdict(none); }), ErrorKind::NoCertifiedRows);
}

TEST(AnalyzeFamily, IndependentOfWorkerCount) {
  const CoilFamily f = fixed_slope(3, 7, 5, 1, 40);
  const std::string one = family_json(analyze_family(f, {1, 5000}), 15).dump();
  for (unsigned jobs : {2u, 3u, 8u}) EXPECT_EQ(family_json(analyze_family(f, {jobs, 5000}), 15).dump(), one);
}

TEST(AnalyzeFamily, StepSkipsIndices) {
  CoilFamily f = fixed_slope(2, 5, 6, 4, 20);
  f.step = 5;
  EXPECT_EQ(f.indices(), (std::vector<std::int64_t>{4, 9, 14, 19}));
}

TEST(ParseConfig, FixedSlope) {
  const CoilFamily f = CoilFamily::parse_config(
      "# twist growth\nkind = fixed-slope\np=2\nq=5\nn2=6\nstart=4\nend=100\n");
  EXPECT_EQ(f.kind, FamilyKind::FixedSlopeVaryTwists);
  EXPECT_EQ(f.p, 2);
  EXPECT_EQ(f.q, 5);
  EXPECT_EQ(f.n2, 6);
  EXPECT_EQ(f.start, 4);
  EXPECT_EQ(f.end, 100);
  EXPECT_EQ(f.step, 1);
}

TEST(ParseConfig, VarySlope) {
  const CoilFamily f = CoilFamily::parse_config("kind=vary-slope\nsequence=fibonacci\nn=4\nstart=1\nend=20\n");
  EXPECT_EQ(f.kind, FamilyKind::VarySlopeFixedTwists);
  EXPECT_EQ(f.sequence, SlopeSequence::Fibonacci);
  EXPECT_EQ(f.n, 4);
  const CoilFamily c = CoilFamily::parse_config("kind=vary-slope\nsequence=custom-list\nn1=5\nn2=5\nslopes=1/2, 2/5,3/8\n");
  EXPECT_EQ(c.custom.size(), 3u);
  EXPECT_EQ(c.end, 3);
  EXPECT_EQ(c.custom[1], Slope(2, 5));
}

TEST(ParseConfig, Errors) {
  auto err = [](const char* text) { return kind_of([&] { CoilFamily::parse_config(text); }); };
  EXPECT_EQ(err("kind=fixed-slope\np=2\nq=5\nn2=6\nstart=4\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("kind=fixed-slope\np=two\nq=5\nn2=6\nstart=4\nend=5\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("kind=spiral\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("kind=fixed-slope\ncolor=red\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("kind=vary-slope\nsequence=primes\nn=4\nend=3\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("kind=vary-slope\nsequence=fibonacci\nn1=4\nn2=5\nend=3\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("just words\n"), ErrorKind::ConfigError);
  EXPECT_EQ(err("p=1\np=2\n"), ErrorKind::ConfigError);
}

TEST(TwistGrowth, Table) {
  const auto rows = twist_growth_experiment(2, 5, 6, 4, 10);
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.crossings, 20 * (row.n1 + 6));
    EXPECT_DOUBLE_EQ(row.volume_upper, rows.front().volume_upper);
    EXPECT_TRUE(row.disk_obstruction);
    ASSERT_TRUE(row.twist_regions.has_value());
  }
  EXPECT_EQ(twist_growth_experiment(2, 5, 6, 7, 7).size(), 1u);
  EXPECT_FALSE(twist_growth_experiment(2, 5, 5, 4, 4).front().disk_obstruction);
}
