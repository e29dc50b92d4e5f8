#include <gtest/gtest.h>

#include "k2free/verification.hpp"

namespace k2free {
namespace {

TEST(Verification, SuiteNamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_FALSE(parse_suite("nonsense"));
}

TEST(Verification, CheckGraphReportsDomain) {
  EXPECT_FALSE(check_graph(Suite::kMvs, Graph::complete(4)).applicable);
  EXPECT_FALSE(check_graph(Suite::kMvs, Graph::path(5)).applicable);
  const auto c4 = check_graph(Suite::kMvs, Graph::cycle(4));
  EXPECT_TRUE(c4.applicable);
  EXPECT_TRUE(c4.agree);
  EXPECT_TRUE(check_graph(Suite::kRecognition, Graph::path(5)).agree);
}

TEST(Verification, ExhaustiveUpToFiveHasNoDisagreements) {
  VerifyOptions options;
  options.max_n = 5;
  for (const auto& report : run_exhaustive_verification(options)) {
    if (report.suite == Suite::kConnectedPaper) continue;
    EXPECT_EQ(report.disagreements, 0U) << to_string(report.suite);
    EXPECT_GT(report.graphs, 0U) << to_string(report.suite);
  }
}

}  // namespace
}  // namespace k2free
