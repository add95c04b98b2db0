#include <gtest/gtest.h>

#include "osp/verify.hpp"

using namespace osp;
using namespace osp::verify;

namespace {
std::vector<CheckRecord> run(const RunConfig& cfg) {
  auto ctx = std::make_shared<Context>(cfg);
  std::vector<CheckRecord> out;
  for (const auto& c : build_checks(ctx)) out.push_back(execute(c));
  return out;
}
}  // namespace

TEST(Verify, ConfigValidation) {
  RunConfig c;
  c.m = 1;
  EXPECT_THROW(c.validate(), Error);
  c.m = 4;
  c.suites = {"nonsense"};
  EXPECT_THROW(c.validate(), Error);
  c.suites = {"fock", "sb"};
  EXPECT_NO_THROW(c.validate());
  EXPECT_TRUE(c.wants("sb"));
  EXPECT_FALSE(c.wants("integral"));
}

TEST(Verify, DeterministicUpToTiming) {
  RunConfig c{5, 0, 2, {"quotient", "harmonics", "fock"}, 7};
  auto a = run(c), b = run(c);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].witness, b[i].witness);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Verify, IntegralSuitesSkipBelowFour) {
  RunConfig c{4, 1, 2, {"sb", "integral"}, 1};
  int skipped = 0, ran_inverse = 0;
  for (const auto& r : run(c)) {
    EXPECT_NE(r.status, Status::Fail) << r.name << ": " << r.witness;
    if (r.status == Status::Skip) ++skipped;
    if (r.name == "sb_inverse_intertwining" && r.status == Status::Pass) ++ran_inverse;
  }
  EXPECT_GE(skipped, 10);
  EXPECT_EQ(ran_inverse, 1);
}

TEST(Verify, DegenerateGramIsAPass) {
  RunConfig c{2, 2, 3, {"fock"}, 1};
  bool seen = false;
  for (const auto& r : run(c))
    if (r.name == "gram_rank") {
      seen = true;
      EXPECT_EQ(r.status, Status::Pass) << r.witness;
      EXPECT_NE(r.detail.find("degree 3: radical dimension"), std::string::npos) << r.detail;
    }
  EXPECT_TRUE(seen);
}

TEST(Verify, ExceptionsBecomeFailures) {
  Check c{"x", "throws", "", [] () -> Outcome { throw Error("boom"); }, ""};
  CheckRecord r = execute(c);
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(r.witness, "error: boom");
}
