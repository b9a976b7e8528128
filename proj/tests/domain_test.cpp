#include <gtest/gtest.h>

#include "vscore/domain.hpp"
#include "vscore/fixtures.hpp"

namespace vscore {
namespace {

Election abc(std::vector<Ballot> ballots, std::optional<std::vector<CandidateId>> axis = std::nullopt) {
  return Election({"a", "b", "c"}, std::move(ballots), std::move(axis));
}

TEST(KChotomous, TotalOrdersNeedKAtLeastM) {
  const Election e = abc({Ballot::total({0, 1, 2})});
  EXPECT_TRUE(check_kchotomous(e, 3).holds);
  const auto v = check_kchotomous(e, 2);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(std::get<KChotomousViolation>(v.violation).voter, 0);
  EXPECT_EQ(v.describe(e), "voter=1 groups=3");
  EXPECT_TRUE(check_kchotomous(abc({Ballot({{0, 1}, {2}}, 3)}), 2).holds);
  EXPECT_THROW(check_kchotomous(e, 0), Error);
}

TEST(SinglePeaked, TemperatureVotesHold) {
  const Election t = fixtures::temperature_votes();
  EXPECT_TRUE(check_single_peaked(t, *t.axis()).holds);
}

TEST(SinglePeaked, ValleyIsReported) {
  // a > c > b on axis a, b, c: b is ranked last while sitting between a and c
  const Election e = abc({Ballot::total({0, 2, 1})});
  const auto v = check_single_peaked(e, {0, 1, 2});
  ASSERT_FALSE(v.holds);
  const auto& w = std::get<SinglePeakedViolation>(v.violation);
  EXPECT_EQ(w.voter, 0);
  EXPECT_EQ(w.triple, (std::array<CandidateId, 3>{0, 1, 2}));
}

TEST(SinglePeaked, AxisOrderBallotHolds) {
  EXPECT_TRUE(check_single_peaked(abc({Ballot::total({0, 1, 2})}), {0, 1, 2}).holds);
  EXPECT_TRUE(check_single_peaked(abc({Ballot::total({2, 1, 0})}), {0, 1, 2}).holds);
}

TEST(SinglePeaked, RejectsWeakOrdersAndBadAxis) {
  try {
    check_single_peaked(abc({Ballot({{0, 1}, {2}}, 3)}), {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_ballot_kind);
  }
  EXPECT_THROW(check_single_peaked(abc({Ballot::total({0, 1, 2})}), {0, 1}), Error);
}

TEST(SingleCrossing, TemperatureVotesFail) {
  const Election t = fixtures::temperature_votes();
  const auto v = check_single_crossing(t);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.describe(t), "pair=16,25 flips=2,3");
}

TEST(SingleCrossing, WastedSwapExampleHolds) { EXPECT_TRUE(check_single_crossing(fixtures::ex_sc()).holds); }

TEST(SingleCrossing, SingleBallotHolds) { EXPECT_TRUE(check_single_crossing(abc({Ballot::total({1, 0, 2})})).holds); }

TEST(MedianVoters, OneBased) {
  EXPECT_EQ(median_voters(1), std::vector<VoterIndex>{1});
  EXPECT_EQ(median_voters(4), (std::vector<VoterIndex>{2, 3}));
  EXPECT_EQ(median_voters(5), std::vector<VoterIndex>{3});
  EXPECT_THROW(median_voters(0), Error);
}

}  // namespace
}  // namespace vscore
