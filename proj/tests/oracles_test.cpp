#include <gtest/gtest.h>

#include "vscore/fixtures.hpp"
#include "vscore/forge.hpp"
#include "vscore/generators.hpp"
#include "vscore/oracles.hpp"

namespace vscore {
namespace {

Election named(std::vector<std::string> names, std::vector<Ballot> ballots) {
  return Election(std::move(names), std::move(ballots));
}

TEST(YoungExact, KeepsEveryoneWhenPLeads) {
  // p=0 a=1
  std::vector<Ballot> b(3, Ballot({{0}, {1}}, 2));
  b.insert(b.end(), 2, Ballot({{1}, {0}}, 2));
  const auto r = young_score_exact(named({"p", "a"}, b), 0, false);
  EXPECT_EQ(r.score, 5);
  EXPECT_EQ(r.certificate.voters.size(), 5u);
}

TEST(YoungExact, LoserScoresZero) {
  const Election e = named({"a", "p"}, {Ballot::total({0, 1})});
  EXPECT_EQ(young_score_exact(e, 1, false).score, 0);
  EXPECT_EQ(young_score_exact(e, 1, true).score, 0);
}

TEST(YoungExact, TriangleGraphGivesAlphaPlusOne) {
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  const auto inst = forge(ForgeKind::youngscore, k3);
  EXPECT_EQ(young_score_exact(inst.election, inst.election.id("p"), false).score, 2);
  EXPECT_EQ(independence_number(k3).alpha + 1, 2);
}

TEST(YoungExact, CertificateIsMaximal) {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const Election e = random_total_orders(rng, uniform(rng, 2, 4), uniform(rng, 1, 8));
    const CandidateId p = uniform(rng, 0, e.num_candidates() - 1);
    for (bool strong : {false, true}) {
      const auto r = young_score_exact(e, p, strong);
      if (r.score == 0) continue;
      ASSERT_EQ(replay_certificate(e, strong ? Rule::strong_young : Rule::young, p, r.certificate), r.score);
      for (VoterIndex v = 0; v < e.num_voters(); ++v) {
        if (std::binary_search(r.certificate.voters.begin(), r.certificate.voters.end(), v)) continue;
        auto bigger = r.certificate.voters;
        bigger.push_back(v);
        EXPECT_FALSE(is_condorcet_winner(majority_table(restrict_voters(e, bigger)), p, !strong));
      }
    }
  }
}

TEST(YoungExact, VoterBudget) {
  OracleBudget tight;
  tight.max_voters = 3;
  const Election e = named({"a", "p"}, std::vector<Ballot>(4, Ballot::total({0, 1})));
  try {
    young_score_exact(e, 1, false, tight);
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.kind(), ErrorKind::budget_exceeded);
  }
}

TEST(DodgsonExact, WastedSwapExample) {
  const Election e = fixtures::ex_sc();
  const auto r = dodgson_score_exact(e, e.id("p"), false);
  EXPECT_EQ(r.score, 6);
  EXPECT_EQ(replay_certificate(e, Rule::dodgson, e.id("p"), r.certificate), 6);
}

TEST(DodgsonExact, GroupMovesOnOneBallot) {
  // a b c d; ({a,b} > {c,d}), p = c
  const Election e = named({"a", "b", "c", "d"}, {Ballot({{0, 1}, {2, 3}}, 4)});
  const auto strict = dodgson_score_exact(e, 2, false);
  const auto weak = dodgson_score_exact(e, 2, true);
  EXPECT_EQ(strict.score, 3);
  EXPECT_EQ(weak.score, 1);
  EXPECT_EQ(replay_certificate(e, Rule::dodgson, 2, strict.certificate), 3);
  EXPECT_EQ(replay_certificate(e, Rule::weak_dodgson, 2, weak.certificate), 1);
}

TEST(DodgsonExact, AlreadyWinning) {
  const Election e = named({"p", "a", "b"}, {Ballot::total({0, 1, 2})});
  EXPECT_EQ(dodgson_score_exact(e, 0, false).score, 0);
  EXPECT_EQ(dodgson_score_exact(e, 0, true).score, 0);
}

TEST(DodgsonExact, EmptyElectionIsAnError) {
  EXPECT_THROW(dodgson_score_exact(named({"a", "p"}, {}), 1, false), Error);
}

TEST(DodgsonExact, LiftSearchAgreesWithSwapSearch) {
  Rng rng(12);
  for (int i = 0; i < 80; ++i) {
    const Election e = random_total_orders(rng, uniform(rng, 2, 4), uniform(rng, 1, 5));
    const CandidateId p = uniform(rng, 0, e.num_candidates() - 1);
    for (bool weak : {false, true}) {
      const auto lifts = dodgson_score_exact(e, p, weak);
      const auto swaps = dodgson_score_edit_search(e, p, weak, EditModel::adjacent_swaps);
      EXPECT_EQ(lifts.score, swaps.score);
      EXPECT_EQ(replay_certificate(e, weak ? Rule::weak_dodgson : Rule::dodgson, p, swaps.certificate), swaps.score);
    }
  }
}

TEST(KemenyExact, SmallProfile) {
  // a b c
  const Election e = named({"a", "b", "c"}, {Ballot::total({0, 1, 2}), Ballot::total({1, 0, 2}),
                                             Ballot::total({1, 2, 0})});
  const auto best = kemeny_score_exact(e, std::nullopt, Objective::kemeny_min);
  EXPECT_EQ(best.score, 2);
  EXPECT_EQ(best.order, Ballot::total({1, 0, 2}));
  const auto a_first = kemeny_score_exact(e, 0, Objective::kemeny_min);
  EXPECT_EQ(a_first.score, 3);
  EXPECT_EQ(a_first.order, Ballot::total({0, 1, 2}));
}

TEST(KemenyExact, UnanimousProfile) {
  const Election e = named({"a", "b", "c"}, std::vector<Ballot>(3, Ballot::total({2, 0, 1})));
  const auto best = kemeny_score_exact(e, std::nullopt, Objective::kemeny_min);
  EXPECT_EQ(best.score, 0);
  EXPECT_EQ(best.order, Ballot::total({2, 0, 1}));
}

TEST(KemenyExact, NetMaxOnOnePair) {
  const Election e = named({"a", "b"}, {Ballot({{0}, {1}}, 2)});
  const auto best = kemeny_score_exact(e, std::nullopt, Objective::net_max);
  EXPECT_EQ(best.score, 1);
  EXPECT_EQ(best.order, Ballot::total({0, 1}));
}

TEST(KemenyExact, CandidateBudget) {
  OracleBudget tight;
  tight.max_candidates = 2;
  const Election e = named({"a", "b", "c"}, {Ballot::total({0, 1, 2})});
  EXPECT_THROW(kemeny_score_exact(e, std::nullopt, Objective::kemeny_min, tight), Error);
}

Election approvals_abc() {
  // approvals {a,b}, {a}, {a,c}
  return named({"a", "b", "c"}, {Ballot::dichotomous({0, 1}, 3), Ballot::dichotomous({0}, 3),
                                 Ballot::dichotomous({0, 2}, 3)});
}

TEST(DichotomousConsensus, NetMax) {
  const Election e = approvals_abc();
  const auto best = dichotomous_consensus_exact(e, 2, Objective::net_max, std::nullopt);
  EXPECT_EQ(best.score, 4);
  EXPECT_EQ(best.order, Ballot({{0}, {1, 2}}, 3));
  const auto b_top = dichotomous_consensus_exact(e, 2, Objective::net_max, 1);
  EXPECT_EQ(b_top.score, 2);
  EXPECT_EQ(b_top.order, Ballot({{0, 1}, {2}}, 3));
}

TEST(DichotomousConsensus, KEqualsMMatchesTotalOrdersForNetMax) {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const int m = uniform(rng, 2, 5);
    const Election e = random_dichotomous(rng, m, uniform(rng, 1, 6));
    const CandidateId p = uniform(rng, 0, m - 1);
    EXPECT_EQ(dichotomous_consensus_exact(e, m, Objective::net_max, std::nullopt).score,
              kemeny_score_exact(e, std::nullopt, Objective::net_max).score);
    // with p forced first, tying p with candidates that beat it can help
    EXPECT_GE(dichotomous_consensus_exact(e, m, Objective::net_max, p).score,
              kemeny_score_exact(e, p, Objective::net_max).score);
  }
}

TEST(DichotomousConsensus, TyingWithPBeatsEveryTotalOrder) {
  // b approved over p by both voters
  const Election e = named({"p", "b"}, std::vector<Ballot>(2, Ballot({{1}, {0}}, 2)));
  EXPECT_EQ(dichotomous_consensus_exact(e, 2, Objective::net_max, 0).score, 0);
  EXPECT_EQ(kemeny_score_exact(e, 0, Objective::net_max).score, -2);
}

TEST(DichotomousConsensus, SlaterWeakOrdersCanBeatTotalOrders) {
  // >_m ties a and b; a single group {a,b} agrees on both ordered pairs.
  const Election e = named({"a", "b"}, {Ballot::total({0, 1}), Ballot::total({1, 0})});
  EXPECT_EQ(slater_score_exact(e, std::nullopt, 2).score, 2);
  EXPECT_EQ(slater_score_exact(e, std::nullopt, std::nullopt).score, 1);
}

TEST(SlaterExact, TotalOrderShape) {
  // >_m is a > b > c
  const Election e = named({"a", "b", "c"}, {Ballot::total({0, 1, 2})});
  const auto best = slater_score_exact(e, std::nullopt, std::nullopt);
  EXPECT_EQ(best.score, 6);
  EXPECT_EQ(best.order, Ballot::total({0, 1, 2}));
  // with c forced first only the pair {a,b} can agree
  const auto c_first = slater_score_exact(e, 2, std::nullopt);
  EXPECT_EQ(c_first.score, 2);
  EXPECT_EQ(c_first.order, Ballot::total({2, 0, 1}));
}

}  // namespace
}  // namespace vscore
