#include <gtest/gtest.h>

#include "vscore/fast_rules.hpp"
#include "vscore/fixtures.hpp"
#include "vscore/generators.hpp"
#include "vscore/oracles.hpp"

namespace vscore {
namespace {

Election named(std::vector<std::string> names, std::vector<Ballot> ballots,
               std::optional<std::vector<CandidateId>> axis = std::nullopt) {
  return Election(std::move(names), std::move(ballots), std::move(axis));
}

Election approvals_abc() {
  return named({"a", "b", "c"}, {Ballot::dichotomous({0, 1}, 3), Ballot::dichotomous({0}, 3),
                                 Ballot::dichotomous({0, 2}, 3)});
}

TEST(Threshold, Values) {
  EXPECT_EQ(Threshold::condorcet(101).value, 50);
  EXPECT_EQ(Threshold::condorcet(4).value, 1);
  EXPECT_EQ(Threshold::weak_condorcet(4).value, 2);
  EXPECT_EQ(Threshold::weak_condorcet(5).value, 2);
}

TEST(YoungWinnersDichotomous, MajorityDecides) {
  // p=0 a=1
  std::vector<Ballot> b(3, Ballot({{0}, {1}}, 2));
  b.insert(b.end(), 2, Ballot({{1}, {0}}, 2));
  EXPECT_EQ(young_winners_dichotomous(named({"p", "a"}, b)), std::vector<CandidateId>{0});
  EXPECT_EQ(young_winners_dichotomous(named({"a", "b"}, {Ballot({{0, 1}}, 2)})), (std::vector<CandidateId>{0, 1}));
}

TEST(YoungWinnersDichotomous, ForgedTriangleWinnerIsNotP) {
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  const auto inst = forge(ForgeKind::youngscore, k3);
  const CandidateId p = inst.election.id("p");
  const auto winners = young_winners_dichotomous(inst.election);
  EXPECT_FALSE(winners.empty());
  EXPECT_EQ(std::count(winners.begin(), winners.end(), p), 0);
  EXPECT_EQ(winners, condorcet_winners(majority_table(inst.election), true));
  EXPECT_EQ(young_score_exact(inst.election, p, false).score, 2);
}

TEST(YoungWinnersDichotomous, RejectsTotalOrders) {
  const Election e = named({"a", "b", "c"}, {Ballot::total({0, 1, 2})});
  EXPECT_THROW(young_winners_dichotomous(e), Error);
}

TEST(DodgsonDichotomous, SingleBallot) {
  const Election e = named({"a", "b", "c", "d"}, {Ballot({{0, 1}, {2, 3}}, 4)});
  const auto weak = dodgson_score_dichotomous(e, 2, true);
  const auto strict = dodgson_score_dichotomous(e, 2, false);
  EXPECT_EQ(weak.score, 1);
  EXPECT_EQ(strict.score, 3);
  EXPECT_EQ(replay_certificate(e, Rule::dodgson, 2, strict.certificate(2)), 3);
}

TEST(DodgsonDichotomous, CandidatesApprovedEverywhereCostADownMove) {
  // p and a approved by both voters, b by neither
  const Election e = named({"p", "a", "b"}, {Ballot::dichotomous({0, 1}, 3), Ballot::dichotomous({0, 1}, 3)});
  const auto r = dodgson_score_dichotomous(e, 0, false);
  EXPECT_EQ(r.score, dodgson_score_exact(e, 0, false, EditModel::group_moves).score);
  EXPECT_EQ(r.score, 1);
  EXPECT_EQ(dodgson_score_dichotomous(e, 0, true).score, 0);
}

TEST(MeanRule, ApprovalThreshold) {
  const auto r = mean_rule(approvals_abc());
  EXPECT_EQ(r.winners, std::vector<CandidateId>{0});
  EXPECT_EQ(r.consensus, Ballot({{0}, {1, 2}}, 3));
  EXPECT_EQ(r.score, 4);
}

TEST(MeanRule, TotalTieAndSymmetry) {
  const Election all = named({"a", "b", "c"}, {Ballot::dichotomous({0, 1, 2}, 3)});
  EXPECT_EQ(mean_rule(all).winners, (std::vector<CandidateId>{0, 1, 2}));
  const Election two = named({"a", "b"}, {Ballot::dichotomous({0}, 2), Ballot::dichotomous({1}, 2)});
  EXPECT_EQ(mean_rule(two).winners, (std::vector<CandidateId>{0, 1}));
}

TEST(K22Kemeny, Scores) {
  const Election e = approvals_abc();
  EXPECT_EQ(k22_kemeny_score(e, 1).score, 2);
  EXPECT_EQ(k22_kemeny_score(e, 0).score, mean_rule(e).score);
  const Election solo = named({"p", "a", "b", "c"}, {Ballot::dichotomous({0}, 4)});
  EXPECT_EQ(k22_kemeny_score(solo, 0).score, 3);
}

TEST(TransitiveMajority, Winners) {
  const Election sc = named({"a", "b", "c"}, {Ballot::total({0, 1, 2}), Ballot::total({1, 0, 2}),
                                              Ballot::total({1, 2, 0})});
  EXPECT_EQ(transitive_majority_winners(sc, TransitiveRule::kemeny_total), std::vector<CandidateId>{1});
  EXPECT_EQ(kemeny_score_exact(sc, std::nullopt, Objective::kemeny_min).order.group(0), std::vector<CandidateId>{1});
  const Election one = named({"a", "b", "c"}, {Ballot::total({2, 0, 1})});
  EXPECT_EQ(transitive_majority_winners(one, TransitiveRule::kemeny_total), std::vector<CandidateId>{2});
  EXPECT_EQ(transitive_majority_winners(approvals_abc(), TransitiveRule::slater_total), std::vector<CandidateId>{0});
}

TEST(TransitiveMajority, CycleIsADomainViolation) {
  const Election cycle = named({"a", "b", "c"}, {Ballot::total({0, 1, 2}), Ballot::total({1, 2, 0}),
                                                 Ballot::total({2, 0, 1})});
  try {
    transitive_majority_winners(cycle, TransitiveRule::kemeny_total);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain_violation);
  }
}

TEST(WinnerReduction, MatchesOracle) {
  const Election sp = named({"a", "b", "c"}, {Ballot::total({0, 1, 2}), Ballot::total({1, 0, 2}),
                                              Ballot::total({1, 2, 0})});
  EXPECT_EQ(score_via_winner_reduction(sp, 0, Objective::kemeny_min).score, 3);
  const Election e = approvals_abc();
  EXPECT_EQ(score_via_winner_reduction(e, 2, Objective::net_max).score,
            kemeny_score_exact(e, 2, Objective::net_max).score);
  const auto winner = score_via_winner_reduction(e, 0, Objective::net_max);
  EXPECT_EQ(winner.score, kemeny_score_exact(e, std::nullopt, Objective::net_max).score);
}

TEST(K2kSlater, MatchesOracle) {
  const Election e = approvals_abc();
  EXPECT_EQ(k2k_slater_score(e, 0, 2).score, dichotomous_consensus_exact(e, 2, Objective::slater, 0).score);
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const int m = uniform(rng, 2, 5);
    const Election r = random_dichotomous(rng, m, uniform(rng, 1, 7));
    const CandidateId p = uniform(rng, 0, m - 1);
    // k >= m: the full weak-order class, which can beat every total order
    EXPECT_EQ(k2k_slater_score(r, p, m).score, dichotomous_consensus_exact(r, m, Objective::slater, p).score);
    EXPECT_GE(k2k_slater_score(r, p, m).score, slater_score_exact(r, p, std::nullopt).score);
  }
}

TEST(K2kSlater, UniqueMaximumLeadsAlone) {
  Rng rng(22);
  int seen = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = uniform(rng, 2, 5);
    const Election e = random_dichotomous(rng, m, uniform(rng, 1, 7));
    const auto top = MajorityRelation(majority_table(e)).maximal();
    if (top.size() != 1) continue;
    ++seen;
    const CandidateId p = top[0];
    std::vector<std::vector<CandidateId>> groups{{p}, {}};
    for (CandidateId c = 0; c < m; ++c)
      if (c != p) groups[1].push_back(c);
    const long long split = consensus_score(e, Ballot(groups, m), Objective::slater);
    EXPECT_LE(split, k2k_slater_score(e, p, 2).score);
  }
  EXPECT_GT(seen, 0);
}

TEST(K2kSlater, RejectsNonDichotomous) {
  EXPECT_THROW(k2k_slater_score(named({"a", "b", "c"}, {Ballot::total({0, 1, 2})}), 0, 2), Error);
}

TEST(SinglePeakedDodgson, HundredOneVoters) {
  const Election e = fixtures::sp101();
  const CandidateId p = e.id("p");
  const auto r = sp_dodgson_score(e, *e.axis(), p, false);
  EXPECT_EQ(r.score, 70);
  EXPECT_EQ(replay_certificate(e, Rule::dodgson, p, r.certificate(p)), 70);
}

TEST(SinglePeakedDodgson, PeakEverywhere) {
  const Election e = named({"a", "p", "b"}, {Ballot::total({1, 0, 2}), Ballot::total({1, 2, 0})},
                           std::vector<CandidateId>{0, 1, 2});
  EXPECT_EQ(sp_dodgson_score(e, *e.axis(), 1, false).score, 0);
  EXPECT_EQ(sp_dodgson_score(e, *e.axis(), 1, true).score, 0);
}

TEST(SinglePeakedYoung, PeakEverywhere) {
  const Election e = named({"a", "p", "b"}, std::vector<Ballot>(3, Ballot::total({1, 0, 2})),
                           std::vector<CandidateId>{0, 1, 2});
  EXPECT_EQ(sp_young_score(e, *e.axis(), 1, false).score, 3);
  EXPECT_EQ(sp_young_score(e, *e.axis(), 1, true).score, 3);
}

TEST(SinglePeakedYoung, ReplicaAgreesWithSubsetSearch) {
  const Election e = fixtures::sp101_replica();
  const CandidateId p = e.id("p");
  OracleBudget budget;
  budget.max_voters = 21;
  for (bool strong : {false, true}) {
    const auto fast = sp_young_score(e, *e.axis(), p, strong);
    const auto exact = young_score_exact(e, p, strong, budget);
    EXPECT_EQ(fast.score, exact.score);
  }
}

TEST(SinglePeakedYoung, RejectsValley) {
  const Election e = named({"a", "b", "c"}, {Ballot::total({0, 2, 1})}, std::vector<CandidateId>{0, 1, 2});
  EXPECT_THROW(sp_young_score(e, *e.axis(), 0, false), Error);
}

Election three_voters() {
  // p a b; p>a>b, a>p>b, a>b>p
  return named({"p", "a", "b"}, {Ballot::total({0, 1, 2}), Ballot::total({1, 0, 2}), Ballot::total({1, 2, 0})});
}

TEST(SingleCrossingYoung, ThreeVoters) {
  const Election e = three_voters();
  const auto young = sc_young_score(e, 0);
  EXPECT_EQ(young.score, 2);
  EXPECT_EQ(young.certificate.voters, (std::vector<VoterIndex>{0, 1}));
  const auto strong = sc_strongyoung_score(e, 0);
  EXPECT_EQ(strong.score, 1);
  EXPECT_EQ(strong.certificate.voters, std::vector<VoterIndex>{0});
}

TEST(SingleCrossingYoung, UnanimousTop) {
  const Election e = named({"p", "a"}, std::vector<Ballot>(4, Ballot::total({0, 1})));
  EXPECT_EQ(sc_young_score(e, 0).score, 4);
  EXPECT_EQ(sc_strongyoung_score(e, 0).score, 4);
}

TEST(SingleCrossingDodgson, WastedSwapExampleWinner) {
  const Election e = fixtures::ex_sc();
  const auto r = sc_dodgson_winners(e);
  EXPECT_EQ(r.winners, std::vector<CandidateId>{e.id("a")});
  EXPECT_EQ(r.scores, std::vector<int>{0});
  EXPECT_EQ(dodgson_score_exact(e, e.id("a"), false).score, 0);
}

TEST(SingleCrossingDodgson, OddElectorateFollowsMedian) {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 * uniform(rng, 0, 4) + 1;
    const Election e = random_single_crossing(rng, uniform(rng, 2, 5), n);
    EXPECT_EQ(sc_dodgson_winners(e).winners, std::vector<CandidateId>{e.ballot(n / 2).order().front()});
  }
}

TEST(SingleCrossingDodgson, EmptyElectorateIsAnError) {
  EXPECT_THROW(sc_dodgson_winners(named({"a", "b"}, {})), Error);
}

TEST(SingleCrossingDodgson, FormulaUndercountsWastedSwap) {
  const Election e = fixtures::ex_sc();
  const MajorityTable t = majority_table(e);
  const CandidateId p = e.id("p");
  int formula = 0;
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    if (c != p) formula += std::max(0, t(c, p) - Threshold::condorcet(4).value);
  EXPECT_EQ(formula, 5);
  EXPECT_EQ(dodgson_score_exact(e, p, false).score, 6);
}

}  // namespace
}  // namespace vscore
