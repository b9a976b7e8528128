#pragma once

// Polynomial-time score and winner algorithms for dichotomous, single-peaked
// and single-crossing electorates.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "vscore/ballot.hpp"
#include "vscore/certificate.hpp"
#include "vscore/domain.hpp"
#include "vscore/majority.hpp"
#include "vscore/oracles.hpp"

namespace vscore {

// Per-voter lifts of p (total orders) or group moves (dichotomous ballots).
struct SwapPlan {
  std::vector<int> lifts;
  std::vector<DichotomousMove> moves;
  int cost = 0;
};

// Largest number of voters that may prefer an opponent to p while p still wins.
struct Threshold {
  int value = 0;

  static Threshold condorcet(int n) { return {(n + 1) / 2 - 1}; }
  static Threshold weak_condorcet(int n) { return {n / 2}; }
  static Threshold of(int n, bool weak) { return weak ? weak_condorcet(n) : condorcet(n); }
};

struct FastDodgson {
  int score = 0;
  SwapPlan plan;

  ScoreCertificate certificate(CandidateId p) const {
    if (!plan.moves.empty()) return GroupMoveSequence{plan.moves};
    if (!plan.lifts.empty()) return LiftSequence{p, plan.lifts};
    return GroupMoveSequence{};
  }
};

namespace detail {

inline void require_dichotomous(const Election& e) {
  const auto verdict = check_kchotomous(e, 2);
  if (!verdict.holds) throw Error(ErrorKind::domain_violation, "election is not dichotomous: " + verdict.describe(e));
}

inline void require_single_peaked(const Election& e, const std::vector<CandidateId>& axis) {
  const auto verdict = check_single_peaked(e, axis);
  if (!verdict.holds)
    throw Error(ErrorKind::domain_violation, "election is not single-peaked: " + verdict.describe(e));
}

inline void require_single_crossing(const Election& e) {
  const auto verdict = check_single_crossing(e);
  if (!verdict.holds)
    throw Error(ErrorKind::domain_violation, "election is not single-crossing: " + verdict.describe(e));
}

inline std::vector<int> approval_counts(const Election& e) {
  std::vector<int> app(static_cast<std::size_t>(e.num_candidates()), 0);
  for (const auto& b : e.ballots())
    if (b.num_groups() == 2)
      for (CandidateId c : b.group(0)) ++app[c];
    else
      for (int& a : app) ++a;
  return app;
}

// Candidates sorted by approval count, highest first, ties by id.
inline std::vector<CandidateId> by_approval(const std::vector<int>& app, std::optional<CandidateId> skip) {
  std::vector<CandidateId> out;
  for (CandidateId c = 0; c < static_cast<CandidateId>(app.size()); ++c)
    if (!skip || c != *skip) out.push_back(c);
  std::stable_sort(out.begin(), out.end(), [&](CandidateId a, CandidateId b) { return app[a] > app[b]; });
  return out;
}

// For a dichotomy (T > B): sum over t in T, b in B of app(t) - app(b)
// = m * app(T) - |T| * app(C).
inline long long dichotomy_score(long long m, long long top_size, long long top_approval, long long total) {
  return m * top_approval - top_size * total;
}

inline Ballot dichotomy(std::vector<CandidateId> top, int m) { return Ballot::dichotomous(std::move(top), m); }

}  // namespace detail

// Young is weakCondorcet-consistent and dichotomous electorates always have a
// weak Condorcet winner, so the Young winners are exactly those.
inline std::vector<CandidateId> young_winners_dichotomous(const Election& election) {
  detail::require_dichotomous(election);
  return condorcet_winners(majority_table(election), true);
}

inline FastDodgson dodgson_score_dichotomous(const Election& election, CandidateId p, bool weak) {
  require_candidate(election, p);
  detail::require_dichotomous(election);
  if (election.num_voters() == 0) throw Error(ErrorKind::invalid_argument, "Dodgson score of an empty electorate");
  const MajorityTable table = majority_table(election);
  const int m = election.num_candidates();
  FastDodgson out;
  if (is_condorcet_winner(table, p, weak)) return out;

  int worst = std::numeric_limits<int>::min();
  for (CandidateId a = 0; a < m; ++a)
    if (a != p) worst = std::max(worst, table(a, p) - table(p, a));

  std::vector<VoterIndex> disapproving;  // ballots with p in the lower group
  for (VoterIndex v = 0; v < election.num_voters(); ++v)
    if (election.ballot(v).group_of(p) == 1) disapproving.push_back(v);

  const int lifts_needed = weak ? worst : worst + 1;
  if (static_cast<int>(disapproving.size()) >= lifts_needed) {
    for (int i = 0; i < lifts_needed; ++i) out.plan.moves.push_back({disapproving[i], p, MoveDirection::up});
    out.score = out.plan.cost = lifts_needed;
    return out;
  }

  // Only reachable in strict mode: lift p everywhere, then push each opponent
  // still tied with p down once. Such an opponent is approved by every voter.
  for (VoterIndex v : disapproving) out.plan.moves.push_back({v, p, MoveDirection::up});
  MajorityTable lifted(m);
  for (VoterIndex v = 0; v < election.num_voters(); ++v) {
    const Ballot& b = election.ballot(v);
    if (b.group_of(p) == 1) {
      lifted.add(apply_dichotomous_move(b, p, MoveDirection::up));
    } else {
      lifted.add(b);
    }
  }
  for (CandidateId a = 0; a < m; ++a)
    if (a != p && lifted(a, p) == lifted(p, a)) out.plan.moves.push_back({0, a, MoveDirection::down});
  out.score = out.plan.cost = static_cast<int>(out.plan.moves.size());
  return out;
}

struct MeanRuleResult {
  Ballot consensus;
  long long score = 0;
  std::vector<CandidateId> winners;
};

// (2,2)-Kemeny: optimal top groups are approval thresholds. Winners are the
// candidates that sit in the top group of some optimal dichotomy.
inline MeanRuleResult mean_rule(const Election& election) {
  detail::require_dichotomous(election);
  const int m = election.num_candidates();
  const auto app = detail::approval_counts(election);
  const auto sorted = detail::by_approval(app, std::nullopt);
  const long long total = std::accumulate(app.begin(), app.end(), 0LL);

  long long best = 0;  // single group
  int best_size = m;
  long long prefix = 0;
  for (int j = 1; j < m; ++j) {
    prefix += app[sorted[j - 1]];
    const long long s = detail::dichotomy_score(m, j, prefix, total);
    if (s > best) {
      best = s;
      best_size = j;
    }
  }

  MeanRuleResult out;
  out.score = best;
  out.consensus = detail::dichotomy(std::vector<CandidateId>(sorted.begin(), sorted.begin() + best_size), m);
  if (best == 0) {
    // Every threshold split scores 0 only when all approval counts agree.
    out.winners.resize(static_cast<std::size_t>(m));
    std::iota(out.winners.begin(), out.winners.end(), 0);
    return out;
  }
  prefix = 0;
  int floor_approval = std::numeric_limits<int>::max();
  for (int j = 1; j < m; ++j) {
    prefix += app[sorted[j - 1]];
    if (detail::dichotomy_score(m, j, prefix, total) == best) floor_approval = std::min(floor_approval, app[sorted[j - 1]]);
  }
  for (CandidateId c = 0; c < m; ++c)
    if (app[c] >= floor_approval) out.winners.push_back(c);
  return out;
}

// (2,2)-Kemeny score of p: p is forced into the top group, which is then
// completed by a prefix of the others in approval order.
inline ConsensusResult k22_kemeny_score(const Election& election, CandidateId p) {
  require_candidate(election, p);
  detail::require_dichotomous(election);
  const int m = election.num_candidates();
  const auto app = detail::approval_counts(election);
  const auto rest = detail::by_approval(app, p);
  const long long total = std::accumulate(app.begin(), app.end(), 0LL);

  long long top_approval = app[p];
  long long best = m == 1 ? 0 : detail::dichotomy_score(m, 1, top_approval, total);
  int best_extra = 0;
  for (int j = 1; j < m; ++j) {
    top_approval += app[rest[j - 1]];
    const long long s = j + 1 == m ? 0 : detail::dichotomy_score(m, j + 1, top_approval, total);
    if (s > best) {
      best = s;
      best_extra = j;
    }
  }
  std::vector<CandidateId> top{p};
  top.insert(top.end(), rest.begin(), rest.begin() + best_extra);
  return {best, detail::dichotomy(std::move(top), m)};
}

enum class TransitiveRule { kemeny_2m, kemeny_total, slater_total };

// With a transitive strict majority relation every pair can be oriented the
// majority way at once, so optimal consensus orders are exactly the linear
// extensions of >_m and the winners are its maximal elements.
inline std::vector<CandidateId> transitive_majority_winners(const Election& election, TransitiveRule rule) {
  if (rule == TransitiveRule::kemeny_2m) detail::require_dichotomous(election);
  const MajorityRelation rel(majority_table(election));
  if (!rel.transitive()) throw Error(ErrorKind::domain_violation, "majority relation is not transitive");
  return rel.maximal();
}

// Builds an optimal total order with p first by repeatedly deleting a winner
// of the remaining candidates (smallest id among winners).
inline ConsensusResult score_via_winner_reduction(const Election& election, CandidateId p, Objective objective) {
  require_candidate(election, p);
  const TransitiveRule rule = objective == Objective::slater ? TransitiveRule::slater_total : TransitiveRule::kemeny_total;
  std::vector<CandidateId> order{p};
  std::vector<CandidateId> remaining = detail::opponents(election, p);
  while (!remaining.empty()) {
    const Election sub = restrict_candidates(election, remaining);
    const auto winners = transitive_majority_winners(sub, rule);
    if (winners.empty()) throw Error(ErrorKind::domain_violation, "winner oracle returned no winner");
    const CandidateId next = remaining[winners.front()];
    order.push_back(next);
    remaining.erase(std::find(remaining.begin(), remaining.end(), next));
  }
  Ballot b = Ballot::total(order);
  return {consensus_score(election, b, objective), std::move(b)};
}

// (2,k)-Slater score of p. For each composition of m into at most k positive
// parts, p leads the first group and the rest follow in >_m order (ties by
// id). Every such fill of a composition has the same score.
inline ConsensusResult k2k_slater_score(const Election& election, CandidateId p, int k) {
  require_candidate(election, p);
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be positive");
  detail::require_dichotomous(election);
  const MajorityRelation rel(majority_table(election));
  if (!rel.weak_order()) throw Error(ErrorKind::domain_violation, "majority relation is not a weak order");
  const int m = election.num_candidates();

  std::vector<CandidateId> fill{p};
  {
    auto rest = detail::opponents(election, p);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](CandidateId a, CandidateId b) { return rel.dominated(a) > rel.dominated(b); });
    fill.insert(fill.end(), rest.begin(), rest.end());
  }

  std::optional<ConsensusResult> best;
  std::vector<int> parts;
  auto visit = [&](auto&& self, int left) -> void {
    if (left == 0) {
      std::vector<std::vector<CandidateId>> groups;
      int at = 0;
      for (int len : parts) {
        groups.emplace_back(fill.begin() + at, fill.begin() + at + len);
        at += len;
      }
      Ballot order(std::move(groups), m);
      const long long score = slater_agreement(order, rel);
      if (!best || score > best->score) best = ConsensusResult{score, std::move(order)};
      return;
    }
    if (static_cast<int>(parts.size()) == k) return;
    for (int len = 1; len <= left; ++len) {
      parts.push_back(len);
      self(self, left - len);
      parts.pop_back();
    }
  };
  visit(visit, m);
  return *best;
}

namespace detail {

// Candidates on each side of p along the axis, nearest to p first.
struct AxisSides {
  std::vector<CandidateId> left;
  std::vector<CandidateId> right;
};

inline AxisSides axis_sides(const std::vector<CandidateId>& axis, CandidateId p) {
  const int at = static_cast<int>(std::find(axis.begin(), axis.end(), p) - axis.begin());
  AxisSides s;
  for (int i = at - 1; i >= 0; --i) s.left.push_back(axis[i]);
  for (int i = at + 1; i < static_cast<int>(axis.size()); ++i) s.right.push_back(axis[i]);
  return s;
}

// How many candidates of one side this voter ranks above p. In a
// single-peaked vote they are the ones nearest to p on that side.
inline int side_count(const Ballot& b, CandidateId p, const std::vector<CandidateId>& side) {
  int k = 0;
  for (CandidateId c : side) k += b.prefers(c, p);
  return k;
}

}  // namespace detail

// Dodgson (weak=false) or weakDodgson score of p in a single-peaked electorate.
// The score is the sum over opponents of max(0, N(c,p) - H), realized side by
// side without wasted swaps.
inline FastDodgson sp_dodgson_score(const Election& election, const std::vector<CandidateId>& axis, CandidateId p,
                                    bool weak) {
  require_candidate(election, p);
  detail::require_single_peaked(election, axis);
  const int n = election.num_voters();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "Dodgson score of an empty electorate");
  const int h = Threshold::of(n, weak).value;
  const auto sides = detail::axis_sides(axis, p);

  FastDodgson out;
  out.plan.lifts.assign(static_cast<std::size_t>(n), 0);
  for (const auto* side : {&sides.left, &sides.right}) {
    // counts[d] = voters ranking exactly d candidates of this side above p.
    const int ms = static_cast<int>(side->size());
    std::vector<int> form(static_cast<std::size_t>(n));
    std::vector<int> counts(static_cast<std::size_t>(ms) + 1, 0);
    for (VoterIndex v = 0; v < n; ++v) {
      form[v] = detail::side_count(election.ballot(v), p, *side);
      ++counts[form[v]];
    }
    // opposed[d] = N(c_d, p) for the candidate at distance d from p.
    std::vector<int> opposed(static_cast<std::size_t>(ms) + 1, 0);
    for (int d = ms; d >= 1; --d) opposed[d] = counts[d] + (d < ms ? opposed[d + 1] : 0);
    int far = 0;  // farthest candidate preferred to p by more than h voters
    for (int d = ms; d >= 1 && far == 0; --d)
      if (opposed[d] > h) far = d;
    if (far == 0) continue;
    int partial = opposed[far] - h;
    for (VoterIndex v = 0; v < n; ++v) {
      if (form[v] == 0 || form[v] > far) continue;
      if (form[v] == far) {
        if (partial == 0) continue;
        --partial;
      }
      out.plan.lifts[v] = form[v];
      out.plan.cost += form[v];
    }
  }
  out.score = out.plan.cost;
  return out;
}

// Young (strong=false) or strongYoung score of p in a single-peaked
// electorate: the fewest deletions t such that, with the threshold for n - t
// voters, both sides drop to the threshold.
inline YoungResult sp_young_score(const Election& election, const std::vector<CandidateId>& axis, CandidateId p,
                                  bool strong) {
  require_candidate(election, p);
  detail::require_single_peaked(election, axis);
  const int n = election.num_voters();
  const auto sides = detail::axis_sides(axis, p);

  std::vector<VoterIndex> left_opposed, right_opposed;  // voters ranking the adjacent candidate above p
  for (VoterIndex v = 0; v < n; ++v) {
    const Ballot& b = election.ballot(v);
    if (!sides.left.empty() && b.prefers(sides.left.front(), p)) left_opposed.push_back(v);
    if (!sides.right.empty() && b.prefers(sides.right.front(), p)) right_opposed.push_back(v);
  }
  const int left_n = static_cast<int>(left_opposed.size());
  const int right_n = static_cast<int>(right_opposed.size());

  for (int t = 0; t <= n; ++t) {
    const int kept = n - t;
    if (strong && kept == 0) break;
    const int h = Threshold::of(kept, !strong).value;
    const int cut_left = std::max(0, left_n - h);
    const int cut_right = std::max(0, right_n - h);
    if (cut_left + cut_right > t) continue;

    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < cut_left; ++i) gone[left_opposed[i]] = 1;
    for (int i = 0; i < cut_right; ++i) gone[right_opposed[i]] = 1;
    int extra = t - cut_left - cut_right;
    for (VoterIndex v = 0; v < n && extra > 0; ++v)
      if (!gone[v]) {
        gone[v] = 1;
        --extra;
      }
    YoungResult out;
    out.score = kept;
    for (VoterIndex v = 0; v < n; ++v)
      if (!gone[v]) out.certificate.voters.push_back(v);
    return out;
  }
  return {};
}

namespace detail {

inline YoungResult keep_around(int n, int lo, int hi) {
  const int k = std::min(lo, n - 1 - hi);
  YoungResult out;
  for (int v = lo - k; v <= lo; ++v) out.certificate.voters.push_back(v);
  if (hi != lo)
    for (int v = hi; v <= hi + k; ++v) out.certificate.voters.push_back(v);
  else
    for (int v = hi + 1; v <= hi + k; ++v) out.certificate.voters.push_back(v);
  out.score = static_cast<int>(out.certificate.voters.size());
  return out;
}

inline YoungResult sc_young(const Election& election, CandidateId p, bool strong) {
  require_candidate(election, p);
  detail::require_single_crossing(election);
  const int n = election.num_voters();
  const int m = election.num_candidates();
  auto top = [&](VoterIndex v) { return election.ballot(v).above(p) == 0; };

  YoungResult best;
  // Odd subsets: v is the median and ranks p first.
  for (VoterIndex v = 0; v < n; ++v) {
    if (!top(v)) continue;
    const int size = 2 * std::min(v, n - 1 - v) + 1;
    if (size > best.score) best = keep_around(n, v, v);
  }
  // Even subsets: v and w are the two medians.
  for (VoterIndex v = 0; v < n; ++v)
    for (VoterIndex w = v + 1; w < n; ++w) {
      bool ok;
      if (strong) {
        ok = top(v) && top(w);
      } else {
        ok = true;
        for (CandidateId a = 0; a < m && ok; ++a)
          ok = a == p || !(election.ballot(v).prefers(a, p) && election.ballot(w).prefers(a, p));
      }
      if (!ok) continue;
      const int size = 2 * std::min(v, n - 1 - w) + 2;
      if (size > best.score) best = keep_around(n, v, w);
    }
  return best;
}

}  // namespace detail

inline YoungResult sc_young_score(const Election& election, CandidateId p) {
  return detail::sc_young(election, p, false);
}

inline YoungResult sc_strongyoung_score(const Election& election, CandidateId p) {
  return detail::sc_young(election, p, true);
}

struct DodgsonWinners {
  std::vector<CandidateId> winners;
  std::vector<int> scores;  // parallel to winners
};

// Every Dodgson winner of a single-crossing electorate is a weak Condorcet
// winner, and such a candidate needs one swap per opponent it ties with.
inline DodgsonWinners sc_dodgson_winners(const Election& election) {
  detail::require_single_crossing(election);
  const int n = election.num_voters();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "Dodgson winners of an empty electorate");
  const MajorityTable table = majority_table(election);
  DodgsonWinners out;
  if (n % 2 == 1) {
    out.winners.push_back(election.ballot(n / 2).order().front());
    out.scores.push_back(0);
    return out;
  }
  const int m = election.num_candidates();
  std::vector<std::pair<CandidateId, int>> scored;
  for (CandidateId p : condorcet_winners(table, true)) {
    int ties = 0;
    for (CandidateId a = 0; a < m; ++a) ties += a != p && table(a, p) == table(p, a);
    scored.emplace_back(p, ties);
  }
  int best = std::numeric_limits<int>::max();
  for (const auto& [p, s] : scored) best = std::min(best, s);
  for (const auto& [p, s] : scored)
    if (s == best) {
      out.winners.push_back(p);
      out.scores.push_back(s);
    }
  return out;
}

}  // namespace vscore
