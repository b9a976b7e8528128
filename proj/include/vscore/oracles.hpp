#pragma once

// Exhaustive solvers for every score, usable at desk scale. Each result carries
// a certificate that replay_certificate() re-checks. Ties between optimal
// witnesses are broken toward the lexicographically smallest one.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "vscore/ballot.hpp"
#include "vscore/certificate.hpp"
#include "vscore/majority.hpp"

namespace vscore {

struct OracleBudget {
  int max_voters = 18;             // subset enumeration
  int max_candidates = 7;          // order enumeration
  long long max_states = 5'000'000;  // move search
};

struct YoungResult {
  int score = 0;
  VoterSubset certificate;
};

struct DodgsonResult {
  int score = 0;
  ScoreCertificate certificate;
};

struct ConsensusResult {
  long long score = 0;
  Ballot order;
};

namespace detail {

inline void require_voter_budget(const Election& e, const OracleBudget& budget) {
  if (e.num_voters() > budget.max_voters || e.num_voters() > 62)
    throw Error(ErrorKind::budget_exceeded, "subset enumeration over " + std::to_string(e.num_voters()) +
                                                " voters exceeds the voter budget");
}

inline void require_candidate_budget(const Election& e, const OracleBudget& budget) {
  if (e.num_candidates() > budget.max_candidates)
    throw Error(ErrorKind::budget_exceeded, "order enumeration over " + std::to_string(e.num_candidates()) +
                                                " candidates exceeds the candidate budget");
}

// For equal-size sets: the one holding the lowest differing element has the
// lexicographically smaller sorted index list.
inline bool lex_smaller(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

inline std::vector<CandidateId> opponents(const Election& e, CandidateId p) {
  std::vector<CandidateId> out;
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    if (c != p) out.push_back(c);
  return out;
}

// +1 when the ballot puts the opponent above p, -1 when below, 0 when tied.
inline std::vector<int> versus(const Ballot& b, CandidateId p, const std::vector<CandidateId>& opp) {
  std::vector<int> d(opp.size());
  for (std::size_t j = 0; j < opp.size(); ++j) d[j] = b.prefers(opp[j], p) ? 1 : (b.prefers(p, opp[j]) ? -1 : 0);
  return d;
}

struct EditOption {
  std::vector<int> delta;  // versus() of the edited ballot
  int cost = 0;
  int state = 0;  // caller's handle for the edited ballot
};

// Picks one option per voter minimizing total cost so that every opponent's
// summed delta is < 0 (strict) or <= 0 (weak). Layered shortest path over the
// vector of running sums.
inline std::pair<int, std::vector<int>> min_cost_assignment(int num_opponents,
                                                            const std::vector<std::vector<EditOption>>& options,
                                                            bool weak, long long max_states) {
  const int n = static_cast<int>(options.size());
  const long long base = 2LL * n + 1;
  long long cells = 1;
  for (int j = 0; j < num_opponents; ++j) {
    cells *= base;
    if (cells * (n + 1) > max_states)
      throw Error(ErrorKind::budget_exceeded, "move search exceeds the state budget");
  }
  std::vector<long long> weight(static_cast<std::size_t>(num_opponents));
  long long w = 1, origin = 0;
  for (int j = 0; j < num_opponents; ++j) {
    weight[j] = w;
    origin += n * w;
    w *= base;
  }
  auto offset = [&](const EditOption& o) {
    long long off = 0;
    for (int j = 0; j < num_opponents; ++j) off += o.delta[j] * weight[j];
    return off;
  };

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> cost(static_cast<std::size_t>(cells), kInf);
  std::vector<std::vector<std::int16_t>> choice(static_cast<std::size_t>(n));
  cost[origin] = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<long long> offs;
    for (const auto& o : options[v]) offs.push_back(offset(o));
    std::vector<int> next(static_cast<std::size_t>(cells), kInf);
    choice[v].assign(static_cast<std::size_t>(cells), -1);
    for (long long s = 0; s < cells; ++s) {
      if (cost[s] == kInf) continue;
      for (std::size_t o = 0; o < options[v].size(); ++o) {
        const long long t = s + offs[o];
        const int c = cost[s] + options[v][o].cost;
        if (c < next[t]) {
          next[t] = c;
          choice[v][t] = static_cast<std::int16_t>(o);
        }
      }
    }
    cost.swap(next);
  }

  int best = kInf;
  long long best_state = -1;
  for (long long s = 0; s < cells; ++s) {
    if (cost[s] >= best) continue;
    long long rest = s;
    bool goal = true;
    for (int j = 0; j < num_opponents && goal; ++j) {
      const long long sum = rest % base - n;
      rest /= base;
      goal = weak ? sum <= 0 : sum < 0;
    }
    if (goal) {
      best = cost[s];
      best_state = s;
    }
  }
  if (best_state < 0) throw Error(ErrorKind::domain_violation, "no edit sequence reaches the goal");
  std::vector<int> picked(static_cast<std::size_t>(n));
  long long s = best_state;
  for (int v = n - 1; v >= 0; --v) {
    picked[v] = choice[v][s];
    s -= offset(options[v][picked[v]]);
  }
  return {best, picked};
}

inline std::uint32_t approved_mask(const Ballot& b) {
  if (b.num_groups() == 1) return (1u << b.num_candidates()) - 1;
  std::uint32_t mask = 0;
  for (CandidateId c : b.group(0)) mask |= 1u << c;
  return mask;
}

}  // namespace detail

// Largest voter subset in which p is a weak Condorcet winner (strong=false) or
// a Condorcet winner (strong=true). Gray-code walk with incremental counts.
inline YoungResult young_score_exact(const Election& election, CandidateId p, bool strong,
                                     const OracleBudget& budget = {}) {
  require_candidate(election, p);
  detail::require_voter_budget(election, budget);
  const int n = election.num_voters();
  const auto opp = detail::opponents(election, p);
  std::vector<std::vector<int>> delta;
  for (const auto& b : election.ballots()) delta.push_back(detail::versus(b, p, opp));

  std::vector<int> sum(opp.size(), 0);
  auto feasible = [&] {
    for (int s : sum)
      if (strong ? s >= 0 : s > 0) return false;
    return true;
  };

  std::uint64_t mask = 0, best_mask = 0;
  int size = 0;
  int best = strong ? -1 : 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < end; ++i) {
    const int bit = std::countr_zero(i);
    const std::uint64_t flag = std::uint64_t{1} << bit;
    const int sign = (mask & flag) ? -1 : 1;
    mask ^= flag;
    size += sign;
    for (std::size_t j = 0; j < opp.size(); ++j) sum[j] += sign * delta[bit][j];
    if (size < best || (size == best && !detail::lex_smaller(mask, best_mask))) continue;
    if (feasible()) {
      best = size;
      best_mask = mask;
    }
  }

  YoungResult out;
  if (best <= 0) return out;
  out.score = best;
  for (int v = 0; v < n; ++v)
    if (best_mask & (std::uint64_t{1} << v)) out.certificate.voters.push_back(v);
  return out;
}

enum class EditModel { automatic, adjacent_swaps, group_moves };

// automatic: total orders use adjacent swaps, otherwise dichotomous ballots use
// group moves. Elections with m <= 2 are both; they resolve to adjacent swaps.
inline EditModel resolve_edit_model(const Election& election, EditModel model) {
  switch (model) {
    case EditModel::adjacent_swaps:
      if (!election.all_total_orders())
        throw Error(ErrorKind::unsupported_ballot_kind, "adjacent swaps need total-order ballots");
      return model;
    case EditModel::group_moves:
      if (!election.all_kchotomous(2))
        throw Error(ErrorKind::unsupported_ballot_kind, "group moves need dichotomous ballots");
      return model;
    case EditModel::automatic:
      if (election.all_total_orders()) return EditModel::adjacent_swaps;
      if (election.all_kchotomous(2)) return EditModel::group_moves;
      throw Error(ErrorKind::unsupported_ballot_kind, "profile mixes total orders and weak orders");
  }
  return model;
}

// Fewest unit edits making p a Condorcet (weak=false) or weak Condorcet winner.
// Every ballot is searched independently by BFS over its own edit graph
// (adjacent swaps, or group moves), then one reachable ballot per voter is
// chosen by a layered shortest-path over the opponents' running margins.
inline DodgsonResult dodgson_score_edit_search(const Election& election, CandidateId p, bool weak,
                                               EditModel model = EditModel::automatic,
                                               const OracleBudget& budget = {}) {
  require_candidate(election, p);
  if (election.num_voters() == 0) throw Error(ErrorKind::invalid_argument, "Dodgson score of an empty electorate");
  detail::require_candidate_budget(election, budget);
  model = resolve_edit_model(election, model);
  const int m = election.num_candidates();
  const auto opp = detail::opponents(election, p);

  std::vector<std::vector<detail::EditOption>> options;
  long long explored = 0;

  if (model == EditModel::group_moves) {
    struct Parent {
      std::uint32_t prev = 0;
      CandidateId candidate = 0;
      MoveDirection dir = MoveDirection::up;
    };
    std::vector<std::vector<std::vector<DichotomousMove>>> paths;  // per voter, per option
    for (VoterIndex v = 0; v < election.num_voters(); ++v) {
      const std::size_t states = std::size_t{1} << m;
      std::vector<int> dist(states, -1);
      std::vector<Parent> parent(states);
      std::vector<Ballot> ballot_of(states);
      std::vector<std::uint32_t> visit_order;
      std::queue<std::uint32_t> queue;
      const std::uint32_t start = detail::approved_mask(election.ballot(v));
      dist[start] = 0;
      ballot_of[start] = election.ballot(v);
      queue.push(start);
      while (!queue.empty()) {
        const std::uint32_t s = queue.front();
        queue.pop();
        visit_order.push_back(s);
        if (++explored > budget.max_states) throw Error(ErrorKind::budget_exceeded, "move search exceeds the state budget");
        const Ballot& cur = ballot_of[s];
        for (CandidateId c = 0; c < m; ++c)
          for (MoveDirection dir : {MoveDirection::up, MoveDirection::down}) {
            const bool approved = cur.group_of(c) == 0;
            if ((dir == MoveDirection::up) == approved) continue;
            Ballot next = apply_dichotomous_move(cur, c, dir);
            const std::uint32_t t = detail::approved_mask(next);
            if (dist[t] != -1) continue;
            dist[t] = dist[s] + 1;
            parent[t] = {s, c, dir};
            ballot_of[t] = std::move(next);
            queue.push(t);
          }
      }
      std::map<std::vector<int>, std::size_t> seen;
      std::vector<detail::EditOption> opts;
      std::vector<std::vector<DichotomousMove>> voter_paths;
      for (std::uint32_t s : visit_order) {
        auto delta = detail::versus(ballot_of[s], p, opp);
        if (seen.count(delta)) continue;
        seen.emplace(delta, opts.size());
        std::vector<DichotomousMove> path;
        for (std::uint32_t t = s; t != start; t = parent[t].prev)
          path.push_back({v, parent[t].candidate, parent[t].dir});
        std::reverse(path.begin(), path.end());
        opts.push_back({std::move(delta), dist[s], static_cast<int>(voter_paths.size())});
        voter_paths.push_back(std::move(path));
      }
      options.push_back(std::move(opts));
      paths.push_back(std::move(voter_paths));
    }
    auto [cost, picked] = detail::min_cost_assignment(static_cast<int>(opp.size()), options, weak, budget.max_states);
    GroupMoveSequence cert;
    for (VoterIndex v = 0; v < election.num_voters(); ++v) {
      const auto& path = paths[v][options[v][picked[v]].state];
      cert.moves.insert(cert.moves.end(), path.begin(), path.end());
    }
    return {cost, cert};
  }

  std::vector<std::vector<std::vector<AdjacentSwap>>> paths;
  for (VoterIndex v = 0; v < election.num_voters(); ++v) {
    std::map<std::vector<CandidateId>, int> index;
    std::vector<std::vector<CandidateId>> states;
    std::vector<int> dist, parent, via;
    states.push_back(election.ballot(v).order());
    index.emplace(states[0], 0);
    dist.push_back(0);
    parent.push_back(-1);
    via.push_back(-1);
    for (std::size_t head = 0; head < states.size(); ++head) {
      if (++explored > budget.max_states) throw Error(ErrorKind::budget_exceeded, "move search exceeds the state budget");
      for (int pos = 0; pos + 1 < m; ++pos) {
        std::vector<CandidateId> next = states[head];
        std::swap(next[pos], next[pos + 1]);
        if (index.count(next)) continue;
        index.emplace(next, static_cast<int>(states.size()));
        states.push_back(std::move(next));
        dist.push_back(dist[head] + 1);
        parent.push_back(static_cast<int>(head));
        via.push_back(pos);
      }
    }
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<detail::EditOption> opts;
    std::vector<std::vector<AdjacentSwap>> voter_paths;
    for (std::size_t s = 0; s < states.size(); ++s) {
      auto delta = detail::versus(Ballot::total(states[s]), p, opp);
      if (seen.count(delta)) continue;
      seen.emplace(delta, opts.size());
      std::vector<AdjacentSwap> path;
      for (int t = static_cast<int>(s); parent[t] != -1; t = parent[t]) path.push_back({v, via[t]});
      std::reverse(path.begin(), path.end());
      opts.push_back({std::move(delta), dist[s], static_cast<int>(voter_paths.size())});
      voter_paths.push_back(std::move(path));
    }
    options.push_back(std::move(opts));
    paths.push_back(std::move(voter_paths));
  }
  auto [cost, picked] = detail::min_cost_assignment(static_cast<int>(opp.size()), options, weak, budget.max_states);
  SwapSequence cert;
  for (VoterIndex v = 0; v < election.num_voters(); ++v) {
    const auto& path = paths[v][options[v][picked[v]].state];
    cert.swaps.insert(cert.swaps.end(), path.begin(), path.end());
  }
  return {cost, cert};
}

// Total orders: only lifting p can help it, so enumerate per-voter lift
// amounts depth-first with a margin-based lower bound. Dichotomous ballots go
// through the group-move search.
inline DodgsonResult dodgson_score_exact(const Election& election, CandidateId p, bool weak,
                                         EditModel model = EditModel::automatic, const OracleBudget& budget = {}) {
  require_candidate(election, p);
  if (election.num_voters() == 0) throw Error(ErrorKind::invalid_argument, "Dodgson score of an empty electorate");
  model = resolve_edit_model(election, model);
  if (model == EditModel::group_moves) return dodgson_score_edit_search(election, p, weak, model, budget);

  const int n = election.num_voters();
  const int m = election.num_candidates();
  const MajorityTable table = majority_table(election);
  std::vector<int> margin(static_cast<std::size_t>(m), 0);  // N(c,p) - N(p,c)
  for (CandidateId c = 0; c < m; ++c)
    if (c != p) margin[c] = table(c, p) - table(p, c);
  const int need = weak ? 0 : 1;  // goal: margin[c] + need <= 0

  std::vector<std::vector<CandidateId>> above(static_cast<std::size_t>(n));  // nearest first
  for (VoterIndex v = 0; v < n; ++v) {
    const auto order = election.ballot(v).order();
    const int pos = election.ballot(v).above(p);
    for (int i = pos - 1; i >= 0; --i) above[v].push_back(order[i]);
  }

  auto lower_bound = [&] {
    int lb = 0;
    for (CandidateId c = 0; c < m; ++c)
      if (c != p && margin[c] + need > 0) lb += (margin[c] + need + 1) / 2;
    return lb;
  };

  int best = std::numeric_limits<int>::max();
  std::vector<int> lifts(static_cast<std::size_t>(n), 0), best_lifts;
  long long nodes = 0;
  auto dfs = [&](auto&& self, int v, int cost) -> void {
    if (++nodes > budget.max_states) throw Error(ErrorKind::budget_exceeded, "lift enumeration exceeds the state budget");
    const int lb = lower_bound();
    if (cost + lb >= best) return;
    if (v == n) {
      if (lb == 0) {
        best = cost;
        best_lifts = lifts;
      }
      return;
    }
    const int limit = static_cast<int>(above[v].size());
    int lift = 0;
    for (;;) {
      lifts[v] = lift;
      self(self, v + 1, cost + lift);
      if (lift == limit) break;
      margin[above[v][lift]] -= 2;
      ++lift;
    }
    for (int i = 0; i < limit; ++i) margin[above[v][i]] += 2;
    lifts[v] = 0;
  };
  dfs(dfs, 0, 0);
  return {best, LiftSequence{p, best_lifts}};
}

// Optimum of consensus_score over total orders, optionally with p first.
inline ConsensusResult kemeny_score_exact(const Election& election, std::optional<CandidateId> p, Objective objective,
                                          const OracleBudget& budget = {}) {
  if (objective == Objective::slater)
    throw Error(ErrorKind::invalid_argument, "use slater_score_exact for the slater objective");
  if (p) require_candidate(election, *p);
  detail::require_candidate_budget(election, budget);
  const MajorityTable table = majority_table(election);
  const int m = election.num_candidates();
  std::vector<CandidateId> rest;
  for (CandidateId c = 0; c < m; ++c)
    if (!p || c != *p) rest.push_back(c);

  const bool minimize = objective == Objective::kemeny_min;
  std::optional<ConsensusResult> best;
  do {
    std::vector<CandidateId> order;
    if (p) order.push_back(*p);
    order.insert(order.end(), rest.begin(), rest.end());
    long long score = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        score += minimize ? table(order[j], order[i]) : table(order[i], order[j]) - table(order[j], order[i]);
    if (!best || (minimize ? score < best->score : score > best->score)) best = ConsensusResult{score, Ballot::total(order)};
  } while (std::next_permutation(rest.begin(), rest.end()));
  return *best;
}

// Calls f(order) for every weak order with at most k groups (p, if given, in
// the first group), in lexicographic order of the candidates' group labels.
template <typename F>
void for_each_weak_order(int m, int k, std::optional<CandidateId> top, long long max_states, F&& f) {
  k = std::min(k, m);
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= k;
    if (total > max_states) throw Error(ErrorKind::budget_exceeded, "weak-order enumeration exceeds the state budget");
  }
  std::vector<int> label(static_cast<std::size_t>(m), 0);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int c = m - 1; c >= 0; --c) {
      label[c] = static_cast<int>(rest % k);
      rest /= k;
    }
    if (top && label[*top] != 0) continue;
    std::vector<std::vector<CandidateId>> groups(static_cast<std::size_t>(k));
    for (CandidateId c = 0; c < m; ++c) groups[label[c]].push_back(c);
    int used = 0;
    while (used < k && !groups[used].empty()) ++used;
    bool contiguous = true;
    for (int g = used; g < k; ++g) contiguous = contiguous && groups[g].empty();
    if (!contiguous) continue;
    groups.resize(static_cast<std::size_t>(used));
    f(Ballot(std::move(groups), m));
  }
}

// Optimum over all weak orders with at most k groups; p, if given, is placed
// in the first group. kemeny-min is minimized, the other objectives maximized.
inline ConsensusResult dichotomous_consensus_exact(const Election& election, int k, Objective objective,
                                                   std::optional<CandidateId> p, const OracleBudget& budget = {}) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be positive");
  if (p) require_candidate(election, *p);
  detail::require_candidate_budget(election, budget);
  const MajorityTable table = majority_table(election);
  const bool minimize = objective == Objective::kemeny_min;
  std::optional<ConsensusResult> best;
  for_each_weak_order(election.num_candidates(), k, p, budget.max_states, [&](Ballot order) {
    const long long score = consensus_score(table, order, objective);
    if (!best || (minimize ? score < best->score : score > best->score)) best = ConsensusResult{score, std::move(order)};
  });
  return *best;
}

// Maximum Slater agreement over total orders (k absent) or over weak orders
// with at most k groups; p, if given, is top-ranked.
inline ConsensusResult slater_score_exact(const Election& election, std::optional<CandidateId> p,
                                          std::optional<int> k, const OracleBudget& budget = {}) {
  if (k) return dichotomous_consensus_exact(election, *k, Objective::slater, p, budget);
  if (p) require_candidate(election, *p);
  detail::require_candidate_budget(election, budget);
  const MajorityRelation rel(majority_table(election));
  const int m = election.num_candidates();
  std::vector<CandidateId> rest;
  for (CandidateId c = 0; c < m; ++c)
    if (!p || c != *p) rest.push_back(c);
  std::optional<ConsensusResult> best;
  do {
    std::vector<CandidateId> order;
    if (p) order.push_back(*p);
    order.insert(order.end(), rest.begin(), rest.end());
    Ballot b = Ballot::total(order);
    const long long score = slater_agreement(b, rel);
    if (!best || score > best->score) best = ConsensusResult{score, std::move(b)};
  } while (std::next_permutation(rest.begin(), rest.end()));
  return *best;
}

}  // namespace vscore
