#pragma once

// Replayable witnesses for reported scores.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vscore/ballot.hpp"
#include "vscore/majority.hpp"

namespace vscore {

enum class Rule {
  young,
  strong_young,
  dodgson,
  weak_dodgson,
  kemeny,     // total-order consensus, minimize sum of Kendall tau distances
  kemeny_2m,  // total-order consensus, maximize net pairwise score
  kemeny_22,  // dichotomous consensus, maximize net pairwise score
  slater,     // total-order consensus
  slater_2k,  // k-chotomous consensus
};

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::young: return "young";
    case Rule::strong_young: return "strong-young";
    case Rule::dodgson: return "dodgson";
    case Rule::weak_dodgson: return "weak-dodgson";
    case Rule::kemeny: return "kemeny";
    case Rule::kemeny_2m: return "kemeny-2m";
    case Rule::kemeny_22: return "kemeny-22";
    case Rule::slater: return "slater";
    case Rule::slater_2k: return "slater-2k";
  }
  return "?";
}

inline std::optional<Rule> rule_from_string(const std::string& s) {
  for (Rule r : {Rule::young, Rule::strong_young, Rule::dodgson, Rule::weak_dodgson, Rule::kemeny, Rule::kemeny_2m,
                 Rule::kemeny_22, Rule::slater, Rule::slater_2k})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

// Larger is better for these rules; Dodgson and kemeny (min) are smaller-is-better.
inline bool maximizes(Rule r) {
  return r != Rule::dodgson && r != Rule::weak_dodgson && r != Rule::kemeny;
}

inline Objective objective_of(Rule r) {
  switch (r) {
    case Rule::kemeny: return Objective::kemeny_min;
    case Rule::kemeny_2m:
    case Rule::kemeny_22: return Objective::net_max;
    case Rule::slater:
    case Rule::slater_2k: return Objective::slater;
    default: throw Error(ErrorKind::invalid_argument, std::string("rule has no consensus objective: ") + to_string(r));
  }
}

struct VoterSubset {
  std::vector<VoterIndex> voters;
  friend bool operator==(const VoterSubset&, const VoterSubset&) = default;
};

// lifts[v] adjacent swaps moving `candidate` up in voter v's total order.
struct LiftSequence {
  CandidateId candidate = 0;
  std::vector<int> lifts;
  friend bool operator==(const LiftSequence&, const LiftSequence&) = default;
};

// Each entry swaps the candidates at positions (position, position + 1).
struct AdjacentSwap {
  VoterIndex voter = 0;
  int position = 0;
  friend bool operator==(const AdjacentSwap&, const AdjacentSwap&) = default;
};

struct SwapSequence {
  std::vector<AdjacentSwap> swaps;
  friend bool operator==(const SwapSequence&, const SwapSequence&) = default;
};

struct GroupMoveSequence {
  std::vector<DichotomousMove> moves;
  friend bool operator==(const GroupMoveSequence&, const GroupMoveSequence&) = default;
};

struct ConsensusOrder {
  Ballot order;
  friend bool operator==(const ConsensusOrder&, const ConsensusOrder&) = default;
};

using ScoreCertificate =
    std::variant<std::monostate, VoterSubset, LiftSequence, SwapSequence, GroupMoveSequence, ConsensusOrder>;

inline const char* certificate_kind(const ScoreCertificate& cert) {
  switch (cert.index()) {
    case 1: return "voter-subset";
    case 2:
    case 3:
    case 4: return "move-sequence";
    case 5: return "consensus-order";
    default: return "none";
  }
}

inline Ballot lift_candidate(const Ballot& ballot, CandidateId c, int lift) {
  std::vector<CandidateId> order = ballot.order();
  auto it = std::find(order.begin(), order.end(), c);
  int pos = static_cast<int>(it - order.begin());
  if (lift < 0 || lift > pos) throw Error(ErrorKind::invalid_argument, "lift exceeds the candidate's position");
  std::rotate(order.begin() + (pos - lift), it, it + 1);
  return Ballot::total(order);
}

inline Ballot swap_adjacent(const Ballot& ballot, int position) {
  std::vector<CandidateId> order = ballot.order();
  if (position < 0 || position + 1 >= static_cast<int>(order.size()))
    throw Error(ErrorKind::out_of_range, "swap position out of range");
  std::swap(order[position], order[position + 1]);
  return Ballot::total(order);
}

// Applies the edits and returns the edited election together with the unit cost.
inline std::pair<Election, long long> apply_edits(const Election& election, const ScoreCertificate& cert) {
  std::vector<Ballot> ballots = election.ballots();
  long long cost = 0;
  if (const auto* lifts = std::get_if<LiftSequence>(&cert)) {
    if (static_cast<int>(lifts->lifts.size()) != election.num_voters())
      throw Error(ErrorKind::invalid_argument, "lift sequence length differs from voter count");
    for (VoterIndex v = 0; v < election.num_voters(); ++v) {
      if (!ballots[v].is_total_order()) throw Error(ErrorKind::unsupported_ballot_kind, "lift on a non-total ballot");
      ballots[v] = lift_candidate(ballots[v], lifts->candidate, lifts->lifts[v]);
      cost += lifts->lifts[v];
    }
  } else if (const auto* swaps = std::get_if<SwapSequence>(&cert)) {
    for (const auto& s : swaps->swaps) {
      if (s.voter < 0 || s.voter >= election.num_voters()) throw Error(ErrorKind::out_of_range, "voter out of range");
      ballots[s.voter] = swap_adjacent(ballots[s.voter], s.position);
      ++cost;
    }
  } else if (const auto* moves = std::get_if<GroupMoveSequence>(&cert)) {
    for (const auto& mv : moves->moves) {
      if (mv.voter < 0 || mv.voter >= election.num_voters()) throw Error(ErrorKind::out_of_range, "voter out of range");
      ballots[mv.voter] = apply_dichotomous_move(ballots[mv.voter], mv.candidate, mv.direction);
      ++cost;
    }
  } else {
    throw Error(ErrorKind::invalid_argument, "certificate carries no edits");
  }
  return {Election(election.candidates(), std::move(ballots), election.axis()), cost};
}

// Recomputes the score a certificate witnesses, or nullopt when it does not
// witness anything for (rule, p). `k` is the group bound for slater-2k.
inline std::optional<long long> replay_certificate(const Election& election, Rule rule, CandidateId p,
                                                   const ScoreCertificate& cert, int k = 2) {
  require_candidate(election, p);
  switch (rule) {
    case Rule::young:
    case Rule::strong_young: {
      const bool strong = rule == Rule::strong_young;
      if (std::holds_alternative<std::monostate>(cert)) return strong ? std::optional<long long>(0) : std::nullopt;
      const auto* subset = std::get_if<VoterSubset>(&cert);
      if (!subset) return std::nullopt;
      if (subset->voters.empty()) return strong ? std::nullopt : std::optional<long long>(0);
      Election sub = restrict_voters(election, subset->voters);
      if (!is_condorcet_winner(majority_table(sub), p, !strong)) return std::nullopt;
      return static_cast<long long>(subset->voters.size());
    }
    case Rule::dodgson:
    case Rule::weak_dodgson: {
      const bool weak = rule == Rule::weak_dodgson;
      if (std::holds_alternative<std::monostate>(cert)) {
        if (!is_condorcet_winner(majority_table(election), p, weak)) return std::nullopt;
        return 0;
      }
      if (const auto* lifts = std::get_if<LiftSequence>(&cert); lifts && lifts->candidate != p) return std::nullopt;
      auto [edited, cost] = apply_edits(election, cert);
      if (!is_condorcet_winner(majority_table(edited), p, weak)) return std::nullopt;
      return cost;
    }
    default: {
      const auto* order = std::get_if<ConsensusOrder>(&cert);
      if (!order || order->order.num_candidates() != election.num_candidates()) return std::nullopt;
      const Ballot& o = order->order;
      const bool total = rule == Rule::kemeny || rule == Rule::kemeny_2m || rule == Rule::slater;
      if (total && !o.is_total_order()) return std::nullopt;
      if (rule == Rule::kemeny_22 && !o.is_kchotomous(2)) return std::nullopt;
      if (rule == Rule::slater_2k && !o.is_kchotomous(k)) return std::nullopt;
      if (o.group_of(p) != 0) return std::nullopt;
      return consensus_score(election, o, objective_of(rule));
    }
  }
}

}  // namespace vscore
