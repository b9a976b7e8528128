#pragma once

// Election data model: weak-order ballots over a dense candidate roster.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vscore/error.hpp"

namespace vscore {

using CandidateId = int;
using VoterIndex = int;

// An ordered partition of the candidates 0..m-1. Earlier groups are strictly
// preferred to later groups; members of one group are tied.
class Ballot {
 public:
  Ballot() = default;

  Ballot(std::vector<std::vector<CandidateId>> groups, int num_candidates)
      : groups_(std::move(groups)), group_of_(static_cast<std::size_t>(std::max(num_candidates, 0)), -1) {
    if (num_candidates < 1) throw Error(ErrorKind::invalid_argument, "ballot needs at least one candidate");
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (groups_[g].empty()) throw Error(ErrorKind::invalid_argument, "ballot group is empty");
      std::sort(groups_[g].begin(), groups_[g].end());
      for (CandidateId c : groups_[g]) {
        if (c < 0 || c >= num_candidates) throw Error(ErrorKind::out_of_range, "candidate id out of range");
        if (group_of_[c] != -1) throw Error(ErrorKind::invalid_argument, "candidate appears twice in a ballot");
        group_of_[c] = static_cast<int>(g);
      }
    }
    for (int pos : group_of_)
      if (pos == -1) throw Error(ErrorKind::invalid_argument, "ballot is missing a candidate");
  }

  static Ballot total(const std::vector<CandidateId>& order) {
    std::vector<std::vector<CandidateId>> groups;
    groups.reserve(order.size());
    for (CandidateId c : order) groups.push_back({c});
    return Ballot(std::move(groups), static_cast<int>(order.size()));
  }

  // (approved > rest), normalized to a single group when either side is empty.
  static Ballot dichotomous(std::vector<CandidateId> approved, int num_candidates) {
    std::vector<char> in(static_cast<std::size_t>(std::max(num_candidates, 0)), 0);
    for (CandidateId c : approved) {
      if (c < 0 || c >= num_candidates) throw Error(ErrorKind::out_of_range, "candidate id out of range");
      in[c] = 1;
    }
    std::vector<CandidateId> rest;
    for (CandidateId c = 0; c < num_candidates; ++c)
      if (!in[c]) rest.push_back(c);
    if (approved.empty() || rest.empty()) {
      std::vector<CandidateId> all(static_cast<std::size_t>(std::max(num_candidates, 0)));
      for (CandidateId c = 0; c < num_candidates; ++c) all[c] = c;
      return Ballot({all}, num_candidates);
    }
    return Ballot({std::move(approved), std::move(rest)}, num_candidates);
  }

  int num_candidates() const { return static_cast<int>(group_of_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }
  const std::vector<std::vector<CandidateId>>& groups() const { return groups_; }
  const std::vector<CandidateId>& group(int g) const { return groups_.at(g); }
  int group_of(CandidateId c) const { return group_of_.at(c); }

  bool prefers(CandidateId a, CandidateId b) const { return group_of_[a] < group_of_[b]; }
  bool tied(CandidateId a, CandidateId b) const { return group_of_[a] == group_of_[b]; }

  bool is_total_order() const { return num_groups() == num_candidates(); }
  bool is_kchotomous(int k) const { return num_groups() <= k; }

  // Total orders only: the ranking from most to least preferred.
  std::vector<CandidateId> order() const {
    std::vector<CandidateId> out;
    for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
    return out;
  }

  // Number of candidates strictly above c.
  int above(CandidateId c) const {
    int count = 0;
    for (int g = 0; g < group_of_[c]; ++g) count += static_cast<int>(groups_[g].size());
    return count;
  }

  friend bool operator==(const Ballot&, const Ballot&) = default;

 private:
  std::vector<std::vector<CandidateId>> groups_;
  std::vector<int> group_of_;
};

inline bool valid_candidate_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
           ch == '.' || ch == '-';
  });
}

class Election {
 public:
  Election() = default;

  Election(std::vector<std::string> candidates, std::vector<Ballot> ballots,
           std::optional<std::vector<CandidateId>> axis = std::nullopt)
      : candidates_(std::move(candidates)), ballots_(std::move(ballots)), axis_(std::move(axis)) {
    if (candidates_.empty()) throw Error(ErrorKind::invalid_argument, "election needs at least one candidate");
    std::vector<std::string> sorted = candidates_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::invalid_argument, "duplicate candidate name");
    for (const auto& name : candidates_)
      if (!valid_candidate_name(name)) throw Error(ErrorKind::invalid_argument, "invalid candidate name '" + name + "'");
    for (const auto& b : ballots_)
      if (b.num_candidates() != num_candidates())
        throw Error(ErrorKind::invalid_argument, "ballot ranges over a different roster");
    if (axis_) {
      std::vector<CandidateId> perm = *axis_;
      std::sort(perm.begin(), perm.end());
      bool ok = static_cast<int>(perm.size()) == num_candidates();
      for (std::size_t i = 0; ok && i < perm.size(); ++i) ok = perm[i] == static_cast<CandidateId>(i);
      if (!ok) throw Error(ErrorKind::invalid_argument, "axis is not a permutation of the roster");
    }
  }

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return static_cast<int>(ballots_.size()); }

  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::string& name(CandidateId c) const { return candidates_.at(c); }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  const Ballot& ballot(VoterIndex v) const { return ballots_.at(v); }
  const std::optional<std::vector<CandidateId>>& axis() const { return axis_; }

  std::optional<CandidateId> find(const std::string& name) const {
    auto it = std::find(candidates_.begin(), candidates_.end(), name);
    if (it == candidates_.end()) return std::nullopt;
    return static_cast<CandidateId>(it - candidates_.begin());
  }

  CandidateId id(const std::string& name) const {
    auto c = find(name);
    if (!c) throw Error(ErrorKind::invalid_argument, "unknown candidate '" + name + "'");
    return *c;
  }

  bool all_total_orders() const {
    return std::all_of(ballots_.begin(), ballots_.end(), [](const Ballot& b) { return b.is_total_order(); });
  }
  bool all_kchotomous(int k) const {
    return std::all_of(ballots_.begin(), ballots_.end(), [k](const Ballot& b) { return b.is_kchotomous(k); });
  }

  friend bool operator==(const Election&, const Election&) = default;

 private:
  std::vector<std::string> candidates_;
  std::vector<Ballot> ballots_;
  std::optional<std::vector<CandidateId>> axis_;
};

inline void require_candidate(const Election& e, CandidateId c) {
  if (c < 0 || c >= e.num_candidates()) throw Error(ErrorKind::out_of_range, "candidate id out of range");
}

// Keeps the listed voters in their original relative order.
inline Election restrict_voters(const Election& election, std::vector<VoterIndex> voters) {
  std::sort(voters.begin(), voters.end());
  if (std::adjacent_find(voters.begin(), voters.end()) != voters.end())
    throw Error(ErrorKind::invalid_argument, "voter listed twice");
  std::vector<Ballot> kept;
  kept.reserve(voters.size());
  for (VoterIndex v : voters) {
    if (v < 0 || v >= election.num_voters()) throw Error(ErrorKind::out_of_range, "voter index out of range");
    kept.push_back(election.ballot(v));
  }
  return Election(election.candidates(), std::move(kept), election.axis());
}

// Keeps the listed candidates. New ids follow the old roster order, so the
// i-th smallest kept id becomes id i.
inline Election restrict_candidates(const Election& election, std::vector<CandidateId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw Error(ErrorKind::invalid_argument, "candidate subset is empty");
  std::vector<int> remap(static_cast<std::size_t>(election.num_candidates()), -1);
  std::vector<std::string> names;
  for (CandidateId c : keep) {
    require_candidate(election, c);
    remap[c] = static_cast<int>(names.size());
    names.push_back(election.name(c));
  }
  const int m = static_cast<int>(keep.size());
  std::vector<Ballot> ballots;
  ballots.reserve(election.ballots().size());
  for (const auto& b : election.ballots()) {
    std::vector<std::vector<CandidateId>> groups;
    for (const auto& g : b.groups()) {
      std::vector<CandidateId> ng;
      for (CandidateId c : g)
        if (remap[c] >= 0) ng.push_back(remap[c]);
      if (!ng.empty()) groups.push_back(std::move(ng));
    }
    ballots.emplace_back(std::move(groups), m);
  }
  std::optional<std::vector<CandidateId>> axis;
  if (election.axis()) {
    axis.emplace();
    for (CandidateId c : *election.axis())
      if (remap[c] >= 0) axis->push_back(remap[c]);
  }
  return Election(std::move(names), std::move(ballots), std::move(axis));
}

enum class MoveDirection { up, down };

struct DichotomousMove {
  VoterIndex voter = 0;
  CandidateId candidate = 0;
  MoveDirection direction = MoveDirection::up;

  friend bool operator==(const DichotomousMove&, const DichotomousMove&) = default;
};

// One unit edit of a dichotomous ballot. A single-group ballot counts as
// "everyone approved": only down-moves apply to it, and emptying the approved
// group collapses the ballot back to a single group.
inline Ballot apply_dichotomous_move(const Ballot& ballot, CandidateId c, MoveDirection dir) {
  if (!ballot.is_kchotomous(2)) throw Error(ErrorKind::unsupported_ballot_kind, "ballot is not dichotomous");
  const int m = ballot.num_candidates();
  if (c < 0 || c >= m) throw Error(ErrorKind::out_of_range, "candidate id out of range");
  std::vector<CandidateId> approved = ballot.group(0);
  const bool is_approved = ballot.group_of(c) == 0;
  if (dir == MoveDirection::up) {
    if (is_approved) throw Error(ErrorKind::impossible_move, "candidate is already approved");
    approved.push_back(c);
  } else {
    if (!is_approved) throw Error(ErrorKind::impossible_move, "candidate is already disapproved");
    approved.erase(std::find(approved.begin(), approved.end(), c));
  }
  return Ballot::dichotomous(std::move(approved), m);
}

}  // namespace vscore
