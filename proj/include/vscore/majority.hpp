#pragma once

// Pairwise majority counts and the consensus objectives built on them.

#include <vector>

#include "vscore/ballot.hpp"

namespace vscore {

// counts(a, b) = number of ballots strictly preferring a to b.
class MajorityTable {
 public:
  MajorityTable() = default;
  explicit MajorityTable(int num_candidates)
      : m_(num_candidates), counts_(static_cast<std::size_t>(num_candidates) * num_candidates, 0) {}

  void add(const Ballot& ballot, int weight = 1) {
    const auto& groups = ballot.groups();
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t h = g + 1; h < groups.size(); ++h)
        for (CandidateId a : groups[g])
          for (CandidateId b : groups[h]) counts_[index(a, b)] += weight;
    n_ += weight;
  }

  int num_voters() const { return n_; }
  int num_candidates() const { return m_; }
  int operator()(CandidateId a, CandidateId b) const { return counts_[index(a, b)]; }

  // a >_m b
  bool beats(CandidateId a, CandidateId b) const { return (*this)(a, b) > (*this)(b, a); }

  friend bool operator==(const MajorityTable&, const MajorityTable&) = default;

 private:
  std::size_t index(CandidateId a, CandidateId b) const { return static_cast<std::size_t>(a) * m_ + b; }

  int n_ = 0;
  int m_ = 0;
  std::vector<int> counts_;
};

inline MajorityTable majority_table(const Election& election) {
  MajorityTable table(election.num_candidates());
  for (const auto& b : election.ballots()) table.add(b);
  return table;
}

inline std::vector<CandidateId> condorcet_winners(const MajorityTable& table, bool weak) {
  std::vector<CandidateId> out;
  const int m = table.num_candidates();
  for (CandidateId p = 0; p < m; ++p) {
    bool ok = true;
    for (CandidateId a = 0; a < m && ok; ++a) {
      if (a == p) continue;
      ok = weak ? table(p, a) >= table(a, p) : table(p, a) > table(a, p);
    }
    if (ok) out.push_back(p);
  }
  return out;
}

inline bool is_condorcet_winner(const MajorityTable& table, CandidateId p, bool weak) {
  for (CandidateId a = 0; a < table.num_candidates(); ++a) {
    if (a == p) continue;
    if (weak ? table(p, a) < table(a, p) : table(p, a) <= table(a, p)) return false;
  }
  return true;
}

inline int net_preference(const MajorityTable& table, CandidateId a, CandidateId b) {
  if (a == b) throw Error(ErrorKind::invalid_pair, "net preference of a candidate against itself");
  return table(a, b) - table(b, a);
}

// A strict binary relation over candidates, e.g. >_m.
class MajorityRelation {
 public:
  MajorityRelation() = default;
  explicit MajorityRelation(const MajorityTable& table)
      : m_(table.num_candidates()), rel_(static_cast<std::size_t>(m_) * m_, 0) {
    for (CandidateId a = 0; a < m_; ++a)
      for (CandidateId b = 0; b < m_; ++b) rel_[a * m_ + b] = a != b && table.beats(a, b);
  }

  // The strict part of a weak order: earlier groups are above later ones.
  static MajorityRelation from_weak_order(const Ballot& order) {
    MajorityRelation r;
    r.m_ = order.num_candidates();
    r.rel_.assign(static_cast<std::size_t>(r.m_) * r.m_, 0);
    for (CandidateId a = 0; a < r.m_; ++a)
      for (CandidateId b = 0; b < r.m_; ++b) r.rel_[a * r.m_ + b] = order.prefers(a, b);
    return r;
  }

  int num_candidates() const { return m_; }
  bool operator()(CandidateId a, CandidateId b) const { return rel_[static_cast<std::size_t>(a) * m_ + b] != 0; }

  bool transitive() const {
    for (CandidateId a = 0; a < m_; ++a)
      for (CandidateId b = 0; b < m_; ++b) {
        if (!(*this)(a, b)) continue;
        for (CandidateId c = 0; c < m_; ++c)
          if ((*this)(b, c) && !(*this)(a, c)) return false;
      }
    return true;
  }

  // Transitive and with transitive incomparability.
  bool weak_order() const {
    if (!transitive()) return false;
    for (CandidateId a = 0; a < m_; ++a)
      for (CandidateId b = 0; b < m_; ++b)
        for (CandidateId c = 0; c < m_; ++c)
          if ((*this)(a, c) && !(*this)(a, b) && !(*this)(b, c)) return false;
    return true;
  }

  // Candidates nobody is above.
  std::vector<CandidateId> maximal() const {
    std::vector<CandidateId> out;
    for (CandidateId a = 0; a < m_; ++a) {
      bool top = true;
      for (CandidateId b = 0; b < m_ && top; ++b) top = !(*this)(b, a);
      if (top) out.push_back(a);
    }
    return out;
  }

  // Number of candidates strictly below a.
  int dominated(CandidateId a) const {
    int count = 0;
    for (CandidateId b = 0; b < m_; ++b) count += (*this)(a, b);
    return count;
  }

 private:
  int m_ = 0;
  std::vector<char> rel_;
};

enum class Objective { kemeny_min, net_max, slater };

inline const char* to_string(Objective o) {
  switch (o) {
    case Objective::kemeny_min: return "kemeny-min";
    case Objective::net_max: return "net-max";
    case Objective::slater: return "slater";
  }
  return "?";
}

// Ordered pair (a,b) agrees when (a > b) == (a >_m b); ties count on both sides.
inline int slater_pair_contribution(const Ballot& order, const MajorityRelation& rel, CandidateId a,
                                    CandidateId b) {
  return (order.prefers(a, b) == rel(a, b)) + (order.prefers(b, a) == rel(b, a));
}

inline long long slater_agreement(const Ballot& order, const MajorityRelation& rel) {
  long long score = 0;
  const int m = order.num_candidates();
  for (CandidateId a = 0; a < m; ++a)
    for (CandidateId b = a + 1; b < m; ++b) score += slater_pair_contribution(order, rel, a, b);
  return score;
}

inline long long consensus_score(const MajorityTable& table, const Ballot& order, Objective objective) {
  if (order.num_candidates() != table.num_candidates())
    throw Error(ErrorKind::invalid_argument, "consensus order ranges over a different candidate set");
  if (objective == Objective::slater) return slater_agreement(order, MajorityRelation(table));
  long long score = 0;
  const int m = order.num_candidates();
  for (CandidateId a = 0; a < m; ++a)
    for (CandidateId b = 0; b < m; ++b) {
      if (!order.prefers(a, b)) continue;
      if (objective == Objective::kemeny_min)
        score += table(b, a);
      else
        score += table(a, b) - table(b, a);
    }
  return score;
}

inline long long consensus_score(const Election& election, const Ballot& order, Objective objective) {
  return consensus_score(majority_table(election), order, objective);
}

}  // namespace vscore
