#pragma once

// Domain membership tests (k-chotomous, single-peaked, single-crossing) with
// checkable violation witnesses.

#include <array>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "vscore/ballot.hpp"

namespace vscore {

struct KChotomousViolation {
  VoterIndex voter = 0;
  int groups = 0;
};

// The voter ranks the middle candidate of an axis triple below both ends.
struct SinglePeakedViolation {
  VoterIndex voter = 0;
  std::array<CandidateId, 3> triple{};  // in axis order
};

// The (a,b) preference changes direction at voter `first_flip` and again at
// voter `second_flip`.
struct SingleCrossingViolation {
  CandidateId a = 0;
  CandidateId b = 0;
  VoterIndex first_flip = 0;
  VoterIndex second_flip = 0;
};

struct DomainVerdict {
  bool holds = true;
  std::variant<std::monostate, KChotomousViolation, SinglePeakedViolation, SingleCrossingViolation> violation;

  std::string describe(const Election& e) const {
    std::ostringstream os;
    if (const auto* k = std::get_if<KChotomousViolation>(&violation)) {
      os << "voter=" << k->voter + 1 << " groups=" << k->groups;
    } else if (const auto* sp = std::get_if<SinglePeakedViolation>(&violation)) {
      os << "voter=" << sp->voter + 1 << " triple=" << e.name(sp->triple[0]) << "," << e.name(sp->triple[1]) << ","
         << e.name(sp->triple[2]);
    } else if (const auto* sc = std::get_if<SingleCrossingViolation>(&violation)) {
      os << "pair=" << e.name(sc->a) << "," << e.name(sc->b) << " flips=" << sc->first_flip + 1 << ","
         << sc->second_flip + 1;
    }
    return os.str();
  }
};

inline DomainVerdict check_kchotomous(const Election& election, int k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be positive");
  for (VoterIndex v = 0; v < election.num_voters(); ++v) {
    const int g = election.ballot(v).num_groups();
    if (g > k) return {false, KChotomousViolation{v, g}};
  }
  return {};
}

inline void require_total_orders(const Election& election) {
  if (!election.all_total_orders())
    throw Error(ErrorKind::unsupported_ballot_kind, "domain check requires total-order ballots");
}

inline void require_axis(const Election& election, const std::vector<CandidateId>& axis) {
  std::vector<CandidateId> sorted = axis;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == election.num_candidates();
  for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<CandidateId>(i);
  if (!ok) throw Error(ErrorKind::invalid_argument, "axis is not a permutation of the roster");
}

// For every axis triple x L y L z a voter stating x > y must state y > z, and
// symmetrically from the right: the middle one is never ranked last.
inline DomainVerdict check_single_peaked(const Election& election, const std::vector<CandidateId>& axis) {
  require_axis(election, axis);
  require_total_orders(election);
  const int m = election.num_candidates();
  for (VoterIndex v = 0; v < election.num_voters(); ++v) {
    const Ballot& b = election.ballot(v);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int l = j + 1; l < m; ++l) {
          const CandidateId x = axis[i], y = axis[j], z = axis[l];
          if ((b.prefers(x, y) && !b.prefers(y, z)) || (b.prefers(z, y) && !b.prefers(y, x)))
            return {false, SinglePeakedViolation{v, {x, y, z}}};
        }
  }
  return {};
}

// Voter order is ballot order.
inline DomainVerdict check_single_crossing(const Election& election) {
  require_total_orders(election);
  const int m = election.num_candidates();
  const int n = election.num_voters();
  for (CandidateId a = 0; a < m; ++a)
    for (CandidateId b = a + 1; b < m; ++b) {
      int flips = 0;
      VoterIndex first = 0;
      for (VoterIndex v = 1; v < n; ++v) {
        if (election.ballot(v).prefers(a, b) == election.ballot(v - 1).prefers(a, b)) continue;
        if (++flips == 1) {
          first = v;
        } else {
          return {false, SingleCrossingViolation{a, b, first, v}};
        }
      }
    }
  return {};
}

// 1-based positions of the median voter(s).
inline std::vector<VoterIndex> median_voters(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "median of an empty electorate");
  if (n % 2 == 1) return {(n + 1) / 2};
  return {n / 2, n / 2 + 1};
}

}  // namespace vscore
