#pragma once

// Small named elections used by tests, the selftest and the data/ directory.

#include <string>
#include <vector>

#include "vscore/ballot.hpp"

namespace vscore::fixtures {

namespace detail {

inline Election blocks(std::vector<std::string> names, const std::vector<std::pair<int, std::vector<int>>>& runs,
                       std::optional<std::vector<CandidateId>> axis = std::nullopt) {
  std::vector<Ballot> ballots;
  for (const auto& [count, order] : runs)
    for (int i = 0; i < count; ++i) ballots.push_back(Ballot::total(order));
  return Election(std::move(names), std::move(ballots), std::move(axis));
}

}  // namespace detail

// Single-peaked on a1 < a2 < a3 < a4 < p with the given block sizes of the
// forms a1>a2>a3>a4>p, a2>a3>a4>p>a1, a3>a4>p>a2>a1, a4>p>a3>a2>a1, p>a4>a3>a2>a1.
inline Election single_peaked_blocks(int ten, int fifty, int ten2, int twenty, int eleven) {
  // ids: a1=0 a2=1 a3=2 a4=3 p=4
  return detail::blocks({"a1", "a2", "a3", "a4", "p"},
                        {{ten, {0, 1, 2, 3, 4}},
                         {fifty, {1, 2, 3, 4, 0}},
                         {ten2, {2, 3, 4, 1, 0}},
                         {twenty, {3, 4, 2, 1, 0}},
                         {eleven, {4, 3, 2, 1, 0}}},
                        std::vector<CandidateId>{0, 1, 2, 3, 4});
}

inline Election sp101() { return single_peaked_blocks(10, 50, 10, 20, 11); }

// The same five ballot forms with a fifth of each block.
inline Election sp101_replica() { return single_peaked_blocks(2, 10, 2, 4, 3); }

// Single-crossing in ballot order; p needs a wasted swap to win.
inline Election ex_sc() {
  // ids: a=0 b=1 c=2 p=3
  return detail::blocks({"a", "b", "c", "p"}, {{2, {0, 1, 3, 2}}, {2, {0, 2, 3, 1}}});
}

// Single-peaked on 16 < 18 < 21 < 25 but not single-crossing in any voter order.
inline Election temperature_votes() {
  return detail::blocks({"16", "18", "21", "25"}, {{1, {0, 1, 2, 3}}, {1, {1, 2, 3, 0}}, {1, {2, 1, 0, 3}}},
                        std::vector<CandidateId>{0, 1, 2, 3});
}

}  // namespace vscore::fixtures
