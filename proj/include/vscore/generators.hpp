#pragma once

// Seeded random elections and graphs for oracle sweeps.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "vscore/ballot.hpp"
#include "vscore/forge.hpp"

namespace vscore {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<std::string> letter_names(int m) {
  if (m < 1 || m > 26) throw Error(ErrorKind::invalid_argument, "letter names cover 1..26 candidates");
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

inline std::vector<CandidateId> random_permutation(Rng& rng, int m) {
  std::vector<CandidateId> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

inline Election random_dichotomous(Rng& rng, int m, int n) {
  std::vector<Ballot> ballots;
  for (int v = 0; v < n; ++v) {
    std::vector<CandidateId> approved;
    for (CandidateId c = 0; c < m; ++c)
      if (uniform(rng, 0, 1)) approved.push_back(c);
    ballots.push_back(Ballot::dichotomous(approved, m));
  }
  return Election(letter_names(m), std::move(ballots));
}

// Uniform group index per candidate, then empty groups dropped.
inline Ballot random_weak_order(Rng& rng, int m, int k) {
  std::vector<std::vector<CandidateId>> groups(static_cast<std::size_t>(k));
  for (CandidateId c = 0; c < m; ++c) groups[uniform(rng, 0, k - 1)].push_back(c);
  groups.erase(std::remove_if(groups.begin(), groups.end(), [](const auto& g) { return g.empty(); }), groups.end());
  return Ballot(std::move(groups), m);
}

// Starts at a random peak and extends to the left or right neighbour at random.
inline Ballot random_single_peaked_ballot(Rng& rng, const std::vector<CandidateId>& axis) {
  const int m = static_cast<int>(axis.size());
  int lo = uniform(rng, 0, m - 1), hi = lo;
  std::vector<CandidateId> order{axis[lo]};
  while (static_cast<int>(order.size()) < m) {
    const bool left = hi == m - 1 || (lo > 0 && uniform(rng, 0, 1));
    order.push_back(left ? axis[--lo] : axis[++hi]);
  }
  return Ballot::total(order);
}

inline Election random_single_peaked(Rng& rng, int m, int n, bool shuffle_axis = true) {
  std::vector<CandidateId> axis(static_cast<std::size_t>(m));
  std::iota(axis.begin(), axis.end(), 0);
  if (shuffle_axis) std::shuffle(axis.begin(), axis.end(), rng);
  std::vector<Ballot> ballots;
  for (int v = 0; v < n; ++v) ballots.push_back(random_single_peaked_ballot(rng, axis));
  return Election(letter_names(m), std::move(ballots), axis);
}

// Each voter applies a few adjacent swaps to the previous voter's order, never
// reverting a pair that has already flipped relative to the first voter.
inline Election random_single_crossing(Rng& rng, int m, int n) {
  std::vector<CandidateId> order = random_permutation(rng, m);
  std::vector<int> rank0(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rank0[order[i]] = i;
  std::vector<Ballot> ballots;
  for (int v = 0; v < n; ++v) {
    if (v > 0) {
      const int steps = uniform(rng, 0, 2);
      for (int s = 0; s < steps; ++s) {
        std::vector<int> open;
        for (int i = 0; i + 1 < m; ++i)
          if (rank0[order[i]] < rank0[order[i + 1]]) open.push_back(i);
        if (open.empty()) break;
        const int i = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
        std::swap(order[i], order[i + 1]);
      }
    }
    ballots.push_back(Ballot::total(order));
  }
  return Election(letter_names(m), std::move(ballots));
}

inline Election random_total_orders(Rng& rng, int m, int n) {
  std::vector<Ballot> ballots;
  for (int v = 0; v < n; ++v) ballots.push_back(Ballot::total(random_permutation(rng, m)));
  return Election(letter_names(m), std::move(ballots));
}

inline Graph random_graph(Rng& rng, int n, int min_edges = 0) {
  for (;;) {
    Graph g(n);
    const int density = uniform(rng, 1, 4);  // edge probability density/5
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform(rng, 1, 5) <= density) g.add_edge(u, v);
    if (g.num_edges() >= min_edges) return g;
  }
}

}  // namespace vscore
