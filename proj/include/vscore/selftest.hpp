#pragma once

// Acceptance checks: worked examples, fast-vs-oracle sweeps, the Slater swap
// lemma, forged hardness instances, negative controls and determinism.
// Reports contain no timings so that two runs compare byte for byte; time
// limits are enforced internally and only show up as pass/fail.

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vscore/ballot.hpp"
#include "vscore/domain.hpp"
#include "vscore/fast_rules.hpp"
#include "vscore/fixtures.hpp"
#include "vscore/forge.hpp"
#include "vscore/generators.hpp"
#include "vscore/io.hpp"
#include "vscore/majority.hpp"
#include "vscore/oracles.hpp"

namespace vscore::selftest {

struct Line {
  std::string criterion;  // "1", "3a", ...
  std::string text;
  bool pass = false;
};

struct Report {
  std::vector<Line> lines;

  bool pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
  }

  bool pass(const std::string& criterion) const {
    bool any = false;
    for (const auto& l : lines)
      if (l.criterion == criterion || l.criterion.rfind(criterion, 0) == 0) {
        any = true;
        if (!l.pass) return false;
      }
    return any;
  }

  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

  std::string render() const {
    std::string out;
    for (const auto& l : lines) out += (l.pass ? "PASS " : "FAIL ") + l.criterion + " " + l.text + "\n";
    return out;
  }
};

inline constexpr int kSweepInstances = 500;

namespace detail {

// Counts instances and keeps the first disagreement.
class Sweep {
 public:
  explicit Sweep(std::string label) : label_(std::move(label)) {}

  void check(bool ok, const std::function<std::string()>& what) {
    ++instances_;
    if (!ok && !mismatch_) mismatch_ = "instance " + std::to_string(instances_) + ": " + what();
  }

  void fail(const std::string& what) {
    ++instances_;
    if (!mismatch_) mismatch_ = "instance " + std::to_string(instances_) + ": " + what;
  }

  int instances() const { return instances_; }

  Line line(const std::string& criterion, int required = kSweepInstances) const {
    std::string text = label_ + " on " + std::to_string(instances_) + " instances";
    bool pass = !mismatch_ && instances_ >= required;
    if (mismatch_) text += " (first mismatch at " + *mismatch_ + ")";
    if (instances_ < required) text += " (fewer than " + std::to_string(required) + ")";
    return {criterion, text, pass};
  }

 private:
  std::string label_;
  int instances_ = 0;
  std::optional<std::string> mismatch_;
};

template <typename Score>
std::vector<CandidateId> arg_best(int m, bool maximize, Score&& score) {
  std::vector<CandidateId> out;
  long long best = 0;
  for (CandidateId c = 0; c < m; ++c) {
    const long long s = score(c);
    if (out.empty() || (maximize ? s > best : s < best)) {
      out = {c};
      best = s;
    } else if (s == best) {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string names(const Election& e, const std::vector<CandidateId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + e.name(ids[i]);
  return out + "}";
}

inline std::string pair_text(long long fast, long long exact) {
  return "fast=" + std::to_string(fast) + " exact=" + std::to_string(exact);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  bool within(std::chrono::milliseconds limit) const { return std::chrono::steady_clock::now() - start_ < limit; }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline Line time_line(const std::string& criterion, const std::string& what, const Stopwatch& clock,
                      std::chrono::milliseconds limit) {
  return {criterion, what + " within the time limit", clock.within(limit)};
}

inline bool throws_domain_violation(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::domain_violation;
  }
  return false;
}

}  // namespace detail

// Single-peaked Dodgson on the 101-voter example.
inline Report criterion_1() {
  using namespace std::chrono_literals;
  Report r;
  detail::Stopwatch clock;
  const Election e = fixtures::sp101();
  const CandidateId p = e.id("p");
  const auto fast = sp_dodgson_score(e, *e.axis(), p, false);
  r.lines.push_back({"1", "sp101 fast Dodgson score of p is 70 (got " + std::to_string(fast.score) + ")",
                     fast.score == 70});

  const auto cert = fast.certificate(p);
  const auto replayed = replay_certificate(e, Rule::dodgson, p, cert);
  r.lines.push_back({"1", "swap plan replays to a Condorcet win at cost 70", replayed && *replayed == 70});

  const int h = Threshold::condorcet(e.num_voters()).value;
  const MajorityTable before = majority_table(e);
  const MajorityTable after = majority_table(apply_edits(e, cert).first);
  bool exact_h = h == 50;
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    if (c != p && before(c, p) > h) exact_h = exact_h && after(c, p) == h;
  r.lines.push_back({"1", "every over-threshold opponent ends with exactly H=50 voters above p", exact_h});
  r.lines.push_back(detail::time_line("1", "sp101", clock, 1000ms));
  return r;
}

// Single-crossing example where the single-peaked formula undercounts.
inline Report criterion_2() {
  using namespace std::chrono_literals;
  Report r;
  detail::Stopwatch clock;
  const Election e = fixtures::ex_sc();
  const CandidateId p = e.id("p");
  r.lines.push_back({"2", "example election is single-crossing", check_single_crossing(e).holds});
  const auto exact = dodgson_score_exact(e, p, false);
  r.lines.push_back({"2", "exact Dodgson score of p is 6 (got " + std::to_string(exact.score) + ")", exact.score == 6});
  const auto replayed = replay_certificate(e, Rule::dodgson, p, exact.certificate);
  r.lines.push_back({"2", "exact certificate replays at cost 6", replayed && *replayed == 6});

  const MajorityTable t = majority_table(e);
  const int h = Threshold::condorcet(e.num_voters()).value;
  int formula = 0;
  for (CandidateId c = 0; c < e.num_candidates(); ++c)
    if (c != p) formula += std::max(0, t(c, p) - h);
  r.lines.push_back({"2", "single-peaked formula gives 5, strictly below the exact score (got " +
                              std::to_string(formula) + ")",
                     formula == 5 && formula < exact.score});
  r.lines.push_back(detail::time_line("2", "example", clock, 1000ms));
  return r;
}

inline Report criterion_3a() {
  Report r;
  Rng rng(0x3a01);
  detail::Sweep strict("dichotomous Dodgson score = exact group-move search");
  detail::Sweep weak("dichotomous weakDodgson score = exact group-move search");
  detail::Sweep plan("dichotomous Dodgson move plans replay to their score");
  detail::Sweep young("dichotomous Young winners = argmax of exact Young scores");
  detail::Sweep mean("mean rule winners and score = exact (2,2)-Kemeny");
  detail::Sweep k22("(2,2)-Kemeny score = exact dichotomous consensus");
  detail::Sweep slater2("(2,2)-Slater score = exact dichotomous consensus");
  detail::Sweep slater3("(2,3)-Slater score = exact trichotomous consensus");
  detail::Sweep net("winner reduction (2,m)-Kemeny score = exact total-order consensus");
  detail::Sweep sl("winner reduction Slater score = exact total-order consensus");

  for (int i = 0; i < kSweepInstances; ++i) {
    const int m = uniform(rng, 2, 5);
    const int n = uniform(rng, 1, 9);
    const Election e = random_dichotomous(rng, m, n);
    const CandidateId p = uniform(rng, 0, m - 1);

    for (bool w : {false, true}) {
      const auto fast = dodgson_score_dichotomous(e, p, w);
      const auto exact = dodgson_score_exact(e, p, w, EditModel::group_moves);
      (w ? weak : strict).check(fast.score == exact.score, [&] { return detail::pair_text(fast.score, exact.score); });
      const auto cert = fast.certificate(p);
      const auto replayed = replay_certificate(e, w ? Rule::weak_dodgson : Rule::dodgson, p, cert);
      plan.check(replayed && *replayed == fast.score, [&] { return "plan does not replay"; });
    }

    const auto winners = young_winners_dichotomous(e);
    const auto oracle = detail::arg_best(m, true, [&](CandidateId c) { return young_score_exact(e, c, false).score; });
    young.check(winners == oracle, [&] { return detail::names(e, winners) + " vs " + detail::names(e, oracle); });

    const auto mr = mean_rule(e);
    const long long optimum = dichotomous_consensus_exact(e, 2, Objective::net_max, std::nullopt).score;
    const auto mean_oracle = detail::arg_best(m, true, [&](CandidateId c) {
      return dichotomous_consensus_exact(e, 2, Objective::net_max, c).score;
    });
    mean.check(mr.score == optimum && mr.winners == mean_oracle && consensus_score(e, mr.consensus, Objective::net_max) == optimum,
               [&] { return detail::names(e, mr.winners) + " vs " + detail::names(e, mean_oracle); });

    const auto k = k22_kemeny_score(e, p);
    const auto k_exact = dichotomous_consensus_exact(e, 2, Objective::net_max, p);
    k22.check(k.score == k_exact.score && consensus_score(e, k.order, Objective::net_max) == k.score,
              [&] { return detail::pair_text(k.score, k_exact.score); });

    for (int kk : {2, 3}) {
      const auto s = k2k_slater_score(e, p, kk);
      const auto s_exact = dichotomous_consensus_exact(e, kk, Objective::slater, p);
      (kk == 2 ? slater2 : slater3)
          .check(s.score == s_exact.score && s.order.is_kchotomous(kk) && s.order.group_of(p) == 0,
                 [&] { return detail::pair_text(s.score, s_exact.score); });
    }

    // Up to six candidates for the reduction sweeps.
    const int m6 = uniform(rng, 2, 6);
    const Election e6 = random_dichotomous(rng, m6, uniform(rng, 1, 9));
    const CandidateId p6 = uniform(rng, 0, m6 - 1);
    for (Objective obj : {Objective::net_max, Objective::slater}) {
      const auto fast = score_via_winner_reduction(e6, p6, obj);
      const auto exact = obj == Objective::slater ? slater_score_exact(e6, p6, std::nullopt)
                                                  : kemeny_score_exact(e6, p6, obj);
      (obj == Objective::net_max ? net : sl).check(fast.score == exact.score,
                                                    [&] { return detail::pair_text(fast.score, exact.score); });
    }
  }
  for (const auto* s : {&strict, &weak, &plan, &young, &mean, &k22, &slater2, &slater3, &net, &sl})
    r.lines.push_back(s->line("3a"));
  return r;
}

inline Report criterion_3b() {
  Report r;
  Rng rng(0x3b01);
  detail::Sweep dodgson("single-peaked Dodgson score = exact swap search");
  detail::Sweep weak("single-peaked weakDodgson score = exact swap search");
  detail::Sweep plan("single-peaked swap plans replay without wasted swaps");
  detail::Sweep young("single-peaked Young score = exact subset search");
  detail::Sweep strong("single-peaked strongYoung score = exact subset search");
  detail::Sweep subset("single-peaked Young certificates replay to their score");

  for (int i = 0; i < kSweepInstances; ++i) {
    const int m = uniform(rng, 2, 5);
    const int n = uniform(rng, 1, 5);
    const Election e = random_single_peaked(rng, m, n);
    const CandidateId p = uniform(rng, 0, m - 1);
    for (bool w : {false, true}) {
      const auto fast = sp_dodgson_score(e, *e.axis(), p, w);
      const auto exact = dodgson_score_exact(e, p, w);
      (w ? weak : dodgson).check(fast.score == exact.score, [&] { return detail::pair_text(fast.score, exact.score); });

      const auto cert = fast.certificate(p);
      const auto replayed = replay_certificate(e, w ? Rule::weak_dodgson : Rule::dodgson, p, cert);
      const int h = Threshold::of(n, w).value;
      const MajorityTable before = majority_table(e);
      const MajorityTable after = majority_table(apply_edits(e, cert).first);
      bool tight = true;
      for (CandidateId c = 0; c < m; ++c)
        if (c != p && before(c, p) > h) tight = tight && after(c, p) == h;
      plan.check(replayed && *replayed == fast.score && tight, [&] { return "plan wastes swaps or does not win"; });
    }

    const int n2 = uniform(rng, 1, 14);
    const Election e2 = random_single_peaked(rng, m, n2);
    const CandidateId p2 = uniform(rng, 0, m - 1);
    for (bool s : {false, true}) {
      const auto fast = sp_young_score(e2, *e2.axis(), p2, s);
      const auto exact = young_score_exact(e2, p2, s);
      (s ? strong : young).check(fast.score == exact.score, [&] { return detail::pair_text(fast.score, exact.score); });
      const ScoreCertificate cert = s && fast.score == 0 ? ScoreCertificate{} : ScoreCertificate{fast.certificate};
      const auto replayed = replay_certificate(e2, s ? Rule::strong_young : Rule::young, p2, cert);
      subset.check(replayed && *replayed == fast.score, [&] { return "certificate does not replay"; });
    }
  }
  for (const auto* s : {&dodgson, &weak, &plan, &young, &strong, &subset}) r.lines.push_back(s->line("3b"));
  return r;
}

inline Report criterion_3c() {
  Report r;
  Rng rng(0x3c01);
  detail::Sweep young("single-crossing Young score = exact subset search");
  detail::Sweep strong("single-crossing strongYoung score = exact subset search");
  detail::Sweep subset("single-crossing Young certificates replay to their score");
  detail::Sweep dodgson("single-crossing Dodgson winners = argmin of exact Dodgson scores");
  detail::Sweep kemeny("winner reduction Kemeny score = exact total-order consensus");

  for (int i = 0; i < kSweepInstances; ++i) {
    const int m = uniform(rng, 2, 4);
    const int n = uniform(rng, 1, 14);
    const Election e = random_single_crossing(rng, m, n);
    const CandidateId p = uniform(rng, 0, m - 1);
    for (bool s : {false, true}) {
      const auto fast = s ? sc_strongyoung_score(e, p) : sc_young_score(e, p);
      const auto exact = young_score_exact(e, p, s);
      (s ? strong : young).check(fast.score == exact.score, [&] { return detail::pair_text(fast.score, exact.score); });
      const ScoreCertificate cert = s && fast.score == 0 ? ScoreCertificate{} : ScoreCertificate{fast.certificate};
      const auto replayed = replay_certificate(e, s ? Rule::strong_young : Rule::young, p, cert);
      subset.check(replayed && *replayed == fast.score, [&] { return "certificate does not replay"; });
    }

    const auto fast_k = score_via_winner_reduction(e, p, Objective::kemeny_min);
    const auto exact_k = kemeny_score_exact(e, p, Objective::kemeny_min);
    kemeny.check(fast_k.score == exact_k.score, [&] { return detail::pair_text(fast_k.score, exact_k.score); });

    const Election small = random_single_crossing(rng, m, uniform(rng, 1, 6));
    const auto fast_w = sc_dodgson_winners(small);
    const auto oracle = detail::arg_best(m, false, [&](CandidateId c) { return dodgson_score_exact(small, c, false).score; });
    bool scores_ok = true;
    for (std::size_t j = 0; j < fast_w.winners.size(); ++j)
      scores_ok = scores_ok && fast_w.scores[j] == dodgson_score_exact(small, fast_w.winners[j], false).score;
    dodgson.check(fast_w.winners == oracle && scores_ok,
                  [&] { return detail::names(small, fast_w.winners) + " vs " + detail::names(small, oracle); });
  }
  for (const auto* s : {&young, &strong, &subset, &kemeny, &dodgson}) r.lines.push_back(s->line("3c"));
  return r;
}

inline Report criterion_3() {
  using namespace std::chrono_literals;
  detail::Stopwatch clock;
  Report r = criterion_3a();
  r.append(criterion_3b());
  r.append(criterion_3c());
  r.lines.push_back(detail::time_line("3", "oracle sweeps", clock, 600s));
  return r;
}

// Contribution of the unordered pairs {a,c} and {b,c} under order and >_m.
inline std::string slater_cell(const MajorityRelation& rel, const Ballot& order) {
  constexpr CandidateId a = 0, b = 1, c = 2;
  return std::to_string(slater_pair_contribution(order, rel, a, c)) + "+" +
         std::to_string(slater_pair_contribution(order, rel, b, c));
}

inline Ballot swap_candidates(const Ballot& order, CandidateId x, CandidateId y) {
  auto groups = order.groups();
  for (auto& g : groups)
    for (auto& c : g) c = c == x ? y : c == y ? x : c;
  return Ballot(std::move(groups), order.num_candidates());
}

// The 25 case distinctions for three candidates a, b, c with a >_m b and b > a.
// Each cell lists the {a,c}+{b,c} contributions for the order and for the
// order with a and b swapped.
inline const std::array<std::array<const char*, 5>, 5>& slater_case_table() {
  static const std::array<std::array<const char*, 5>, 5> table{{
      {"2+2;2+2", "2+1;1+2", "2+0;0+2", "1+0;0+1", "0+0;0+0"},
      {"1+2;1+2", "1+1;2+2", "1+0;1+2", "2+0;1+1", "1+0;1+0"},
      {"0+2;0+2", "0+1;1+2", "0+0;2+2", "1+0;2+1", "2+0;2+0"},
      {"0+1;0+1", "0+2;1+1", "0+1;2+1", "1+1;2+2", "2+1;2+1"},
      {"0+1;0+0", "0+1;1+0", "0+2;2+0", "1+2;2+1", "2+2;2+2"},
  }};
  return table;
}

inline Report criterion_4() {
  using namespace std::chrono_literals;
  Report r;
  detail::Stopwatch clock;
  long long cases = 0;
  std::optional<std::string> counterexample;
  for (int m = 2; m <= 4; ++m) {
    std::vector<Ballot> orders;
    for_each_weak_order(m, m, std::nullopt, 1'000'000, [&](Ballot b) { orders.push_back(std::move(b)); });
    const auto names = letter_names(m);
    const Election roster(names, {});
    for (const auto& majority : orders) {
      const MajorityRelation rel = MajorityRelation::from_weak_order(majority);
      for (const auto& order : orders)
        for (CandidateId a = 0; a < m; ++a)
          for (CandidateId b = 0; b < m; ++b) {
            if (!rel(a, b) || !order.prefers(b, a)) continue;
            ++cases;
            const long long before = slater_agreement(order, rel);
            const long long after = slater_agreement(swap_candidates(order, a, b), rel);
            if (after <= before && !counterexample)
              counterexample = "majority" + format_ballot(roster, majority) + " order" + format_ballot(roster, order);
          }
    }
  }
  r.lines.push_back({"4", "swapping an inverted majority pair raises the Slater score in all " + std::to_string(cases) +
                              " cases on up to 4 candidates" + (counterexample ? " (counterexample " + *counterexample + ")" : ""),
                     !counterexample && cases > 0});

  // rows: >_m ; columns: > (with b > a); ids a=0 b=1 c=2
  const std::array<std::vector<std::vector<CandidateId>>, 5> rows{{
      {{2}, {0}, {1}}, {{0, 2}, {1}}, {{0}, {2}, {1}}, {{0}, {1, 2}}, {{0}, {1}, {2}}}};
  const std::array<std::vector<std::vector<CandidateId>>, 5> cols{{
      {{2}, {1}, {0}}, {{1, 2}, {0}}, {{1}, {2}, {0}}, {{1}, {0, 2}}, {{1}, {0}, {2}}}};
  int matching = 0, never_worse = 0;
  std::string mismatches;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const MajorityRelation rel = MajorityRelation::from_weak_order(Ballot(rows[i], 3));
      const Ballot order(cols[j], 3);
      const Ballot swapped = swap_candidates(order, 0, 1);
      const std::string cell = slater_cell(rel, order) + ";" + slater_cell(rel, swapped);
      if (cell == slater_case_table()[i][j]) {
        ++matching;
      } else {
        mismatches += " row " + std::to_string(i + 1) + " column " + std::to_string(j + 1) + " printed " +
                      slater_case_table()[i][j] + " computed " + cell + ";";
      }
      auto pairs_sum = [&](const Ballot& o) {
        return slater_pair_contribution(o, rel, 0, 2) + slater_pair_contribution(o, rel, 1, 2);
      };
      never_worse += pairs_sum(swapped) >= pairs_sum(order);
    }
  r.lines.push_back({"4", "case table reproduced in " + std::to_string(matching) + " of 25 cells" +
                              (mismatches.empty() ? "" : " (" + mismatches.substr(1, mismatches.size() - 2) + ")"),
                     matching == 25});
  r.lines.push_back({"4", "computed {a,c}+{b,c} contribution never drops after the swap in " +
                              std::to_string(never_worse) + " of 25 cells",
                     never_worse == 25});
  r.lines.push_back(detail::time_line("4", "swap lemma", clock, 60s));
  return r;
}

inline Report criterion_5() {
  using namespace std::chrono_literals;
  Report r;
  detail::Stopwatch clock;
  Rng rng(0x5001);

  detail::Sweep single("youngscore and strongyoungscore claims hold under full verification");
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, uniform(rng, 1, 6));
    for (ForgeKind kind : {ForgeKind::youngscore, ForgeKind::strongyoungscore}) {
      const auto report = verify_forge(forge(kind, g), VerifyMode::full);
      single.check(report.ok(), [&] { return std::string(to_string(kind)) + " on " + serialize_graph(g); });
    }
  }
  r.lines.push_back(single.line("5", 400));

  detail::Sweep pairs("ranking and strong-winner claims hold under full verification");
  detail::Sweep dominance("optimal Young subsets for p keep every Type III and IV voter");
  detail::Sweep tri("trichotomous winner hints certify the claimed lower bounds");
  for (int i = 0; i < 100; ++i) {
    const int nv = uniform(rng, 2, 4);
    const Graph g = random_graph(rng, nv, 1);
    const Graph h = random_graph(rng, nv, 1);
    for (ForgeKind kind : {ForgeKind::youngranking, ForgeKind::strongyoungranking, ForgeKind::strongyoungwinner}) {
      const auto inst = forge(kind, g, h);
      pairs.check(verify_forge(inst, VerifyMode::full).ok(), [&] { return std::string(to_string(kind)); });
      if (kind == ForgeKind::youngranking) {
        const auto best = young_score_exact(inst.election, inst.election.id("p"), false);
        bool keeps = true;
        for (VoterIndex v = 0; v < inst.election.num_voters(); ++v)
          if (inst.voter_types[v] == "III" || inst.voter_types[v] == "IV")
            keeps = keeps && std::binary_search(best.certificate.voters.begin(), best.certificate.voters.end(), v);
        dominance.check(keeps, [] { return "a Type III/IV voter is missing"; });
      }
    }
    const auto tri_inst = forge(ForgeKind::trichotomous_youngwinner, g, h);
    tri.check(verify_forge(tri_inst, VerifyMode::witness_only).ok(), [] { return "witness replay failed"; });
  }
  r.lines.push_back(pairs.line("5", 300));
  r.lines.push_back(dominance.line("5", 100));
  r.lines.push_back(tri.line("5", 100));

  Graph edge(2);
  edge.add_edge(0, 1);
  const auto inst = forge(ForgeKind::trichotomous_youngwinner, edge, edge);
  const auto report = verify_forge(inst, VerifyMode::witness_only);
  bool certified = false;
  for (const auto& c : report.checks)
    if (c.claim.rfind("young(p) =", 0) == 0) certified = c.status == CheckStatus::holds && c.observed && *c.observed == 29;
  r.lines.push_back({"5", "two single-edge graphs give " + std::to_string(inst.election.num_voters()) +
                              " trichotomous ballots and a certified Young lower bound of 29 for p",
                     inst.election.num_voters() == 30 && check_kchotomous(inst.election, 3).holds && certified &&
                         report.ok()});
  r.lines.push_back(detail::time_line("5", "forge verification", clock, 600s));
  return r;
}

inline ForgedInstance drop_last_ballot(ForgedInstance inst) {
  auto ballots = inst.election.ballots();
  ballots.pop_back();
  inst.election = Election(inst.election.candidates(), std::move(ballots), inst.election.axis());
  inst.voter_types.pop_back();
  return inst;
}

inline Report criterion_6() {
  Report r;
  Rng rng(0x6001);

  detail::Sweep corrupted("forged instances with one ballot dropped are flagged");
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, uniform(rng, 1, 6));
    for (ForgeKind kind : {ForgeKind::youngscore, ForgeKind::strongyoungscore}) {
      const auto report = verify_forge(drop_last_ballot(forge(kind, g)), VerifyMode::full);
      corrupted.check(!report.ok(), [&] { return std::string(to_string(kind)) + " not flagged"; });
    }
    const int nv = uniform(rng, 2, 4);
    const Graph g2 = random_graph(rng, nv, 1), h2 = random_graph(rng, nv, 1);
    const auto ranking = verify_forge(drop_last_ballot(forge(ForgeKind::youngranking, g2, h2)), VerifyMode::full);
    corrupted.check(!ranking.ok(), [] { return "youngranking not flagged"; });
    const auto tri =
        verify_forge(drop_last_ballot(forge(ForgeKind::trichotomous_youngwinner, g2, h2)), VerifyMode::witness_only);
    corrupted.check(!tri.ok(), [] { return "trichotomous-youngwinner not flagged"; });
  }
  r.lines.push_back(corrupted.line("6", 200));

  detail::Sweep sp("fast single-peaked rules reject non-single-peaked input");
  detail::Sweep sc("fast single-crossing rules reject non-single-crossing input");
  detail::Sweep dich("fast dichotomous rules reject non-dichotomous input");
  while (sp.instances() < 100) {
    const int m = uniform(rng, 3, 5);
    const Election e = random_total_orders(rng, m, uniform(rng, 2, 6));
    std::vector<CandidateId> axis(static_cast<std::size_t>(m));
    std::iota(axis.begin(), axis.end(), 0);
    if (check_single_peaked(e, axis).holds) continue;
    const CandidateId p = uniform(rng, 0, m - 1);
    sp.check(detail::throws_domain_violation([&] { sp_dodgson_score(e, axis, p, false); }) &&
                 detail::throws_domain_violation([&] { sp_young_score(e, axis, p, false); }),
             [] { return "accepted"; });
  }
  while (sc.instances() < 100) {
    const int m = uniform(rng, 3, 5);
    const Election e = random_total_orders(rng, m, uniform(rng, 3, 6));
    if (check_single_crossing(e).holds) continue;
    const CandidateId p = uniform(rng, 0, m - 1);
    sc.check(detail::throws_domain_violation([&] { sc_young_score(e, p); }) &&
                 detail::throws_domain_violation([&] { sc_strongyoung_score(e, p); }) &&
                 detail::throws_domain_violation([&] { sc_dodgson_winners(e); }),
             [] { return "accepted"; });
  }
  while (dich.instances() < 100) {
    const int m = uniform(rng, 3, 5);
    const Election e = random_total_orders(rng, m, uniform(rng, 1, 6));
    const CandidateId p = uniform(rng, 0, m - 1);
    dich.check(detail::throws_domain_violation([&] { dodgson_score_dichotomous(e, p, false); }) &&
                   detail::throws_domain_violation([&] { young_winners_dichotomous(e); }) &&
                   detail::throws_domain_violation([&] { mean_rule(e); }) &&
                   detail::throws_domain_violation([&] { k22_kemeny_score(e, p); }) &&
                   detail::throws_domain_violation([&] { k2k_slater_score(e, p, 2); }),
               [] { return "accepted"; });
  }
  r.lines.push_back(sp.line("6", 100));
  r.lines.push_back(sc.line("6", 100));
  r.lines.push_back(dich.line("6", 100));

  const Election t = fixtures::temperature_votes();
  const auto verdict = check_single_crossing(t);
  const bool sp_holds = check_single_peaked(t, *t.axis()).holds;
  bool every_order_fails = true;
  std::vector<Ballot> ballots = t.ballots();
  std::sort(ballots.begin(), ballots.end(), [](const Ballot& x, const Ballot& y) { return x.order() < y.order(); });
  do {
    every_order_fails = every_order_fails && !check_single_crossing(Election(t.candidates(), ballots)).holds;
  } while (std::next_permutation(ballots.begin(), ballots.end(),
                                 [](const Ballot& x, const Ballot& y) { return x.order() < y.order(); }));
  const bool rejected = detail::throws_domain_violation([&] { sc_young_score(t, 0); });
  r.lines.push_back({"6", "temperature votes are single-peaked but not single-crossing in any voter order, witness " +
                              verdict.describe(t),
                     sp_holds && !verdict.holds && every_order_fails && rejected});
  return r;
}

inline Report run_criteria_1_to_6() {
  Report r = criterion_1();
  r.append(criterion_2());
  r.append(criterion_3());
  r.append(criterion_4());
  r.append(criterion_5());
  r.append(criterion_6());
  return r;
}

// Runs criteria 1-6 twice and compares the rendered reports.
inline Report run_all() {
  Report first = run_criteria_1_to_6();
  const Report second = run_criteria_1_to_6();
  first.lines.push_back({"7", "two runs of criteria 1-6 produce byte-identical reports",
                         first.render() == second.render()});
  return first;
}

}  // namespace vscore::selftest
