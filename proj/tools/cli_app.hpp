#pragma once

// The vscore command line, callable in-process for tests.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vscore/vscore.hpp"

namespace vscore::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainViolation = 1,
  kParseError = 2,
  kBudgetExceeded = 3,
  kSelftestFailure = 4,
};

enum class Method { automatic, fast, exact };
enum class Domain { none, dichotomous, single_peaked, single_crossing, kchotomous };
enum class Format { text, json };

struct RunConfig {
  std::string rule = "";
  std::string candidate;
  Method method = Method::automatic;
  Domain domain = Domain::none;
  int k = 2;
  OracleBudget budget;
  Format format = Format::text;
  std::string input;
};

// Raised for inputs the command cannot act on (bad flags, missing axis, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw UsageError("cannot write " + path);
}

inline const char* to_string(Domain d) {
  switch (d) {
    case Domain::none: return "none";
    case Domain::dichotomous: return "dichotomous";
    case Domain::single_peaked: return "single-peaked";
    case Domain::single_crossing: return "single-crossing";
    case Domain::kchotomous: return "k-chotomous";
  }
  return "?";
}

inline DomainVerdict check_domain(const Election& e, Domain d, int k) {
  switch (d) {
    case Domain::none: return {};
    case Domain::dichotomous: return check_kchotomous(e, 2);
    case Domain::kchotomous: return check_kchotomous(e, k);
    case Domain::single_peaked:
      if (!e.axis()) throw UsageError("single-peaked checks need an axis line in the election file");
      return check_single_peaked(e, *e.axis());
    case Domain::single_crossing: return check_single_crossing(e);
  }
  return {};
}

struct Scored {
  long long score = 0;
  ScoreCertificate certificate;
  bool fast = false;
};

inline ScoreCertificate young_certificate(const YoungResult& r, bool strong) {
  if (strong && r.score == 0) return {};
  return r.certificate;
}

inline bool fast_score_supported(Rule rule, Domain d) {
  switch (rule) {
    case Rule::young:
    case Rule::strong_young: return d == Domain::single_peaked || d == Domain::single_crossing;
    case Rule::dodgson:
    case Rule::weak_dodgson: return d == Domain::dichotomous || d == Domain::single_peaked;
    case Rule::kemeny: return d == Domain::single_crossing;
    case Rule::slater: return d == Domain::dichotomous || d == Domain::single_crossing;
    case Rule::kemeny_2m:
    case Rule::kemeny_22:
    case Rule::slater_2k: return d == Domain::dichotomous;
  }
  return false;
}

inline Scored fast_score(const Election& e, Rule rule, CandidateId p, Domain d, int k) {
  const bool strong = rule == Rule::strong_young;
  const bool weak = rule == Rule::weak_dodgson;
  switch (rule) {
    case Rule::young:
    case Rule::strong_young: {
      const YoungResult r = d == Domain::single_peaked ? sp_young_score(e, *e.axis(), p, strong)
                            : strong                   ? sc_strongyoung_score(e, p)
                                                       : sc_young_score(e, p);
      return {r.score, young_certificate(r, strong), true};
    }
    case Rule::dodgson:
    case Rule::weak_dodgson: {
      const FastDodgson r =
          d == Domain::dichotomous ? dodgson_score_dichotomous(e, p, weak) : sp_dodgson_score(e, *e.axis(), p, weak);
      return {r.score, r.certificate(p), true};
    }
    case Rule::kemeny_22: {
      auto r = k22_kemeny_score(e, p);
      return {r.score, ConsensusOrder{std::move(r.order)}, true};
    }
    case Rule::slater_2k: {
      auto r = k2k_slater_score(e, p, k);
      return {r.score, ConsensusOrder{std::move(r.order)}, true};
    }
    default: {
      auto r = score_via_winner_reduction(e, p, objective_of(rule));
      return {r.score, ConsensusOrder{std::move(r.order)}, true};
    }
  }
}

inline Scored exact_score(const Election& e, Rule rule, CandidateId p, Domain d, int k, const OracleBudget& budget) {
  switch (rule) {
    case Rule::young:
    case Rule::strong_young: {
      const bool strong = rule == Rule::strong_young;
      const YoungResult r = young_score_exact(e, p, strong, budget);
      return {r.score, young_certificate(r, strong), false};
    }
    case Rule::dodgson:
    case Rule::weak_dodgson: {
      const EditModel model = d == Domain::dichotomous ? EditModel::group_moves : EditModel::automatic;
      auto r = dodgson_score_exact(e, p, rule == Rule::weak_dodgson, model, budget);
      return {r.score, std::move(r.certificate), false};
    }
    case Rule::kemeny_22: {
      auto r = dichotomous_consensus_exact(e, 2, Objective::net_max, p, budget);
      return {r.score, ConsensusOrder{std::move(r.order)}, false};
    }
    case Rule::slater_2k: {
      auto r = slater_score_exact(e, p, k, budget);
      return {r.score, ConsensusOrder{std::move(r.order)}, false};
    }
    case Rule::slater: {
      auto r = slater_score_exact(e, p, std::nullopt, budget);
      return {r.score, ConsensusOrder{std::move(r.order)}, false};
    }
    default: {
      auto r = kemeny_score_exact(e, p, objective_of(rule), budget);
      return {r.score, ConsensusOrder{std::move(r.order)}, false};
    }
  }
}

inline bool use_fast(Rule rule, const RunConfig& cfg, bool supported) {
  if (cfg.method == Method::fast && !supported)
    throw UsageError(std::string("no fast algorithm for ") + vscore::to_string(rule) + " on domain " +
                     to_string(cfg.domain));
  return cfg.method == Method::fast || (cfg.method == Method::automatic && supported);
}

inline Rule parse_rule(const std::string& name) {
  const auto rule = rule_from_string(name);
  if (!rule) throw UsageError("unknown rule '" + name + "'");
  return *rule;
}

inline Election load_election(const RunConfig& cfg) {
  Election e = parse_election(read_file(cfg.input));
  const auto verdict = check_domain(e, cfg.domain, cfg.k);
  if (!verdict.holds)
    throw Error(ErrorKind::domain_violation,
                std::string("election is not ") + to_string(cfg.domain) + ": " + verdict.describe(e));
  return e;
}

inline int cmd_score(const RunConfig& cfg, std::ostream& out) {
  const Rule rule = parse_rule(cfg.rule);
  const Election e = load_election(cfg);
  const auto p = e.find(cfg.candidate);
  if (!p) throw UsageError("unknown candidate '" + cfg.candidate + "'");
  const bool fast = use_fast(rule, cfg, fast_score_supported(rule, cfg.domain));
  const Scored s = fast ? fast_score(e, rule, *p, cfg.domain, cfg.k)
                        : exact_score(e, rule, *p, cfg.domain, cfg.k, cfg.budget);
  const char* method = s.fast ? "fast" : "exact";
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["rule"] = vscore::to_string(rule);
    j["candidate"] = cfg.candidate;
    j["score"] = s.score;
    j["method"] = method;
    j["certificate"] = certificate_json(e, s.certificate);
    out << j.dump() << "\n";
  } else {
    out << "rule=" << vscore::to_string(rule) << " candidate=" << cfg.candidate << " score=" << s.score
        << " method=" << method << "\n"
        << format_certificate(e, s.certificate) << "\n";
  }
  return kOk;
}

inline bool fast_winner_supported(Rule rule, Domain d) {
  switch (rule) {
    case Rule::young: return d == Domain::dichotomous;
    case Rule::dodgson: return d == Domain::single_crossing;
    case Rule::kemeny: return d == Domain::single_crossing;
    case Rule::kemeny_2m:
    case Rule::kemeny_22: return d == Domain::dichotomous;
    case Rule::slater: return d == Domain::dichotomous || d == Domain::single_crossing;
    default: return false;
  }
}

inline std::vector<CandidateId> fast_winners(const Election& e, Rule rule) {
  switch (rule) {
    case Rule::young: return young_winners_dichotomous(e);
    case Rule::dodgson: return sc_dodgson_winners(e).winners;
    case Rule::kemeny_22: return mean_rule(e).winners;
    case Rule::kemeny_2m: return transitive_majority_winners(e, TransitiveRule::kemeny_2m);
    case Rule::kemeny: return transitive_majority_winners(e, TransitiveRule::kemeny_total);
    default: return transitive_majority_winners(e, TransitiveRule::slater_total);
  }
}

inline int cmd_winner(const RunConfig& cfg, std::ostream& out) {
  const Rule rule = parse_rule(cfg.rule);
  const Election e = load_election(cfg);
  const bool fast = use_fast(rule, cfg, fast_winner_supported(rule, cfg.domain));
  std::vector<CandidateId> winners;
  if (fast) {
    winners = fast_winners(e, rule);
  } else {
    long long best = 0;
    for (CandidateId c = 0; c < e.num_candidates(); ++c) {
      const long long s = exact_score(e, rule, c, cfg.domain, cfg.k, cfg.budget).score;
      if (winners.empty() || (maximizes(rule) ? s > best : s < best)) {
        winners = {c};
        best = s;
      } else if (s == best) {
        winners.push_back(c);
      }
    }
  }
  std::sort(winners.begin(), winners.end());
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["rule"] = vscore::to_string(rule);
    auto& names = j["winners"] = nlohmann::ordered_json::array();
    for (CandidateId c : winners) names.push_back(e.name(c));
    j["method"] = fast ? "fast" : "exact";
    out << j.dump() << "\n";
  } else {
    out << "rule=" << vscore::to_string(rule) << " winners=";
    for (std::size_t i = 0; i < winners.size(); ++i) out << (i ? "," : "") << e.name(winners[i]);
    out << " method=" << (fast ? "fast" : "exact") << "\n";
  }
  return kOk;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.domain == Domain::none) throw UsageError("check needs --domain");
  const Election e = parse_election(read_file(cfg.input));
  const DomainVerdict v = check_domain(e, cfg.domain, cfg.k);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["domain"] = to_string(cfg.domain);
    j["holds"] = v.holds;
    if (!v.holds) j["violation"] = v.describe(e);
    out << j.dump() << "\n";
  } else {
    out << "domain=" << to_string(cfg.domain) << " holds=" << (v.holds ? "yes" : "no");
    if (!v.holds) out << " violation " << v.describe(e);
    out << "\n";
  }
  return v.holds ? kOk : kDomainViolation;
}

struct ForgeConfig {
  std::string kind;
  std::string graph;
  std::string graph2;
  std::string output;
  std::string mode = "full";
};

inline void print_claims(const ForgedInstance& inst, std::ostream& out) {
  for (const Claim& c : inst.claims) out << "claim " << describe(c) << " value=" << c.value << "\n";
}

inline int cmd_forge(const ForgeConfig& fc, std::ostream& out) {
  const auto kind = forge_kind_from_string(fc.kind);
  if (!kind) throw UsageError("unknown forge kind '" + fc.kind + "'");
  const Graph g = parse_graph(read_file(fc.graph));
  std::optional<Graph> h;
  if (needs_second_graph(*kind)) {
    if (fc.graph2.empty()) throw UsageError(fc.kind + " needs --graph2");
    h = parse_graph(read_file(fc.graph2));
  }
  const ForgedInstance inst = forge(*kind, g, h);
  write_file(fc.output + ".elx", serialize_election(inst.election));
  write_file(fc.output + ".claims.json", claims_sidecar(inst));
  out << "kind=" << fc.kind << " voters=" << inst.election.num_voters()
      << " candidates=" << inst.election.num_candidates() << "\n";
  print_claims(inst, out);
  return kOk;
}

inline int cmd_verify_forge(const ForgeConfig& fc, const RunConfig& cfg, std::ostream& out) {
  VerifyMode mode;
  if (fc.mode == "full")
    mode = VerifyMode::full;
  else if (fc.mode == "witness-only")
    mode = VerifyMode::witness_only;
  else
    throw UsageError("unknown verification mode '" + fc.mode + "'");
  const ForgedInstance inst =
      read_forged_instance(read_file(fc.output + ".elx"), read_file(fc.output + ".claims.json"));
  const ForgeReport report = verify_forge(inst, mode, cfg.budget);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["kind"] = vscore::to_string(inst.kind);
    j["mode"] = fc.mode;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json cj;
      cj["claim"] = c.claim;
      cj["status"] = vscore::to_string(c.status);
      cj["expected"] = c.expected;
      if (c.observed) cj["observed"] = *c.observed;
      if (!c.note.empty()) cj["note"] = c.note;
      checks.push_back(std::move(cj));
    }
    j["ok"] = report.ok();
    out << j.dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      out << vscore::to_string(c.status) << " " << c.claim << " expected=" << c.expected;
      if (c.observed) out << " observed=" << *c.observed;
      if (!c.note.empty()) out << " (" << c.note << ")";
      out << "\n";
    }
    out << "verdict=" << (report.ok() ? "ok" : "mismatch") << "\n";
  }
  return report.ok() ? kOk : kDomainViolation;
}

inline int cmd_selftest(std::ostream& out) {
  const selftest::Report report = selftest::run_all();
  out << report.render();
  out << "selftest " << (report.pass() ? "passed" : "failed") << "\n";
  return report.pass() ? kOk : kSelftestFailure;
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain_violation:
    case ErrorKind::unsupported_ballot_kind: return kDomainViolation;
    case ErrorKind::budget_exceeded: return kBudgetExceeded;
    default: return kParseError;
  }
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voting-rule scores and winners with certificates"};
  app.name("vscore");
  app.require_subcommand(1);

  RunConfig cfg;
  ForgeConfig fc;
  const std::map<std::string, Method> methods{
      {"auto", Method::automatic}, {"fast", Method::fast}, {"exact", Method::exact}};
  const std::map<std::string, Domain> domains{{"none", Domain::none},
                                              {"dichotomous", Domain::dichotomous},
                                              {"single-peaked", Domain::single_peaked},
                                              {"single-crossing", Domain::single_crossing},
                                              {"k-chotomous", Domain::kchotomous}};
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

  auto common = [&](CLI::App* sub, bool with_rule) {
    if (with_rule) {
      sub->add_option("--rule", cfg.rule, "young, strong-young, dodgson, weak-dodgson, kemeny, kemeny-2m, "
                                          "kemeny-22, slater or slater-2k")
          ->required();
      sub->add_option("--method", cfg.method, "auto, fast or exact")
          ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    }
    sub->add_option("--domain", cfg.domain, "asserted domain, validated before scoring")
        ->transform(CLI::CheckedTransformer(domains, CLI::ignore_case));
    sub->add_option("--k", cfg.k, "group bound for slater-2k and k-chotomous")->check(CLI::Range(1, 64));
    sub->add_option("--max-voters", cfg.budget.max_voters, "oracle voter budget");
    sub->add_option("--max-candidates", cfg.budget.max_candidates, "oracle candidate budget");
    sub->add_option("--max-states", cfg.budget.max_states, "oracle state budget");
    sub->add_option("--format", cfg.format, "text or json")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("election", cfg.input, ".elx file")->required();
  };

  auto* score = app.add_subcommand("score", "score one candidate");
  common(score, true);
  score->add_option("--candidate", cfg.candidate, "candidate name")->required();
  auto* winner = app.add_subcommand("winner", "list the winners in roster order");
  common(winner, true);
  auto* check = app.add_subcommand("check", "validate a domain and print a violation witness");
  common(check, false);

  auto* forge_cmd = app.add_subcommand("forge", "build a hardness instance from graphs");
  forge_cmd->add_option("--kind", fc.kind, "youngscore, strongyoungscore, youngranking, strongyoungranking, "
                                           "strongyoungwinner or trichotomous-youngwinner")
      ->required();
  forge_cmd->add_option("--graph", fc.graph, "first .graph file")->required();
  forge_cmd->add_option("--graph2", fc.graph2, "second .graph file");
  forge_cmd->add_option("--output", fc.output, "output base name; writes <base>.elx and <base>.claims.json")
      ->required();

  auto* verify = app.add_subcommand("verify-forge", "check the claims of a forged instance");
  verify->add_option("--mode", fc.mode, "full or witness-only");
  verify->add_option("--max-voters", cfg.budget.max_voters, "oracle voter budget");
  verify->add_option("--format", cfg.format, "text or json")->transform(CLI::CheckedTransformer(formats));
  verify->add_option("base", fc.output, "base name of <base>.elx and <base>.claims.json")->required();

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (score->parsed()) return cmd_score(cfg, out);
    if (winner->parsed()) return cmd_winner(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (forge_cmd->parsed()) return cmd_forge(fc, out);
    if (verify->parsed()) return cmd_verify_forge(fc, cfg, out);
    if (self->parsed()) return cmd_selftest(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kParseError;
}

}  // namespace vscore::cli
