#pragma once

// .elx election files, .graph files, certificate text/JSON and the claims
// sidecar written next to forged elections.

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vscore/ballot.hpp"
#include "vscore/certificate.hpp"
#include "vscore/forge.hpp"

namespace vscore {

namespace detail {

struct Token {
  std::string text;
  int column = 1;  // 1-based
};

// Splits on blanks, keeping '|' as its own token.
inline std::vector<Token> tokenize(std::string_view line, int start) {
  std::vector<Token> out;
  std::size_t i = static_cast<std::size_t>(start);
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
    } else if (ch == '|') {
      out.push_back({"|", static_cast<int>(i) + 1});
      ++i;
    } else {
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '|') ++i;
      out.push_back({std::string(line.substr(begin, i - begin)), static_cast<int>(begin) + 1});
    }
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

inline std::size_t first_nonblank(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

inline int parse_count(const std::string& digits, int line, int column) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, column, "expected a positive integer, got '" + digits + "'");
  const int value = std::stoi(digits);
  if (value < 1) throw ParseError(line, column, "count must be positive");
  return value;
}

}  // namespace detail

// Grammar: `candidates:` first, then `vote:` / `vote[c]:` ballots with groups
// separated by `|`, and at most one `axis:` line. `#` starts a comment.
inline Election parse_election(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, CandidateId> ids;
  std::vector<Ballot> ballots;
  std::optional<std::vector<CandidateId>> axis;
  bool have_candidates = false;

  const auto lines = detail::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string_view line = detail::strip_comment(lines[li]);
    if (detail::blank(line)) continue;
    const std::size_t at = detail::first_nonblank(line);
    const auto colon = line.find(':', at);
    if (colon == std::string_view::npos) throw ParseError(line_no, static_cast<int>(at) + 1, "expected a directive");
    const std::string directive(line.substr(at, colon - at));
    const auto tokens = detail::tokenize(line, static_cast<int>(colon) + 1);
    const int end_column = static_cast<int>(line.size()) + 1;

    auto lookup = [&](const detail::Token& t) {
      if (t.text == "|") throw ParseError(line_no, t.column, "unexpected '|'");
      const auto it = ids.find(t.text);
      if (it == ids.end()) throw ParseError(line_no, t.column, "unknown candidate '" + t.text + "'");
      return it->second;
    };

    if (directive == "candidates") {
      if (have_candidates) throw ParseError(line_no, static_cast<int>(at) + 1, "second candidates line");
      if (tokens.empty()) throw ParseError(line_no, end_column, "empty candidate list");
      for (const auto& t : tokens) {
        if (!valid_candidate_name(t.text)) throw ParseError(line_no, t.column, "invalid candidate name '" + t.text + "'");
        if (!ids.emplace(t.text, static_cast<CandidateId>(names.size())).second)
          throw ParseError(line_no, t.column, "duplicate candidate '" + t.text + "'");
        names.push_back(t.text);
      }
      have_candidates = true;
      continue;
    }
    if (!have_candidates) throw ParseError(line_no, static_cast<int>(at) + 1, "the candidates line must come first");
    const int m = static_cast<int>(names.size());

    if (directive == "axis") {
      if (axis) throw ParseError(line_no, static_cast<int>(at) + 1, "second axis line");
      std::vector<CandidateId> order;
      std::vector<char> seen(static_cast<std::size_t>(m), 0);
      for (const auto& t : tokens) {
        const CandidateId c = lookup(t);
        if (seen[c]) throw ParseError(line_no, t.column, "duplicate candidate '" + t.text + "' on axis");
        seen[c] = 1;
        order.push_back(c);
      }
      for (CandidateId c = 0; c < m; ++c)
        if (!seen[c]) throw ParseError(line_no, end_column, "axis is missing candidate '" + names[c] + "'");
      axis = std::move(order);
      continue;
    }

    int count = 1;
    if (directive.rfind("vote[", 0) == 0 && directive.size() > 6 && directive.back() == ']') {
      count = detail::parse_count(directive.substr(5, directive.size() - 6), line_no, static_cast<int>(at) + 6);
    } else if (directive != "vote") {
      throw ParseError(line_no, static_cast<int>(at) + 1, "unknown directive '" + directive + "'");
    }

    std::vector<std::vector<CandidateId>> groups(1);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    int last_bar = static_cast<int>(colon) + 1;
    for (const auto& t : tokens) {
      if (t.text == "|") {
        if (groups.back().empty()) throw ParseError(line_no, t.column, "empty group");
        groups.emplace_back();
        last_bar = t.column;
        continue;
      }
      const CandidateId c = lookup(t);
      if (seen[c]) throw ParseError(line_no, t.column, "duplicate candidate '" + t.text + "' in ballot");
      seen[c] = 1;
      groups.back().push_back(c);
    }
    if (groups.back().empty()) throw ParseError(line_no, groups.size() == 1 ? end_column : last_bar, "empty group");
    for (CandidateId c = 0; c < m; ++c)
      if (!seen[c]) throw ParseError(line_no, end_column, "ballot is missing candidate '" + names[c] + "'");
    const Ballot ballot(std::move(groups), m);
    for (int i = 0; i < count; ++i) ballots.push_back(ballot);
  }
  if (!have_candidates) throw ParseError(1, 1, "missing candidates line");
  return Election(std::move(names), std::move(ballots), std::move(axis));
}

inline std::string format_ballot(const Election& e, const Ballot& b) {
  std::string out;
  for (int g = 0; g < b.num_groups(); ++g) {
    if (g > 0) out += " |";
    for (CandidateId c : b.group(g)) out += " " + e.name(c);
  }
  return out;
}

// Canonical form: groups in roster order, runs of identical ballots merged.
inline std::string serialize_election(const Election& e) {
  std::string out = "candidates:";
  for (const auto& name : e.candidates()) out += " " + name;
  out += "\n";
  if (e.axis()) {
    out += "axis:";
    for (CandidateId c : *e.axis()) out += " " + e.name(c);
    out += "\n";
  }
  for (VoterIndex v = 0; v < e.num_voters();) {
    VoterIndex w = v + 1;
    while (w < e.num_voters() && e.ballot(w) == e.ballot(v)) ++w;
    out += w - v == 1 ? "vote:" : "vote[" + std::to_string(w - v) + "]:";
    out += format_ballot(e, e.ballot(v)) + "\n";
    v = w;
  }
  return out;
}

// Grammar: `graph: <n>` then `edge: <u> <v>` lines, vertices 1-based, u < v.
inline Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  const auto lines = detail::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string_view line = detail::strip_comment(lines[li]);
    if (detail::blank(line)) continue;
    const std::size_t at = detail::first_nonblank(line);
    const auto colon = line.find(':', at);
    if (colon == std::string_view::npos) throw ParseError(line_no, static_cast<int>(at) + 1, "expected a directive");
    const std::string directive(line.substr(at, colon - at));
    const auto tokens = detail::tokenize(line, static_cast<int>(colon) + 1);
    auto number = [&](const detail::Token& t) {
      if (t.text == "0") return 0;
      return detail::parse_count(t.text, line_no, t.column);
    };
    if (directive == "graph") {
      if (g) throw ParseError(line_no, static_cast<int>(at) + 1, "second graph line");
      if (tokens.size() != 1) throw ParseError(line_no, static_cast<int>(colon) + 2, "expected a vertex count");
      g = Graph(number(tokens[0]));
    } else if (directive == "edge") {
      if (!g) throw ParseError(line_no, static_cast<int>(at) + 1, "the graph line must come first");
      if (tokens.size() != 2) throw ParseError(line_no, static_cast<int>(colon) + 2, "expected two vertices");
      const int u = number(tokens[0]), v = number(tokens[1]);
      if (u == v) throw ParseError(line_no, tokens[1].column, "self-loop at vertex " + std::to_string(u));
      if (u < 1 || u > g->num_vertices()) throw ParseError(line_no, tokens[0].column, "vertex out of range");
      if (v < 1 || v > g->num_vertices()) throw ParseError(line_no, tokens[1].column, "vertex out of range");
      if (u > v) throw ParseError(line_no, tokens[0].column, "edge endpoints must be increasing");
      if (g->has_edge(u - 1, v - 1)) throw ParseError(line_no, tokens[0].column, "duplicate edge");
      g->add_edge(u - 1, v - 1);
    } else {
      throw ParseError(line_no, static_cast<int>(at) + 1, "unknown directive '" + directive + "'");
    }
  }
  if (!g) throw ParseError(1, 1, "missing graph line");
  return *g;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = "graph: " + std::to_string(g.num_vertices()) + "\n";
  for (auto [u, v] : g.edges()) out += "edge: " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline const char* to_string(MoveDirection d) { return d == MoveDirection::up ? "up" : "down"; }

// Voter indices are printed 1-based.
inline std::string format_certificate_payload(const Election& e, const ScoreCertificate& cert) {
  std::ostringstream os;
  auto list = [&](const auto& items, auto&& print) {
    os << "[";
    bool first = true;
    for (const auto& item : items) {
      if (!first) os << ",";
      first = false;
      print(item);
    }
    os << "]";
  };
  if (const auto* s = std::get_if<VoterSubset>(&cert)) {
    list(s->voters, [&](VoterIndex v) { os << v + 1; });
  } else if (const auto* l = std::get_if<LiftSequence>(&cert)) {
    os << "lifts=";
    list(l->lifts, [&](int k) { os << k; });
  } else if (const auto* w = std::get_if<SwapSequence>(&cert)) {
    os << "swaps=";
    list(w->swaps, [&](const AdjacentSwap& s) { os << "(" << s.voter + 1 << "," << s.position + 1 << ")"; });
  } else if (const auto* g = std::get_if<GroupMoveSequence>(&cert)) {
    os << "moves=";
    list(g->moves, [&](const DichotomousMove& mv) {
      os << "(" << mv.voter + 1 << "," << e.name(mv.candidate) << "," << to_string(mv.direction) << ")";
    });
  } else if (const auto* o = std::get_if<ConsensusOrder>(&cert)) {
    os << format_ballot(e, o->order).substr(1);
  }
  return os.str();
}

inline std::string format_certificate(const Election& e, const ScoreCertificate& cert) {
  std::string payload = format_certificate_payload(e, cert);
  return std::string("certificate=") + certificate_kind(cert) + (payload.empty() ? "" : " " + payload);
}

inline nlohmann::ordered_json certificate_json(const Election& e, const ScoreCertificate& cert) {
  nlohmann::ordered_json j;
  j["kind"] = certificate_kind(cert);
  if (const auto* s = std::get_if<VoterSubset>(&cert)) {
    auto& voters = j["voters"] = nlohmann::ordered_json::array();
    for (VoterIndex v : s->voters) voters.push_back(v + 1);
  } else if (const auto* l = std::get_if<LiftSequence>(&cert)) {
    j["candidate"] = e.name(l->candidate);
    j["lifts"] = l->lifts;
  } else if (const auto* w = std::get_if<SwapSequence>(&cert)) {
    auto& swaps = j["swaps"] = nlohmann::ordered_json::array();
    for (const auto& s : w->swaps) swaps.push_back({s.voter + 1, s.position + 1});
  } else if (const auto* g = std::get_if<GroupMoveSequence>(&cert)) {
    auto& moves = j["moves"] = nlohmann::ordered_json::array();
    for (const auto& mv : g->moves) moves.push_back({mv.voter + 1, e.name(mv.candidate), to_string(mv.direction)});
  } else if (const auto* o = std::get_if<ConsensusOrder>(&cert)) {
    auto& groups = j["order"] = nlohmann::ordered_json::array();
    for (const auto& grp : o->order.groups()) {
      auto names = nlohmann::ordered_json::array();
      for (CandidateId c : grp) names.push_back(e.name(c));
      groups.push_back(std::move(names));
    }
  }
  return j;
}

namespace detail {

inline const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::score_equals: return "equals";
    case ClaimKind::score_at_most: return "at-most";
    case ClaimKind::wins_iff: return "wins-iff";
  }
  return "?";
}

inline const char* to_string(ClaimGraph g) {
  switch (g) {
    case ClaimGraph::none: return "none";
    case ClaimGraph::first: return "G";
    case ClaimGraph::second: return "H";
  }
  return "?";
}

inline nlohmann::ordered_json graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.num_vertices();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  Graph g(j.at("vertices").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  return g;
}

}  // namespace detail

// Everything but the election itself, which lives in the .elx file.
inline std::string claims_sidecar(const ForgedInstance& inst) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(inst.kind);
  j["G"] = detail::graph_json(inst.first);
  if (inst.second) j["H"] = detail::graph_json(*inst.second);
  j["voter_types"] = inst.voter_types;
  auto& claims = j["claims"] = nlohmann::ordered_json::array();
  for (const Claim& c : inst.claims) {
    nlohmann::ordered_json cj;
    cj["statement"] = describe(c);
    cj["kind"] = detail::to_string(c.kind);
    cj["candidate"] = c.candidate;
    cj["strong"] = c.strong;
    cj["offset"] = c.offset;
    cj["alpha_of"] = detail::to_string(c.graph);
    cj["value"] = c.value;
    if (c.hint) {
      auto& hint = cj["hint"] = nlohmann::ordered_json::array();
      for (VoterIndex v : *c.hint) hint.push_back(v + 1);
    }
    claims.push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

inline ForgedInstance read_forged_instance(std::string_view elx, std::string_view sidecar) {
  ForgedInstance inst;
  inst.election = parse_election(elx);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(sidecar);
    const auto kind = forge_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorKind::parse_error, "unknown forge kind in claims file");
    inst.kind = *kind;
    inst.first = detail::graph_from_json(j.at("G"));
    if (j.contains("H")) inst.second = detail::graph_from_json(j.at("H"));
    inst.voter_types = j.at("voter_types").get<std::vector<std::string>>();
    for (const auto& cj : j.at("claims")) {
      Claim c;
      const auto kind_name = cj.at("kind").get<std::string>();
      if (kind_name == "equals") c.kind = ClaimKind::score_equals;
      else if (kind_name == "at-most") c.kind = ClaimKind::score_at_most;
      else if (kind_name == "wins-iff") c.kind = ClaimKind::wins_iff;
      else throw Error(ErrorKind::parse_error, "unknown claim kind '" + kind_name + "'");
      c.candidate = cj.at("candidate").get<std::string>();
      c.strong = cj.at("strong").get<bool>();
      c.offset = cj.at("offset").get<int>();
      const auto graph = cj.at("alpha_of").get<std::string>();
      c.graph = graph == "G" ? ClaimGraph::first : graph == "H" ? ClaimGraph::second : ClaimGraph::none;
      c.value = cj.at("value").get<int>();
      if (cj.contains("hint")) {
        std::vector<VoterIndex> hint;
        for (const auto& v : cj.at("hint")) hint.push_back(v.get<int>() - 1);
        c.hint = std::move(hint);
      }
      inst.claims.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::parse_error, std::string("claims file: ") + ex.what());
  }
  return inst;
}

}  // namespace vscore
