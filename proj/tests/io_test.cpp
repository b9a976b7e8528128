#include <gtest/gtest.h>

#include "vscore/fixtures.hpp"
#include "vscore/io.hpp"

namespace vscore {
namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_election(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "");
}

TEST(ParseElection, GroupsCountsAndComments) {
  const Election e = parse_election(
      "# two voters\n"
      "candidates: a b c\n"
      "vote[2]: a b | c   # approve a and b\n"
      "vote: c | a | b\n");
  EXPECT_EQ(e.candidates(), (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(e.num_voters(), 3);
  EXPECT_EQ(e.ballot(0), Ballot({{0, 1}, {2}}, 3));
  EXPECT_EQ(e.ballot(1), e.ballot(0));
  EXPECT_EQ(e.ballot(2), Ballot::total({2, 0, 1}));
  EXPECT_FALSE(e.axis());
}

TEST(ParseElection, Axis) {
  const Election e = parse_election("candidates: a b c\naxis: b a c\nvote: a | b | c\n");
  ASSERT_TRUE(e.axis());
  EXPECT_EQ(*e.axis(), (std::vector<CandidateId>{1, 0, 2}));
}

TEST(ParseElection, ErrorPositions) {
  const auto dup = parse_failure("candidates: a b a\n");
  EXPECT_EQ(dup.line(), 1);
  EXPECT_EQ(dup.column(), 17);
  const auto unknown = parse_failure("candidates: a b\nvote: a | x\n");
  EXPECT_EQ(unknown.line(), 2);
  EXPECT_EQ(unknown.column(), 11);
  const auto missing = parse_failure("candidates: a b c\nvote: a | b\n");
  EXPECT_EQ(missing.line(), 2);
  const auto empty = parse_failure("candidates: a b\nvote: a | | b\n");
  EXPECT_EQ(empty.column(), 11);
  EXPECT_EQ(parse_failure("vote: a\n").line(), 1);
  EXPECT_EQ(parse_failure("candidates: a\nballot: a\n").line(), 2);
  EXPECT_EQ(parse_failure("candidates: a b\ncandidates: a b\n").line(), 2);
  EXPECT_EQ(parse_failure("candidates: a b\naxis: a\n").line(), 2);
  EXPECT_EQ(parse_failure("").line(), 1);
}

TEST(SerializeElection, RoundTrip) {
  for (const Election& e : {fixtures::ex_sc(), fixtures::sp101(), fixtures::temperature_votes()}) {
    const std::string text = serialize_election(e);
    EXPECT_EQ(parse_election(text), e);
    EXPECT_EQ(serialize_election(parse_election(text)), text);
  }
}

TEST(SerializeElection, MergesRuns) {
  const std::string text = serialize_election(fixtures::ex_sc());
  EXPECT_EQ(text, "candidates: a b c p\nvote[2]: a | b | p | c\nvote[2]: a | c | p | b\n");
}

TEST(ParseGraph, EdgesAndErrors) {
  const Graph g = parse_graph("graph: 3\nedge: 1 2\nedge: 2 3\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(serialize_graph(g), "graph: 3\nedge: 1 2\nedge: 2 3\n");
  EXPECT_EQ(parse_graph("graph: 0\n").num_vertices(), 0);
  for (const char* bad : {"graph: 3\nedge: 2 2\n", "graph: 3\nedge: 1 4\n", "graph: 3\nedge: 2 1\n",
                          "graph: 3\nedge: 1 2\nedge: 1 2\n", "edge: 1 2\n", "graph: 3\nnode: 1\n", ""})
    EXPECT_THROW(parse_graph(bad), ParseError) << bad;
}

TEST(Certificate, TextPayloads) {
  const Election e = fixtures::ex_sc();
  EXPECT_EQ(format_certificate(e, VoterSubset{{0, 2}}), "certificate=voter-subset [1,3]");
}

TEST(ClaimsSidecar, RoundTrip) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  Graph h(3);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  const auto inst = forge(ForgeKind::youngranking, g, h);
  const auto back = read_forged_instance(serialize_election(inst.election), claims_sidecar(inst));
  EXPECT_EQ(back.kind, inst.kind);
  EXPECT_EQ(back.election, inst.election);
  EXPECT_EQ(back.first, inst.first);
  EXPECT_EQ(back.second, inst.second);
  EXPECT_EQ(back.claims, inst.claims);
  EXPECT_EQ(back.voter_types, inst.voter_types);
}

TEST(ClaimsSidecar, MalformedJson) {
  const auto inst = forge(ForgeKind::youngscore, Graph(2));
  EXPECT_THROW(read_forged_instance(serialize_election(inst.election), "{\"kind\": 3}"), Error);
  EXPECT_THROW(read_forged_instance(serialize_election(inst.election), "not json"), Error);
}

}  // namespace
}  // namespace vscore
