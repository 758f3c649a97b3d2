#include <gtest/gtest.h>

#include <sstream>

#include "graphcake/cli.hpp"
#include "graphcake/fixtures.hpp"
#include "graphcake/json_io.hpp"
#include "support.hpp"

using namespace graphcake;
using namespace graphcake::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kTriangle = R"({"vertices":["a","b","c"],"edges":[["x","a","b"],["y","b","c"],["z","c","a"]]})";

}  // namespace

TEST(Cli, FixtureIntoSolve) {
  const Outcome fixture = run({"fixture", "build", "star_tight", "-p", "n=2"});
  ASSERT_EQ(fixture.code, 0) << fixture.err;
  const Outcome solved = run({"solve", "--protocol", "egal"}, fixture.out);
  ASSERT_EQ(solved.code, 0) << solved.err;
  const Json j = Json::parse(solved.out);
  EXPECT_EQ(j["report"]["egalitarian_welfare"], "1/3");
  EXPECT_EQ(j["report"]["complete"], true);
  EXPECT_GT(j["queries"]["cuts"].get<int>() + j["queries"]["evaluations"].get<int>(), 0);

  const Outcome verified = run({"verify"}, solved.out);
  EXPECT_EQ(verified.code, 0) << verified.err;
  EXPECT_EQ(Json::parse(verified.out)["guarantee_met"], true);
}

TEST(Cli, ClassifyTriangle) {
  const Outcome r = run({"classify"}, kTriangle);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("almost-bridgeless: yes\n", 0), 0u);
  const Outcome star = run({"classify", "--json"}, instance_to_json(three_bridge("star")).dump());
  EXPECT_EQ(Json::parse(star.out)["almost_bridgeless"], false);
  const Outcome dot = run({"classify", "--dot"}, instance_to_json(three_bridge("star")).dump());
  EXPECT_NE(dot.out.find("style=dashed"), std::string::npos);
}

TEST(Cli, LemmaWithNegativeWindow) {
  const Outcome r = run({"lemma", "powers3", "-t", "2", "--window", "-3:1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("holds, min gap 1/18\n", 0), 0u) << r.out;
  EXPECT_EQ(run({"lemma", "powers3", "-t", "2", "--window=-3:1"}).out, r.out);
  EXPECT_EQ(run({"lemma", "powers3", "-t", "2", "--window", "nonsense"}).code, 1);
}

TEST(Cli, LabelAndRefusal) {
  const Outcome r = run({"label"}, kTriangle);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).size(), 3u);
  const Outcome refused = run({"label"}, instance_to_json(three_bridge("star")).dump());
  EXPECT_EQ(refused.code, 1);
  EXPECT_NE(refused.err.find("NotAlmostBridgeless"), std::string::npos);
}

TEST(Cli, VerifyDetectsBrokenGuarantee) {
  Json doc = Json::parse(run({"solve", "--protocol", "egal"}, run({"fixture", "build", "star_tight", "-p", "n=2"}).out).out);
  doc["allocation"] = Json::parse(R"([[["e1","0","1/2"]],[["e2","0","1"],["e3","0","1"]]])");
  const Outcome r = run({"verify"}, doc.dump());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("guarantee violated"), std::string::npos);
}

TEST(Cli, OracleAndGen) {
  const std::string star = run({"fixture", "build", "chore_star", "-p", "n=2"}).out;
  const Outcome r = run({"oracle", "--grid", "6", "--objective", "cost", "--json"}, star);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["optimum"], "2/3");

  const Outcome a = run({"gen", "--seed", "4", "--family", "cycle-augmented", "--agents", "2", "--edges", "5"});
  const Outcome b = run({"gen", "--seed", "4", "--family", "cycle-augmented", "--agents", "2", "--edges", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"classify"}, a.out).out.rfind("almost-bridgeless: yes", 0), 0u);
}

TEST(Cli, ProtocolOptionsAndHumanMode) {
  const std::string edge = run({"fixture", "build", "frontier_edge", "-p", "alpha=3/4"}).out;
  const Outcome flex = run({"solve", "--protocol", "flex2", "--alpha", "1/5"}, edge);
  EXPECT_EQ(flex.code, 0) << flex.err;
  const Outcome human = run({"solve", "--protocol", "fixed2", "--human"}, edge);
  EXPECT_NE(human.out.find("approx"), std::string::npos);
  const std::string tree = run({"fixture", "build", "ternary_tree", "-p", "k=1"}).out;
  EXPECT_EQ(run({"solve", "--protocol", "multi2", "--k", "3"}, tree).code, 0);
  EXPECT_EQ(run({"solve", "--protocol", "height2", "--root", "t"}, tree).code, 0);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"solve"}, kTriangle).code, 1);
  EXPECT_EQ(run({"solve", "--protocol", "egal"}, "{not json").code, 1);
  EXPECT_EQ(run({"fixture", "build", "nope"}).code, 1);
  EXPECT_EQ(run({"solve", "--protocol", "chore5"}, run({"fixture", "build", "star_tight", "-p", "n=2"}).out).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ByteIdenticalOutput) {
  const std::string inst = run({"gen", "--seed", "9", "--agents", "3", "--edges", "6"}).out;
  EXPECT_EQ(run({"solve", "--protocol", "egal"}, inst).out, run({"solve", "--protocol", "egal"}, inst).out);
}
