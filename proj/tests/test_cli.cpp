#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "ruled/io.hpp"
#include "transcript.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = ruled::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SurfaceExamples) {
  Result a = run({"surface", "new"});
  Result b = run({"surface", "blowup", "0"}, a.out);
  EXPECT_EQ(b.out, "{\"lines\":[[0,1],[1,1],[1,0]]}\n");
  Result dot = run({"--output", "dot", "surface", "show"}, a.out);
  EXPECT_EQ(std::count(dot.out.begin(), dot.out.end(), ';'), 3);
  EXPECT_NE(dot.out.find("--"), std::string::npos);
  Result c = run({"surface", "blowup", "0"}, b.out);
  Result d = run({"surface", "divisor", "1/2", "--zeros"}, c.out);
  EXPECT_EQ(d.out, "[\"l_-inf\",\"l_0\"]\n");
}

TEST(Cli, ExitCodesFollowVerdict) {
  EXPECT_EQ(run({"decide", "nodal", "--r0", "x^2", "--s1", "x", "--s2", "x*(1+x)"}).code, 0);
  EXPECT_EQ(run({"decide", "nodal", "--r0", "x^2", "--s1", "x", "--s2", "2*x"}).code, 1);
  EXPECT_EQ(run({"decide", "nodal", "--r0", "x", "--s1", "x", "--s2", "x"}).code, 0);
  EXPECT_EQ(run({"decide", "general", "--r0", "x^2", "--s1", "x", "--s2", "x+x^2", "--tree",
                 R"({"roots":[{"base":"[0:1]","children":[{"at":"node-left","children":[{"at":{"free":"2"},"children":[]}]}]}]})"})
                .code,
            3);
  EXPECT_EQ(run({"decide", "nodal", "--r0", "x^2", "--s1", "x+", "--s2", "x"}).code, 2);
  EXPECT_EQ(run({"--trunc", "2", "surface", "new"}).code, 2);
  EXPECT_EQ(run({"surface", "blowup", "0"}, "{not json").code, 2);
}

TEST(Cli, ParseErrorIsPositional) {
  Result r = run({"decide", "nodal", "--r0", "x^2", "--s1", "x*(1+", "--s2", "x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position"), std::string::npos) << r.err;
}

TEST(Cli, EmittedJsonReparses) {
  std::vector<std::vector<std::string>> cmds{
      {"--output", "json", "decide", "nodal", "--r0", "x^2", "--s1", "x", "--s2", "x*(1+x)"},
      {"--output", "json", "decide", "nodal", "--r0", "x^2", "--s1", "x", "--s2", "2*x"},
      {"witness", "build", "--r0", "x^2", "--s1", "x", "--s2", "x*(1+x)"},
      {"--seed", "3", "surface", "random", "--steps", "5"},
      {"--output", "json", "classes", "--r0", "x^2", "--sections", "x", "2*x"},
  };
  for (const auto& c : cmds) {
    Result r = run(c);
    ruled::Json j = ruled::Json::parse(r.out);
    EXPECT_EQ(j.dump() + "\n", r.out);
  }
}

TEST(Cli, SeedMakesRandomReproducible) {
  EXPECT_EQ(run({"--seed", "7", "surface", "random", "--steps", "9"}).out,
            run({"--seed", "7", "surface", "random", "--steps", "9"}).out);
  EXPECT_NE(run({"--seed", "7", "surface", "random", "--steps", "9"}).out,
            run({"--seed", "8", "surface", "random", "--steps", "9"}).out);
}

TEST(Cli, WitnessRoundTripAndTamper) {
  Result b = run({"witness", "build", "--r0", "x^2", "--s1", "x", "--s2", "x*(1+x)"});
  ASSERT_EQ(b.code, 0);
  Result v = run({"witness", "verify"}, b.out);
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("certificate valid"), std::string::npos);
  ruled::Json j = ruled::Json::parse(b.out);
  j["witness"]["h1"][1]["c"] = "2*x";
  Result t = run({"--output", "json", "witness", "verify"}, j.dump());
  EXPECT_EQ(t.code, 1);
  ruled::Json rep = ruled::Json::parse(t.out);
  EXPECT_FALSE(rep["valid"].get<bool>());
  EXPECT_FALSE(rep["clauses"][2]["pass"].get<bool>());
  EXPECT_EQ(rep["clauses"][2]["clause"], "gluing");
}

TEST(Cli, GoldenTranscripts) {
  int n = 0;
  for (const auto& e : std::filesystem::directory_iterator(RULED_GOLDEN_DIR)) {
    if (e.path().extension() != ".txt") continue;
    std::string want = transcript::read_file(e.path().string());
    EXPECT_EQ(transcript::replay(want), want) << e.path();
    ++n;
  }
  EXPECT_EQ(n, 5);
}
