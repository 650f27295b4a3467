#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "pairvis/cli.hpp"
#include "pairvis/io.hpp"

using namespace pairvis;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pairvis_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const std::string p = (dir_ / name).string();
    write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static constexpr const char* kL =
      R"({"polygon":[[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]],"s":[0.5,1.75],"t":[1.75,0.25]})";

  std::filesystem::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(Cli, SolvePrintsValue) {
  const Outcome r = run({"solve", "--in", file("l.json", kL)});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(0), "value 0.0960276599497");
  const Outcome m = run({"solve", "--in", path("l.json"), "--objective", "minsum"});
  EXPECT_EQ(lines(m.out).at(0), "value 0.176776695297");
}

TEST_F(Cli, SquareHasValueZero) {
  const Outcome r = run({"solve", "--in", file("sq.json", R"({"polygon":[[0,0],[1,0],[1,1],[0,1]],"s":[0.1,0.2],"t":[0.9,0.7]})")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(0), "value 0");
}

TEST_F(Cli, EventsListsPathEvents) {
  const Outcome r = run({"--json", "events", "--in", file("l.json", kL)});
  EXPECT_EQ(r.code, kExitOk);
  const std::vector<std::string> ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  for (const std::string& l : ls) EXPECT_NE(l.find("\"kind\":\"path\""), std::string::npos);
}

TEST_F(Cli, SvgIsWritten) {
  const std::string svg = path("out.svg");
  EXPECT_EQ(run({"solve", "--in", file("l.json", kL), "--svg", svg, "--trace"}).code, kExitOk);
  EXPECT_NE(read_text_file(svg).find("witness-chord"), std::string::npos);
}

TEST_F(Cli, QueryBuildAndRunMatchSolve) {
  const std::string idx = path("l.idx");
  EXPECT_EQ(run({"query", "build", "--in", file("l.json", kL), "--out", idx}).code, kExitOk);
  const Outcome r = run({"query", "run", "--idx", idx, "--s", "0.5,1.75", "--t", "1.75,0.25"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(0), "value 0.0960276599497");
}

TEST_F(Cli, OutsidePointExitsThree) {
  const Outcome r = run({"--json", "solve", "--in",
                     file("o.json", R"({"polygon":[[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]],"s":[1.5,1.5],"t":[0.5,0.5]})")});
  EXPECT_EQ(r.code, kExitInfeasiblePoint);
  EXPECT_NE(r.err.find("\"code\":\"outside_polygon\""), std::string::npos);
}

TEST_F(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({"solve", "--in", path("missing.json")}).code, kExitInvalidInput);
  EXPECT_EQ(run({"solve", "--in", file("bad.json", "{")}).code, kExitInvalidInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"solve", "--in", file("l.json", kL), "--objective", "wminmax", "--lambda", "1.5"}).code,
            kExitInvalidInput);
  const Outcome r = run({"--json", "solve", "--in", path("missing.json")});
  EXPECT_EQ(r.err.rfind("{\"error\":{\"code\":\"invalid_input\"", 0), 0u);
}

TEST_F(Cli, StaleQueryFileIsRejected) {
  const std::string idx = file("old.idx",
                               R"({"format":"pairvis-query","version":0,"polygon":[[0,0],[1,0],[0,1]],"triangles":[[0,1,2]]})");
  const Outcome r = run({"--json", "query", "run", "--idx", idx, "--s", "0.1,0.1", "--t", "0.2,0.2"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("version_mismatch"), std::string::npos);
}
