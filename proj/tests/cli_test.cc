// cli_test.cc

// Copyright 2026  The SRIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "sric/cli.h"

namespace sric {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "sric");
  args.insert(args.begin() + 1, {"--log-level", "off"});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(SRIC_TEST_TMP) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(config()) << Json{{"dim", 16},       {"max_len", 32}, {"max_epochs", 3},
                                    {"weight_grid", 0}, {"k", 3},        {"n_per_class", 20}}
                                   .dump();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string config() const { return path("config.json"); }

  CliRun synth(const std::string& out) {
    return run({"--config", config(), "--out", path(out), "synth"});
  }

  fs::path dir_;
};

TEST_F(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"crossval", "--help"}).code, 0);
}

TEST_F(Cli, UnknownFlagIsConfigError) {
  auto r = run({"synth", "--bogus"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_EQ(Json::parse(r.err)["error"], "config");
}

TEST_F(Cli, MissingLexiconNamesTheField) {
  ASSERT_EQ(synth("s").code, 0);
  auto r = run({"--config", config(), "train", "--corpus", path("s/corpus.jsonl"), "--lexicon",
                path("nope.tsv")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_EQ(Json::parse(r.err)["field"], "lexicon");
}

TEST_F(Cli, FlagsOverrideConfigFile) {
  auto r = run({"--config", config(), "--out", path("s"), "synth", "--n-per-class", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("s/corpus.jsonl"));
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_EQ(lines, 15);
}

TEST_F(Cli, BadConfigValueNamesTheKey) {
  std::ofstream(path("bad.json")) << R"({"patience": "soon"})";
  auto r = run({"--config", path("bad.json"), "synth"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_EQ(Json::parse(r.err)["field"], "patience");
}

TEST_F(Cli, SynthThenCrossvalIsReproducible) {
  ASSERT_EQ(synth("s").code, 0);
  auto args = [&](const std::string& out) {
    return std::vector<std::string>{"--config", config(), "--out", path(out), "crossval",
                                    "--corpus", path("s/corpus.jsonl"), "--lexicon",
                                    path("s/lexicon.tsv"), "--variant", "segmented_hashtag"};
  };
  auto a = run(args("a"));
  ASSERT_EQ(a.code, 0) << a.err;
  auto b = run(args("b"));
  ASSERT_EQ(b.code, 0) << b.err;
  auto ra = slurp(path("a/crossval_segmented_hashtag.json"));
  EXPECT_FALSE(ra.empty());
  EXPECT_EQ(ra, slurp(path("b/crossval_segmented_hashtag.json")));
  auto report = Json::parse(ra);
  EXPECT_EQ(report["folds"].size(), 3u);
}

TEST_F(Cli, TrainAugmentStudentEvaluate) {
  ASSERT_EQ(synth("s").code, 0);
  const std::vector<std::string> data = {"--corpus", path("s/corpus.jsonl"), "--lexicon",
                                         path("s/lexicon.tsv")};
  auto with = [&](std::vector<std::string> head, std::vector<std::string> tail) {
    head.insert(head.end(), data.begin(), data.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  auto t = run(with({"--config", config(), "--out", path("t"), "train"}, {}));
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_TRUE(Json::parse(t.out).contains("loss_weights"));
  EXPECT_TRUE(fs::exists(path("t/history.jsonl")));
  EXPECT_TRUE(fs::exists(path("t/history.jsonl.meta.json")));

  auto a = run(with({"--config", config(), "--out", path("t"), "augment"},
                    {"--teacher", path("t/checkpoint.json")}));
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(fs::exists(path("t/augmented.jsonl")));
  auto summary = Json::parse(slurp(path("t/augmentation_summary.json")));
  EXPECT_GT(summary["total"].get<int>(), 0);

  auto s = run(with({"--config", config(), "--out", path("t"), "train-student"},
                    {"--teacher", path("t/checkpoint.json")}));
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(fs::exists(path("t/student.json")));

  auto e = run(with({"--config", config(), "--out", path("e"), "evaluate"},
                    {"--checkpoint", path("t/checkpoint.json")}));
  ASSERT_EQ(e.code, 0) << e.err;
  auto metrics = Json::parse(slurp(path("e/metrics.json")));
  EXPECT_TRUE(metrics["metrics"].contains("weighted_f1"));

  // A checkpoint of a 16-wide model cannot be read as a 32-wide one.
  std::ofstream(path("wide.json")) << Json{{"dim", 32}, {"max_len", 32}}.dump();
  auto bad = run(with({"--config", path("wide.json"), "--out", path("e"), "evaluate"},
                 {"--checkpoint", path("t/checkpoint.json")}));
  EXPECT_EQ(bad.code, kExitConfigError);
  EXPECT_EQ(Json::parse(bad.err)["field"], "dim");
}

TEST_F(Cli, MissingCheckpointIsConfigError) {
  ASSERT_EQ(synth("s").code, 0);
  auto r = run({"--config", config(), "evaluate", "--corpus", path("s/corpus.jsonl"),
                "--lexicon", path("s/lexicon.tsv"), "--checkpoint", path("none.json")});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_EQ(Json::parse(r.err)["field"], "checkpoint");
}

}  // namespace
}  // namespace sric
