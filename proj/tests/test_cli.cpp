// Copyright 2026 The Curator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "curator/cli.hpp"
#include "curator/embeddings.hpp"
#include "test_util.hpp"

using curator::testing::read_file;
using curator::testing::TempDir;
using curator::testing::write_file;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = curator::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string p(const TempDir& d, const char* name) { return (d / name).string(); }

const char* kTweets =
    "id\ttweet\tsubtask_a\n"
    "1\tGET OUT!\tOFF\n"
    "2\t#restorehumanity I am sad........\tNOT\n"
    "3\t@USER URL Creepy ☺\tNOT\n";

}  // namespace

TEST(Cli, VersionAndUsage) {
  auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("curator 0.1.0"), std::string::npos);
  EXPECT_EQ(run({}).code, 1);
  auto bad = run({"evaluate", "--bogus"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("Usage"), std::string::npos);
}

TEST(Cli, EvaluateIdenticalFiles) {
  TempDir d;
  write_file(d / "g.tsv", "a\tOFF\nb\tNOT\n");
  auto r = run({"evaluate", "--gold", p(d, "g.tsv"), "--pred", p(d, "g.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["macro_f1"].get<double>(), 1.0);
}

TEST(Cli, MissingInputNamesPath) {
  auto r = run({"evaluate", "--gold", "/no/such/gold.tsv", "--pred", "/no/such/p.tsv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/no/such/gold.tsv"), std::string::npos) << r.err;
}

TEST(Cli, ValidationErrorExitsOne) {
  TempDir d;
  write_file(d / "g.tsv", "a\tOFF\n");
  write_file(d / "p.tsv", "b\tOFF\n");
  EXPECT_EQ(run({"evaluate", "--gold", p(d, "g.tsv"), "--pred", p(d, "p.tsv")}).code, 1);
}

TEST(Cli, PreprocessWritesTextAndStats) {
  TempDir d;
  write_file(d / "in.tsv", kTweets);
  auto r = run({"preprocess", "--in", p(d, "in.tsv"), "--out", p(d, "out.tsv"), "--stats", p(d, "s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "out.tsv"),
            "id\ttext\tlabel\n"
            "1\t<all_cap> get <all_cap> out!\tOFF\n"
            "2\t# restore humanity <has_cap> i am sad...\tNOT\n"
            "3\t@USER HTTP <has_cap> creepy smiley face\tNOT\n");
  auto stats = json::parse(read_file(d / "s.json"));
  EXPECT_EQ(stats["records"], 3);
  EXPECT_EQ(stats["modified"]["casing"], 3);
  EXPECT_EQ(stats["modified"]["punct"], 1);
}

TEST(Cli, ConfigFileAndCommandLineOverride) {
  TempDir d;
  write_file(d / "in.tsv", "1\tno!!!!!\n");
  write_file(d / "cfg.json", R"({"preprocess": {"steps": "punct", "max-punct": 1}})");
  auto r = run({"--config", p(d, "cfg.json"), "preprocess", "--in", p(d, "in.tsv"), "--out", p(d, "a.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "a.tsv"), "id\ttext\n1\tno!\n");
  r = run({"--config", p(d, "cfg.json"), "preprocess", "--in", p(d, "in.tsv"), "--out", p(d, "b.tsv"),
           "--max-punct", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "b.tsv"), "id\ttext\n1\tno!!\n");
}

TEST(Cli, LogRecordsVersionAndResolvedConfig) {
  TempDir d;
  write_file(d / "g.tsv", "a\tOFF\n");
  run({"--log", p(d, "log.jsonl"), "--seed", "7", "evaluate", "--gold", p(d, "g.tsv"), "--pred", p(d, "g.tsv")});
  run({"--log", p(d, "log.jsonl"), "evaluate", "--gold", p(d, "missing.tsv"), "--pred", p(d, "g.tsv")});
  std::istringstream lines(read_file(d / "log.jsonl"));
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  auto a = json::parse(first), b = json::parse(second);
  EXPECT_EQ(a["version"], "0.1.0");
  EXPECT_EQ(a["exit_code"], 0);
  EXPECT_EQ(a["config"]["seed"], "7");
  EXPECT_EQ(b["exit_code"], 1);
  EXPECT_NE(b["error"].get<std::string>().find("missing.tsv"), std::string::npos);
}

TEST(Cli, FilterSemiDefaultGrid) {
  TempDir d;
  write_file(d / "semi.tsv", "a\tx\t0.95\t0.05\nb\ty\t0.85\t0.11\nc\tz\t0.1\t0.1\n");
  auto r = run({"filter-semi", "--in", p(d, "semi.tsv"), "--default-grid", "--out-dir", p(d, "grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto summary = json::parse(r.out);
  ASSERT_EQ(summary.size(), 8u);
  EXPECT_EQ(summary[0]["selected"], 1);  // (0.8, 0.2, 0.1)
  EXPECT_EQ(summary[1]["selected"], 3);  // (0.8, 0.2, 0.125)
  EXPECT_EQ(summary[2]["selected"], 1);  // (0.8, 0.3, 0.1)
}

TEST(Cli, TedScoreSelectAndRank) {
  TempDir d;
  curator::EmbeddingFile src{curator::EmbeddingKind::kSentence, 2, {{"a", {0, 0}}, {"b", {1, 1}}, {"c", {5, 5}}}, {}};
  curator::EmbeddingFile tgt{curator::EmbeddingKind::kSentence, 2, {{"c", {5, 6}}, {"a", {3, 4}}, {"b", {1, 1}}}, {}};
  curator::write_embeddings(src, d / "src.cemb");
  curator::write_embeddings(tgt, d / "tgt.cemb");
  std::filesystem::create_directories(d / "scores");
  auto r = run({"ted", "score", "--src", p(d, "src.cemb"), "--tgt", p(d, "tgt.cemb"), "--out",
                (d / "scores" / "en.tsv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "scores" / "en.tsv"), "id\tdistance\na\t5\nb\t0\nc\t1\n");

  write_file(d / "en.tsv", "a\tone\tOFF\nb\ttwo\tNOT\nc\tthree\tNOT\n");
  r = run({"ted", "select", "--in", p(d, "en.tsv"), "--scores", (d / "scores" / "en.tsv").string(), "--out",
           p(d, "sel.tsv"), "--k", "2", "--mode", "top"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "sel.tsv"), "id\ttext\tlabel\nb\ttwo\tNOT\nc\tthree\tNOT\n");

  write_file(d / "scores" / "ar.tsv", "id\tdistance\nx\t1\n");
  r = run({"ted", "rank", "--scores-dir", p(d, "scores")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "language\tmean_distance\tn");
  EXPECT_NE(r.out.find("ar\t1"), std::string::npos);
  EXPECT_LT(r.out.find("ar\t"), r.out.find("en\t"));
}

TEST(Cli, SelectModelsAndEnsemble) {
  TempDir d;
  write_file(d / "s.json", R"({"m1": 0.78, "m2": 0.77, "m3": 0.779, "m4": 0.76})");
  auto r = run({"select-models", "--scores", p(d, "s.json"), "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out), json({"m1", "m3", "m2"}));

  write_file(d / "a.tsv", "x\tOFF\ny\tNOT\n");
  write_file(d / "b.tsv", "y\tNOT\nx\tNOT\n");
  write_file(d / "c.tsv", "x\tOFF\ny\tOFF\n");
  r = run({"ensemble", "--pred", p(d, "a.tsv"), p(d, "b.tsv"), p(d, "c.tsv"), "--out", p(d, "v.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "v.tsv"), "id\tlabel\nx\tOFF\ny\tNOT\n");
}

TEST(Cli, MaskAndMerge) {
  TempDir d;
  write_file(d / "in.tsv", "1\tyou fool\tOFF\n");
  write_file(d / "words.txt", "fool\n");
  auto r = run({"mask", "--in", p(d, "in.tsv"), "--wordlist", p(d, "words.txt"), "--out", p(d, "m.tsv"), "--p", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "m.tsv"), "id\ttext\tlabel\n1\tyou [PAD]\tOFF\n");
  EXPECT_EQ(run({"mask", "--in", p(d, "in.tsv"), "--wordlist", p(d, "words.txt"), "--out", p(d, "m.tsv"),
                 "--p", "2"}).code, 1);

  write_file(d / "en.tsv", "1\thello\tNOT\n");
  r = run({"merge", "--base", p(d, "in.tsv"), "--extra", p(d, "en.tsv"), "--out", p(d, "x.tsv"), "--namespace", "en"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(d / "x.tsv"), "id\ttext\tlabel\n1\tyou fool\tOFF\nen:1\thello\tNOT\n");
  EXPECT_EQ(run({"merge", "--base", p(d, "in.tsv"), "--extra", p(d, "en.tsv"), "--out", p(d, "y.tsv")}).code, 1);
}

TEST(Cli, EmbeddingsValidate) {
  TempDir d;
  write_file(d / "bad.cemb", std::string("CEMB\x00\x04\x00\x00\x00", 9));
  EXPECT_EQ(run({"embeddings", "validate", "--in", p(d, "bad.cemb")}).code, 1);
}
