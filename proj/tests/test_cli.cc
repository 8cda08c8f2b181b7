// tests/test_cli.cc

// Copyright 2026  The syllasplit Authors
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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "doctest.h"
#include "syllasplit/audio_io.h"
#include <nlohmann/json.hpp>

#include "syllasplit/cli.h"
#include "syllasplit/segmentation.h"
#include "test_util.h"

using namespace syllasplit;
using syllasplit::testing::TempDir;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Corpus {
  TempDir dir{"cli"};
  std::string word;
  Corpus() {
    word = (dir / "word.wav").string();
    syllasplit::testing::write_mono16(
        word, syllasplit::testing::make_tone_bursts(3).samples, 44100);
  }
};

}  // namespace

TEST_CASE("happy path prints JSON") {
  Corpus c;
  const CliRun r = cli({"--input", c.word});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["source"] == c.word);
  CHECK(j["syllables"].size() == 3);
  CHECK(j["config"]["epsilon"] == 1.25);
  CHECK(r.err.empty());
}

TEST_CASE("missing input file exits 2") {
  Corpus c;
  const CliRun r = cli({"--input", (c.dir / "missing.wav").string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("missing.wav") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors exit 1 with a synopsis") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"--bogus"},
           {"--input", "x.wav", "--format", "xml"},
           {"--input", "x.wav", "--epsilon", "0.9"},
           {"--input", "x.wav", "--perc", "abc"},
           {"--input", "x.wav", "--jobs", "0"},
           {"--input", "a.wav", "--input", "b.wav", "--dump-runs", "r.tsv"},
           {"eval"}}) {
    const CliRun r = cli(args);
    CHECK(r.status == 1);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
  const CliRun help = cli({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("--super-limit") != std::string::npos);
}

TEST_CASE("flags reach the config and snippets match the JSON") {
  Corpus c;
  const auto out_dir = c.dir / "out";
  const CliRun r = cli({"--input", c.word, "--perc", "1.5", "--epsilon", "1.1",
                     "--export-dir", out_dir.string(), "--vocoder-ms", "10",
                     "--max-depth", "2", "--no-trim"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["perc"] == 1.5);
  CHECK(j["config"]["epsilon"] == 1.1);
  CHECK(j["config"]["vocoder_window_s"] == doctest::Approx(0.010));
  CHECK(j["config"]["max_depth"] == 2);
  CHECK(j["config"]["trim"] == false);
  CHECK(j["trim_offset"] == 0);

  std::size_t snippets = 0;
  for (const auto& entry : std::filesystem::directory_iterator(out_dir)) {
    (void)entry;
    ++snippets;
  }
  CHECK(snippets == j["syllables"].size());
  for (const auto& s : j["syllables"]) {
    const auto path = out_dir / ("word_syl" + std::to_string(s["index"].get<int>()) + ".wav");
    CHECK(load_wav(path).size() ==
          s["end"].get<std::size_t>() - s["onset"].get<std::size_t>());
  }
}

TEST_CASE("CSV output, --out and dumps") {
  Corpus c;
  const auto out = c.dir / "result.csv";
  const auto env = c.dir / "env.csv";
  const auto runs = c.dir / "runs.tsv";
  const CliRun r = cli({"--input", c.word, "--format", "csv", "--out", out.string(),
                     "--dump-envelope", env.string(), "--dump-runs", runs.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  const std::string csv = slurp(out);
  CHECK(csv.rfind("index,onset,end,duration_ms,is_supersyllable,split_depth\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  std::ifstream env_in(env);
  std::string header;
  std::getline(env_in, header);
  CHECK(header == "index,rectified,envelope");
  std::size_t rows = 0;
  for (std::string line; std::getline(env_in, line);) ++rows;

  std::ifstream runs_in(runs);
  const RunSequence seq = read_runs(runs_in);
  CHECK(seq.total_length() == rows);
  CHECK(seq.count(1) >= 3);
}

TEST_CASE("batch mode") {
  Corpus c;
  const std::string second = (c.dir / "two.wav").string();
  syllasplit::testing::write_mono16(
      second, syllasplit::testing::make_tone_bursts(2).samples, 44100);

  const CliRun r = cli({"--input", c.word, "--input", second, "--jobs", "2"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["source"] == c.word);
  CHECK(j[0]["syllables"].size() == 3);
  CHECK(j[1]["syllables"].size() == 2);

  const CliRun csv = cli({"--input", c.word, "--input", second, "--format", "csv"});
  CHECK(csv.out.rfind("source,index,", 0) == 0);

  const CliRun partial = cli({"--input", c.word, "--input", (c.dir / "nope.wav").string()});
  CHECK(partial.status == 2);
  CHECK(nlohmann::json::parse(partial.out).size() == 1);
}

TEST_CASE("eval subcommand") {
  Corpus c;
  nlohmann::json manifest = nlohmann::json::array();
  manifest.push_back({{"audio", "word.wav"}, {"expected_syllables", 3}});
  std::ofstream(c.dir / "m.json") << manifest.dump();

  const CliRun json = cli({"eval", "--manifest", (c.dir / "m.json").string()});
  REQUIRE(json.status == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["totals"]["full"] == 1);
  CHECK(j["totals"]["detection_rate"] == 1.0);

  const CliRun table = cli({"eval", "--manifest", (c.dir / "m.json").string(),
                         "--format", "table"});
  CHECK(table.status == 0);
  CHECK(table.out.find("detection rate 1.000") != std::string::npos);

  CHECK(cli({"eval", "--manifest", (c.dir / "none.json").string()}).status == 2);
}

TEST_CASE("the installed binary reports exit codes") {
  Corpus c;
  const std::string exe = SYLLASPLIT_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(exe + " --input " + c.word + " > /dev/null") == 0);
  CHECK(status(exe + " --input " + c.word + ".missing 2> /dev/null") == 2);
  CHECK(status(exe + " 2> /dev/null") == 1);
}
