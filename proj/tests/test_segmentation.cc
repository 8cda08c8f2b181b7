// tests/test_segmentation.cc

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

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "syllasplit/error.h"
#include "syllasplit/segmentation.h"

using namespace syllasplit;

namespace {

RunSequence reference_runs() {
  std::ifstream in(SYLLASPLIT_FIXTURE_DIR "/reference_runs.tsv");
  REQUIRE(in.good());
  return read_runs(in);
}

std::vector<std::uint8_t> random_bits(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nruns(0, 40);
  std::geometric_distribution<int> len(0.002);
  std::vector<std::uint8_t> bits;
  std::uint8_t bit = rng() & 1;
  const int n = nruns(rng);
  for (int i = 0; i < n; ++i) {
    bits.insert(bits.end(), 1 + len(rng), bit);
    bit ^= 1;
  }
  return bits;
}

bool is_maximal(const RunSequence& runs) {
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs.runs()[i].length == 0) return false;
    if (i > 0 && runs.runs()[i].bit == runs.runs()[i - 1].bit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("SegmentationParams") {
  SegmentationParams p;
  CHECK(p.perc == 1.2);
  CHECK(p.min_run_len(970) == 1746);
  CHECK(SegmentationParams{1.2, 1.5}.min_run_len(3) == 5);  // 4.5 rounds up
  CHECK(SegmentationParams{1.2, 0.1}.min_run_len(2) == 1);
  CHECK_THROWS_AS((SegmentationParams{0.0, 1.8}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SegmentationParams{1.2, -1.0}.validate()), std::invalid_argument);
}

TEST_CASE("compute_threshold") {
  CHECK(compute_threshold(0.0, 1.2) == 0.0);
  CHECK(compute_threshold(1.0, 1.2) == 1.2);
  CHECK(compute_threshold(0.05, 1.2) == doctest::Approx(0.06));
}

TEST_CASE("binarize uses a strict comparison") {
  CHECK(binarize(std::vector<double>{0.1, 0.3}, 0.2) ==
        std::vector<std::uint8_t>{0, 1});
  CHECK(binarize(std::vector<double>(5, 0.2), 0.2) ==
        std::vector<std::uint8_t>(5, 0));
  CHECK(binarize(std::vector<double>{0.0, 1e-12, 0.0, 0.5}, 0.0) ==
        std::vector<std::uint8_t>{0, 1, 0, 1});
  EnvelopeTrace trace{{0.5, 0.1}, {}};
  CHECK(binarize(trace, 0.2) == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("run_length_encode") {
  CHECK(run_length_encode(std::vector<std::uint8_t>{}).empty());
  CHECK(run_length_encode(std::vector<std::uint8_t>{1, 1, 0, 1}).runs() ==
        std::vector<Run>{{1, 2}, {0, 1}, {1, 1}});

  SUBCASE("round trip and maximality") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 200; ++iter) {
      const auto bits = random_bits(rng);
      const RunSequence runs = run_length_encode(bits);
      REQUIRE(runs.decode() == bits);
      REQUIRE(runs.total_length() == bits.size());
      REQUIRE(is_maximal(runs));
    }
  }

  SUBCASE("the reference run stream") {
    const RunSequence t = reference_runs();
    CHECK(t.size() == 29);
    CHECK(run_length_encode(t.decode()) == t);
  }
}

TEST_CASE("RunSequence normalizes its input") {
  RunSequence r({{0, 3}, {0, 2}, {1, 0}, {1, 4}});
  CHECK(r.runs() == std::vector<Run>{{0, 5}, {1, 4}});
  CHECK(r.count(1) == 1);
  CHECK_THROWS_AS(RunSequence({{2, 1}}), std::invalid_argument);
}

TEST_CASE("purge_short_runs") {
  SUBCASE("reference run table") {
    const RunSequence purged = purge_short_runs(reference_runs(), 1746);
    CHECK(purged.runs() == std::vector<Run>{{0, 10702},
                                            {1, 9472},
                                            {0, 9823},
                                            {1, 9432},
                                            {0, 6915},
                                            {1, 8631},
                                            {0, 21825}});
    CHECK(purged.count(1) == 3);
    CHECK(purged.total_length() == 76800);
  }

  SUBCASE("no short 1-runs leaves the sequence alone") {
    RunSequence r({{0, 5}, {1, 10}, {0, 1}, {1, 10}});
    CHECK(purge_short_runs(r, 10) == r);
  }

  SUBCASE("all 1-runs short merges into one 0-run") {
    RunSequence r({{1, 3}, {0, 5}, {1, 2}, {0, 1}});
    CHECK(purge_short_runs(r, 4).runs() == std::vector<Run>{{0, 11}});
  }

  SUBCASE("0-runs are never relabeled") {
    RunSequence r({{1, 10}, {0, 1}, {1, 10}});
    CHECK(purge_short_runs(r, 5) == r);
  }

  SUBCASE("properties") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::size_t> min_len(1, 3000);
    for (int iter = 0; iter < 200; ++iter) {
      const RunSequence runs = run_length_encode(random_bits(rng));
      const std::size_t m = min_len(rng);
      const RunSequence once = purge_short_runs(runs, m);
      REQUIRE(once.total_length() == runs.total_length());
      REQUIRE(purge_short_runs(once, m) == once);
      REQUIRE(once.count(1) <= runs.count(1));
      REQUIRE(is_maximal(once));
      // Every surviving 1-sample was a 1-sample before.
      const auto before = runs.decode();
      const auto after = once.decode();
      for (std::size_t i = 0; i < after.size(); ++i)
        if (after[i]) REQUIRE(before[i] == 1);

      std::size_t prev_end = 0;
      for (const SyllableSpan& s : locate_syllables(once)) {
        REQUIRE(s.onset < s.end);
        REQUIRE(s.onset >= prev_end);
        REQUIRE(s.length() >= m);
        prev_end = s.end;
      }
    }
  }
}

TEST_CASE("locate_syllables") {
  const auto spans = locate_syllables(purge_short_runs(reference_runs(), 1746));
  CHECK(spans == std::vector<SyllableSpan>{{10702, 20174, false, 0},
                                           {29997, 39429, false, 0},
                                           {46344, 54975, false, 0}});

  CHECK(locate_syllables(RunSequence({{0, 500}})).empty());
  CHECK(locate_syllables(RunSequence({{1, 500}})) ==
        std::vector<SyllableSpan>{{0, 500, false, 0}});
  CHECK(locate_syllables(RunSequence()).empty());

  SUBCASE("spans cover exactly the 1-samples") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 200; ++iter) {
      const auto bits = random_bits(rng);
      std::vector<std::uint8_t> painted(bits.size(), 0);
      for (const auto& s : locate_syllables(run_length_encode(bits)))
        for (std::size_t i = s.onset; i < s.end; ++i) painted[i] = 1;
      REQUIRE(painted == bits);
    }
  }
}

TEST_CASE("span durations") {
  CHECK(span_duration_ms_rounded({7371, 17913}, 44100) == 239);
  CHECK(span_duration_ms_rounded({47975, 64029}, 44100) == 364);
  CHECK(span_duration_ms({1000, 45100}, 44100) == 1000.0);
  CHECK(span_duration_ms_rounded({0, 441}, 44100) == 10);
  CHECK(span_duration_ms_rounded({0, 1}, 2000) == 1);  // 0.5 ms rounds up
  CHECK(span_duration_ms_rounded({0, 3}, 2000) == 2);
  CHECK_THROWS_AS(span_duration_ms({0, 1}, 0), std::invalid_argument);
}

TEST_CASE("runs text format") {
  std::ostringstream out;
  write_runs(out, RunSequence({{0, 3}, {1, 7}}));
  CHECK(out.str() == "value in sequence\tamount elements\n0\t3\n1\t7\n");
  std::istringstream in(out.str());
  CHECK(read_runs(in) == RunSequence({{0, 3}, {1, 7}}));

  std::istringstream bad("0\t3\n2\t5\n");
  CHECK_THROWS_AS(read_runs(bad), IoError);
  std::istringstream zero("1\t0\n");
  CHECK_THROWS_AS(read_runs(zero), IoError);
  std::istringstream extra("1 4 9\n");
  CHECK_THROWS_AS(read_runs(extra), IoError);
}
