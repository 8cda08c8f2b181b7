// syllasplit/pipeline.h

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

#ifndef SYLLASPLIT_PIPELINE_H_
#define SYLLASPLIT_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syllasplit/audio_io.h"
#include "syllasplit/envelope.h"
#include "syllasplit/segmentation.h"
#include "syllasplit/supersyllable.h"

namespace syllasplit {

/// Sample rate the sample-count defaults below refer to.
inline constexpr int kReferenceSampleRate = 44100;

struct PipelineConfig {
  double perc = 1.2;
  double epsilon = 1.25;
  double vocoder_window_s = 0.022;
  std::size_t analysis_window = 2048;
  double min_run_factor = 1.8;
  /// In samples at kReferenceSampleRate; rescaled for other rates.
  std::size_t supersyllable_limit = 12010;
  int max_depth = 3;
  bool trim = true;
  double silence_threshold = 0.02;

  /// Throws std::invalid_argument on a non-positive field, epsilon <= 1 or
  /// silence_threshold outside [0, 1).
  void validate() const;

  EnvelopeParams envelope_params(int sample_rate) const;
  SegmentationParams segmentation_params() const;
  SupersyllableParams supersyllable_params(int sample_rate) const;

  bool operator==(const PipelineConfig&) const = default;
};

struct SyllableRecord {
  std::size_t index = 0;  // 1-based
  std::size_t onset = 0;
  std::size_t end = 0;
  long long duration_ms = 0;
  bool is_supersyllable = false;
  int split_depth = 0;

  bool operator==(const SyllableRecord&) const = default;
};

/// Output of one file. Onsets and ends index the trimmed signal; add
/// trim_offset to map them back to the source file.
struct SegmentationResult {
  std::string source;
  int sample_rate = kReferenceSampleRate;
  std::size_t total_samples = 0;
  std::size_t trim_offset = 0;
  double rms = 0.0;
  double threshold = 0.0;
  PipelineConfig config;
  std::vector<SyllableRecord> syllables;
};

/// Every intermediate of a run, for dumps and tests.
struct Analysis {
  AudioBuffer audio;  // after trimming
  std::vector<double> rectified;
  EnvelopeTrace envelope;
  RunSequence runs;
  RunSequence purged;
  std::vector<SyllableSpan> located;
  std::vector<SyllableSpan> spans;  // after supersyllable breaking
  SegmentationResult result;
};

/// rectify -> rms -> envelope -> threshold -> binarize -> run-length ->
/// purge -> locate -> supersyllable breaking, after optional trimming.
/// An empty or silent signal yields no syllables.
Analysis analyze(const AudioBuffer& buffer, const PipelineConfig& config,
                 std::string source = {});

SegmentationResult segment_buffer(const AudioBuffer& buffer,
                                  const PipelineConfig& config,
                                  std::string source = {});

/// load_wav + segment_buffer. I/O and format errors are rethrown with the
/// path in the message.
SegmentationResult segment_file(const std::filesystem::path& path,
                                const PipelineConfig& config);

nlohmann::ordered_json to_json(const PipelineConfig& config);
nlohmann::ordered_json to_json(const SegmentationResult& result);

/// Header `index,onset,end,duration_ms,is_supersyllable,split_depth`. With
/// with_source set, a leading `source` column is added.
void write_csv_header(std::ostream& out, bool with_source = false);
void write_csv_rows(std::ostream& out, const SegmentationResult& result,
                    bool with_source = false);

/// Writes `{stem}_syl{index}.wav` per syllable into dir, cut from the
/// trimmed signal. Returns the written paths.
std::vector<std::filesystem::path> export_snippets(
    const Analysis& analysis, const std::filesystem::path& dir,
    const std::string& stem);

}  // namespace syllasplit

#endif  // SYLLASPLIT_PIPELINE_H_
