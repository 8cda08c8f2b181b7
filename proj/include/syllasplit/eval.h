// syllasplit/eval.h

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

#ifndef SYLLASPLIT_EVAL_H_
#define SYLLASPLIT_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syllasplit/audio_io.h"
#include "syllasplit/pipeline.h"

namespace syllasplit {

/// Expected segmentation of one file. Spans index the source file as stored
/// on disk, before any trimming.
struct ReferenceAnnotation {
  std::string source;
  std::size_t expected_syllable_count = 0;
  std::optional<std::vector<SampleRange>> expected_spans;
  /// Boundary tolerance; defaults to the envelope delta of the file's rate.
  std::optional<std::size_t> tolerance_samples;
};

enum class Classification { kFull, kPartial, kFailed };

const char* to_string(Classification c);

/// full: detected count equals the expected count and every expected span
/// (if any are given) has a detected span whose onset and end both lie
/// within the tolerance. partial: at least one expected span is matched
/// that way, but not full. failed: anything else.
///
/// Throws SourceMismatch when result and annotation name different files.
Classification classify(const SegmentationResult& result,
                        const ReferenceAnnotation& ref);

struct FileOutcome {
  std::string source;
  std::size_t detected = 0;
  std::size_t expected = 0;
  Classification classification = Classification::kFailed;
  std::string reason;  // set when the file could not be processed
};

struct EvalTotals {
  std::size_t full = 0;
  std::size_t partial = 0;
  std::size_t failed = 0;
  double detection_rate = 0.0;
};

struct EvalReport {
  std::vector<FileOutcome> per_file;
  EvalTotals totals;
};

/// Parses a manifest: a JSON array of
/// {audio: path, expected_syllables: int, spans?: [{onset, end}], tolerance?: int}.
/// Relative audio paths are resolved against the manifest's directory.
/// Throws FileNotFound or IoError.
std::vector<ReferenceAnnotation> load_manifest(const std::filesystem::path& path);
std::vector<ReferenceAnnotation> parse_manifest(
    const nlohmann::json& doc, const std::filesystem::path& base_dir);

/// Segments and classifies every entry, up to `jobs` at a time. A file that
/// fails to load is reported as failed with a reason. Output order follows
/// the input.
EvalReport evaluate(const std::vector<ReferenceAnnotation>& refs,
                    const PipelineConfig& config, int jobs = 1);

EvalReport evaluate_corpus(const std::filesystem::path& manifest,
                           const PipelineConfig& config, int jobs = 1);

EvalTotals tally(const std::vector<FileOutcome>& outcomes);

nlohmann::ordered_json to_json(const EvalReport& report);
void write_table(std::ostream& out, const EvalReport& report);

}  // namespace syllasplit

#endif  // SYLLASPLIT_EVAL_H_
