// syllasplit/segmentation.h

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

#ifndef SYLLASPLIT_SEGMENTATION_H_
#define SYLLASPLIT_SEGMENTATION_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "syllasplit/envelope.h"

namespace syllasplit {

struct SegmentationParams {
  double perc = 1.2;
  double min_run_factor = 1.8;

  /// round(min_run_factor * delta), halves rounded up; 1746 for delta 970.
  std::size_t min_run_len(std::size_t delta) const;
  void validate() const;
};

struct Run {
  std::uint8_t bit = 0;
  std::size_t length = 0;

  bool operator==(const Run&) const = default;
};

/// Maximal runs of a binary stream: adjacent runs differ in bit and every
/// length is at least 1.
class RunSequence {
 public:
  RunSequence() = default;
  /// Merges adjacent equal-bit runs and drops zero-length ones, so any list
  /// of runs yields a valid sequence.
  explicit RunSequence(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t size() const { return runs_.size(); }
  bool empty() const { return runs_.empty(); }
  std::size_t total_length() const;
  std::size_t count(std::uint8_t bit) const;
  std::vector<std::uint8_t> decode() const;

  bool operator==(const RunSequence&) const = default;

 private:
  std::vector<Run> runs_;
};

struct SyllableSpan {
  std::size_t onset = 0;  // inclusive
  std::size_t end = 0;    // exclusive
  bool is_supersyllable = false;
  int split_depth = 0;

  std::size_t length() const { return end - onset; }
  bool operator==(const SyllableSpan&) const = default;
};

double compute_threshold(double rms_value, double perc);

/// out[n] = 1 where values[n] > threshold.
std::vector<std::uint8_t> binarize(std::span<const double> values,
                                   double threshold);
inline std::vector<std::uint8_t> binarize(const EnvelopeTrace& trace,
                                          double threshold) {
  return binarize(trace.values, threshold);
}

RunSequence run_length_encode(std::span<const std::uint8_t> bits);

/// Relabels 1-runs shorter than min_run_len as 0 and re-merges. 0-runs are
/// kept as they are.
RunSequence purge_short_runs(const RunSequence& runs, std::size_t min_run_len);

/// One span per 1-run, located through the running sum of run lengths.
std::vector<SyllableSpan> locate_syllables(const RunSequence& runs);

/// Exact duration in milliseconds.
double span_duration_ms(const SyllableSpan& span, int sample_rate);

/// Duration rounded half up to whole milliseconds, as printed in reports.
long long span_duration_ms_rounded(const SyllableSpan& span, int sample_rate);

/// Two-column tab-separated dump: header `value in sequence\tamount elements`
/// followed by one `bit\tlength` row per run.
void write_runs(std::ostream& out, const RunSequence& runs);

/// Parses the write_runs format. Blank lines and lines starting with '#' are
/// skipped; the header line is optional. Throws IoError on malformed rows.
RunSequence read_runs(std::istream& in);

}  // namespace syllasplit

#endif  // SYLLASPLIT_SEGMENTATION_H_
