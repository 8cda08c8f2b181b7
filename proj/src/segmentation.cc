// syllasplit/segmentation.cc

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

#include "syllasplit/segmentation.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "syllasplit/error.h"
#include "syllasplit/kernels.h"

namespace syllasplit {

std::size_t SegmentationParams::min_run_len(std::size_t delta) const {
  const double scaled = min_run_factor * static_cast<double>(delta);
  // 1.8 * 970 is 1746.0000000000002 in binary; the bias only matters at
  // exact halves.
  const auto len = static_cast<std::size_t>(std::floor(scaled + 0.5 + 1e-9));
  return std::max<std::size_t>(len, 1);
}

void SegmentationParams::validate() const {
  if (!(perc > 0.0)) throw std::invalid_argument("perc must be positive");
  if (!(min_run_factor > 0.0))
    throw std::invalid_argument("min_run_factor must be positive");
}

RunSequence::RunSequence(std::vector<Run> runs) {
  for (const Run& r : runs) {
    if (r.length == 0) continue;
    if (r.bit > 1) throw std::invalid_argument("run bit must be 0 or 1");
    if (!runs_.empty() && runs_.back().bit == r.bit)
      runs_.back().length += r.length;
    else
      runs_.push_back(r);
  }
}

std::size_t RunSequence::total_length() const {
  std::size_t total = 0;
  for (const Run& r : runs_) total += r.length;
  return total;
}

std::size_t RunSequence::count(std::uint8_t bit) const {
  std::size_t n = 0;
  for (const Run& r : runs_) n += (r.bit == bit);
  return n;
}

std::vector<std::uint8_t> RunSequence::decode() const {
  std::vector<std::uint8_t> bits;
  bits.reserve(total_length());
  for (const Run& r : runs_) bits.insert(bits.end(), r.length, r.bit);
  return bits;
}

double compute_threshold(double rms_value, double perc) {
  return perc * rms_value;
}

std::vector<std::uint8_t> binarize(std::span<const double> values,
                                   double threshold) {
  std::vector<std::uint8_t> bits(values.size());
  kernels::binarize(values, threshold, bits);
  return bits;
}

RunSequence run_length_encode(std::span<const std::uint8_t> bits) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < bits.size()) {
    const std::uint8_t bit = bits[i] ? 1 : 0;
    std::size_t j = i + 1;
    while (j < bits.size() && (bits[j] ? 1 : 0) == bit) ++j;
    runs.push_back({bit, j - i});
    i = j;
  }
  return RunSequence(std::move(runs));
}

RunSequence purge_short_runs(const RunSequence& runs, std::size_t min_run_len) {
  std::vector<Run> relabeled = runs.runs();
  for (Run& r : relabeled)
    if (r.bit == 1 && r.length < min_run_len) r.bit = 0;
  return RunSequence(std::move(relabeled));
}

std::vector<SyllableSpan> locate_syllables(const RunSequence& runs) {
  std::vector<SyllableSpan> spans;
  std::size_t position = 0;
  for (const Run& r : runs.runs()) {
    const std::size_t next = position + r.length;
    if (r.bit == 1) spans.push_back({position, next, false, 0});
    position = next;
  }
  return spans;
}

double span_duration_ms(const SyllableSpan& span, int sample_rate) {
  if (sample_rate <= 0)
    throw std::invalid_argument("sample rate must be positive");
  return static_cast<double>(span.length()) / sample_rate * 1000.0;
}

long long span_duration_ms_rounded(const SyllableSpan& span, int sample_rate) {
  return static_cast<long long>(
      std::floor(span_duration_ms(span, sample_rate) + 0.5));
}

void write_runs(std::ostream& out, const RunSequence& runs) {
  out << "value in sequence\tamount elements\n";
  for (const Run& r : runs.runs())
    out << static_cast<int>(r.bit) << '\t' << r.length << '\n';
}

RunSequence read_runs(std::istream& in) {
  std::vector<Run> runs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("value", 0) == 0) continue;
    std::istringstream row(line);
    int bit = -1;
    long long length = -1;
    std::string extra;
    if (!(row >> bit >> length) || (row >> extra) || (bit != 0 && bit != 1) ||
        length < 1)
      throw IoError(fmt::format("runs line {}: malformed row '{}'", line_no,
                                line));
    runs.push_back({static_cast<std::uint8_t>(bit),
                    static_cast<std::size_t>(length)});
  }
  return RunSequence(std::move(runs));
}

}  // namespace syllasplit
