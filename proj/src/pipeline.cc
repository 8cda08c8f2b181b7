// syllasplit/pipeline.cc

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

#include "syllasplit/pipeline.h"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "syllasplit/error.h"
#include "log.h"

namespace syllasplit {

void PipelineConfig::validate() const {
  if (!(perc > 0.0)) throw std::invalid_argument("perc must be positive");
  if (!(epsilon > 1.0)) throw std::invalid_argument("epsilon must exceed 1");
  if (!(vocoder_window_s > 0.0))
    throw std::invalid_argument("vocoder window must be positive");
  if (analysis_window < 1)
    throw std::invalid_argument("analysis window must be positive");
  if (!(min_run_factor > 0.0))
    throw std::invalid_argument("min_run_factor must be positive");
  if (supersyllable_limit < 1)
    throw std::invalid_argument("supersyllable limit must be positive");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be positive");
  if (!(silence_threshold >= 0.0 && silence_threshold < 1.0))
    throw std::invalid_argument("silence threshold must be in [0, 1)");
}

EnvelopeParams PipelineConfig::envelope_params(int sample_rate) const {
  return EnvelopeParams::from_sample_rate(sample_rate, vocoder_window_s,
                                          analysis_window);
}

SegmentationParams PipelineConfig::segmentation_params() const {
  return {perc, min_run_factor};
}

SupersyllableParams PipelineConfig::supersyllable_params(
    int sample_rate) const {
  SupersyllableParams params;
  params.limit = supersyllable_limit;
  if (sample_rate != kReferenceSampleRate) {
    const double scaled = static_cast<double>(supersyllable_limit) *
                          sample_rate / kReferenceSampleRate;
    params.limit = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(scaled + 0.5)));
  }
  params.epsilon = epsilon;
  params.max_depth = max_depth;
  params.min_run_len = segmentation_params().min_run_len(
      envelope_params(sample_rate).delta);
  return params;
}

Analysis analyze(const AudioBuffer& buffer, const PipelineConfig& config,
                 std::string source) {
  config.validate();
  Analysis a;
  SegmentationResult& r = a.result;
  r.source = std::move(source);
  r.sample_rate = buffer.sample_rate();
  r.config = config;

  SampleRange kept{0, buffer.size()};
  if (config.trim) kept = find_voiced_range(buffer.samples(), config.silence_threshold);
  a.audio = buffer.slice(kept);
  r.trim_offset = kept.start;
  r.total_samples = a.audio.size();

  const EnvelopeParams env_params = config.envelope_params(buffer.sample_rate());
  a.envelope.params = env_params;
  if (a.audio.empty()) {
    logger().info("{}: no signal after trimming", r.source);
    return a;
  }

  a.rectified = half_wave_rectify(a.audio);
  r.rms = rms(a.rectified);
  a.envelope = track_envelope(a.rectified, env_params);

  const SegmentationParams seg = config.segmentation_params();
  r.threshold = compute_threshold(r.rms, seg.perc);
  a.runs = run_length_encode(binarize(a.envelope, r.threshold));
  a.purged = purge_short_runs(a.runs, seg.min_run_len(env_params.delta));
  a.located = locate_syllables(a.purged);
  a.spans = resolve_all(a.envelope, a.located, r.threshold,
                        config.supersyllable_params(buffer.sample_rate()));

  logger().debug("{}: rms {:.6g}, threshold {:.6g}, {} runs, {} located, {} final",
                 r.source, r.rms, r.threshold, a.runs.size(), a.located.size(),
                 a.spans.size());

  r.syllables.reserve(a.spans.size());
  for (std::size_t i = 0; i < a.spans.size(); ++i) {
    const SyllableSpan& s = a.spans[i];
    r.syllables.push_back({i + 1, s.onset, s.end,
                           span_duration_ms_rounded(s, r.sample_rate),
                           s.is_supersyllable, s.split_depth});
  }
  return a;
}

SegmentationResult segment_buffer(const AudioBuffer& buffer,
                                  const PipelineConfig& config,
                                  std::string source) {
  return analyze(buffer, config, std::move(source)).result;
}

SegmentationResult segment_file(const std::filesystem::path& path,
                                const PipelineConfig& config) {
  return segment_buffer(load_wav(path), config, path.string());
}

nlohmann::ordered_json to_json(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["perc"] = c.perc;
  j["epsilon"] = c.epsilon;
  j["vocoder_window_s"] = c.vocoder_window_s;
  j["analysis_window"] = c.analysis_window;
  j["min_run_factor"] = c.min_run_factor;
  j["supersyllable_limit"] = c.supersyllable_limit;
  j["max_depth"] = c.max_depth;
  j["trim"] = c.trim;
  j["silence_threshold"] = c.silence_threshold;
  return j;
}

nlohmann::ordered_json to_json(const SegmentationResult& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["sample_rate"] = r.sample_rate;
  j["total_samples"] = r.total_samples;
  j["trim_offset"] = r.trim_offset;
  // Fixed precision keeps the text stable across platforms.
  j["rms"] = std::stod(fmt::format("{:.9g}", r.rms));
  j["threshold"] = std::stod(fmt::format("{:.9g}", r.threshold));
  j["config"] = to_json(r.config);
  j["syllables"] = nlohmann::ordered_json::array();
  for (const SyllableRecord& s : r.syllables) {
    nlohmann::ordered_json row;
    row["index"] = s.index;
    row["onset"] = s.onset;
    row["end"] = s.end;
    row["duration_ms"] = s.duration_ms;
    row["is_supersyllable"] = s.is_supersyllable;
    row["split_depth"] = s.split_depth;
    j["syllables"].push_back(std::move(row));
  }
  return j;
}

void write_csv_header(std::ostream& out, bool with_source) {
  if (with_source) out << "source,";
  out << "index,onset,end,duration_ms,is_supersyllable,split_depth\n";
}

void write_csv_rows(std::ostream& out, const SegmentationResult& r,
                    bool with_source) {
  for (const SyllableRecord& s : r.syllables) {
    if (with_source) out << r.source << ',';
    out << s.index << ',' << s.onset << ',' << s.end << ',' << s.duration_ms
        << ',' << (s.is_supersyllable ? "true" : "false") << ','
        << s.split_depth << '\n';
  }
}

std::vector<std::filesystem::path> export_snippets(
    const Analysis& analysis, const std::filesystem::path& dir,
    const std::string& stem) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IoError(fmt::format("{}: cannot create directory: {}", dir.string(),
                              ec.message()));
  std::vector<std::filesystem::path> written;
  for (const SyllableRecord& s : analysis.result.syllables) {
    auto path = dir / fmt::format("{}_syl{}.wav", stem, s.index);
    export_segment(analysis.audio, {s.onset, s.end}, path);
    written.push_back(std::move(path));
  }
  return written;
}

}  // namespace syllasplit
