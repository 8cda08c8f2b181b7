// syllasplit/eval.cc

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

#include "syllasplit/eval.h"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "syllasplit/error.h"
#include "log.h"

namespace syllasplit {

namespace {

bool within(std::size_t a, std::size_t b, std::size_t tolerance) {
  return (a > b ? a - b : b - a) <= tolerance;
}

std::string normalized(const std::string& path) {
  return std::filesystem::path(path).lexically_normal().string();
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kFull:
      return "full";
    case Classification::kPartial:
      return "partial";
    case Classification::kFailed:
      return "failed";
  }
  return "failed";
}

Classification classify(const SegmentationResult& result,
                        const ReferenceAnnotation& ref) {
  if (normalized(result.source) != normalized(ref.source))
    throw SourceMismatch(fmt::format("result for '{}' compared against '{}'",
                                     result.source, ref.source));

  const bool count_ok =
      result.syllables.size() == ref.expected_syllable_count;
  if (!ref.expected_spans) {
    return count_ok ? Classification::kFull : Classification::kFailed;
  }

  const std::size_t tolerance = ref.tolerance_samples.value_or(
      result.config.envelope_params(result.sample_rate).delta);
  std::size_t matched = 0;
  for (const SampleRange& want : *ref.expected_spans) {
    const bool hit = std::any_of(
        result.syllables.begin(), result.syllables.end(),
        [&](const SyllableRecord& s) {
          return within(s.onset + result.trim_offset, want.start, tolerance) &&
                 within(s.end + result.trim_offset, want.end, tolerance);
        });
    matched += hit;
  }

  if (count_ok && matched == ref.expected_spans->size())
    return Classification::kFull;
  if (matched > 0) return Classification::kPartial;
  return Classification::kFailed;
}

std::vector<ReferenceAnnotation> parse_manifest(
    const nlohmann::json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_array()) throw IoError("manifest must be a JSON array");
  std::vector<ReferenceAnnotation> refs;
  try {
    for (const auto& entry : doc) {
      ReferenceAnnotation ref;
      std::filesystem::path audio = entry.at("audio").get<std::string>();
      if (audio.is_relative()) audio = base_dir / audio;
      ref.source = audio.lexically_normal().string();
      const long long expected = entry.at("expected_syllables").get<long long>();
      if (expected < 0) throw IoError("expected_syllables must be >= 0");
      ref.expected_syllable_count = static_cast<std::size_t>(expected);
      if (entry.contains("spans")) {
        std::vector<SampleRange> spans;
        for (const auto& s : entry.at("spans")) {
          SampleRange r{s.at("onset").get<std::size_t>(),
                        s.at("end").get<std::size_t>()};
          if (r.start >= r.end || (!spans.empty() && r.start < spans.back().end))
            throw IoError(fmt::format("{}: spans must be non-empty, sorted and "
                                      "disjoint",
                                      ref.source));
          spans.push_back(r);
        }
        ref.expected_spans = std::move(spans);
      }
      if (entry.contains("tolerance"))
        ref.tolerance_samples = entry.at("tolerance").get<std::size_t>();
      refs.push_back(std::move(ref));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(fmt::format("malformed manifest entry: {}", e.what()));
  }
  return refs;
}

std::vector<ReferenceAnnotation> load_manifest(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(fmt::format("{}: cannot open manifest", path.string()));
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(fmt::format("{}: {}", path.string(), e.what()));
  }
  return parse_manifest(doc, path.parent_path());
}

EvalTotals tally(const std::vector<FileOutcome>& outcomes) {
  EvalTotals t;
  for (const FileOutcome& o : outcomes) {
    switch (o.classification) {
      case Classification::kFull:
        ++t.full;
        break;
      case Classification::kPartial:
        ++t.partial;
        break;
      case Classification::kFailed:
        ++t.failed;
        break;
    }
  }
  if (!outcomes.empty())
    t.detection_rate = static_cast<double>(t.full + t.partial) / outcomes.size();
  return t;
}

EvalReport evaluate(const std::vector<ReferenceAnnotation>& refs,
                    const PipelineConfig& config, int jobs) {
  config.validate();
  EvalReport report;
  report.per_file.resize(refs.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(refs.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const ReferenceAnnotation& ref = refs[i];
    FileOutcome& out = report.per_file[i];
    out.source = ref.source;
    out.expected = ref.expected_syllable_count;
    try {
      const SegmentationResult result = segment_file(ref.source, config);
      out.detected = result.syllables.size();
      out.classification = classify(result, ref);
    } catch (const std::exception& e) {
      out.classification = Classification::kFailed;
      out.reason = e.what();
      logger().warn("{}", e.what());
    }
  }
  report.totals = tally(report.per_file);
  return report;
}

EvalReport evaluate_corpus(const std::filesystem::path& manifest,
                           const PipelineConfig& config, int jobs) {
  return evaluate(load_manifest(manifest), config, jobs);
}

nlohmann::ordered_json to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["per_file"] = nlohmann::ordered_json::array();
  for (const FileOutcome& o : report.per_file) {
    nlohmann::ordered_json row;
    row["source"] = o.source;
    row["detected"] = o.detected;
    row["expected"] = o.expected;
    row["classification"] = to_string(o.classification);
    if (!o.reason.empty()) row["reason"] = o.reason;
    j["per_file"].push_back(std::move(row));
  }
  j["totals"]["full"] = report.totals.full;
  j["totals"]["partial"] = report.totals.partial;
  j["totals"]["failed"] = report.totals.failed;
  j["totals"]["detection_rate"] =
      std::stod(fmt::format("{:.6f}", report.totals.detection_rate));
  return j;
}

void write_table(std::ostream& out, const EvalReport& report) {
  std::size_t width = 6;
  for (const FileOutcome& o : report.per_file)
    width = std::max(width, o.source.size());
  fmt::print(out, "{:<{}}  {:>8}  {:>8}  {}\n", "source", width, "detected",
             "expected", "result");
  for (const FileOutcome& o : report.per_file) {
    fmt::print(out, "{:<{}}  {:>8}  {:>8}  {}", o.source, width, o.detected,
               o.expected, to_string(o.classification));
    if (!o.reason.empty()) fmt::print(out, " ({})", o.reason);
    out << '\n';
  }
  fmt::print(out, "\nfull {}  partial {}  failed {}  detection rate {:.3f}\n",
             report.totals.full, report.totals.partial, report.totals.failed,
             report.totals.detection_rate);
}

}  // namespace syllasplit
