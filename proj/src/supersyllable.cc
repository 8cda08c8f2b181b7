// syllasplit/supersyllable.cc

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

#include "syllasplit/supersyllable.h"

#include <cmath>
#include <exception>
#include <stdexcept>

#include <fmt/format.h>

#include "syllasplit/error.h"

namespace syllasplit {

namespace {

SyllableSpan flagged(SyllableSpan span, int depth) {
  span.is_supersyllable = true;
  span.split_depth = depth;
  return span;
}

}  // namespace

SupersyllableParams SupersyllableParams::from_statistics(
    std::size_t mean_syllable_len, std::size_t stddev) {
  SupersyllableParams params;
  params.limit = mean_syllable_len + stddev;
  return params;
}

void SupersyllableParams::validate() const {
  if (limit < 1) throw std::invalid_argument("supersyllable limit must be >= 1");
  if (!(epsilon > 1.0)) throw std::invalid_argument("epsilon must exceed 1");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (min_run_len < 1) throw std::invalid_argument("min_run_len must be >= 1");
}

bool is_supersyllable(const SyllableSpan& span, std::size_t limit) {
  return span.length() >= limit;
}

std::vector<SyllableSpan> break_supersyllable(const EnvelopeTrace& trace,
                                              const SyllableSpan& span,
                                              double base_threshold,
                                              const SupersyllableParams& params,
                                              int depth) {
  if (span.onset >= span.end || span.end > trace.size())
    throw InvalidSpan(fmt::format("span [{}, {}) outside trace of {} samples",
                                  span.onset, span.end, trace.size()));
  if (depth < 0 || depth > params.max_depth)
    throw std::invalid_argument(fmt::format("split depth {} out of range", depth));

  if (!is_supersyllable(span, params.limit)) return {span};
  if (depth == params.max_depth) return {flagged(span, depth)};

  const double threshold = base_threshold * std::pow(params.epsilon, depth + 1);
  const std::span<const double> values =
      std::span<const double>(trace.values).subspan(span.onset, span.length());
  std::vector<SyllableSpan> pieces = locate_syllables(purge_short_runs(
      run_length_encode(binarize(values, threshold)), params.min_run_len));

  if (pieces.empty()) return {flagged(span, depth)};
  if (pieces.size() == 1)
    return break_supersyllable(trace, span, base_threshold, params, depth + 1);

  std::vector<SyllableSpan> out;
  for (SyllableSpan piece : pieces) {
    piece.onset += span.onset;
    piece.end += span.onset;
    piece.split_depth = depth + 1;
    if (is_supersyllable(piece, params.limit)) {
      auto deeper =
          break_supersyllable(trace, piece, base_threshold, params, depth + 1);
      out.insert(out.end(), deeper.begin(), deeper.end());
    } else {
      out.push_back(piece);
    }
  }
  return out;
}

std::vector<SyllableSpan> resolve_all(const EnvelopeTrace& trace,
                                      std::span<const SyllableSpan> spans,
                                      double base_threshold,
                                      const SupersyllableParams& params) {
  params.validate();
  std::vector<std::vector<SyllableSpan>> parts(spans.size());
  std::vector<std::exception_ptr> errors(spans.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(spans.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      if (is_supersyllable(spans[i], params.limit)) {
        parts[i] = break_supersyllable(trace, spans[i], base_threshold, params);
      } else {
        SyllableSpan plain = spans[i];
        plain.split_depth = 0;
        parts[i] = {plain};
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SyllableSpan> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace syllasplit
