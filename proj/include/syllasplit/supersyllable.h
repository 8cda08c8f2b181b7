// syllasplit/supersyllable.h

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

#ifndef SYLLASPLIT_SUPERSYLLABLE_H_
#define SYLLASPLIT_SUPERSYLLABLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "syllasplit/envelope.h"
#include "syllasplit/segmentation.h"

namespace syllasplit {

struct SupersyllableParams {
  /// Spans of at least this many samples are treated as holding more than
  /// one syllable. Mean syllable length plus one standard deviation.
  std::size_t limit = 12010;
  /// Threshold multiplier per split level; must exceed 1.
  double epsilon = 1.25;
  /// Number of raised-threshold levels tried before a span is left unsplit.
  int max_depth = 3;
  /// Purge length reused when re-segmenting inside a span.
  std::size_t min_run_len = 1746;

  static SupersyllableParams from_statistics(std::size_t mean_syllable_len,
                                             std::size_t stddev);
  void validate() const;
};

bool is_supersyllable(const SyllableSpan& span, std::size_t limit);

/// Re-segments trace[span.onset, span.end) at
/// base_threshold * epsilon^(depth + 1) and returns the pieces, in order and
/// inside the original span.
///
/// - A span shorter than the limit comes back unchanged.
/// - If the raised threshold leaves exactly one piece, nothing was separated
///   and the next level (a higher threshold) is tried on the whole span.
/// - If it leaves no piece, or depth has reached max_depth, the span comes
///   back whole with is_supersyllable set and split_depth = depth.
/// - Pieces still at or above the limit are broken again at depth + 1.
///
/// Throws InvalidSpan if the span is empty or outside the trace.
std::vector<SyllableSpan> break_supersyllable(const EnvelopeTrace& trace,
                                              const SyllableSpan& span,
                                              double base_threshold,
                                              const SupersyllableParams& params,
                                              int depth = 0);

/// Breaks every top-level supersyllable; other spans pass through. Spans are
/// processed in parallel and the output keeps onset order.
std::vector<SyllableSpan> resolve_all(const EnvelopeTrace& trace,
                                      std::span<const SyllableSpan> spans,
                                      double base_threshold,
                                      const SupersyllableParams& params);

}  // namespace syllasplit

#endif  // SYLLASPLIT_SUPERSYLLABLE_H_
