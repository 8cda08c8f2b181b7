// syllasplit/envelope.h

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

#ifndef SYLLASPLIT_ENVELOPE_H_
#define SYLLASPLIT_ENVELOPE_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "syllasplit/audio_io.h"

namespace syllasplit {

struct EnvelopeParams {
  /// Discharge length in samples: a peak decays linearly to zero in exactly
  /// this many samples.
  std::size_t delta = 970;
  /// Block length used when running the detector. Detector state is carried
  /// across blocks, so this never changes the output.
  std::size_t window = 2048;
  double vocoder_window_s = 0.022;

  /// delta = floor(sample_rate * vocoder_window_s); 970 at 44.1 kHz / 22 ms.
  static EnvelopeParams from_sample_rate(int sample_rate,
                                         double vocoder_window_s = 0.022,
                                         std::size_t window = 2048);

  /// Throws std::invalid_argument when delta or window is zero.
  void validate() const;
};

struct EnvelopeTrace {
  std::vector<double> values;
  EnvelopeParams params;

  std::size_t size() const { return values.size(); }
};

/// x[n] * (1 + sign(x[n])) / 2, i.e. max(x[n], 0).
std::vector<double> half_wave_rectify(std::span<const double> samples);
std::vector<double> half_wave_rectify(const AudioBuffer& buffer);

/// Root mean square over the whole sequence. Throws EmptyInput.
double rms(std::span<const double> values);

/// Streaming linear-discharge peak follower.
///
/// On a sample at or above the current level the level jumps to it and the
/// slope is reset to level / delta, so a lone peak falls to zero in exactly
/// delta samples. Otherwise the level drops by the slope, but never below
/// the incoming sample.
class EnvelopeDetector {
 public:
  explicit EnvelopeDetector(std::size_t delta);

  /// in and out must have equal sizes. State persists between calls.
  void process(std::span<const double> in, std::span<double> out);
  void reset();

  double level() const { return level_; }

 private:
  std::size_t delta_;
  double level_ = 0.0;
  double slope_ = 0.0;
  bool primed_ = false;
};

/// Runs EnvelopeDetector over `rectified` in blocks of params.window.
/// Throws EmptyInput on an empty sequence.
EnvelopeTrace track_envelope(std::span<const double> rectified,
                             const EnvelopeParams& params);

/// CSV with header `index,rectified,envelope`, one row per sample.
void write_envelope_csv(std::ostream& out, std::span<const double> rectified,
                        const EnvelopeTrace& trace);

}  // namespace syllasplit

#endif  // SYLLASPLIT_ENVELOPE_H_
