// syllasplit/audio_io.h

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

#ifndef SYLLASPLIT_AUDIO_IO_H_
#define SYLLASPLIT_AUDIO_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace syllasplit {

/// Half-open range of sample indices [start, end).
struct SampleRange {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool operator==(const SampleRange&) const = default;
};

/// Mono speech signal. Samples are normalized to [-1, 1]; the buffer is
/// immutable once built, so it can be shared between threads freely.
class AudioBuffer {
 public:
  AudioBuffer() = default;

  /// Throws std::invalid_argument if sample_rate is zero or any sample lies
  /// outside [-1, 1] (NaN included).
  AudioBuffer(std::vector<double> samples, int sample_rate,
              int source_bit_depth = 16);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  int sample_rate() const { return sample_rate_; }
  int source_bit_depth() const { return source_bit_depth_; }

  /// Copy of [range.start, range.end). Throws InvalidSpan when out of bounds.
  AudioBuffer slice(SampleRange range) const;

 private:
  std::vector<double> samples_;
  int sample_rate_ = 44100;
  int source_bit_depth_ = 16;
};

/// Interleaved multi-channel PCM as decoded from a container.
struct MultiChannelAudio {
  std::vector<double> interleaved;
  int channels = 1;
  int sample_rate = 44100;
  int bit_depth = 16;

  std::size_t frames() const {
    return channels > 0 ? interleaved.size() / channels : 0;
  }
};

/// Decodes a RIFF/WAVE file holding 8/16/24/32-bit integer PCM. Samples are
/// divided by 2^(bits-1), so the most negative code maps to exactly -1.0.
/// Accepts WAVE_FORMAT_EXTENSIBLE when its sub-format is PCM.
///
/// Throws FileNotFound, UnsupportedFormat or CorruptHeader.
MultiChannelAudio read_wav(const std::filesystem::path& path);

/// read_wav followed by to_mono.
AudioBuffer load_wav(const std::filesystem::path& path);

/// Per-frame arithmetic mean of the channels.
AudioBuffer to_mono(const MultiChannelAudio& audio);

/// Range from the first to the last sample whose magnitude exceeds
/// silence_threshold * peak. Empty range (0, 0) when nothing exceeds it.
SampleRange find_voiced_range(std::span<const double> samples,
                              double silence_threshold);

/// Drops leading and trailing silence; interior samples are kept.
AudioBuffer trim_silence(const AudioBuffer& buffer, double silence_threshold);

/// Writes buffer[span] as a canonical 44-byte-header, 16-bit mono PCM WAV.
/// Throws InvalidSpan or IoError.
void export_segment(const AudioBuffer& buffer, SampleRange span,
                    const std::filesystem::path& path);

/// 16-bit code used by export_segment: round(x * 32768) clamped to int16.
std::int16_t quantize_pcm16(double sample);

}  // namespace syllasplit

#endif  // SYLLASPLIT_AUDIO_IO_H_
