// syllasplit/audio_io.cc

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

#include "syllasplit/audio_io.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#include <fmt/core.h>

#include "syllasplit/error.h"
#include "log.h"

namespace syllasplit {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<char>& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::vector<char>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8)
    out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

void put_tag(std::vector<char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

// Decodes one little-endian integer PCM sample to [-1, 1].
double decode_sample(const std::uint8_t* p, int bits) {
  switch (bits) {
    case 8:
      // 8-bit WAV is unsigned with a 128 offset.
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16:
      return static_cast<std::int16_t>(read_u16(p)) / 32768.0;
    case 24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case 32:
      return static_cast<std::int32_t>(read_u32(p)) / 2147483648.0;
    default:
      throw UnsupportedFormat(fmt::format("unsupported bit depth {}", bits));
  }
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw FileNotFound(fmt::format("{}: no such file", path.string()));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("{}: cannot open", path.string()));
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

}  // namespace

AudioBuffer::AudioBuffer(std::vector<double> samples, int sample_rate,
                         int source_bit_depth)
    : samples_(std::move(samples)),
      sample_rate_(sample_rate),
      source_bit_depth_(source_bit_depth) {
  if (sample_rate_ <= 0)
    throw std::invalid_argument("sample rate must be positive");
  for (double s : samples_) {
    if (!(s >= -1.0 && s <= 1.0))
      throw std::invalid_argument(
          fmt::format("sample {} outside [-1, 1]", s));
  }
}

AudioBuffer AudioBuffer::slice(SampleRange range) const {
  if (range.start > range.end || range.end > samples_.size())
    throw InvalidSpan(fmt::format("range [{}, {}) outside buffer of {} samples",
                                  range.start, range.end, samples_.size()));
  return AudioBuffer(
      std::vector<double>(samples_.begin() + range.start,
                          samples_.begin() + range.end),
      sample_rate_, source_bit_depth_);
}

MultiChannelAudio read_wav(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = slurp(path);
  const std::string name = path.string();

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw CorruptHeader(name + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  std::uint32_t sample_rate = 0;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    std::size_t size = read_u32(chunk + 4);
    std::size_t body = pos + 8;
    std::size_t available = bytes.size() - body;

    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > available)
        throw CorruptHeader(name + ": truncated fmt chunk");
      const std::uint8_t* f = bytes.data() + body;
      format = read_u16(f);
      channels = read_u16(f + 2);
      sample_rate = read_u32(f + 4);
      block_align = read_u16(f + 12);
      bits = read_u16(f + 14);
      if (format == kFormatExtensible) {
        // The sub-format GUID starts at offset 24; its first two bytes carry
        // the plain format tag.
        if (size < 40) throw CorruptHeader(name + ": truncated extensible fmt");
        format = read_u16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (size > available) {
        logger().warn("{}: data chunk claims {} bytes, {} present", name,
                      size, available);
        size = available;
      }
      data = bytes.data() + body;
      data_size = size;
      break;
    }
    pos = body + size + (size & 1);
  }

  if (!have_fmt) throw CorruptHeader(name + ": missing fmt chunk");
  if (data == nullptr) throw CorruptHeader(name + ": missing data chunk");
  if (format != kFormatPcm)
    throw UnsupportedFormat(
        fmt::format("{}: format tag {} is not integer PCM", name, format));
  if (bits != 8 && bits != 16 && bits != 24 && bits != 32)
    throw UnsupportedFormat(fmt::format("{}: {}-bit PCM", name, bits));
  if (channels == 0 || sample_rate == 0)
    throw CorruptHeader(name + ": zero channels or sample rate");
  const std::size_t bytes_per_sample = bits / 8;
  if (block_align != channels * bytes_per_sample)
    throw CorruptHeader(fmt::format("{}: block align {} inconsistent", name,
                                    block_align));

  MultiChannelAudio audio;
  audio.channels = channels;
  audio.sample_rate = static_cast<int>(sample_rate);
  audio.bit_depth = bits;
  const std::size_t frames = data_size / block_align;
  audio.interleaved.resize(frames * channels);
  for (std::size_t i = 0; i < audio.interleaved.size(); ++i)
    audio.interleaved[i] = decode_sample(data + i * bytes_per_sample, bits);
  return audio;
}

AudioBuffer load_wav(const std::filesystem::path& path) {
  return to_mono(read_wav(path));
}

AudioBuffer to_mono(const MultiChannelAudio& audio) {
  if (audio.channels < 1)
    throw std::invalid_argument("channel count must be at least 1");
  if (audio.channels == 1)
    return AudioBuffer(audio.interleaved, audio.sample_rate, audio.bit_depth);

  const std::size_t frames = audio.frames();
  std::vector<double> mono(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (int c = 0; c < audio.channels; ++c)
      sum += audio.interleaved[f * audio.channels + c];
    mono[f] = sum / audio.channels;
  }
  return AudioBuffer(std::move(mono), audio.sample_rate, audio.bit_depth);
}

SampleRange find_voiced_range(std::span<const double> samples,
                              double silence_threshold) {
  double peak = 0.0;
  for (double s : samples) peak = std::max(peak, std::abs(s));
  const double level = silence_threshold * peak;

  auto loud = [level](double s) { return std::abs(s) > level; };
  auto first = std::find_if(samples.begin(), samples.end(), loud);
  if (first == samples.end()) return {};
  auto last = std::find_if(samples.rbegin(), samples.rend(), loud);
  return {static_cast<std::size_t>(first - samples.begin()),
          static_cast<std::size_t>(samples.rend() - last)};
}

AudioBuffer trim_silence(const AudioBuffer& buffer, double silence_threshold) {
  return buffer.slice(find_voiced_range(buffer.samples(), silence_threshold));
}

std::int16_t quantize_pcm16(double sample) {
  const double code = std::round(sample * 32768.0);
  return static_cast<std::int16_t>(std::clamp(code, -32768.0, 32767.0));
}

void export_segment(const AudioBuffer& buffer, SampleRange span,
                    const std::filesystem::path& path) {
  if (span.start > span.end || span.end > buffer.size())
    throw InvalidSpan(fmt::format("span [{}, {}) outside buffer of {} samples",
                                  span.start, span.end, buffer.size()));

  const std::uint32_t data_bytes = static_cast<std::uint32_t>(span.size() * 2);
  const std::uint32_t rate = static_cast<std::uint32_t>(buffer.sample_rate());
  std::vector<char> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, rate);
  put_u32(out, rate * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (std::size_t i = span.start; i < span.end; ++i)
    put_u16(out, static_cast<std::uint16_t>(quantize_pcm16(buffer.samples()[i])));

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("{}: cannot open for writing", path.string()));
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError(fmt::format("{}: write failed", path.string()));
}

}  // namespace syllasplit
