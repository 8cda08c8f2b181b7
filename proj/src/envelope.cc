// syllasplit/envelope.cc

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

#include "syllasplit/envelope.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "syllasplit/error.h"
#include "syllasplit/kernels.h"

namespace syllasplit {

EnvelopeParams EnvelopeParams::from_sample_rate(int sample_rate,
                                                double vocoder_window_s,
                                                std::size_t window) {
  if (sample_rate <= 0)
    throw std::invalid_argument("sample rate must be positive");
  if (!(vocoder_window_s > 0.0))
    throw std::invalid_argument("vocoder window must be positive");
  // The small bias keeps exact products such as 8000 * 0.022 = 176 from
  // flooring to 175 after binary rounding.
  const double product = sample_rate * vocoder_window_s;
  EnvelopeParams params;
  params.delta = static_cast<std::size_t>(std::floor(product + 1e-9));
  params.window = window;
  params.vocoder_window_s = vocoder_window_s;
  params.validate();
  return params;
}

void EnvelopeParams::validate() const {
  if (delta < 1)
    throw std::invalid_argument("envelope delta must be at least 1 sample");
  if (window < 1)
    throw std::invalid_argument("analysis window must be at least 1 sample");
}

std::vector<double> half_wave_rectify(std::span<const double> samples) {
  std::vector<double> out(samples.size());
  kernels::rectify(samples, out);
  return out;
}

std::vector<double> half_wave_rectify(const AudioBuffer& buffer) {
  return half_wave_rectify(buffer.samples());
}

double rms(std::span<const double> values) {
  if (values.empty()) throw EmptyInput("rms of an empty sequence");
  return std::sqrt(kernels::sum_of_squares(values) /
                   static_cast<double>(values.size()));
}

EnvelopeDetector::EnvelopeDetector(std::size_t delta) : delta_(delta) {
  if (delta_ < 1) throw std::invalid_argument("delta must be at least 1");
}

void EnvelopeDetector::reset() {
  level_ = 0.0;
  slope_ = 0.0;
  primed_ = false;
}

void EnvelopeDetector::process(std::span<const double> in,
                               std::span<double> out) {
  assert(in.size() == out.size());
  const double delta = static_cast<double>(delta_);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double x = in[i];
    if (!primed_ || x >= level_) {
      level_ = x;
      slope_ = x / delta;
      primed_ = true;
    } else {
      // After delta steps the line is at zero up to rounding residue.
      double next = level_ - slope_;
      if (next <= slope_ * 1e-9) next = 0.0;
      level_ = std::max(next, x);
    }
    out[i] = level_;
  }
}

EnvelopeTrace track_envelope(std::span<const double> rectified,
                             const EnvelopeParams& params) {
  params.validate();
  if (rectified.empty()) throw EmptyInput("envelope of an empty sequence");

  EnvelopeTrace trace{std::vector<double>(rectified.size()), params};
  EnvelopeDetector detector(params.delta);
  std::span<double> out(trace.values);
  for (std::size_t begin = 0; begin < rectified.size(); begin += params.window) {
    const std::size_t count = std::min(params.window, rectified.size() - begin);
    detector.process(rectified.subspan(begin, count), out.subspan(begin, count));
  }
  return trace;
}

void write_envelope_csv(std::ostream& out, std::span<const double> rectified,
                        const EnvelopeTrace& trace) {
  if (rectified.size() != trace.size())
    throw std::invalid_argument("rectified and envelope lengths differ");
  out << "index,rectified,envelope\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    fmt::print(out, "{},{:.9g},{:.9g}\n", i, rectified[i], trace.values[i]);
}

}  // namespace syllasplit
