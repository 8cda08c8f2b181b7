// syllasplit/kernels.cc

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

#include "syllasplit/kernels.h"

#include <algorithm>
#include <cassert>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syllasplit::kernels {

void rectify(std::span<const double> in, std::span<double> out) {
  assert(in.size() == out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = in[i] > 0.0 ? in[i] : 0.0;
}

double sum_of_squares(std::span<const double> in) {
  const std::size_t blocks = (in.size() + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  const std::ptrdiff_t nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(in.size(), begin + kReductionBlock);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += in[i] * in[i];
    partial[b] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void binarize(std::span<const double> in, double threshold,
              std::span<std::uint8_t> out) {
  assert(in.size() == out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = in[i] > threshold ? 1 : 0;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

double sign(double x) {
  if (x < 0.0) return -1.0;
  if (x > 0.0) return 1.0;
  return 0.0;
}

void rectify(std::span<const double> in, std::span<double> out) {
  assert(in.size() == out.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i] = in[i] * (1.0 + sign(in[i])) / 2.0;
}

double sum_of_squares(std::span<const double> in) {
  double total = 0.0;
  for (double x : in) total += x * x;
  return total;
}

void binarize(std::span<const double> in, double threshold,
              std::span<std::uint8_t> out) {
  assert(in.size() == out.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i] = in[i] > threshold ? 1 : 0;
}

}  // namespace serial
}  // namespace syllasplit::kernels
