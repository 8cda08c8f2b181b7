// syllasplit/kernels.h

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

#ifndef SYLLASPLIT_KERNELS_H_
#define SYLLASPLIT_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel per-sample loops of the pipeline. The default versions use
// OpenMP; the kernels::serial namespace keeps a plain single-threaded
// reference of each, written straight from the defining formula, that the
// tests and the benchmark compare against.

namespace syllasplit::kernels {

/// Block length of the partial sums in sum_of_squares. Fixed so the result
/// does not depend on the thread count.
inline constexpr std::size_t kReductionBlock = 4096;

/// out[n] = max(in[n], 0). in and out must have the same size; they may alias.
void rectify(std::span<const double> in, std::span<double> out);

/// Sum of in[n]^2, accumulated per kReductionBlock block and then across
/// blocks in index order. Bit-identical for any number of threads.
double sum_of_squares(std::span<const double> in);

/// out[n] = 1 if in[n] > threshold else 0.
void binarize(std::span<const double> in, double threshold,
              std::span<std::uint8_t> out);

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int max_threads();

namespace serial {

/// Three-valued sign: -1, 0 or 1.
double sign(double x);

/// out[n] = in[n] * (1 + sign(in[n])) / 2.
void rectify(std::span<const double> in, std::span<double> out);

/// Left-to-right running sum of squares.
double sum_of_squares(std::span<const double> in);

void binarize(std::span<const double> in, double threshold,
              std::span<std::uint8_t> out);

}  // namespace serial
}  // namespace syllasplit::kernels

#endif  // SYLLASPLIT_KERNELS_H_
