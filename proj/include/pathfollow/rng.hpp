// Copyright 2026 The pathfollow Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace pathfollow {

// Deterministic random streams.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the standard.
// The standard distributions are implementation-defined, so all variates are
// derived here from raw 64-bit draws:
//   uniform01  = (draw >> 11) * 2^-53                 in [0, 1)
//   normal     = Box-Muller on two uniform01 draws (first variate only)
//   index(n)   = draw % n, rejecting draws from the biased tail
//
// Streams are split by hashing: child_seed = mix(parent_seed, tag...) where
// mix is SplitMix64 finalization and string tags are folded with FNV-1a 64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform on [-half_width, half_width); exactly 0 when half_width is 0.
  double symmetric(double half_width);
  double normal();
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

/// Derives an independent stream seed from a parent seed and a tag sequence.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag);
std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag,
                          std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t parent, std::string_view domain,
                          std::string_view name, std::uint64_t index);

}  // namespace pathfollow
