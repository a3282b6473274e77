// Copyright 2026 the qchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHAN_RNG_HPP_
#define QCHAN_RNG_HPP_

#include <cstdint>
#include <random>

#include "qchan/linalg.hpp"

namespace qchan {

// Mixes a base seed with a stream counter (splitmix64 finalizer), so workers
// can draw from independent substreams of one user-facing seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random stream. The engine is std::mt19937_64, whose integer
// output is fixed by the standard, and every variate below is produced by an
// explicit bit-level conversion rather than a std:: distribution, so a given
// seed yields the same draw sequence on every platform. Individual floating
// point values may still differ in the last ulp through libm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(derive_seed(seed, stream)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

  // Uniform on the unit sphere (three normals, normalized).
  Vec3 sphere();

  // Uniform in the closed unit ball: sphere direction times U^(1/3) radius.
  Vec3 ball();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qchan

#endif  // QCHAN_RNG_HPP_
