// Copyright 2026 The spintomo authors
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

#pragma once

#include <cstdint>
#include <random>

namespace spintomo {

/// Seeded random source with distributions implemented in-library, so that
/// a fixed seed produces the same stream on every platform and standard
/// library. (std::normal_distribution et al. are implementation-defined.)
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1), never exactly 0 (safe as a quantile argument).
    double uniform01_open() {
        double u;
        do {
            u = uniform01();
        } while (u == 0.0);
        return u;
    }

    /// Standard normal deviate via the inverse-CDF transform.
    double normal();

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

/// Quantile function of the standard normal distribution (Wichura's AS 241,
/// double precision). Requires 0 < p < 1.
double normal_quantile(double p);

inline double Rng::normal() { return normal_quantile(uniform01_open()); }

} // namespace spintomo
