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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spintomo {

/// Exact half-integer quantum number, stored as twice its value so that
/// j = 3/2 is the integer 3 and no floating-point identity tests are needed.
class HalfInteger {
  public:
    constexpr HalfInteger() : twice_(0) {}

    static constexpr HalfInteger from_twice(std::int64_t twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger from_int(std::int64_t v) { return from_twice(2 * v); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInteger operator-() const { return from_twice(-twice_); }

    /// "1/2", "-3/2", "2", ...
    std::string to_string() const {
        if (is_integer()) {
            return std::to_string(twice_ / 2);
        }
        return std::to_string(twice_) + "/2";
    }

    /// Accepts "p/2" fractions, plain integers, and exact .5 decimals.
    static HalfInteger parse(const std::string &text);

  private:
    std::int64_t twice_;
};

/// True when m is a valid magnetic number for spin j: |m| <= j and j - m integer.
constexpr bool valid_projection(HalfInteger j, HalfInteger m) {
    if (j.twice() < 0) {
        return false;
    }
    if (m.twice() < -j.twice() || m.twice() > j.twice()) {
        return false;
    }
    return (j.twice() - m.twice()) % 2 == 0;
}

inline void require_projection(HalfInteger j, HalfInteger m, const char *what) {
    if (!valid_projection(j, m)) {
        throw std::invalid_argument(std::string(what) + ": projection " + m.to_string() +
                                    " invalid for spin " + j.to_string());
    }
}

/// Number of basis states 2j + 1.
constexpr int dimension(HalfInteger j) { return static_cast<int>(j.twice()) + 1; }

/// Row index of |j, m> in the descending-m basis (|j, j> first).
constexpr int basis_index(HalfInteger j, HalfInteger m) {
    return static_cast<int>((j.twice() - m.twice()) / 2);
}

/// Inverse of basis_index.
constexpr HalfInteger projection_at(HalfInteger j, int index) {
    return HalfInteger::from_twice(j.twice() - 2 * index);
}

} // namespace spintomo
