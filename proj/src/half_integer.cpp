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

#include "spintomo/half_integer.hpp"

#include <cmath>
#include <cstdlib>

namespace spintomo {

HalfInteger HalfInteger::parse(const std::string &text) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("HalfInteger: cannot parse '" + text + "'");
    };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (den != "2" || num.empty()) {
            throw bad();
        }
        std::size_t used = 0;
        const long long p = std::stoll(num, &used);
        if (used != num.size()) {
            throw bad();
        }
        return from_twice(p);
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) {
        throw bad();
    }
    const double doubled = 2.0 * v;
    const double rounded = std::round(doubled);
    if (std::abs(doubled - rounded) > 1e-9) {
        throw bad();
    }
    return from_twice(static_cast<std::int64_t>(rounded));
}

} // namespace spintomo
