// Copyright 2026 The ionlattice Authors
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

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace ionlattice {

using Rational = boost::rational<std::int64_t>;

// Exact value of a decimal literal such as "0.7" or "-1.25e-3".
Rational parse_decimal_rational(std::string_view text);

inline double to_double(const Rational &r) {
    return boost::rational_cast<double>(r);
}

// "n/d", or "n" when d == 1.
std::string to_string(const Rational &r);

}  // namespace ionlattice
