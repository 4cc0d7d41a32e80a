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

#include "ionlattice/rational.h"

#include <cctype>
#include <stdexcept>

namespace ionlattice {

Rational parse_decimal_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("cannot parse '" + std::string(text) + "' as a decimal"); };
    size_t k = 0;
    bool negative = false;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        negative = text[k] == '-';
        ++k;
    }
    std::int64_t digits = 0;
    int scale = 0;
    bool any = false;
    bool after_point = false;
    for (; k < text.size(); ++k) {
        char c = text[k];
        if (c == '.' && !after_point) {
            after_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (digits > (INT64_MAX - 9) / 10) {
                throw fail();
            }
            digits = digits * 10 + (c - '0');
            scale -= after_point ? 1 : 0;
            any = true;
        } else {
            break;
        }
    }
    if (!any) {
        throw fail();
    }
    if (k < text.size()) {
        if (text[k] != 'e' && text[k] != 'E') {
            throw fail();
        }
        ++k;
        bool exp_negative = false;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
            exp_negative = text[k] == '-';
            ++k;
        }
        int exponent = 0;
        bool exp_any = false;
        for (; k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])); ++k) {
            exponent = exponent * 10 + (text[k] - '0');
            exp_any = true;
            if (exponent > 18) {
                throw fail();
            }
        }
        if (!exp_any || k != text.size()) {
            throw fail();
        }
        scale += exp_negative ? -exponent : exponent;
    }
    if (scale < -18 || scale > 18) {
        throw fail();
    }
    std::int64_t power = 1;
    for (int s = 0; s < std::abs(scale); ++s) {
        power *= 10;
    }
    Rational r = scale >= 0 ? Rational(digits) * power : Rational(digits, power);
    return negative ? -r : r;
}

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ionlattice
