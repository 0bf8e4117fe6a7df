// Copyright 2026 The geotele Authors
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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>

#include "geotele/errors.hpp"

/**
 * @file
 * Color-wheel coding of real numbers.
 *
 * A real x is sent to the hue nu in [0, 1) solving
 *
 *     x (1 - sin 2 pi nu) = cos 2 pi nu,
 *
 * i.e. the inverse stereographic projection of x onto the hue circle from the
 * pole nu = 1/4. Equivalently x = cot(pi (1/4 - nu)) = tan(pi (nu - 3/4)).
 * x = 0 lands on nu = 3/4, x = 1 on nu = 0, and |x| -> infinity approaches
 * nu = 1/4 from either side.
 */

namespace geotele {

/// Hue fraction in [0, 1).
struct HueValue {
    double nu = 0.0;

    friend constexpr bool operator==(HueValue, HueValue) = default;
};

struct RgbColor {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    friend constexpr bool operator==(RgbColor, RgbColor) = default;
};

inline HueValue make_hue(double nu) {
    if (!(nu >= 0.0 && nu < 1.0)) throw UsageError("hue must lie in [0, 1)");
    return HueValue{nu};
}

/// Default scene background, the hue of x = 0.
inline constexpr HueValue kBackgroundHue{0.75};

inline HueValue nu_of_x(double x) {
    if (!std::isfinite(x)) throw DomainError("color wheel: x must be finite");
    constexpr double inv_pi = std::numbers::inv_pi;
    double nu;
    if (x >= -1.0 && x < 1.0) {
        // nu in [1/2, 1); exact 3/4 at x = 0.
        nu = 0.75 + std::atan(x) * inv_pi;
        if (nu >= 1.0) nu = std::nextafter(1.0, 0.0);
    } else {
        // nu in [0, 1/4) for x >= 1, (1/4, 1/2] for x < -1.
        nu = 0.25 - std::atan(1.0 / x) * inv_pi;
        if (nu == 0.25) nu = std::nextafter(0.25, x > 0 ? 0.0 : 1.0);
    }
    return HueValue{nu};
}

inline double x_of_nu(HueValue hue) {
    const double nu = hue.nu;
    if (!(nu >= 0.0 && nu < 1.0)) throw UsageError("hue must lie in [0, 1)");
    if (std::abs(nu - 0.25) <= 1e-12) throw DomainError("color wheel: nu = 1/4 is the pole");
    if (nu >= 0.5) return std::tan(std::numbers::pi * (nu - 0.75));
    const double d = std::numbers::pi * (0.25 - nu);
    return std::cos(d) / std::sin(d);
}

/// Fully saturated, full-value HSV color at hue angle 360 nu degrees.
inline RgbColor hue_to_rgb(HueValue hue) {
    const double h = hue.nu * 6.0;
    const int sector = static_cast<int>(std::floor(h)) % 6;
    const double f = h - std::floor(h);
    const double q = 1.0 - f;
    switch (sector) {
        case 0: return {1.0, f, 0.0};
        case 1: return {q, 1.0, 0.0};
        case 2: return {0.0, 1.0, f};
        case 3: return {0.0, q, 1.0};
        case 4: return {f, 0.0, 1.0};
        default: return {1.0, 0.0, q};
    }
}

/// 8-bit channel with round-half-up.
inline std::uint8_t quantize_channel(double c) {
    const double v = std::floor(c * 255.0 + 0.5);
    return static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
}

/// "#RRGGBB", uppercase.
inline std::string to_hex(RgbColor c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", quantize_channel(c.r), quantize_channel(c.g),
                  quantize_channel(c.b));
    return buf;
}

inline std::string color_hex_of_x(double x) { return to_hex(hue_to_rgb(nu_of_x(x))); }

}  // namespace geotele
