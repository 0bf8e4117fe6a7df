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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "geotele/clifford.hpp"
#include "geotele/colorwheel.hpp"
#include "geotele/comb.hpp"

/**
 * @file
 * Colored-cube pictures of Cl(3) multivectors and lattices of them, as SVG.
 *
 * Each blade class of a unit cube carries the color of one coefficient:
 * corners <- scalar, edges along x/y/z <- b1/b2/b3, walls in the x-y, x-z,
 * y-z planes <- b1b2, b1b3, b2b3, and the body <- b1b2b3.
 *
 * Geometry uses a cavalier projection: x to the right, y up, and z receding
 * into the page at `angle_deg` with foreshortening `depth`. With that view
 * the faces x=1, y=1 and z=0 face the viewer.
 */

namespace geotele::render {

enum class CubeMode { Redundant, Representative };

enum class ElementClass : std::uint8_t {
    Corner,
    EdgeX,
    EdgeY,
    EdgeZ,
    WallXY,
    WallXZ,
    WallYZ,
    Interior,
};

inline constexpr std::array<ElementClass, 8> kAllClasses = {
    ElementClass::Corner, ElementClass::EdgeX,  ElementClass::EdgeY,  ElementClass::EdgeZ,
    ElementClass::WallXY, ElementClass::WallXZ, ElementClass::WallYZ, ElementClass::Interior,
};

/// Blade whose coefficient colors the class.
constexpr BladeIndex blade_of(ElementClass c) {
    switch (c) {
        case ElementClass::Corner: return {0b000};
        case ElementClass::EdgeX: return {0b001};
        case ElementClass::EdgeY: return {0b010};
        case ElementClass::EdgeZ: return {0b100};
        case ElementClass::WallXY: return {0b011};
        case ElementClass::WallXZ: return {0b101};
        case ElementClass::WallYZ: return {0b110};
        case ElementClass::Interior: return {0b111};
    }
    return {0};
}

constexpr std::string_view class_name(ElementClass c) {
    switch (c) {
        case ElementClass::Corner: return "corner";
        case ElementClass::EdgeX: return "edge-x";
        case ElementClass::EdgeY: return "edge-y";
        case ElementClass::EdgeZ: return "edge-z";
        case ElementClass::WallXY: return "wall-xy";
        case ElementClass::WallXZ: return "wall-xz";
        case ElementClass::WallYZ: return "wall-yz";
        case ElementClass::Interior: return "interior";
    }
    return "";
}

inline std::optional<ElementClass> parse_class_name(std::string_view s) {
    for (auto c : kAllClasses) {
        if (class_name(c) == s) return c;
    }
    return std::nullopt;
}

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend bool operator==(Vec3, Vec3) = default;
};

struct Point2 {
    double x = 0, y = 0;

    friend bool operator==(Point2, Point2) = default;
};

struct Projection {
    double angle_deg = 30.0;
    double depth = 0.5;

    Point2 operator()(Vec3 p) const {
        const double a = angle_deg * std::numbers::pi / 180.0;
        return {p.x + depth * p.z * std::cos(a), p.y + depth * p.z * std::sin(a)};
    }
};

struct CubeStyle {
    CubeMode mode = CubeMode::Redundant;
    HueValue background = kBackgroundHue;
    Projection projection;
    double edge_width = 0.045;
    double corner_radius = 0.06;
    double wall_opacity = 0.55;
    double interior_opacity = 0.35;

    void validate() const {
        if (!(projection.depth >= 0.0 && projection.depth <= 1.0)) {
            throw UsageError("projection depth factor must lie in [0, 1]");
        }
        if (!(corner_radius > 0.0)) throw UsageError("corner radius must be positive");
        if (!(edge_width > 0.0)) throw UsageError("edge width must be positive");
        if (!(background.nu >= 0.0 && background.nu < 1.0)) {
            throw UsageError("background hue must lie in [0, 1)");
        }
    }
};

enum class Shape { Polygon, Line, Disc };

/**
 * One drawable primitive in screen-independent units (y up).
 * Lines use points[0..1] and `size` as stroke width; discs use points[0] as
 * center and `size` as radius.
 */
struct Element {
    Shape shape = Shape::Polygon;
    ElementClass cls = ElementClass::Corner;
    RgbColor color;
    double opacity = 1.0;
    std::vector<Point2> points;
    double size = 0.0;
    std::string cell;  // lattice cell label, empty for a lone cube
};

/// Primitives in back-to-front order plus the background color.
struct Scene {
    RgbColor background = hue_to_rgb(kBackgroundHue);
    std::vector<Element> elements;
};

/// Maps a world-space point to its displaced position. Must not change colors.
using Deformation = std::function<Vec3(Vec3)>;

namespace detail {

// Unit cube vertex with coordinates given by the bits of v (bit 0 = x).
inline Vec3 unit_vertex(unsigned v) {
    return {double(v & 1u), double((v >> 1) & 1u), double((v >> 2) & 1u)};
}

// Walls as vertex loops; `axis` is the normal axis bit, `side` its coordinate.
inline std::array<unsigned, 4> wall_loop(unsigned axis, unsigned side) {
    const unsigned s = side ? axis : 0u;
    switch (axis) {
        case 0b001: return {s | 0b000, s | 0b010, s | 0b110, s | 0b100};
        case 0b010: return {s | 0b000, s | 0b001, s | 0b101, s | 0b100};
        default: return {s | 0b000, s | 0b001, s | 0b011, s | 0b010};
    }
}

inline ElementClass wall_class(unsigned normal_axis) {
    switch (normal_axis) {
        case 0b001: return ElementClass::WallYZ;
        case 0b010: return ElementClass::WallXZ;
        default: return ElementClass::WallXY;
    }
}

inline ElementClass edge_class(unsigned axis) {
    switch (axis) {
        case 0b001: return ElementClass::EdgeX;
        case 0b010: return ElementClass::EdgeY;
        default: return ElementClass::EdgeZ;
    }
}

inline double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(),
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

inline void append_cube(std::vector<Element>& out, const Multivector& mv, const CubeStyle& style,
                        Vec3 origin, const Deformation& deform, const std::string& cell) {
    std::array<Point2, 8> screen;
    for (unsigned v = 0; v < 8; ++v) {
        Vec3 p = origin + unit_vertex(v);
        if (deform) p = deform(p);
        screen[v] = style.projection(p);
    }
    auto color_of = [&](ElementClass c) { return hue_to_rgb(nu_of_x(mv[blade_of(c)])); };

    auto wall = [&](unsigned axis, unsigned side) {
        const auto loop = wall_loop(axis, side);
        const ElementClass c = wall_class(axis);
        out.push_back({Shape::Polygon, c, color_of(c), style.wall_opacity,
                       {screen[loop[0]], screen[loop[1]], screen[loop[2]], screen[loop[3]]}, 0.0,
                       cell});
    };
    auto edge = [&](unsigned from, unsigned axis) {
        const ElementClass c = edge_class(axis);
        out.push_back({Shape::Line, c, color_of(c), 1.0, {screen[from], screen[from | axis]},
                       style.edge_width, cell});
    };
    auto corner = [&](unsigned v) {
        out.push_back({Shape::Disc, ElementClass::Corner, color_of(ElementClass::Corner), 1.0,
                       {screen[v]}, style.corner_radius, cell});
    };
    auto interior = [&] {
        out.push_back({Shape::Polygon, ElementClass::Interior, color_of(ElementClass::Interior),
                       style.interior_opacity,
                       convex_hull({screen.begin(), screen.end()}), 0.0, cell});
    };

    if (style.mode == CubeMode::Redundant) {
        // Back walls: x=0, y=0, z=1.
        wall(0b001, 0);
        wall(0b010, 0);
        wall(0b100, 1);
        interior();
        for (unsigned axis : {0b001u, 0b010u, 0b100u}) {
            for (unsigned v = 0; v < 8; ++v) {
                if ((v & axis) == 0) edge(v, axis);
            }
        }
        // Front walls: x=1, y=1, z=0.
        wall(0b001, 1);
        wall(0b010, 1);
        wall(0b100, 0);
        for (unsigned v = 0; v < 8; ++v) corner(v);
    } else {
        // One representative per class, all meeting at the origin corner.
        wall(0b001, 0);
        wall(0b010, 0);
        interior();
        edge(0, 0b001);
        edge(0, 0b010);
        edge(0, 0b100);
        wall(0b100, 0);
        corner(0);
    }
}

}  // namespace detail

/// Colored cube for a Cl(3) multivector.
inline Scene cube_scene(const Multivector& mv, const CubeStyle& style = {}) {
    if (mv.dim() != 3) throw UsageError("cube_scene needs a dimension-3 multivector");
    style.validate();
    Scene scene{hue_to_rgb(style.background), {}};
    detail::append_cube(scene.elements, mv, style, {}, nullptr, "");
    return scene;
}

/// Cell origin in world space, per occupied cell.
using Placement = std::map<CellIndex, Vec3>;

/// Cell (i, j, k) at spacing * (i, j, k); missing trailing components are 0.
inline Placement grid_placement(const LatticeMultivector& lat, double spacing = 1.5) {
    Placement p;
    for (const auto& [n, mv] : lat.cells()) {
        p.emplace(n, Vec3{spacing * n.at(0), spacing * n.at(1), spacing * n.at(2)});
    }
    return p;
}

/// Smooth bend of space; shared vertices of neighbouring cells move together.
inline Deformation sine_warp(double amplitude = 0.2, double wavelength = 4.0) {
    return [amplitude, wavelength](Vec3 p) {
        const double w = 2.0 * std::numbers::pi / wavelength;
        return Vec3{p.x + amplitude * std::sin(w * p.y), p.y + amplitude * std::sin(w * p.x),
                    p.z + amplitude * std::sin(w * (p.x + p.y))};
    };
}

/**
 * One cube per occupied cell, cells painted far-to-near by their placement
 * (larger z first, then smaller y, then smaller x, then cell index).
 * Cube scenes are built concurrently; the composed order is deterministic.
 */
inline Scene lattice_scene(const LatticeMultivector& lat, const CubeStyle& style,
                           const Placement& placement, const Deformation& deform = nullptr) {
    style.validate();
    struct Item {
        const CellIndex* cell;
        const Multivector* mv;
        Vec3 origin;
    };
    std::vector<Item> items;
    for (const auto& [n, mv] : lat.cells()) {
        const auto it = placement.find(n);
        if (it == placement.end()) throw UsageError("no placement for lattice cell " + n.str());
        items.push_back({&n, &mv, it->second});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.origin.z != b.origin.z) return a.origin.z > b.origin.z;
        if (a.origin.y != b.origin.y) return a.origin.y < b.origin.y;
        return a.origin.x < b.origin.x;
    });

    std::vector<std::vector<Element>> parts(items.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            detail::append_cube(parts[i], *items[i].mv, style, items[i].origin, deform,
                                items[i].cell->str());
        }
    };
    const unsigned threads = static_cast<unsigned>(
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), items.size()));
    if (threads <= 1 || items.size() < 16) {
        work(0, items.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (items.size() + threads - 1) / threads;
        for (std::size_t b = 0; b < items.size(); b += chunk) {
            pool.emplace_back(work, b, std::min(items.size(), b + chunk));
        }
    }

    Scene scene{hue_to_rgb(style.background), {}};
    for (auto& part : parts) {
        for (auto& e : part) scene.elements.push_back(std::move(e));
    }
    return scene;
}

namespace detail {

inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

inline std::string class_attr(const Element& e) {
    std::string s(class_name(e.cls));
    if (!e.cell.empty()) {
        s += " cell-";
        for (char ch : e.cell) s.push_back(ch == ',' ? '_' : ch);
    }
    return s;
}

}  // namespace detail

/**
 * Serializes a scene as an SVG 1.1 document of the given pixel size. The
 * scene is scaled uniformly to fit with a 5% margin and flipped to y-down.
 * Output depends only on the inputs.
 */
inline std::string emit_svg(const Scene& scene, int width, int height) {
    if (width <= 0 || height <= 0) throw UsageError("SVG dimensions must be positive");

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& e : scene.elements) {
        const double pad = e.shape == Shape::Polygon ? 0.0 : e.size;
        for (const auto& p : e.points) {
            if (first) {
                xmin = p.x - pad, xmax = p.x + pad, ymin = p.y - pad, ymax = p.y + pad;
                first = false;
            } else {
                xmin = std::min(xmin, p.x - pad), xmax = std::max(xmax, p.x + pad);
                ymin = std::min(ymin, p.y - pad), ymax = std::max(ymax, p.y + pad);
            }
        }
    }
    const double margin = 0.05;
    const double spanx = std::max(xmax - xmin, 1e-9);
    const double spany = std::max(ymax - ymin, 1e-9);
    const double scale = std::min(width * (1 - 2 * margin) / spanx, height * (1 - 2 * margin) / spany);
    const double offx = (width - scale * spanx) / 2;
    const double offy = (height - scale * spany) / 2;
    auto sx = [&](double x) { return detail::fmt_num(offx + (x - xmin) * scale); };
    auto sy = [&](double y) { return detail::fmt_num(height - (offy + (y - ymin) * scale)); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    out += "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" fill=\"" + to_hex(scene.background) +
           "\"/>\n";
    for (const auto& e : scene.elements) {
        const std::string cls = detail::class_attr(e);
        const std::string hex = to_hex(e.color);
        switch (e.shape) {
            case Shape::Polygon: {
                out += "  <polygon class=\"" + cls + "\" points=\"";
                for (std::size_t i = 0; i < e.points.size(); ++i) {
                    if (i) out += ' ';
                    out += sx(e.points[i].x) + "," + sy(e.points[i].y);
                }
                out += "\" fill=\"" + hex + "\" fill-opacity=\"" + detail::fmt_num(e.opacity) +
                       "\" stroke=\"none\"/>\n";
                break;
            }
            case Shape::Line:
                out += "  <line class=\"" + cls + "\" x1=\"" + sx(e.points[0].x) + "\" y1=\"" +
                       sy(e.points[0].y) + "\" x2=\"" + sx(e.points[1].x) + "\" y2=\"" +
                       sy(e.points[1].y) + "\" stroke=\"" + hex + "\" stroke-opacity=\"" +
                       detail::fmt_num(e.opacity) + "\" stroke-width=\"" +
                       detail::fmt_num(e.size * scale) + "\" stroke-linecap=\"round\"/>\n";
                break;
            case Shape::Disc:
                out += "  <circle class=\"" + cls + "\" cx=\"" + sx(e.points[0].x) + "\" cy=\"" +
                       sy(e.points[0].y) + "\" r=\"" + detail::fmt_num(e.size * scale) +
                       "\" fill=\"" + hex + "\" fill-opacity=\"" + detail::fmt_num(e.opacity) +
                       "\"/>\n";
                break;
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace geotele::render
