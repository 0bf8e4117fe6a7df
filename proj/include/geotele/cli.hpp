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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "geotele/colorwheel.hpp"
#include "geotele/gates.hpp"
#include "geotele/io.hpp"
#include "geotele/render.hpp"
#include "geotele/verify.hpp"

namespace geotele::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
    if (!out) throw UsageError("failed writing '" + path + "'");
}

struct StyleFlags {
    std::string mode = "redundant";
    double background = kBackgroundHue.nu;
    double angle = 30.0;
    double depth = 0.5;
    int width = 800;
    int height = 800;

    void attach(CLI::App& app) {
        app.add_option("--mode", mode, "redundant or representative")
            ->check(CLI::IsMember({"redundant", "representative"}));
        app.add_option("--background", background, "background hue in [0, 1)");
        app.add_option("--angle", angle, "receding axis angle in degrees");
        app.add_option("--depth", depth, "receding axis foreshortening in [0, 1]");
        app.add_option("--width", width, "SVG width in pixels");
        app.add_option("--height", height, "SVG height in pixels");
    }

    render::CubeStyle style() const {
        render::CubeStyle s;
        s.mode = mode == "representative" ? render::CubeMode::Representative
                                          : render::CubeMode::Redundant;
        s.background = make_hue(background);
        s.projection = {angle, depth};
        s.validate();
        return s;
    }
};

}  // namespace detail

/// Runs one CLI invocation. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric-algebra teleportation toolkit"};
    app.require_subcommand(1, 1);

    auto* teleport_cmd = app.add_subcommand("teleport", "run the teleport network on alpha + beta b1");
    double alpha = 0.0, beta = 0.0;
    std::string teleport_out, circuit_out;
    teleport_cmd->add_option("--alpha", alpha, "scalar coefficient")->required();
    teleport_cmd->add_option("--beta", beta, "b1 coefficient")->required();
    teleport_cmd->add_option("--output,-o", teleport_out, "also write the table to this file");
    teleport_cmd->add_option("--circuit-out", circuit_out, "write the network as circuit JSON");

    auto* render_cmd = app.add_subcommand("render", "draw a 3-bit coefficient table as a cube");
    std::string render_in, render_out;
    detail::StyleFlags render_flags;
    render_cmd->add_option("--input,-i", render_in, "coefficient table JSON")->required();
    render_cmd->add_option("--output,-o", render_out, "SVG file")->required();
    render_flags.attach(*render_cmd);

    auto* lattice_cmd = app.add_subcommand("lattice-render", "draw a lattice of cubes");
    std::string lattice_in, lattice_out, placement = "grid", deformation = "none";
    double spacing = 1.5, amplitude = 0.2, wavelength = 4.0;
    bool lattice_teleport = false;
    detail::StyleFlags lattice_flags;
    lattice_cmd->add_option("--input,-i", lattice_in, "lattice JSON")->required();
    lattice_cmd->add_option("--output,-o", lattice_out, "SVG file")->required();
    lattice_cmd->add_option("--placement", placement, "cell placement preset")
        ->check(CLI::IsMember({"grid"}));
    lattice_cmd->add_option("--spacing", spacing, "grid spacing between cell origins");
    lattice_cmd->add_option("--deformation", deformation, "none or sine-warp")
        ->check(CLI::IsMember({"none", "sine-warp"}));
    lattice_cmd->add_option("--amplitude", amplitude, "sine-warp amplitude");
    lattice_cmd->add_option("--wavelength", wavelength, "sine-warp wavelength");
    lattice_cmd->add_flag("--teleport", lattice_teleport,
                          "apply the teleport network to every cell before drawing");
    lattice_flags.attach(*lattice_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "cross-check against the state-vector oracle");
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    verify_cmd->add_option("--seed", seed, "PRNG seed (mt19937_64)");
    verify_cmd->add_option("--trials", trials, "random trials per check")
        ->check(CLI::PositiveNumber);

    auto* color_cmd = app.add_subcommand("color", "map a real to its hue or a hue to its real");
    double color_x = 0.0, color_nu = 0.0;
    auto* x_opt = color_cmd->add_option("--x", color_x, "real number");
    auto* nu_opt = color_cmd->add_option("--nu", color_nu, "hue in [0, 1)");
    x_opt->excludes(nu_opt);
    color_cmd->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*teleport_cmd) {
            const Multivector result = teleport(alpha, beta);
            const std::string table = io::write_table(result);
            out << table;
            if (!teleport_out.empty()) detail::write_file(teleport_out, table);
            if (!circuit_out.empty()) detail::write_file(circuit_out, io::write_circuit(teleport_network()));
        } else if (*render_cmd) {
            const auto mv = io::read_table(detail::read_file(render_in), 3);
            if (mv.dim() != 3) throw UsageError("render needs a 3-bit table");
            const auto scene = render::cube_scene(mv, render_flags.style());
            detail::write_file(render_out, render::emit_svg(scene, render_flags.width, render_flags.height));
        } else if (*lattice_cmd) {
            auto lat = io::read_lattice(detail::read_file(lattice_in));
            if (lattice_teleport) lat = apply_circuit_cellwise(teleport_network(), lat);
            const auto place = render::grid_placement(lat, spacing);
            const render::Deformation deform =
                deformation == "sine-warp" ? render::sine_warp(amplitude, wavelength) : nullptr;
            const auto scene = render::lattice_scene(lat, lattice_flags.style(), place, deform);
            detail::write_file(lattice_out,
                               render::emit_svg(scene, lattice_flags.width, lattice_flags.height));
        } else if (*verify_cmd) {
            const VerifyReport report = run_verification(seed, trials);
            for (const auto& c : report.checks) {
                out << (c.passed ? "PASS " : "FAIL ") << c.name
                    << "  max_deviation=" << io::format_number(c.max_deviation)
                    << "  tolerance=" << io::format_number(c.tolerance) << "\n";
            }
            out << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
            return report.passed() ? kExitOk : kExitVerifyFailed;
        } else if (*color_cmd) {
            if (*x_opt) {
                const HueValue hue = nu_of_x(color_x);
                out << "x = " << io::format_number(color_x) << "\n"
                    << "nu = " << io::format_number(hue.nu) << "\n"
                    << "rgb = " << to_hex(hue_to_rgb(hue)) << "\n";
            } else {
                const HueValue hue = make_hue(color_nu);
                const double x = x_of_nu(hue);
                out << "nu = " << io::format_number(hue.nu) << "\n"
                    << "x = " << io::format_number(x) << "\n"
                    << "rgb = " << to_hex(hue_to_rgb(hue)) << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace geotele::cli
