// Command-line front end: direction/solid reports, orbit partitions,
// sequence transformation, normal zones, clock rendering, scripts, and the
// built-in worked-example suite.
//
// Exit codes: 0 success, 1 usage error, 2 parse/domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laban/laban.hpp"

namespace {

std::string pad(const std::string& text, std::size_t width) {
    std::string out = text;
    while (out.size() < width) {
        out.push_back(' ');
    }
    return out;
}

std::string vertex_label(int v) { return "v" + std::to_string(v + 1); }

laban::Config load_config_or_default(const std::string& path) {
    laban::Config config = path.empty() ? laban::default_config() : laban::load_config(path);
    for (const std::string& warning : config.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    return config;
}

void run_info(const std::string& solid_name, bool as_json) {
    const laban::Polyhedron& p =
        laban::Polyhedron::canonical(laban::parse_solid(solid_name));
    if (as_json) {
        std::cout << p.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "solid: " << laban::to_string(p.kind()) << "\n";
    std::cout << "vertices: " << p.vertex_count() << "\n";
    std::cout << "edges: " << p.edges().size() << "\n";
    std::cout << "rotation group order: " << p.rotation_group().order() << "\n";
    std::cout << "full symmetry group order: " << p.full_symmetry_group().order() << "\n";
    std::cout << pad("vertex", 8) << pad("token", 7) << pad("coordinates", 27)
              << pad("neighbors", 21) << "antipode\n";
    for (int v = 0; v < p.vertex_count(); ++v) {
        const laban::Vec3& c = p.coordinate(v);
        char coords[64];
        std::snprintf(coords, sizeof(coords), "(%7.3f, %7.3f, %7.3f)", c.x, c.y, c.z);
        std::string nbrs;
        for (int u : p.neighbors(v)) {
            if (!nbrs.empty()) {
                nbrs.push_back(' ');
            }
            nbrs += vertex_label(u);
        }
        std::cout << pad(vertex_label(v), 8) << pad(p.token_at(v), 7) << pad(coords, 27)
                  << pad(nbrs, 21) << vertex_label(p.antipode(v)) << "\n";
    }
}

std::vector<int> parse_vertex_list(const std::string& spec, int vertex_count) {
    std::vector<int> vertices;
    std::string current;
    auto flush = [&]() {
        if (current.empty()) {
            throw laban::error("empty entry in vertex list '" + spec + "'");
        }
        for (char c : current) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw laban::error("vertex list entries must be 1-based integers, got '" +
                                   current + "'");
            }
        }
        const int v = std::stoi(current) - 1;
        if (v < 0 || v >= vertex_count) {
            throw laban::out_of_range_error("vertex " + current + " outside v1..v" +
                                            std::to_string(vertex_count));
        }
        vertices.push_back(v);
        current.clear();
    };
    for (char c : spec) {
        if (c == ',') {
            flush();
        } else {
            current.push_back(c);
        }
    }
    flush();
    return vertices;
}

void run_orbits(const std::string& solid_name, const std::string& group_name,
                const std::string& stab_spec, bool setwise, const std::string& stab_plane) {
    const laban::Polyhedron& p =
        laban::Polyhedron::canonical(laban::parse_solid(solid_name));
    const laban::PermGroup& base =
        (group_name == "rot") ? p.rotation_group() : p.full_symmetry_group();

    laban::PermGroup group = base;
    if (!stab_plane.empty()) {
        if (p.kind() != laban::SolidKind::icosahedron) {
            throw laban::unsupported_solid_error("--stab-plane requires the icosahedron");
        }
        const laban::BodyPlane& plane =
            laban::body_plane(laban::parse_plane_name(stab_plane));
        group = base.pointwise_set_stabilizer(plane.fixed_vertices);
    } else if (!stab_spec.empty()) {
        const std::vector<int> vertices = parse_vertex_list(stab_spec, p.vertex_count());
        if (setwise) {
            group = base.setwise_stabilizer(vertices);
        } else if (vertices.size() == 1) {
            group = base.point_stabilizer(vertices.front());
        } else {
            group = base.pointwise_set_stabilizer(vertices);
        }
    } else if (setwise) {
        throw laban::error("--setwise requires --stab");
    }

    const laban::OrbitPartition partition = group.orbit_partition();
    std::string orbits;
    for (const auto& block : partition.nontrivial_blocks()) {
        orbits += "(";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) {
                orbits.push_back(' ');
            }
            orbits += vertex_label(block[i]);
        }
        orbits += ")";
    }
    if (orbits.empty()) {
        orbits = "(none)";
    }
    std::cout << "orbits: " << orbits << "\n";
    const std::vector<int> fixed = partition.singletons();
    if (!fixed.empty()) {
        std::string line;
        for (int v : fixed) {
            if (!line.empty()) {
                line.push_back(' ');
            }
            line += vertex_label(v);
        }
        std::cout << "fixed: " << line << "\n";
    }
}

void run_invert(const std::string& expr, const std::string& sequence_text,
                const std::string& scale_name, const laban::Config& config) {
    // A user config may omit "primary"; only that name falls back to the
    // built-in ordering. Any other unknown name is reported, not masked.
    const laban::Scale* scale = nullptr;
    if (config.has_scale(scale_name)) {
        scale = &config.scale(scale_name);
    } else if (scale_name == "primary") {
        scale = &laban::default_scale();
    } else {
        scale = &config.scale(scale_name);  // throws invalid_scale_error
    }
    const laban::Device device = laban::parse_device_expr(expr, *scale);
    const laban::MovementSequence sequence = laban::parse_sequence(sequence_text);
    const laban::MovementSequence result = laban::apply_sequence(device, sequence);
    std::cout << laban::serialize_sequence(result) << "\n";

    std::string fixed;
    for (const laban::Direction& step : sequence.steps) {
        if (device.perm(step.vertex) == step.vertex) {
            if (!fixed.empty()) {
                fixed.push_back(' ');
            }
            fixed += step.token;
        }
    }
    if (!fixed.empty()) {
        std::cout << "note: unchanged (fixed by " << device.name << "): " << fixed << "\n";
    }
}

void run_zones() {
    const laban::Polyhedron& icosa =
        laban::Polyhedron::canonical(laban::SolidKind::icosahedron);
    std::cout << pad("Limb", 11) << pad("Standard", 10) << "Normal Range\n";
    for (laban::Limb limb : laban::all_limbs()) {
        const laban::NormalZone zone = laban::normal_zone(icosa, limb);
        std::string range;
        for (const laban::Direction& d : zone.range) {
            if (!range.empty()) {
                range.push_back(' ');
            }
            range += d.token;
        }
        std::cout << pad(laban::display_name(limb), 11) << pad(zone.standard.token, 10)
                  << range << "\n";
    }
}

void run_clock(const std::string& scale_name, const std::string& form_name,
               const std::string& render_name, const std::string& show_spec,
               const std::string& output, const std::string& apply_expr,
               const laban::Config& config) {
    const laban::Scale* scale = nullptr;
    std::optional<laban::TraceForm> form;
    if (!form_name.empty()) {
        const laban::ConfigTraceForm& entry = config.trace_form(form_name);
        scale = &config.scale(entry.scale_name);
        form = entry.form;
        if (!entry.note.empty()) {
            std::cerr << "note: trace form '" << form_name << "': " << entry.note << "\n";
        }
    } else {
        scale = &config.scale(scale_name);
    }

    if (!apply_expr.empty()) {
        if (!form) {
            throw laban::error("--apply requires --form");
        }
        const laban::Device device = laban::parse_device_expr(apply_expr, *scale);
        form = laban::apply_device_on_clock(*scale, device, *form);
    }

    laban::ShowFlags show;
    if (!show_spec.empty()) {
        show = laban::parse_show_flags(show_spec);
    }

    const laban::RenderFormat format = laban::parse_render_format(render_name);
    const laban::TraceForm* form_ptr = form ? &*form : nullptr;
    const std::string rendered = (format == laban::RenderFormat::ascii)
                                     ? laban::render_clock_ascii(*scale, form_ptr, show)
                                     : laban::render_clock_svg(*scale, form_ptr, show);
    if (format == laban::RenderFormat::svg && !output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            throw laban::error("cannot write to '" + output + "'");
        }
        out << rendered;
        std::cout << "wrote " << output << "\n";
    } else {
        std::cout << rendered;
    }
}

int run_check() {
    const std::vector<laban::CheckResult> results = laban::run_selfcheck();
    int failures = 0;
    for (const laban::CheckResult& result : results) {
        if (result.ok) {
            std::cout << "ok   " << result.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << result.name << ": " << result.detail << "\n";
        }
    }
    std::cout << results.size() << " checks, " << failures << " failed\n";
    return failures == 0 ? 0 : 2;
}

void run_script_file(const std::string& path, const laban::Config& config) {
    std::ifstream in(path);
    if (!in) {
        throw laban::error("cannot open script file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const laban::Script script = laban::parse_script(buffer.str());
    const laban::ScriptResult result = laban::run_script(script, config);
    for (const auto& [name, sequence] : result.sequences) {
        std::cout << "seq " << name << " = " << laban::serialize_sequence(sequence) << "\n";
    }
    for (const auto& [name, entry] : result.forms) {
        std::cout << "form " << name << " @ " << entry.scale_name << " =";
        for (const laban::ClockPosition& p : entry.form.path) {
            std::cout << ' ' << p.value();
        }
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laban movement analysis: spatial directions, choreographic devices, and "
                 "the twelve-position scale clock"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "Path to a scales/trace-forms JSON config (default: bundled)");

    auto* info = app.add_subcommand("info", "Print a solid's vertex and adjacency tables");
    std::string info_solid;
    bool info_json = false;
    info->add_option("solid", info_solid, "octahedron | cube | icosahedron")->required();
    info->add_flag("--json", info_json, "Emit the tables as JSON");

    auto* orbits = app.add_subcommand("orbits", "Print a group's orbit partition");
    std::string orbits_solid;
    std::string orbits_group = "full";
    std::string orbits_stab;
    std::string orbits_plane;
    bool orbits_setwise = false;
    orbits->add_option("solid", orbits_solid, "octahedron | cube | icosahedron")->required();
    orbits->add_option("--group", orbits_group, "rot | full (default full)")
        ->check(CLI::IsMember({"rot", "full"}));
    orbits->add_option("--stab", orbits_stab,
                       "Restrict to the stabilizer of these 1-based vertices (comma list)");
    orbits->add_flag("--setwise", orbits_setwise,
                     "Stabilize the --stab vertices as a set rather than pointwise");
    orbits->add_option("--stab-plane", orbits_plane,
                       "Restrict to the pointwise stabilizer of a body plane "
                       "(sagittal | horizontal | vertical)");

    auto* invert = app.add_subcommand(
        "invert", "Transform a direction sequence by a device expression");
    std::string invert_expr;
    std::string invert_sequence;
    std::string invert_scale = "primary";
    invert->add_option("device", invert_expr, "e.g. fb, lr.lh, octa, diam, T3, fb.lr")
        ->required();
    invert->add_option("sequence", invert_sequence, "Whitespace-separated direction tokens")
        ->required();
    invert->add_option("--scale", invert_scale,
                       "Scale grounding transpositions (default primary)");

    app.add_subcommand("zones", "Print the four-limb normal-zone table");

    auto* clock = app.add_subcommand("clock", "Render the twelve-position scale clock");
    std::string clock_scale = "primary";
    std::string clock_form;
    std::string clock_render = "ascii";
    std::string clock_show;
    std::string clock_output;
    std::string clock_apply;
    clock->add_option("--scale", clock_scale, "Scale name from the config (default primary)");
    clock->add_option("--form", clock_form, "Trace form name from the config");
    clock->add_option("--render", clock_render, "ascii | svg (default ascii)");
    clock->add_option("--show", clock_show,
                      "Comma list of labels,cosets,diameters,path (default labels,path)");
    clock->add_option("--output", clock_output, "Write SVG to this file instead of stdout");
    clock->add_option("--apply", clock_apply,
                      "Device expression applied to the form before rendering");

    app.add_subcommand("check", "Run the built-in worked-example suite");

    auto* script = app.add_subcommand("script", "Run a movement script file");
    std::string script_path;
    script->add_option("file", script_path, "Script path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        // Load (and thereby validate) the config up front so a broken
        // --config file is an error for every subcommand.
        const laban::Config config = load_config_or_default(config_path);
        if (app.got_subcommand("info")) {
            run_info(info_solid, info_json);
        } else if (app.got_subcommand("orbits")) {
            run_orbits(orbits_solid, orbits_group, orbits_stab, orbits_setwise, orbits_plane);
        } else if (app.got_subcommand("invert")) {
            run_invert(invert_expr, invert_sequence, invert_scale, config);
        } else if (app.got_subcommand("zones")) {
            run_zones();
        } else if (app.got_subcommand("clock")) {
            run_clock(clock_scale, clock_form, clock_render, clock_show, clock_output,
                      clock_apply, config);
        } else if (app.got_subcommand("check")) {
            return run_check();
        } else if (app.got_subcommand("script")) {
            run_script_file(script_path, config);
        }
    } catch (const laban::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const laban::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
