#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "laban/errors.hpp"
#include "laban/polyhedra.hpp"
#include "laban/scale.hpp"

namespace laban {

enum class RenderFormat { ascii, svg };

inline RenderFormat parse_render_format(const std::string& name) {
    if (name == "ascii") return RenderFormat::ascii;
    if (name == "svg") return RenderFormat::svg;
    throw error("unknown render format '" + name + "' (expected ascii or svg)");
}

// Which layers to draw on the clock.
struct ShowFlags {
    bool labels = true;
    bool cosets = false;
    bool diameters = false;
    bool path = true;
};

inline ShowFlags parse_show_flags(const std::string& spec) {
    ShowFlags flags{false, false, false, false};
    std::string current;
    auto apply = [&](const std::string& flag) {
        if (flag.empty()) return;
        if (flag == "labels") flags.labels = true;
        else if (flag == "cosets") flags.cosets = true;
        else if (flag == "diameters") flags.diameters = true;
        else if (flag == "path") flags.path = true;
        else throw error("unknown show flag '" + flag +
                         "' (expected labels, cosets, diameters, path)");
    };
    for (char c : spec) {
        if (c == ',') {
            apply(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    apply(current);
    return flags;
}

struct RenderSpec {
    RenderFormat format = RenderFormat::ascii;
    ShowFlags show;
    std::string output;  // SVG destination; empty = stdout
};

namespace detail {

// Position p sits at angle 30°·p measured clockwise from twelve o'clock.
inline double clock_x(int p, double radius) {
    return radius * std::sin(p * M_PI / 6.0);
}
inline double clock_y(int p, double radius) {
    return -radius * std::cos(p * M_PI / 6.0);
}

inline std::string fixed2(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    std::string s = buf;
    if (s == "-0.00") {
        s = "0.00";
    }
    return s;
}

inline std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Wraps a space-separated item list at 78 columns with indented
// continuations so every output line stays inside 80 columns.
inline void append_wrapped(std::string& out, const std::string& head,
                           const std::vector<std::string>& items) {
    std::string line = head;
    bool any = false;
    for (const std::string& item : items) {
        if (any && line.size() + 1 + item.size() > 78) {
            out += line;
            out.push_back('\n');
            line = "  " + item;
        } else {
            if (!line.empty() && line.back() != ' ') {
                line.push_back(' ');
            }
            line += item;
            any = true;
        }
    }
    out += line;
    out.push_back('\n');
}

inline std::string marker_text(const Scale& scale, int p, bool labels) {
    const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
    if (!labels) {
        return std::to_string(p);
    }
    return std::to_string(p) + ":" + icosa.token_at(scale.vertex_at(p));
}

}  // namespace detail

// Text clock: twelve markers on a ring (position 0 at the top, clockwise),
// then optional path/coset/diameter sections. Lines never exceed 80 columns.
inline std::string render_clock_ascii(const Scale& scale, const TraceForm* form,
                                      const ShowFlags& show) {
    constexpr int width = 72;
    constexpr int height = 17;
    constexpr double cx = 35.0;
    constexpr double cy = 8.0;
    constexpr double rx = 26.0;
    constexpr double ry = 7.2;

    std::vector<std::string> grid(height, std::string(width, ' '));
    for (int p = 0; p < 12; ++p) {
        const std::string text = detail::marker_text(scale, p, show.labels);
        const double fx = cx + detail::clock_x(p, rx);
        const double fy = cy + detail::clock_y(p, ry);
        int row = static_cast<int>(std::lround(fy));
        int col = static_cast<int>(std::lround(fx)) - static_cast<int>(text.size()) / 2;
        row = std::min(std::max(row, 0), height - 1);
        col = std::min(std::max(col, 0), width - static_cast<int>(text.size()));
        for (std::size_t i = 0; i < text.size(); ++i) {
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) + i] = text[i];
        }
    }

    std::string out = "clock: " + scale.name() + "\n";
    for (const std::string& row : grid) {
        std::string trimmed = row;
        while (!trimmed.empty() && trimmed.back() == ' ') {
            trimmed.pop_back();
        }
        out += trimmed;
        out.push_back('\n');
    }

    if (form != nullptr && show.path) {
        std::vector<std::string> items;
        for (std::size_t i = 0; i < form->path.size(); ++i) {
            std::string item = std::to_string(form->path[i].value());
            if (i + 1 < form->path.size()) {
                item += " ->";
            }
            items.push_back(item);
        }
        detail::append_wrapped(out, "path " + form->name + ":", items);
    }
    if (show.cosets) {
        for (int step : {4, 3}) {
            std::vector<std::string> items;
            for (const auto& coset : coset_family(step)) {
                std::string item = "{";
                for (std::size_t i = 0; i < coset.size(); ++i) {
                    if (i > 0) {
                        item.push_back(' ');
                    }
                    item += std::to_string(coset[i]);
                }
                item.push_back('}');
                items.push_back(item);
            }
            const std::string label = (step == 4) ? "triangles" : "quadrangles";
            detail::append_wrapped(out, "cosets (" + label + "):", items);
        }
    }
    if (show.diameters) {
        std::vector<std::string> items;
        for (const auto& pair : coset_family(6)) {
            items.push_back(std::to_string(pair[0]) + "-" + std::to_string(pair[1]));
        }
        detail::append_wrapped(out, "diameters:", items);
    }
    return out;
}

// SVG clock: exactly twelve circles carry class "clock-node"; optional
// layers add diameters, coset polygons, the trace path, and labels.
// Output is byte-deterministic (fixed two-decimal coordinates).
inline std::string render_clock_svg(const Scale& scale, const TraceForm* form,
                                    const ShowFlags& show) {
    constexpr double radius = 100.0;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\" "
           "width=\"520\" height=\"520\">\n";
    std::string title = "clock: " + scale.name();
    if (form != nullptr) {
        title += ", path: " + form->name;
    }
    out += "<title>" + detail::xml_escape(title) + "</title>\n";
    out += "<circle class=\"clock-face\" cx=\"0\" cy=\"0\" r=\"" + detail::fixed2(radius) +
           "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    auto point_attr = [&](int p, double r) {
        return detail::fixed2(detail::clock_x(p, r)) + "," +
               detail::fixed2(detail::clock_y(p, r));
    };

    if (show.diameters) {
        for (const auto& pair : coset_family(6)) {
            out += "<line class=\"diameter\" x1=\"" +
                   detail::fixed2(detail::clock_x(pair[0], radius)) + "\" y1=\"" +
                   detail::fixed2(detail::clock_y(pair[0], radius)) + "\" x2=\"" +
                   detail::fixed2(detail::clock_x(pair[1], radius)) + "\" y2=\"" +
                   detail::fixed2(detail::clock_y(pair[1], radius)) +
                   "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        }
    }
    if (show.cosets) {
        for (int step : {4, 3}) {
            for (const auto& coset : coset_family(step)) {
                std::string points;
                for (std::size_t i = 0; i < coset.size(); ++i) {
                    if (i > 0) {
                        points.push_back(' ');
                    }
                    points += point_attr(coset[i], radius);
                }
                out += "<polygon class=\"coset-" + std::to_string(step) + "\" points=\"" +
                       points + "\" fill=\"none\" stroke=\"#66aa66\" stroke-width=\"1\"/>\n";
            }
        }
    }
    if (form != nullptr && show.path) {
        std::string points;
        for (std::size_t i = 0; i < form->path.size(); ++i) {
            if (i > 0) {
                points.push_back(' ');
            }
            points += point_attr(form->path[i].value(), radius);
        }
        out += "<polyline class=\"trace-path\" points=\"" + points +
               "\" fill=\"none\" stroke=\"#3355cc\" stroke-width=\"2\"/>\n";
    }
    for (int p = 0; p < 12; ++p) {
        out += "<circle class=\"clock-node\" cx=\"" +
               detail::fixed2(detail::clock_x(p, radius)) + "\" cy=\"" +
               detail::fixed2(detail::clock_y(p, radius)) +
               "\" r=\"6\" fill=\"#222222\"/>\n";
    }
    if (show.labels) {
        for (int p = 0; p < 12; ++p) {
            out += "<text class=\"clock-label\" x=\"" +
                   detail::fixed2(detail::clock_x(p, radius + 16.0)) + "\" y=\"" +
                   detail::fixed2(detail::clock_y(p, radius + 16.0) + 4.0) +
                   "\" font-size=\"10\" text-anchor=\"middle\">" +
                   detail::xml_escape(detail::marker_text(scale, p, true)) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace laban
