#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "laban/devices.hpp"
#include "laban/errors.hpp"
#include "laban/polyhedra.hpp"

namespace laban {

// An hour on the twelve-position clock; arithmetic wraps mod 12.
class ClockPosition {
  public:
    ClockPosition() = default;
    explicit ClockPosition(int value) : value_(normalize(value)) {}

    int value() const { return value_; }
    ClockPosition shifted(int k) const { return ClockPosition(value_ + k); }

    static int normalize(int value) {
        int m = value % 12;
        return m < 0 ? m + 12 : m;
    }

    friend bool operator==(const ClockPosition&, const ClockPosition&) = default;
    friend auto operator<=>(const ClockPosition&, const ClockPosition&) = default;

  private:
    int value_ = 0;
};

// A path over clock positions (repeats permitted, never empty).
struct TraceForm {
    std::string name;
    std::vector<ClockPosition> path;
};

// A bijection between clock positions 0..11 and the icosahedron's vertices.
class Scale {
  public:
    // vertex_order[i] is the 0-based vertex at clock position i.
    static Scale make(const std::string& name, const std::vector<int>& vertex_order) {
        if (vertex_order.size() != 12) {
            throw invalid_scale_error("scale '" + name + "' must list exactly 12 vertices, got " +
                                      std::to_string(vertex_order.size()));
        }
        Scale s;
        s.name_ = name;
        s.order_ = vertex_order;
        s.position_.assign(12, -1);
        for (int pos = 0; pos < 12; ++pos) {
            const int v = vertex_order[static_cast<std::size_t>(pos)];
            if (v < 0 || v >= 12) {
                throw invalid_scale_error("scale '" + name + "' lists vertex " +
                                          std::to_string(v + 1) + " outside v1..v12");
            }
            if (s.position_[static_cast<std::size_t>(v)] != -1) {
                throw invalid_scale_error("scale '" + name + "' lists vertex v" +
                                          std::to_string(v + 1) + " twice");
            }
            s.position_[static_cast<std::size_t>(v)] = pos;
        }
        return s;
    }

    const std::string& name() const { return name_; }
    const std::vector<int>& order() const { return order_; }

    int vertex_at(ClockPosition p) const { return order_[static_cast<std::size_t>(p.value())]; }

    int vertex_at(int position) const {
        if (position < 0 || position >= 12) {
            throw out_of_range_error("clock position " + std::to_string(position) +
                                     " outside 0..11");
        }
        return order_[static_cast<std::size_t>(position)];
    }

    ClockPosition position_of(int vertex) const {
        if (vertex < 0 || vertex >= 12) {
            throw out_of_range_error("vertex " + std::to_string(vertex) + " outside {0...11}");
        }
        return ClockPosition(position_[static_cast<std::size_t>(vertex)]);
    }

    // True when opposite clock positions carry antipodal vertices, i.e.
    // vertex_at(p+6) is the geometric opposite of vertex_at(p) for all p.
    bool diametrally_compatible() const {
        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        for (int p = 0; p < 12; ++p) {
            if (vertex_at(ClockPosition(p + 6)) != icosa.antipode(vertex_at(ClockPosition(p)))) {
                return false;
            }
        }
        return true;
    }

  private:
    std::string name_;
    std::vector<int> order_;     // position -> vertex
    std::vector<int> position_;  // vertex -> position
};

// The built-in "primary" ordering: a closed edge path around the icosahedron
// chosen so opposite clock positions hold antipodal vertices. It is a
// documented stand-in — supply your own ordering via the config file to
// reproduce a specific published scale.
inline const Scale& default_scale() {
    static const Scale scale =
        Scale::make("primary", {0, 1, 2, 4, 10, 6, 9, 8, 11, 7, 3, 5});
    return scale;
}

inline ClockPosition diametral_clock(ClockPosition p) { return p.shifted(6); }

inline TraceForm transpose(int k, const TraceForm& form) {
    TraceForm result;
    result.name = form.name;
    result.path.reserve(form.path.size());
    for (ClockPosition p : form.path) {
        result.path.push_back(p.shifted(k));
    }
    return result;
}

// Cosets of the subgroup generated by `step` inside Z12: step=4 gives the
// four triangles, step=3 the three quadrangles, step=6 the six diameters.
inline std::vector<std::vector<int>> coset_family(int step) {
    if (step != 3 && step != 4 && step != 6) {
        throw invalid_subgroup_error("coset step must be 3, 4, or 6, got " +
                                     std::to_string(step));
    }
    std::vector<std::vector<int>> family;
    for (int rep = 0; rep < step; ++rep) {
        std::vector<int> coset;
        for (int p = rep; p < 12; p += step) {
            coset.push_back(p);
        }
        family.push_back(std::move(coset));
    }
    return family;
}

// The clock rotation by k hours, realized on vertices through the scale
// bijection (vertex at position p moves to the vertex at position p+k).
inline Device transposition(int k, const Scale& scale = default_scale()) {
    const int shift = ClockPosition::normalize(k);
    std::vector<int> mapping(12);
    for (int v = 0; v < 12; ++v) {
        mapping[static_cast<std::size_t>(v)] =
            scale.vertex_at(scale.position_of(v).shifted(shift));
    }
    Device d;
    d.name = "transposition-" + std::to_string(shift);
    d.solid = SolidKind::icosahedron;
    d.perm = Permutation::from_mapping(std::move(mapping));
    d.clock_shift = shift;
    d.trail = {"T" + std::to_string(shift)};
    return d;
}

// Pushes a device through the scale bijection onto clock positions. Pure
// transpositions act as p -> p+k directly; geometric devices act by
// position -> vertex -> image vertex -> position.
inline TraceForm apply_device_on_clock(const Scale& scale, const Device& d,
                                       const TraceForm& form) {
    if (d.solid != SolidKind::icosahedron) {
        throw unsupported_solid_error("clock devices must act on the icosahedron, '" + d.name +
                                      "' acts on the " + to_string(d.solid));
    }
    if (form.path.empty()) {
        throw empty_sequence_error("trace form '" + form.name + "' has an empty path");
    }
    TraceForm result;
    result.name = form.name;
    result.path.reserve(form.path.size());
    for (ClockPosition p : form.path) {
        if (d.clock_shift) {
            result.path.push_back(p.shifted(*d.clock_shift));
        } else {
            result.path.push_back(scale.position_of(d.perm(scale.vertex_at(p))));
        }
    }
    return result;
}

// A trace form plus the name of the scale its positions refer to.
struct ConfigTraceForm {
    TraceForm form;
    std::string scale_name;
    std::string note;  // free-form caveat, e.g. "unverified example"
};

// Loaded scale/trace-form configuration.
struct Config {
    std::vector<Scale> scales;
    std::vector<ConfigTraceForm> trace_forms;
    std::vector<std::string> warnings;

    const Scale& scale(const std::string& name) const {
        for (const Scale& s : scales) {
            if (s.name() == name) {
                return s;
            }
        }
        throw invalid_scale_error("unknown scale '" + name + "'");
    }

    bool has_scale(const std::string& name) const {
        for (const Scale& s : scales) {
            if (s.name() == name) {
                return true;
            }
        }
        return false;
    }

    const ConfigTraceForm& trace_form(const std::string& name) const {
        for (const ConfigTraceForm& f : trace_forms) {
            if (f.form.name == name) {
                return f;
            }
        }
        throw error("unknown trace form '" + name + "'");
    }
};

// The bundled configuration: the built-in primary scale plus example trace
// forms. The named forms are illustrative placeholders (noted as such), not
// verified reconstructions of any published path.
inline const char* default_config_json() {
    return R"json({
  "scales": [
    { "name": "primary", "order": [1, 2, 3, 5, 11, 7, 10, 9, 12, 8, 4, 6] }
  ],
  "trace_forms": [
    { "name": "girdle",  "scale": "primary", "path": [2, 3, 5, 8, 9, 11], "note": "illustrative ring path; unverified" },
    { "name": "defense", "scale": "primary", "path": [0, 3, 6, 9],        "note": "quadrangle coset walk; unverified" },
    { "name": "attack",  "scale": "primary", "path": [0, 4, 8],           "note": "triangle coset walk; unverified" }
  ]
})json";
}

inline Config parse_config(const nlohmann::json& doc) {
    Config config;
    if (!doc.is_object()) {
        throw error("config root must be a JSON object");
    }
    if (doc.contains("scales")) {
        if (!doc["scales"].is_array()) {
            throw invalid_scale_error("config 'scales' must be an array");
        }
        for (const auto& entry : doc["scales"]) {
            if (!entry.is_object() || !entry.contains("name") || !entry.contains("order") ||
                !entry["name"].is_string() || !entry["order"].is_array()) {
                throw invalid_scale_error(
                    "each scale needs a string 'name' and an 'order' array");
            }
            const std::string name = entry["name"].get<std::string>();
            if (config.has_scale(name)) {
                throw invalid_scale_error("duplicate scale name '" + name + "'");
            }
            std::vector<int> order;
            for (const auto& item : entry["order"]) {
                if (!item.is_number_integer()) {
                    throw invalid_scale_error("scale '" + name +
                                              "' order entries must be integers");
                }
                order.push_back(item.get<int>() - 1);  // config is 1-based
            }
            Scale scale = Scale::make(name, order);
            if (!scale.diametrally_compatible()) {
                config.warnings.push_back(
                    "scale '" + name +
                    "' is not diametrally compatible: opposite clock positions do not hold "
                    "antipodal vertices");
            }
            config.scales.push_back(std::move(scale));
        }
    }
    if (doc.contains("trace_forms")) {
        if (!doc["trace_forms"].is_array()) {
            throw error("config 'trace_forms' must be an array");
        }
        for (const auto& entry : doc["trace_forms"]) {
            if (!entry.is_object() || !entry.contains("name") || !entry.contains("scale") ||
                !entry.contains("path") || !entry["name"].is_string() ||
                !entry["scale"].is_string() || !entry["path"].is_array()) {
                throw error(
                    "each trace form needs a string 'name', a string 'scale', and a 'path' "
                    "array");
            }
            ConfigTraceForm form;
            form.form.name = entry["name"].get<std::string>();
            form.scale_name = entry["scale"].get<std::string>();
            if (entry.contains("note") && entry["note"].is_string()) {
                form.note = entry["note"].get<std::string>();
            }
            for (const ConfigTraceForm& existing : config.trace_forms) {
                if (existing.form.name == form.form.name) {
                    throw error("duplicate trace form name '" + form.form.name + "'");
                }
            }
            if (!config.has_scale(form.scale_name)) {
                throw invalid_scale_error("trace form '" + form.form.name +
                                          "' references unknown scale '" + form.scale_name +
                                          "'");
            }
            for (const auto& item : entry["path"]) {
                if (!item.is_number_integer()) {
                    throw error("trace form '" + form.form.name +
                                "' path entries must be integers");
                }
                const int p = item.get<int>();
                if (p < 0 || p > 11) {
                    throw out_of_range_error("trace form '" + form.form.name + "' position " +
                                             std::to_string(p) + " outside 0..11");
                }
                form.form.path.push_back(ClockPosition(p));
            }
            if (form.form.path.empty()) {
                throw empty_sequence_error("trace form '" + form.form.name +
                                           "' has an empty path");
            }
            config.trace_forms.push_back(std::move(form));
        }
    }
    return config;
}

inline Config default_config() {
    return parse_config(nlohmann::json::parse(default_config_json()));
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw error("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw error("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

}  // namespace laban
