#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "laban/errors.hpp"
#include "laban/group.hpp"
#include "laban/permutation.hpp"
#include "laban/polyhedra.hpp"

namespace laban {

enum class Limb { left_arm, right_arm, left_leg, right_leg };

inline const std::array<Limb, 4>& all_limbs() {
    static const std::array<Limb, 4> limbs = {Limb::left_arm, Limb::right_arm, Limb::left_leg,
                                              Limb::right_leg};
    return limbs;
}

inline std::string to_string(Limb limb) {
    switch (limb) {
        case Limb::left_arm: return "left-arm";
        case Limb::right_arm: return "right-arm";
        case Limb::left_leg: return "left-leg";
        case Limb::right_leg: return "right-leg";
    }
    return "?";
}

inline std::string display_name(Limb limb) {
    switch (limb) {
        case Limb::left_arm: return "Left Arm";
        case Limb::right_arm: return "Right Arm";
        case Limb::left_leg: return "Left Leg";
        case Limb::right_leg: return "Right Leg";
    }
    return "?";
}

inline Limb parse_limb(const std::string& name) {
    for (Limb limb : all_limbs()) {
        if (to_string(limb) == name) {
            return limb;
        }
    }
    throw unknown_limb_error("unknown limb '" + name +
                             "' (expected left-arm, right-arm, left-leg, or right-leg)");
}

// A choreographic device: a named permutation of one solid's directions.
// clock_shift is set when the device is a pure clock transposition (then the
// vertex permutation depends on the scale it was resolved against, but the
// clock action p -> p+k does not). trail records the constituent device
// names in application order, for explanation output.
struct Device {
    std::string name;
    SolidKind solid;
    Permutation perm;
    std::optional<int> clock_shift;
    std::vector<std::string> trail;
};

// An ordered run of directions, all from one solid.
struct MovementSequence {
    std::vector<Direction> steps;
};

// A limb's standard position and the five admissible directions around it.
struct NormalZone {
    Limb limb;
    Direction standard;
    std::vector<Direction> range;
};

// The unique non-identity symmetry fixing all four of the plane's vertices:
// the pointwise stabilizer of a body plane inside the full symmetry group
// has order exactly 2, and its reflection is the plane's inversion device.
inline Device inversion_from_plane(const Polyhedron& p, const BodyPlane& plane) {
    if (p.kind() != SolidKind::icosahedron) {
        throw unsupported_solid_error("plane inversions are defined on the icosahedron only");
    }
    const PermGroup stab =
        p.full_symmetry_group().pointwise_set_stabilizer(plane.fixed_vertices);
    if (stab.order() != 2) {
        throw error("pointwise stabilizer of the " + to_string(plane.name) +
                    " plane has order " + std::to_string(stab.order()) + ", expected 2");
    }
    std::string name;
    switch (plane.name) {
        case PlaneName::vertical: name = "fb"; break;
        case PlaneName::horizontal: name = "lh"; break;
        case PlaneName::sagittal: name = "lr"; break;
    }
    // elements() is sorted with the identity first, so .back() is the
    // non-identity reflection.
    return Device{name, SolidKind::icosahedron, stab.elements().back(), std::nullopt, {name}};
}

inline Device front_back_inversion() {
    return inversion_from_plane(Polyhedron::canonical(SolidKind::icosahedron),
                                body_plane(PlaneName::vertical));
}

inline Device low_high_inversion() {
    return inversion_from_plane(Polyhedron::canonical(SolidKind::icosahedron),
                                body_plane(PlaneName::horizontal));
}

inline Device left_right_inversion() {
    return inversion_from_plane(Polyhedron::canonical(SolidKind::icosahedron),
                                body_plane(PlaneName::sagittal));
}

namespace detail {

inline Permutation antipode_permutation(const Polyhedron& p) {
    std::vector<int> mapping(static_cast<std::size_t>(p.vertex_count()));
    for (int v = 0; v < p.vertex_count(); ++v) {
        mapping[static_cast<std::size_t>(v)] = p.antipode(v);
    }
    return Permutation::from_mapping(std::move(mapping));
}

}  // namespace detail

// Sends every octahedral direction to its spatial opposite.
inline Device octahedral_inversion() {
    return Device{"octa", SolidKind::octahedron,
                  detail::antipode_permutation(Polyhedron::canonical(SolidKind::octahedron)),
                  std::nullopt,
                  {"octa"}};
}

// The antipode map on the icosahedron, the geometric counterpart of the
// clock's p -> p+6 inversion.
inline Device diametral_inversion() {
    return Device{"diametral-geometric", SolidKind::icosahedron,
                  detail::antipode_permutation(Polyhedron::canonical(SolidKind::icosahedron)),
                  std::nullopt,
                  {"diam"}};
}

inline Direction apply(const Device& d, const Direction& dir) {
    if (dir.solid != d.solid) {
        throw solid_mismatch_error("device '" + d.name + "' acts on the " + to_string(d.solid) +
                                   ", not on direction '" + dir.token + "' of the " +
                                   to_string(dir.solid));
    }
    return Polyhedron::canonical(d.solid).direction_at(d.perm(dir.vertex));
}

inline Direction invert_octahedral(const Direction& dir) {
    if (dir.solid != SolidKind::octahedron) {
        throw solid_mismatch_error("octahedral inversion applies to octahedral directions, got '" +
                                   dir.token + "'");
    }
    const Polyhedron& octa = Polyhedron::canonical(SolidKind::octahedron);
    return octa.direction_at(octa.antipode(dir.vertex));
}

// Performing sequence p then sequence r lands in r's final direction: the
// sequence operation projects onto its right operand's destination.
inline Direction oplus(const MovementSequence& p, const MovementSequence& r) {
    if (p.steps.empty() || r.steps.empty()) {
        throw empty_sequence_error("sequence operation requires two nonempty sequences");
    }
    if (p.steps.front().solid != r.steps.front().solid) {
        throw solid_mismatch_error("sequence operands live on different solids");
    }
    return r.steps.back();
}

inline MovementSequence apply_sequence(const Device& d, const MovementSequence& s) {
    if (s.steps.empty()) {
        throw empty_sequence_error("cannot transform an empty sequence");
    }
    MovementSequence result;
    result.steps.reserve(s.steps.size());
    for (const Direction& step : s.steps) {
        result.steps.push_back(apply(d, step));
    }
    return result;
}

// d1 is applied first, then d2 (permutation composition d2 ∘ d1). The
// composite stays a pure clock transposition only if both parts are.
inline Device compose_devices(const Device& d1, const Device& d2) {
    if (d1.solid != d2.solid) {
        throw solid_mismatch_error("cannot compose a " + to_string(d1.solid) + " device with a " +
                                   to_string(d2.solid) + " device");
    }
    Device result;
    result.name = "composite";
    result.solid = d1.solid;
    result.perm = compose(d2.perm, d1.perm);
    if (d1.clock_shift && d2.clock_shift) {
        result.clock_shift = (*d1.clock_shift + *d2.clock_shift) % 12;
    }
    result.trail = d1.trail;
    result.trail.insert(result.trail.end(), d2.trail.begin(), d2.trail.end());
    return result;
}

namespace detail {

struct ZoneSpec {
    Limb limb;
    int standard;  // 0-based vertex
    int seed;      // first range vertex in display order
};

inline const std::array<ZoneSpec, 4>& zone_specs() {
    // Display order walks the pentagon of neighbors edge to edge starting
    // from the seed, taking the lower-numbered branch at the initial fork;
    // this reproduces the customary table order for all four limbs.
    static const std::array<ZoneSpec, 4> specs = {{
        {Limb::left_arm, 3, 0},
        {Limb::right_arm, 2, 0},
        {Limb::left_leg, 11, 5},
        {Limb::right_leg, 10, 4},
    }};
    return specs;
}

}  // namespace detail

// The zone of a limb: its standard position plus the five reachable
// directions, which form the orbit of any neighbor of the standard vertex
// under the standard vertex's (order-5) rotation stabilizer — equivalently,
// the neighbors of the standard vertex.
inline NormalZone normal_zone(const Polyhedron& p, Limb limb) {
    if (p.kind() != SolidKind::icosahedron) {
        throw unsupported_solid_error("normal zones are defined on the icosahedron only");
    }
    const detail::ZoneSpec* spec = nullptr;
    for (const auto& candidate : detail::zone_specs()) {
        if (candidate.limb == limb) {
            spec = &candidate;
            break;
        }
    }
    if (spec == nullptr) {
        throw unknown_limb_error("unknown limb");
    }

    const PermGroup stab = p.rotation_group().point_stabilizer(spec->standard);
    const std::vector<int> orbit = stab.orbit(spec->seed);

    std::vector<int> ordered;
    ordered.push_back(spec->seed);
    while (ordered.size() < orbit.size()) {
        int next = -1;
        for (int candidate : orbit) {
            if (std::find(ordered.begin(), ordered.end(), candidate) != ordered.end()) {
                continue;
            }
            const auto& nbrs = p.neighbors(ordered.back());
            if (std::find(nbrs.begin(), nbrs.end(), candidate) == nbrs.end()) {
                continue;
            }
            if (next < 0 || candidate < next) {
                next = candidate;
            }
        }
        if (next < 0) {
            throw error("normal-zone range of " + to_string(limb) +
                        " is not connected along edges");
        }
        ordered.push_back(next);
    }

    NormalZone zone;
    zone.limb = limb;
    zone.standard = p.direction_at(spec->standard);
    for (int v : ordered) {
        zone.range.push_back(p.direction_at(v));
    }
    return zone;
}

}  // namespace laban
