#pragma once

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "laban/errors.hpp"
#include "laban/group.hpp"
#include "laban/permutation.hpp"

namespace laban {

enum class SolidKind { octahedron, cube, icosahedron };

inline std::string to_string(SolidKind kind) {
    switch (kind) {
        case SolidKind::octahedron: return "octahedron";
        case SolidKind::cube: return "cube";
        case SolidKind::icosahedron: return "icosahedron";
    }
    return "?";
}

inline SolidKind parse_solid(const std::string& name) {
    if (name == "octahedron") return SolidKind::octahedron;
    if (name == "cube") return SolidKind::cube;
    if (name == "icosahedron") return SolidKind::icosahedron;
    throw unknown_solid_error("unknown solid '" + name +
                              "' (expected octahedron, cube, or icosahedron)");
}

// Right-handed body frame: +x = right, +y = forward, +z = up.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// One of the 26 labeled spatial directions. Tokens are unique across all
// three solids, so a Direction is fully determined by its token.
struct Direction {
    std::string token;
    SolidKind solid;
    int vertex;  // 0-based

    friend bool operator==(const Direction&, const Direction&) = default;
};

enum class PlaneName { sagittal, horizontal, vertical };

inline std::string to_string(PlaneName name) {
    switch (name) {
        case PlaneName::sagittal: return "sagittal";
        case PlaneName::horizontal: return "horizontal";
        case PlaneName::vertical: return "vertical";
    }
    return "?";
}

inline PlaneName parse_plane_name(const std::string& name) {
    if (name == "sagittal") return PlaneName::sagittal;
    if (name == "horizontal") return PlaneName::horizontal;
    if (name == "vertical") return PlaneName::vertical;
    throw unknown_direction_error("unknown body plane '" + name +
                                  "' (expected sagittal, horizontal, or vertical)");
}

// Four icosahedron vertices lying in one of the three body planes.
struct BodyPlane {
    PlaneName name;
    std::vector<int> fixed_vertices;  // 0-based, sorted
};

namespace detail {

constexpr double kPhi = 1.6180339887498948482;  // (1 + sqrt 5) / 2
constexpr double kOrthoTol = 1e-6;
constexpr double kMatchTol = 1e-6;
constexpr double kEdgeRelTol = 1e-9;

struct Mat3 {
    // m[r][c], row-major
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
        Mat3 q;
        q.m = {{{a.x, b.x, c.x}, {a.y, b.y, c.y}, {a.z, b.z, c.z}}};
        return q;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    Mat3 inverse() const {
        const double d = det();
        Mat3 inv;
        inv.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
        inv.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
        inv.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
        inv.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
        inv.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
        inv.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
        inv.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
        inv.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
        inv.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
        return inv;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
            }
        }
        return r;
    }

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 transposed() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                t.m[i][j] = m[j][i];
            }
        }
        return t;
    }

    bool is_orthogonal() const {
        Mat3 gram = transposed() * (*this);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double expect = (i == j) ? 1.0 : 0.0;
                if (std::abs(gram.m[i][j] - expect) > kOrthoTol) {
                    return false;
                }
            }
        }
        return true;
    }
};

struct VertexTable {
    std::vector<std::string> tokens;
    std::vector<Vec3> coords;
};

inline VertexTable vertex_table(SolidKind kind) {
    switch (kind) {
        case SolidKind::octahedron:
            return {{"UP", "DOWN", "BACK", "FWD", "RIGHT", "LEFT"},
                    {{0, 0, 1}, {0, 0, -1}, {0, -1, 0}, {0, 1, 0}, {1, 0, 0}, {-1, 0, 0}}};
        case SolidKind::icosahedron:
            return {{"FH", "BH", "HR", "HL", "MRF", "MLF", "MRB", "MLB", "FL", "BL", "LR", "LL"},
                    {{0, 1, kPhi},
                     {0, -1, kPhi},
                     {kPhi, 0, 1},
                     {-kPhi, 0, 1},
                     {1, kPhi, 0},
                     {-1, kPhi, 0},
                     {1, -kPhi, 0},
                     {-1, -kPhi, 0},
                     {0, 1, -kPhi},
                     {0, -1, -kPhi},
                     {kPhi, 0, -1},
                     {-kPhi, 0, -1}}};
        case SolidKind::cube:
            return {{"RFH", "LFH", "RBH", "LBH", "RFL", "LFL", "RBL", "LBL"},
                    {{1, 1, 1},
                     {-1, 1, 1},
                     {1, -1, 1},
                     {-1, -1, 1},
                     {1, 1, -1},
                     {-1, 1, -1},
                     {1, -1, -1},
                     {-1, -1, -1}}};
    }
    throw unknown_solid_error("unknown solid kind");
}

}  // namespace detail

// A regular reference solid: canonical coordinates, direction labels,
// adjacency (nearest-distance pairs), antipodes, and both symmetry groups.
// Immutable after build; safe to share across threads.
class Polyhedron {
  public:
    static Polyhedron build(SolidKind kind) {
        Polyhedron p;
        p.kind_ = kind;
        detail::VertexTable table = detail::vertex_table(kind);
        p.tokens_ = std::move(table.tokens);
        p.coords_ = std::move(table.coords);
        p.compute_edges();
        p.compute_antipodes();
        p.compute_groups();
        return p;
    }

    // Shared immutable instance per solid.
    static const Polyhedron& canonical(SolidKind kind) {
        static const Polyhedron octa = build(SolidKind::octahedron);
        static const Polyhedron cube = build(SolidKind::cube);
        static const Polyhedron icosa = build(SolidKind::icosahedron);
        switch (kind) {
            case SolidKind::octahedron: return octa;
            case SolidKind::cube: return cube;
            case SolidKind::icosahedron: return icosa;
        }
        throw unknown_solid_error("unknown solid kind");
    }

    SolidKind kind() const { return kind_; }
    int vertex_count() const { return static_cast<int>(coords_.size()); }
    const std::vector<Vec3>& coordinates() const { return coords_; }

    const Vec3& coordinate(int v) const {
        check_vertex(v);
        return coords_[static_cast<std::size_t>(v)];
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return neighbors_[static_cast<std::size_t>(v)];
    }

    int antipode(int v) const {
        check_vertex(v);
        return antipode_[static_cast<std::size_t>(v)];
    }

    const std::string& token_at(int v) const {
        check_vertex(v);
        return tokens_[static_cast<std::size_t>(v)];
    }

    Direction direction_at(int v) const {
        check_vertex(v);
        return Direction{tokens_[static_cast<std::size_t>(v)], kind_, v};
    }

    int vertex_for_token(const std::string& token) const {
        for (int v = 0; v < vertex_count(); ++v) {
            if (tokens_[static_cast<std::size_t>(v)] == token) {
                return v;
            }
        }
        throw unknown_direction_error("direction '" + token + "' does not belong to the " +
                                      to_string(kind_));
    }

    // Vertex permutations induced by orientation-preserving isometries.
    const PermGroup& rotation_group() const { return rotation_group_; }

    // Rotations plus reflections and rotoreflections.
    const PermGroup& full_symmetry_group() const { return full_group_; }

    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["solid"] = to_string(kind_);
        doc["vertex_count"] = vertex_count();
        doc["edge_count"] = static_cast<int>(edges_.size());
        doc["rotation_group_order"] = rotation_group_.order();
        doc["full_symmetry_group_order"] = full_group_.order();
        doc["vertices"] = nlohmann::json::array();
        for (int v = 0; v < vertex_count(); ++v) {
            nlohmann::json entry;
            entry["index"] = v + 1;
            entry["token"] = tokens_[static_cast<std::size_t>(v)];
            const Vec3& c = coords_[static_cast<std::size_t>(v)];
            entry["coords"] = {c.x, c.y, c.z};
            nlohmann::json nbrs = nlohmann::json::array();
            for (int u : neighbors_[static_cast<std::size_t>(v)]) {
                nbrs.push_back(u + 1);
            }
            entry["neighbors"] = nbrs;
            entry["antipode"] = antipode_[static_cast<std::size_t>(v)] + 1;
            doc["vertices"].push_back(entry);
        }
        doc["edges"] = nlohmann::json::array();
        for (const auto& [a, b] : edges_) {
            doc["edges"].push_back({a + 1, b + 1});
        }
        return doc;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) {
            throw out_of_range_error("vertex " + std::to_string(v) + " outside {0..." +
                                     std::to_string(vertex_count() - 1) + "}");
        }
    }

    // Edges are the minimal-distance vertex pairs; for a regular solid those
    // are exactly the edges, and the tolerance tolerates double rounding.
    void compute_edges() {
        const int n = vertex_count();
        double min_d2 = 0.0;
        bool have_min = false;
        std::vector<std::pair<double, std::pair<int, int>>> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Vec3 diff = coords_[static_cast<std::size_t>(i)] -
                                  coords_[static_cast<std::size_t>(j)];
                const double d2 = dot(diff, diff);
                pairs.push_back({d2, {i, j}});
                if (!have_min || d2 < min_d2) {
                    min_d2 = d2;
                    have_min = true;
                }
            }
        }
        neighbors_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [d2, edge] : pairs) {
            if (d2 <= min_d2 * (1.0 + detail::kEdgeRelTol)) {
                edges_.push_back(edge);
                neighbors_[static_cast<std::size_t>(edge.first)].push_back(edge.second);
                neighbors_[static_cast<std::size_t>(edge.second)].push_back(edge.first);
            }
        }
        std::sort(edges_.begin(), edges_.end());
        for (auto& nbrs : neighbors_) {
            std::sort(nbrs.begin(), nbrs.end());
        }
    }

    void compute_antipodes() {
        const int n = vertex_count();
        antipode_.assign(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) {
                if (norm(coords_[static_cast<std::size_t>(v)] +
                         coords_[static_cast<std::size_t>(u)]) < detail::kMatchTol) {
                    antipode_[static_cast<std::size_t>(v)] = u;
                    break;
                }
            }
            if (antipode_[static_cast<std::size_t>(v)] < 0) {
                throw error("vertex " + std::to_string(v + 1) + " of the " + to_string(kind_) +
                            " has no antipodal vertex");
            }
        }
    }

    // Derives both symmetry groups from the geometry. Every isometry fixing
    // the origin is a linear map determined by the images of three
    // independent vertices, so enumerating candidate image triples of one
    // fixed base triple finds each symmetry exactly once: solve Q from
    // Q*B = W, keep Q orthogonal, and keep it only if it permutes the
    // vertex set. det(Q) > 0 separates rotations from reflections.
    void compute_groups() {
        const int n = vertex_count();
        const int b0 = 0;
        const int b1 = neighbors_[0].front();
        int b2 = -1;
        for (int v = 0; v < n; ++v) {
            const double vol = dot(cross(coords_[static_cast<std::size_t>(b0)],
                                         coords_[static_cast<std::size_t>(b1)]),
                                   coords_[static_cast<std::size_t>(v)]);
            if (std::abs(vol) > detail::kOrthoTol) {
                b2 = v;
                break;
            }
        }
        if (b2 < 0) {
            throw error("degenerate vertex set for the " + to_string(kind_));
        }
        const detail::Mat3 base_inv =
            detail::Mat3::from_columns(coords_[static_cast<std::size_t>(b0)],
                                       coords_[static_cast<std::size_t>(b1)],
                                       coords_[static_cast<std::size_t>(b2)])
                .inverse();

        std::vector<Permutation> rotations;
        std::vector<Permutation> all;
        for (int w0 = 0; w0 < n; ++w0) {
            for (int w1 : neighbors_[static_cast<std::size_t>(w0)]) {
                for (int w2 = 0; w2 < n; ++w2) {
                    const detail::Mat3 q =
                        detail::Mat3::from_columns(coords_[static_cast<std::size_t>(w0)],
                                                   coords_[static_cast<std::size_t>(w1)],
                                                   coords_[static_cast<std::size_t>(w2)]) *
                        base_inv;
                    if (!q.is_orthogonal()) {
                        continue;
                    }
                    std::vector<int> mapping(static_cast<std::size_t>(n), -1);
                    std::vector<char> used(static_cast<std::size_t>(n), 0);
                    bool valid = true;
                    for (int v = 0; v < n && valid; ++v) {
                        const Vec3 image = q.apply(coords_[static_cast<std::size_t>(v)]);
                        valid = false;
                        for (int u = 0; u < n; ++u) {
                            if (!used[static_cast<std::size_t>(u)] &&
                                norm(image - coords_[static_cast<std::size_t>(u)]) <
                                    detail::kMatchTol) {
                                mapping[static_cast<std::size_t>(v)] = u;
                                used[static_cast<std::size_t>(u)] = 1;
                                valid = true;
                                break;
                            }
                        }
                    }
                    if (!valid) {
                        continue;
                    }
                    Permutation perm = Permutation::from_mapping(std::move(mapping));
                    if (q.det() > 0) {
                        rotations.push_back(perm);
                    }
                    all.push_back(std::move(perm));
                }
            }
        }
        rotation_group_ = PermGroup::closure(std::move(rotations));
        full_group_ = PermGroup::closure(std::move(all));
    }

    SolidKind kind_ = SolidKind::octahedron;
    std::vector<std::string> tokens_;
    std::vector<Vec3> coords_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<int> antipode_;
    PermGroup rotation_group_;
    PermGroup full_group_;
};

// The three body planes of the icosahedron, each containing four vertices.
inline const std::vector<BodyPlane>& body_planes() {
    static const std::vector<BodyPlane> planes = {
        {PlaneName::sagittal, {0, 1, 8, 9}},
        {PlaneName::horizontal, {4, 5, 6, 7}},
        {PlaneName::vertical, {2, 3, 10, 11}},
    };
    return planes;
}

inline const BodyPlane& body_plane(PlaneName name) {
    for (const auto& plane : body_planes()) {
        if (plane.name == name) {
            return plane;
        }
    }
    throw unknown_direction_error("unknown body plane");
}

// Looks a token up across the union of all three solids (26 directions).
inline Direction vertex_for_direction(const std::string& token) {
    static const std::map<std::string, Direction> index = [] {
        std::map<std::string, Direction> result;
        for (SolidKind kind :
             {SolidKind::octahedron, SolidKind::cube, SolidKind::icosahedron}) {
            const Polyhedron& p = Polyhedron::canonical(kind);
            for (int v = 0; v < p.vertex_count(); ++v) {
                result[p.token_at(v)] = p.direction_at(v);
            }
        }
        return result;
    }();
    auto it = index.find(token);
    if (it == index.end()) {
        throw unknown_direction_error("unknown direction token '" + token + "'");
    }
    return it->second;
}

}  // namespace laban
