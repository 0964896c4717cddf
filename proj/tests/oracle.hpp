#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's constructive symmetry derivation: symmetries are found as
// adjacency-preserving vertex permutations by backtracking, and orientation
// is judged by the sign of a reference vertex triple's determinant.

#include <vector>

#include "laban/polyhedra.hpp"

namespace oracle {

inline double det3(const laban::Vec3& a, const laban::Vec3& b, const laban::Vec3& c) {
    return laban::dot(laban::cross(a, b), c);
}

// Every vertex permutation that maps edges to edges (as mapping vectors).
inline std::vector<std::vector<int>> graph_automorphisms(const laban::Polyhedron& p) {
    const int n = p.vertex_count();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const auto& [a, b] : p.edges()) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }

    std::vector<std::vector<int>> result;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            result.push_back(image);
            return;
        }
        for (int candidate = 0; candidate < n; ++candidate) {
            if (used[static_cast<std::size_t>(candidate)]) {
                continue;
            }
            bool consistent = true;
            for (int prev = 0; prev < v; ++prev) {
                if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(prev)] !=
                    adj[static_cast<std::size_t>(candidate)]
                       [static_cast<std::size_t>(image[static_cast<std::size_t>(prev)])]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) {
                continue;
            }
            image[static_cast<std::size_t>(v)] = candidate;
            used[static_cast<std::size_t>(candidate)] = 1;
            self(self, v + 1);
            used[static_cast<std::size_t>(candidate)] = 0;
            image[static_cast<std::size_t>(v)] = -1;
        }
    };
    extend(extend, 0);
    return result;
}

// True when the permutation preserves orientation: the determinant of an
// independent reference triple keeps its sign under the vertex images.
inline bool orientation_preserving(const laban::Polyhedron& p, const std::vector<int>& perm) {
    const int t0 = 0;
    int t1 = -1, t2 = -1;
    for (int v = 1; v < p.vertex_count(); ++v) {
        if (laban::norm(laban::cross(p.coordinate(t0), p.coordinate(v))) > 1e-9) {
            t1 = v;
            break;
        }
    }
    for (int v = 1; v < p.vertex_count(); ++v) {
        if (std::abs(det3(p.coordinate(t0), p.coordinate(t1), p.coordinate(v))) > 1e-9) {
            t2 = v;
            break;
        }
    }
    const double before = det3(p.coordinate(t0), p.coordinate(t1), p.coordinate(t2));
    const double after =
        det3(p.coordinate(perm[static_cast<std::size_t>(t0)]),
             p.coordinate(perm[static_cast<std::size_t>(t1)]),
             p.coordinate(perm[static_cast<std::size_t>(t2)]));
    return before * after > 0;
}

}  // namespace oracle
