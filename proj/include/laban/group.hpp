#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "laban/errors.hpp"
#include "laban/permutation.hpp"

namespace laban {

// Partition of {0..n-1} into orbits. Blocks are sorted internally and listed
// by increasing smallest element, so the partition has one canonical form.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;

    std::vector<std::vector<int>> nontrivial_blocks() const {
        std::vector<std::vector<int>> result;
        for (const auto& block : blocks) {
            if (block.size() > 1) {
                result.push_back(block);
            }
        }
        return result;
    }

    std::vector<int> singletons() const {
        std::vector<int> result;
        for (const auto& block : blocks) {
            if (block.size() == 1) {
                result.push_back(block.front());
            }
        }
        return result;
    }

    friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

// A finite permutation group on {0..n-1}, stored by its full (sorted) element
// list. The groups in this library are tiny (order <= 120), so explicit
// enumeration is simpler and faster than anything cleverer.
class PermGroup {
  public:
    // Closes the generating set under composition and inversion.
    static PermGroup closure(std::vector<Permutation> generators) {
        if (generators.empty()) {
            throw empty_generators_error("cannot close an empty generating set");
        }
        const int degree = generators.front().degree();
        for (const auto& gen : generators) {
            if (gen.degree() != degree) {
                throw domain_mismatch_error("generators act on different point counts: " +
                                            std::to_string(degree) + " vs " +
                                            std::to_string(gen.degree()));
            }
        }

        std::set<Permutation> elements;
        std::deque<Permutation> frontier;
        const Permutation id = Permutation::identity(degree);
        elements.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            Permutation current = frontier.front();
            frontier.pop_front();
            for (const auto& gen : generators) {
                Permutation next = compose(gen, current);
                if (elements.insert(next).second) {
                    frontier.push_back(next);
                }
            }
        }

        PermGroup group;
        group.degree_ = degree;
        group.elements_.assign(elements.begin(), elements.end());
        for (auto& gen : generators) {
            if (!gen.is_identity()) {
                group.generators_.push_back(std::move(gen));
            }
        }
        if (group.generators_.empty()) {
            group.generators_.push_back(id);
        }
        return group;
    }

    static PermGroup trivial(int n) {
        return closure({Permutation::identity(n)});
    }

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }

    // Sorted; the identity is always elements().front().
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const {
        return p.degree() == degree_ &&
               std::binary_search(elements_.begin(), elements_.end(), p);
    }

    std::vector<int> orbit(int point) const {
        check_point(point);
        std::set<int> seen;
        std::deque<int> frontier;
        seen.insert(point);
        frontier.push_back(point);
        while (!frontier.empty()) {
            int current = frontier.front();
            frontier.pop_front();
            for (const auto& gen : generators_) {
                int next = gen(current);
                if (seen.insert(next).second) {
                    frontier.push_back(next);
                }
            }
        }
        return {seen.begin(), seen.end()};
    }

    OrbitPartition orbit_partition() const {
        OrbitPartition partition;
        std::vector<char> assigned(static_cast<std::size_t>(degree_), 0);
        for (int point = 0; point < degree_; ++point) {
            if (assigned[static_cast<std::size_t>(point)]) {
                continue;
            }
            std::vector<int> block = orbit(point);
            for (int member : block) {
                assigned[static_cast<std::size_t>(member)] = 1;
            }
            partition.blocks.push_back(std::move(block));
        }
        return partition;
    }

    // Subgroup fixing `point`.
    PermGroup point_stabilizer(int point) const {
        check_point(point);
        return filtered([&](const Permutation& p) { return p(point) == point; });
    }

    // Subgroup fixing every point of `points` individually.
    PermGroup pointwise_set_stabilizer(const std::vector<int>& points) const {
        for (int point : points) {
            check_point(point);
        }
        return filtered([&](const Permutation& p) {
            return std::all_of(points.begin(), points.end(),
                               [&](int point) { return p(point) == point; });
        });
    }

    // Subgroup mapping the set `points` onto itself (possibly permuting it).
    PermGroup setwise_stabilizer(const std::vector<int>& points) const {
        std::set<int> target;
        for (int point : points) {
            check_point(point);
            target.insert(point);
        }
        return filtered([&](const Permutation& p) {
            return std::all_of(target.begin(), target.end(),
                               [&](int point) { return target.count(p(point)) > 0; });
        });
    }

    friend bool operator==(const PermGroup&, const PermGroup&) = default;

  private:
    template <typename Predicate>
    PermGroup filtered(Predicate keep) const {
        PermGroup sub;
        sub.degree_ = degree_;
        for (const auto& element : elements_) {
            if (keep(element)) {
                sub.elements_.push_back(element);
                if (!element.is_identity()) {
                    sub.generators_.push_back(element);
                }
            }
        }
        // A subgroup of a group is closed, so no further closure pass is
        // needed; elements_ inherits sortedness from the parent list.
        if (sub.generators_.empty()) {
            sub.generators_.push_back(Permutation::identity(degree_));
        }
        return sub;
    }

    void check_point(int point) const {
        if (point < 0 || point >= degree_) {
            throw out_of_range_error("point " + std::to_string(point) + " outside {0..." +
                                     std::to_string(degree_ - 1) + "}");
        }
    }

    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
};

}  // namespace laban
