// Acceptance gate: one test per criterion, each ending with a single
// "criterion N (<label>): PASS|FAIL" line on stdout. Every body uses
// non-fatal expectations so the verdict line always prints.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "laban/laban.hpp"
#include "oracle.hpp"
#include "spawn.hpp"

namespace {

using laban::ClockPosition;
using laban::Device;
using laban::Direction;
using laban::MovementSequence;
using laban::Permutation;
using laban::PermGroup;
using laban::Polyhedron;
using laban::SolidKind;

void run_criterion(int number, const std::string& label,
                   const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        ADD_FAILURE() << "unexpected exception: " << e.what();
    } catch (...) {
        ADD_FAILURE() << "unexpected non-standard exception";
    }
    const bool failed = ::testing::Test::HasFailure();
    std::cout << "criterion " << number << " (" << label
              << "): " << (failed ? "FAIL" : "PASS") << std::endl;
}

std::vector<std::vector<int>> sorted_blocks(const laban::OrbitPartition& partition) {
    return partition.nontrivial_blocks();
}

TEST(Acceptance, Criterion01GroupOrders) {
    run_criterion(1, "group orders vs brute force", [] {
        const struct {
            SolidKind kind;
            long long full;
            long long rot;
        } expected[3] = {{SolidKind::octahedron, 48, 24},
                         {SolidKind::cube, 48, 24},
                         {SolidKind::icosahedron, 120, 60}};
        for (const auto& row : expected) {
            const Polyhedron& p = Polyhedron::canonical(row.kind);
            const auto autos = oracle::graph_automorphisms(p);
            long long rotations = 0;
            for (const auto& mapping : autos) {
                const Permutation perm = Permutation::from_mapping(mapping);
                EXPECT_TRUE(p.full_symmetry_group().contains(perm))
                    << laban::to_string(row.kind);
                if (oracle::orientation_preserving(p, mapping)) {
                    ++rotations;
                    EXPECT_TRUE(p.rotation_group().contains(perm))
                        << laban::to_string(row.kind);
                }
            }
            EXPECT_EQ(static_cast<long long>(autos.size()), row.full)
                << laban::to_string(row.kind);
            EXPECT_EQ(rotations, row.rot) << laban::to_string(row.kind);
            EXPECT_EQ(p.full_symmetry_group().order(), row.full)
                << laban::to_string(row.kind);
            EXPECT_EQ(p.rotation_group().order(), row.rot)
                << laban::to_string(row.kind);
        }
    });
}

TEST(Acceptance, Criterion02OrbitTables) {
    run_criterion(2, "orbit tables", [] {
        // (a) On the octahedron, the group generated by (v1 v2)(v3 v4)
        //     partitions the swapped vertices into two pairs.
        const PermGroup octa_pair =
            PermGroup::closure({Permutation::from_cycles(6, {{0, 1}, {2, 3}})});
        EXPECT_EQ(sorted_blocks(octa_pair.orbit_partition()),
                  (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
        EXPECT_EQ(octa_pair.orbit_partition().singletons(),
                  (std::vector<int>{4, 5}));

        // (b) The six-pair half-turn pairing: the group it generates has
        //     exactly those six pairs as orbits.
        const Permutation half_turn = Permutation::from_cycles(
            12, {{0, 1}, {2, 3}, {4, 6}, {5, 7}, {8, 9}, {10, 11}});
        const PermGroup half_turn_group = PermGroup::closure({half_turn});
        EXPECT_EQ(sorted_blocks(half_turn_group.orbit_partition()),
                  (std::vector<std::vector<int>>{
                      {0, 1}, {2, 3}, {4, 6}, {5, 7}, {8, 9}, {10, 11}}));
        EXPECT_TRUE(half_turn_group.orbit_partition().singletons().empty());

        // (c) The low-high and left-right plane stabilizers induce the
        //     expected four-pair partitions.
        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        const PermGroup lh_stab = icosa.full_symmetry_group().pointwise_set_stabilizer(
            laban::body_plane(laban::PlaneName::horizontal).fixed_vertices);
        EXPECT_EQ(sorted_blocks(lh_stab.orbit_partition()),
                  (std::vector<std::vector<int>>{{0, 8}, {1, 9}, {2, 10}, {3, 11}}));
        EXPECT_EQ(lh_stab.orbit_partition().singletons(),
                  (std::vector<int>{4, 5, 6, 7}));

        const PermGroup lr_stab = icosa.full_symmetry_group().pointwise_set_stabilizer(
            laban::body_plane(laban::PlaneName::sagittal).fixed_vertices);
        EXPECT_EQ(sorted_blocks(lr_stab.orbit_partition()),
                  (std::vector<std::vector<int>>{{2, 3}, {4, 5}, {6, 7}, {10, 11}}));
        EXPECT_EQ(lr_stab.orbit_partition().singletons(),
                  (std::vector<int>{0, 1, 8, 9}));
    });
}

TEST(Acceptance, Criterion03PlaneStabilizers) {
    run_criterion(3, "plane stabilizers have order two", [] {
        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        for (const laban::BodyPlane& plane : laban::body_planes()) {
            const PermGroup stab =
                icosa.full_symmetry_group().pointwise_set_stabilizer(
                    plane.fixed_vertices);
            EXPECT_EQ(stab.order(), 2) << laban::to_string(plane.name);
        }

        // lh and lr must equal the expected involutions element-for-element.
        EXPECT_EQ(laban::low_high_inversion().perm,
                  Permutation::from_cycles(12, {{0, 8}, {1, 9}, {2, 10}, {3, 11}}));
        EXPECT_EQ(laban::left_right_inversion().perm,
                  Permutation::from_cycles(12, {{2, 3}, {4, 5}, {6, 7}, {10, 11}}));

        // fb is pinned through the orbit pairing it induces.
        const PermGroup fb_group = PermGroup::closure({laban::front_back_inversion().perm});
        EXPECT_EQ(sorted_blocks(fb_group.orbit_partition()),
                  (std::vector<std::vector<int>>{{0, 1}, {4, 6}, {5, 7}, {8, 9}}));
        EXPECT_EQ(fb_group.orbit_partition().singletons(),
                  (std::vector<int>{2, 3, 10, 11}));
    });
}

TEST(Acceptance, Criterion04DeviceAlgebra) {
    run_criterion(4, "device algebra", [] {
        const Device fb = laban::front_back_inversion();
        const Device lh = laban::low_high_inversion();
        const Device lr = laban::left_right_inversion();

        for (const Device& d : {fb, lh, lr, laban::diametral_inversion()}) {
            for (int v = 0; v < 12; ++v) {
                EXPECT_EQ(d.perm(d.perm(v)), v) << d.name;
            }
        }
        const Device octa = laban::octahedral_inversion();
        for (int v = 0; v < 6; ++v) {
            EXPECT_EQ(octa.perm(octa.perm(v)), v);
        }

        const Device pairs[3][2] = {{fb, lh}, {fb, lr}, {lh, lr}};
        for (const auto& pair : pairs) {
            for (int v = 0; v < 12; ++v) {
                EXPECT_EQ(pair[0].perm(pair[1].perm(v)), pair[1].perm(pair[0].perm(v)))
                    << pair[0].name << " vs " << pair[1].name;
            }
        }

        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        for (int v = 0; v < 12; ++v) {
            EXPECT_EQ(lr.perm(lh.perm(fb.perm(v))), icosa.antipode(v));
        }
    });
}

TEST(Acceptance, Criterion05SequenceHomomorphism) {
    run_criterion(5, "sequence operation homomorphism", [] {
        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        const std::vector<Device> devices = {
            laban::front_back_inversion(), laban::low_high_inversion(),
            laban::left_right_inversion(), laban::diametral_inversion(),
            laban::transposition(1),       laban::transposition(5)};

        std::mt19937 rng(20260813);
        std::uniform_int_distribution<int> length_dist(1, 4);
        std::uniform_int_distribution<int> vertex_dist(0, 11);
        std::uniform_int_distribution<std::size_t> device_dist(0, devices.size() - 1);

        auto random_sequence = [&]() {
            MovementSequence s;
            const int length = length_dist(rng);
            for (int i = 0; i < length; ++i) {
                s.steps.push_back(icosa.direction_at(vertex_dist(rng)));
            }
            return s;
        };

        for (int trial = 0; trial < 5000; ++trial) {
            const MovementSequence a = random_sequence();
            const MovementSequence b = random_sequence();
            const Device& device = devices[device_dist(rng)];
            const Direction lhs = laban::apply(device, laban::oplus(a, b));
            const Direction rhs = laban::oplus(laban::apply_sequence(device, a),
                                               laban::apply_sequence(device, b));
            EXPECT_EQ(lhs.vertex, rhs.vertex) << device.name << " trial " << trial;
            if (::testing::Test::HasFailure()) {
                break;
            }
        }

        // The single-step worked example: a = v5 alone, b = v8 alone.
        const MovementSequence a{{icosa.direction_at(4)}};
        const MovementSequence b{{icosa.direction_at(7)}};
        EXPECT_EQ(laban::oplus(a, b).token, "MLB");
        const Device fb = laban::front_back_inversion();
        const Direction lhs = laban::apply(fb, laban::oplus(a, b));
        const Direction rhs = laban::oplus(laban::apply_sequence(fb, a),
                                           laban::apply_sequence(fb, b));
        EXPECT_EQ(lhs.token, "MLF");
        EXPECT_EQ(rhs.token, "MLF");
    });
}

TEST(Acceptance, Criterion06NormalZones) {
    run_criterion(6, "normal-zone table", [] {
        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        const struct {
            laban::Limb limb;
            int standard;  // 0-based vertex
            std::vector<int> range;
        } rows[4] = {
            {laban::Limb::left_arm, 3, {0, 1, 7, 11, 5}},
            {laban::Limb::right_arm, 2, {0, 1, 6, 10, 4}},
            {laban::Limb::left_leg, 11, {5, 3, 7, 9, 8}},
            {laban::Limb::right_leg, 10, {4, 2, 6, 9, 8}},
        };
        for (const auto& row : rows) {
            const laban::NormalZone zone = laban::normal_zone(icosa, row.limb);
            EXPECT_EQ(zone.standard.vertex, row.standard) << laban::to_string(row.limb);
            std::vector<int> range;
            for (const Direction& d : zone.range) {
                range.push_back(d.vertex);
            }
            EXPECT_EQ(range, row.range) << laban::to_string(row.limb);

            const PermGroup stab = icosa.rotation_group().point_stabilizer(row.standard);
            EXPECT_EQ(stab.order(), 5) << laban::to_string(row.limb);
            std::vector<int> sorted_range = range;
            std::sort(sorted_range.begin(), sorted_range.end());
            EXPECT_EQ(stab.orbit(range.front()), sorted_range)
                << laban::to_string(row.limb);
        }
    });
}

TEST(Acceptance, Criterion07ClockAlgebra) {
    run_criterion(7, "clock algebra", [] {
        const struct {
            int step;
            std::size_t count;
            std::size_t size;
        } families[3] = {{4, 4, 3}, {3, 3, 4}, {6, 6, 2}};
        for (const auto& family : families) {
            const auto cosets = laban::coset_family(family.step);
            EXPECT_EQ(cosets.size(), family.count);
            std::set<int> seen;
            std::set<std::vector<int>> members;
            for (const auto& coset : cosets) {
                EXPECT_EQ(coset.size(), family.size);
                for (int p : coset) {
                    EXPECT_TRUE(seen.insert(p).second);
                }
                members.insert(coset);
            }
            EXPECT_EQ(seen.size(), 12u);
            // Every transposition permutes the family: each shifted coset is
            // again a member.
            for (int k = 0; k < 12; ++k) {
                for (const auto& coset : cosets) {
                    std::vector<int> shifted;
                    for (int p : coset) {
                        shifted.push_back((p + k) % 12);
                    }
                    std::sort(shifted.begin(), shifted.end());
                    EXPECT_TRUE(members.count(shifted))
                        << "step " << family.step << " shift " << k;
                }
            }
        }

        for (int p = 0; p < 12; ++p) {
            const ClockPosition pos(p);
            EXPECT_NE(laban::diametral_clock(pos), pos);
            EXPECT_EQ(laban::diametral_clock(laban::diametral_clock(pos)), pos);
        }

        const laban::Scale& scale = laban::default_scale();
        const Polyhedron& icosa = Polyhedron::canonical(SolidKind::icosahedron);
        for (int p = 0; p < 12; ++p) {
            EXPECT_EQ(scale.vertex_at(ClockPosition(p + 6)),
                      icosa.antipode(scale.vertex_at(ClockPosition(p))));
        }
    });
}

TEST(Acceptance, Criterion08OrbitStabilizer) {
    run_criterion(8, "orbit-stabilizer theorem", [] {
        for (SolidKind kind :
             {SolidKind::octahedron, SolidKind::cube, SolidKind::icosahedron}) {
            const Polyhedron& p = Polyhedron::canonical(kind);
            for (const PermGroup* group :
                 {&p.rotation_group(), &p.full_symmetry_group()}) {
                for (int v = 0; v < p.vertex_count(); ++v) {
                    const long long orbit_size =
                        static_cast<long long>(group->orbit(v).size());
                    const long long stab_order = group->point_stabilizer(v).order();
                    EXPECT_EQ(orbit_size * stab_order, group->order())
                        << laban::to_string(kind) << " vertex " << v + 1;
                }
            }
        }
    });
}

TEST(Acceptance, Criterion09NotationRoundTrip) {
    run_criterion(9, "notation round-trip and fuzzing", [] {
        // Every single token survives parse -> serialize.
        for (SolidKind kind :
             {SolidKind::octahedron, SolidKind::cube, SolidKind::icosahedron}) {
            const Polyhedron& p = Polyhedron::canonical(kind);
            for (int v = 0; v < p.vertex_count(); ++v) {
                const std::string token = p.token_at(v);
                EXPECT_EQ(laban::serialize_sequence(laban::parse_sequence(token)),
                          token);
            }
        }

        // Random single-solid sequences round-trip byte for byte.
        std::mt19937 rng(912);
        std::uniform_int_distribution<int> solid_dist(0, 2);
        std::uniform_int_distribution<int> length_dist(1, 8);
        const SolidKind kinds[3] = {SolidKind::octahedron, SolidKind::cube,
                                    SolidKind::icosahedron};
        for (int trial = 0; trial < 1000; ++trial) {
            const Polyhedron& p = Polyhedron::canonical(kinds[solid_dist(rng)]);
            std::uniform_int_distribution<int> vertex_dist(0, p.vertex_count() - 1);
            std::string text;
            const int length = length_dist(rng);
            for (int i = 0; i < length; ++i) {
                if (i > 0) {
                    text.push_back(' ');
                }
                text += p.token_at(vertex_dist(rng));
            }
            EXPECT_EQ(laban::serialize_sequence(laban::parse_sequence(text)), text)
                << "trial " << trial;
            if (::testing::Test::HasFailure()) {
                break;
            }
        }

        // Fuzzing: arbitrary bytes never escape the library's error type.
        std::mt19937 fuzz_rng(4077);
        std::uniform_int_distribution<int> len_dist(0, 64);
        std::uniform_int_distribution<int> byte_dist(0, 255);
        int diagnostics = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            std::string input;
            const int length = len_dist(fuzz_rng);
            for (int i = 0; i < length; ++i) {
                input.push_back(static_cast<char>(byte_dist(fuzz_rng)));
            }
            try {
                (void)laban::parse_sequence(input);
            } catch (const laban::error&) {
                ++diagnostics;  // the only acceptable failure mode
            } catch (const std::exception& e) {
                ADD_FAILURE() << "fuzz trial " << trial
                              << " escaped with: " << e.what();
                break;
            }
        }
        EXPECT_GT(diagnostics, 0);
    });
}

TEST(Acceptance, Criterion10CheckCommand) {
    run_criterion(10, "check subcommand is green and fast", [] {
        const auto start = std::chrono::steady_clock::now();
        const spawn::RunResult r = spawn::run(LABAN_CLI_PATH, "check");
        const auto elapsed = std::chrono::steady_clock::now() - start;
        const double seconds =
            std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count();
        EXPECT_EQ(r.exit_code, 0) << r.out;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
        EXPECT_NE(r.out.find(", 0 failed"), std::string::npos) << r.out;
        EXPECT_LT(seconds, 5.0);
    });
}

}  // namespace
