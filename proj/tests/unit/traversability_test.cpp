#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "duet/allocation.hpp"
#include "duet/oracles.hpp"
#include "duet/traversability.hpp"
#include "fixtures.hpp"

using namespace duet;
using fixtures::id_values;

namespace {

// Recomputes an edge from first principles: reach, then the raw corridor test.
bool expected_robot_edge(const SceneState& st, RobotIndex r, ObjectIndex o) {
    const Scene& s = st.scene();
    const Point c = s.objects[o].footprint.center;
    if (!st.present(o) || st.edge_invalidated(r, o)) return false;
    if (distance(s.robots[r].mount, c) > s.robots[r].reach_radius) return false;
    const ObjectIndex ignore[] = {o};
    return corridor_free(st, s.robots[r].mount, c, s.gripper_radius, ignore);
}

}  // namespace

TEST(Corridor, EmptyStateIsFree) {
    const Scene s = fixtures::random_scenes(1, 1, 10).front();
    SceneState st(s);
    for (ObjectIndex i = 0; i < s.objects.size(); ++i) st.remove(i);
    EXPECT_TRUE(corridor_free(st, {10, 10}, {1090, 490}, 80, {}));
    EXPECT_TRUE(corridor_free(st, {550, -300}, {200, 400}, 80, {}));
}

TEST(Corridor, MidpointBlocker) {
    const Scene s = fixtures::make_scene({{1, 500, 250, 30}, {2, 500, 450, 30, true}});
    SceneState st(s);
    EXPECT_FALSE(corridor_free(st, {300, 250}, {700, 250}, 40, {}));
    const ObjectIndex ignore[] = {0};
    EXPECT_TRUE(corridor_free(st, {300, 250}, {700, 250}, 40, ignore));
    // clearance exactly 0 counts as free
    EXPECT_TRUE(corridor_free(st, {300, 180}, {700, 180}, 40, {}));
    EXPECT_FALSE(corridor_free(st, {300, 180.5}, {700, 180.5}, 40, {}));
}

TEST(Corridor, EndpointBehindBackWallRejected) {
    const Scene s = fixtures::make_scene({{1, 100, 100, 30}, {2, 900, 100, 30, true}});
    SceneState st(s);
    EXPECT_FALSE(corridor_free(st, {500, 100}, {500, 600}, 40, {}));
    EXPECT_TRUE(corridor_free(st, {500, -200}, {500, 400}, 40, {}));
}

TEST(Corridor, AgreesWithSamplingOracle) {
    std::size_t compared = 0, banded = 0;
    for (const Scene& s : fixtures::random_scenes(100, 50, 12)) {
        SceneState st(s);
        const std::size_t n = s.objects.size();
        auto check = [&](Point a, Point b, double radius, std::vector<ObjectIndex> ignore) {
            const double exact = oracles::analytic_clearance(st, a, b, radius, ignore);
            if (std::abs(exact) <= 0.5) {
                ++banded;
                return;
            }
            const bool sampled_free = oracles::sampled_clearance(st, a, b, radius, ignore) >= 0.0;
            EXPECT_EQ(corridor_free(st, a, b, radius, ignore), sampled_free);
            ++compared;
        };
        for (ObjectIndex i = 0; i < n; ++i) {
            const Point ci = s.objects[i].footprint.center;
            for (const auto& r : s.robots) check(r.mount, ci, s.gripper_radius, {i});
            for (ObjectIndex j = i + 1; j < n; ++j) {
                const double moving =
                    s.gripper_radius + std::max(s.objects[i].footprint.radius, s.objects[j].footprint.radius);
                check(ci, s.objects[j].footprint.center, moving, {i, j});
            }
        }
    }
    EXPECT_GT(compared, 4000u);
    EXPECT_LT(banded, compared / 100);
}

TEST(TGraph, Fig3PathPresent) {
    const Scene s = fixtures::figure_scene("fig3");
    SceneState st(s);
    const TGraph g = build_tgraph(st, 0);
    const auto n1 = *g.node_of(ObjectId{1}), n3 = *g.node_of(ObjectId{3}), nt = *g.node_of(ObjectId{7});
    EXPECT_TRUE(g.has_edge(0, n1));
    EXPECT_TRUE(g.has_edge(n1, n3));
    EXPECT_TRUE(g.has_edge(n3, nt));
    EXPECT_FALSE(g.has_edge(0, nt));
}

TEST(TGraph, ClearedSceneIsRobotTargetEdge) {
    const Scene s = fixtures::random_scenes(5, 1, 12).front();
    SceneState st(s);
    for (ObjectIndex i = 0; i < s.objects.size(); ++i) {
        if (i != s.target_index()) st.remove(i);
    }
    for (RobotIndex r = 0; r < kRobotCount; ++r) {
        const TGraph g = build_tgraph(st, r);
        ASSERT_EQ(g.node_count(), 2u);
        EXPECT_TRUE(g.has_edge(0, 1));
        EXPECT_EQ(g.edge_count(), 1u);
    }
}

TEST(TGraph, MatchesPerEdgeRecheck) {
    for (const Scene& s : fixtures::random_scenes(40, 5, 10)) {
        SceneState st(s);
        st.remove(0);
        st.invalidate_edge(1, 2);
        for (RobotIndex r = 0; r < kRobotCount; ++r) {
            const TGraph g = build_tgraph(st, r);
            const auto present = st.present_objects();
            ASSERT_EQ(g.node_count(), present.size() + 1);
            for (std::size_t a = 1; a < g.node_count(); ++a) {
                const ObjectIndex oa = g.object_at(a);
                EXPECT_EQ(g.has_edge(0, a), expected_robot_edge(st, r, oa));
                for (std::size_t b = a + 1; b < g.node_count(); ++b) {
                    const ObjectIndex ob = g.object_at(b);
                    const double moving = s.gripper_radius + std::max(s.objects[oa].footprint.radius,
                                                                      s.objects[ob].footprint.radius);
                    const ObjectIndex ignore[] = {oa, ob};
                    const bool want = corridor_free(st, s.objects[oa].footprint.center,
                                                    s.objects[ob].footprint.center, moving, ignore);
                    EXPECT_EQ(g.has_edge(a, b), want);
                    EXPECT_EQ(g.has_edge(b, a), want);
                }
            }
        }
    }
}

TEST(Orp, Fig3Plans) {
    const Scene s = fixtures::figure_scene("fig3");
    const auto plans = plan_both(SceneState(s));
    ASSERT_TRUE(plans[0] && plans[1]);
    EXPECT_EQ(id_values(plans[0]->sequence), (std::vector<int>{1, 3, 7}));
    EXPECT_EQ(id_values(plans[1]->sequence), (std::vector<int>{4, 6, 3, 7}));
    EXPECT_EQ(plans[0]->robot, RobotId{1});
    EXPECT_EQ(plans[1]->robot, RobotId{2});
}

TEST(Orp, DirectEdgeGivesSingleTask) {
    const Scene s = fixtures::make_scene({{1, 100, 400, 30}, {2, 550, 200, 30, true}});
    const auto plans = plan_both(SceneState(s));
    for (const auto& p : plans) {
        ASSERT_TRUE(p);
        EXPECT_EQ(id_values(p->sequence), (std::vector<int>{2}));
        EXPECT_EQ(p->k(), 1u);
    }
}

TEST(Orp, LexicographicTieBreak) {
    // robot - o5 - o9 and robot - o2 - o9 are both two hops
    TGraph g(RobotId{1}, {0, 1, 2}, {ObjectId{5}, ObjectId{2}, ObjectId{9}});
    g.set_edge(0, 1);
    g.set_edge(0, 2);
    g.set_edge(1, 3);
    g.set_edge(2, 3);
    const auto plan = orp_plan(g, ObjectId{9});
    ASSERT_TRUE(plan);
    EXPECT_EQ(id_values(plan->sequence), (std::vector<int>{2, 9}));
}

TEST(Orp, UnreachableTarget) {
    TGraph g(RobotId{1}, {0, 1}, {ObjectId{1}, ObjectId{2}});
    g.set_edge(0, 1);
    EXPECT_FALSE(orp_plan(g, ObjectId{2}));
}

TEST(Orp, LengthMatchesPathEnumeration) {
    std::size_t with_plan = 0;
    for (const Scene& s : fixtures::random_scenes(200, 40, 8)) {
        SceneState st(s);
        for (RobotIndex r = 0; r < kRobotCount; ++r) {
            const TGraph g = build_tgraph(st, r);
            const auto plan = orp_plan(g, s.target_id());
            const auto best = oracles::min_plan_length_by_enumeration(g, s.target_id());
            ASSERT_EQ(plan.has_value(), best.has_value());
            if (!plan) continue;
            ++with_plan;
            EXPECT_EQ(plan->k(), *best);
            EXPECT_EQ(plan->sequence.back(), s.target_id());
            // consecutive plan entries are adjacent
            std::size_t prev = 0;
            for (ObjectId id : plan->sequence) {
                const auto node = *g.node_of(id);
                EXPECT_TRUE(g.has_edge(prev, node));
                prev = node;
            }
        }
    }
    EXPECT_GT(with_plan, 40u);
}

TEST(Accessibility, Fig2bTargetOccludedForR1) {
    const Scene s = fixtures::figure_scene("fig2b");
    SceneState st(s);
    st.remove(s.index_of(ObjectId{1}));
    st.remove(s.index_of(ObjectId{3}));
    EXPECT_FALSE(accessible(st, 0, s.target_index()));
    EXPECT_TRUE(accessible(st, 1, s.target_index()));
}

TEST(Accessibility, OpenObjectNearRobot) {
    const Scene s = fixtures::make_scene({{1, 440, 80, 30}, {2, 550, 400, 30, true}});
    EXPECT_TRUE(accessible(SceneState(s), 0, 0));
}

TEST(Accessibility, MatchesCorridorEvaluation) {
    std::mt19937_64 rng(99);
    const auto scenes = fixtures::random_scenes(300, 20, 14);
    for (int trial = 0; trial < 100; ++trial) {
        const Scene& s = scenes[rng() % scenes.size()];
        SceneState st(s);
        for (ObjectIndex i = 0; i < s.objects.size(); ++i) {
            if (rng() % 4 == 0) st.remove(i);
        }
        const RobotIndex r = rng() % 2;
        const ObjectIndex o = rng() % s.objects.size();
        EXPECT_EQ(accessible(st, r, o), expected_robot_edge(st, r, o));
    }
}

TEST(Accessibility, InvalidatedEdgeIsClosed) {
    const Scene s = fixtures::make_scene({{1, 440, 80, 30}, {2, 550, 400, 30, true}});
    SceneState st(s);
    st.invalidate_edge(0, 0);
    EXPECT_FALSE(accessible(st, 0, 0));
    EXPECT_TRUE(accessible(st, 1, 0));
}
