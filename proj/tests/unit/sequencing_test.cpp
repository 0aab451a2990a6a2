#include <gtest/gtest.h>

#include <cmath>

#include "duet/oracles.hpp"
#include "duet/sequencing.hpp"
#include "fixtures.hpp"

using namespace duet;

namespace {

Allocation fig_allocation(std::initializer_list<int> who) {
    RelocationPlan plan{RobotId{1}, {ObjectId{1}, ObjectId{3}, ObjectId{7}}};
    std::vector<RobotId> assignees;
    for (int r : who) assignees.push_back(RobotId{r});
    return make_allocation(plan, assignees);
}

bool has_pair(const Slot& slot, int place_robot, int place_obj, int pick_robot, int pick_obj) {
    bool place = false, pick = false;
    for (const auto& a : slot.actions) {
        if (a.kind == ActionKind::place && a.robot.value == place_robot && a.object->value == place_obj) place = true;
        if (a.kind == ActionKind::pick && a.robot.value == pick_robot && a.object->value == pick_obj) pick = true;
    }
    return place && pick;
}

std::vector<const Slot*> paired(const Timeline& t) {
    std::vector<const Slot*> out;
    for (const auto& s : t.slots) {
        if (s.paired()) out.push_back(&s);
    }
    return out;
}

}  // namespace

TEST(ActionDuration, ZeroTravelPick) {
    const Scene s = fixtures::figure_scene("fig2a");
    EXPECT_DOUBLE_EQ(action_duration(s, 0, {100, 100}, {100, 100}, ActionKind::pick), 2.0);
}

TEST(ActionDuration, TravelPlusRelease) {
    const Scene s = fixtures::figure_scene("fig2a");
    EXPECT_DOUBLE_EQ(action_duration(s, 0, {100, 100}, {100, 400}, ActionKind::place), 5.0);
    EXPECT_DOUBLE_EQ(action_duration(s, 1, {0, 0}, {300, 400}, ActionKind::standby), 6.0);
}

TEST(Sequencing, FullAlternationPairsTwice) {
    const Scene s = fixtures::figure_scene("fig2a");
    const Allocation a = fig_allocation({1, 2, 1});
    const Timeline t = sequence_actions(s, a);
    const auto p = paired(t);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_TRUE(has_pair(*p[0], 1, 1, 2, 3));
    EXPECT_TRUE(has_pair(*p[1], 2, 3, 1, 7));
    EXPECT_EQ(fixtures::timeline_violation(t, a), "");
}

TEST(Sequencing, SameRobotTailIsSerialized) {
    const Scene s = fixtures::figure_scene("fig2b");
    const Allocation a = fig_allocation({1, 2, 2});
    const Timeline t = sequence_actions(s, a);
    const auto p = paired(t);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_TRUE(has_pair(*p[0], 1, 1, 2, 3));
    // r2: place o3, then a standby, then pick o7, each in its own slot
    std::vector<ActionKind> r2_after_place;
    bool seen = false;
    for (const auto& slot : t.slots) {
        for (const auto& act : slot.actions) {
            if (act.robot.value != 2) continue;
            if (act.kind == ActionKind::place && act.object->value == 3) seen = true;
            else if (seen) r2_after_place.push_back(act.kind);
        }
    }
    ASSERT_GE(r2_after_place.size(), 2u);
    EXPECT_EQ(r2_after_place[0], ActionKind::standby);
    EXPECT_EQ(r2_after_place[1], ActionKind::pick);
    EXPECT_EQ(fixtures::timeline_violation(t, a), "");
}

TEST(Sequencing, SingleTaskIsSequential) {
    const Scene s = fixtures::figure_scene("fig2a");
    RelocationPlan plan{RobotId{1}, {ObjectId{7}}};
    const Allocation a = make_allocation(plan, {RobotId{1}});
    const Timeline t = sequence_actions(s, a);
    ASSERT_EQ(t.slots.size(), 3u);
    EXPECT_EQ(t.slots[0].actions[0].kind, ActionKind::pick);
    EXPECT_EQ(t.slots[1].actions[0].kind, ActionKind::standby);
    EXPECT_EQ(t.slots[2].actions[0].kind, ActionKind::place);
    EXPECT_EQ(t.paired_slots(), 0u);
    EXPECT_DOUBLE_EQ(t.makespan, serialize_baseline_makespan(s, a));
}

TEST(Sequencing, SerialNotFasterThanParallel) {
    const Scene s = fixtures::figure_scene("fig2a");
    const Allocation a = fig_allocation({1, 2, 1});
    EXPECT_GE(serialize_baseline_makespan(s, a), sequence_actions(s, a).makespan);
}

TEST(Sequencing, NoPairingMeansSerial) {
    const Scene s = fixtures::figure_scene("fig2a");
    const Allocation a = fig_allocation({2, 2, 2});
    const Timeline t = sequence_actions(s, a);
    EXPECT_EQ(t.paired_slots(), 0u);
    EXPECT_NEAR(t.makespan, serialize_baseline_makespan(s, a), 1e-9);
}

TEST(Sequencing, RandomAllocationsHoldInvariants) {
    const auto scenes = fixtures::random_scenes(3000, 20, 16);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Scene& s = scenes[i % scenes.size()];
        const Allocation a = fixtures::random_allocation(s, i);
        const Timeline t = sequence_actions(s, a);
        EXPECT_EQ(fixtures::timeline_violation(t, a), "") << "allocation " << i;
        EXPECT_NEAR(t.makespan, oracles::replay_makespan(t), 1e-9);
        const double ratio = t.makespan / serialize_baseline_makespan(s, a);
        EXPECT_GT(ratio, 0.0);
        EXPECT_LE(ratio, 1.0 + 1e-12);
    }
}

TEST(Sequencing, MoreTurnTakingsMorePairs) {
    const Scene s = fixtures::figure_scene("fig2a");
    const auto t0 = sequence_actions(s, fig_allocation({1, 1, 1})).paired_slots();
    const auto t1 = sequence_actions(s, fig_allocation({1, 2, 2})).paired_slots();
    const auto t2 = sequence_actions(s, fig_allocation({1, 2, 1})).paired_slots();
    EXPECT_LT(t0, t1);
    EXPECT_LT(t1, t2);
}
