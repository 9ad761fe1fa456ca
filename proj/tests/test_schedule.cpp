#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "recolor/schedule.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

RecoloringInstance edge_instance(Coloring s, Coloring t, int k, int c) {
    return {build_path(2), std::move(s), std::move(t), k, c, std::nullopt};
}

} // namespace

TEST_CASE("padding rule and change sets") {
    const Schedule sch({{1, 2, 3}, {4}, {5, 6}});
    CHECK(sch.length() == 2);
    CHECK(sch.at(1, 2) == 4);
    CHECK(sch.at(2, 2) == 6);
    CHECK(sch.coloring_at(1) == Coloring{2, 4, 6});
    CHECK(sch.final() == Coloring{3, 4, 6});
    CHECK(sch.changes(1) == std::vector<Node>{0, 2});
    CHECK(sch.changes(2) == std::vector<Node>{0});
    CHECK(sch.padded().sequence(1) == std::vector<Color>{4, 4, 4});
    CHECK(sch == sch.padded());
    CHECK(Schedule::constant({1, 2}).length() == 0);
    CHECK_THROWS_AS(Schedule({{1}, {}}), Error);
}

TEST_CASE("trajectory round trip") {
    const std::vector<Coloring> xs{{1, 2}, {3, 2}, {3, 1}};
    const auto sch = Schedule::from_trajectory(xs);
    CHECK(support::trajectory(sch) == xs);
}

TEST_CASE("strong verifier: each violation kind") {
    const auto inst = edge_instance({1, 2}, {2, 1}, 2, 1);
    const Schedule good({{1, 3, 3, 2}, {2, 2, 1, 1}});
    CHECK(verify_strong(inst, good).ok);
    CHECK(support::strong_ok(inst.g, inst.s, inst.t, good, 3));

    auto expect = [&](const Schedule& sch, ViolationKind kind, int step) {
        const auto r = verify_strong(inst, sch);
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.violation);
        CHECK(r.violation->kind == kind);
        CHECK(r.violation->step == step);
        CHECK_FALSE(support::strong_ok(inst.g, inst.s, inst.t, sch, 3));
    };
    expect(Schedule({{2, 2}, {2, 1}}), ViolationKind::endpoint_s, 0);
    expect(Schedule({{1, 3}, {2, 2}}), ViolationKind::endpoint_t, 1);
    expect(Schedule({{1, 2, 2}, {2, 2, 1}}), ViolationKind::improper, 1);
    expect(Schedule({{1, 3, 2}, {2, 1, 1}}), ViolationKind::adjacent_change, 1);
    expect(Schedule({{1, 4, 2}, {2, 2, 1}}), ViolationKind::palette, 1);
}

TEST_CASE("violation edge endpoints are reported") {
    const auto inst = edge_instance({1, 2}, {2, 1}, 2, 1);
    const auto r = verify_strong(inst, Schedule({{1, 3, 2}, {2, 1, 1}}));
    REQUIRE(r.violation);
    CHECK(r.violation->u == 0);
    CHECK(r.violation->v == 1);
}

TEST_CASE("list palette: colors up to k must come from the list") {
    RecoloringInstance inst{build_path(2), {1, 2}, {2, 1}, 2, 1, ListAssignment{{1, 2}, {1, 2}}};
    CHECK(verify_strong(inst, Schedule({{1, 3, 3, 2}, {2, 2, 1, 1}})).ok);
    RecoloringInstance narrow{build_path(2), {1, 2}, {1, 3}, 3, 0, ListAssignment{{1, 2}, {2, 3}}};
    CHECK(verify_strong(narrow, Schedule({{1}, {2, 3}})).ok);
    const auto r = verify_strong(narrow, Schedule({{1, 3, 1, 1}, {2, 2, 2, 3}}));
    REQUIRE(r.violation);
    CHECK(r.violation->kind == ViolationKind::palette);
    CHECK(r.violation->u == 0);
}

TEST_CASE("weak feasibility allows disjoint simultaneous moves") {
    const auto inst = edge_instance({1, 2}, {3, 4}, 4, 0);
    const Schedule both({{1, 3}, {2, 4}});
    CHECK(verify_weak(inst, both).ok);
    CHECK_FALSE(verify_strong(inst, both).ok);
    const auto inst2 = edge_instance({1, 2}, {2, 3}, 3, 0);
    const Schedule chase({{1, 2}, {2, 3}});
    CHECK_FALSE(verify_weak(inst2, chase).ok);
}

TEST_CASE("weak to strong on a path keeps the k bound") {
    const auto g = build_path(6);
    RecoloringInstance inst{g, {1, 2, 3, 1, 2, 3}, {2, 3, 1, 2, 3, 1}, 3, 3, std::nullopt};
    // Everyone to k + s in one weak step, then to t in another.
    std::vector<Coloring> xs{inst.s, {4, 5, 6, 4, 5, 6}, inst.t};
    const auto weak = Schedule::from_trajectory(xs);
    REQUIRE(verify_weak(inst, weak).ok);
    const auto strong = weak_to_strong(inst, weak);
    CHECK(verify_strong(inst, strong).ok);
    CHECK(support::strong_ok(g, inst.s, inst.t, strong, 6));
    CHECK(strong.length() <= inst.k * weak.length());
    CHECK_THROWS_AS(weak_to_strong(edge_instance({1, 2}, {2, 3}, 3, 0), Schedule({{1, 2}, {2, 3}})), Error);
}

TEST_CASE("concat, reverse and swapped") {
    const auto inst = edge_instance({1, 2}, {2, 1}, 2, 1);
    const Schedule a({{1, 3}, {2, 2}});
    const Schedule b({{3, 3, 2}, {2, 1, 1}});
    const auto ab = concat(a, b);
    CHECK(ab.length() == 3);
    CHECK(verify_strong(inst, ab).ok);
    CHECK_THROWS_AS(concat(b, a), Error);
    const auto back = reverse(ab);
    CHECK(verify_strong(swapped(inst), back).ok);
    CHECK(reverse(inst, ab) == back);
    CHECK_THROWS_AS(reverse(inst, Schedule({{1, 3, 2}, {2, 1, 1}})), Error);
    CHECK(swapped(inst).s == inst.t);
}

TEST_CASE("builder drops empty steps and runs parts side by side") {
    ScheduleBuilder b({1, 2, 1, 2});
    b.step_all(std::vector<Node>{}, 3);
    CHECK(b.time() == 0);
    const std::vector<std::pair<Node, Color>> moves{{0, 3}, {2, 3}};
    b.step(moves);
    CHECK(b.time() == 1);
    const std::vector<std::pair<std::vector<Node>, Schedule>> parts{
        {{0}, Schedule({{3, 2, 1}})},
        {{3}, Schedule({{2, 4}})},
    };
    b.parallel(parts);
    CHECK(b.time() == 3);
    const auto sch = b.finish();
    CHECK(sch.initial() == Coloring{1, 2, 1, 2});
    CHECK(sch.final() == Coloring{1, 2, 3, 4});
    CHECK(sch.length() == 3);
}

TEST_CASE("validate rejects bad instances") {
    CHECK_THROWS_AS(validate(edge_instance({1, 1}, {1, 2}, 2, 0)), Error);
    CHECK_THROWS_AS(validate(edge_instance({1, 3}, {1, 2}, 2, 0)), Error);
    CHECK_THROWS_AS(validate(edge_instance({1}, {1, 2}, 2, 0)), Error);
}

TEST_CASE("fuzz: verifier agrees with the reference check") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_tree(8, trial);
        const auto s = support::first_coloring(g, 3);
        std::vector<Coloring> xs{s};
        for (int step = 0; step < 4; ++step) {
            Coloring x = xs.back();
            for (Node v = 0; v < g.size(); ++v) {
                if (rng() % 3 == 0) {
                    x[v] = 1 + static_cast<int>(rng() % 4);
                }
            }
            xs.push_back(x);
        }
        if (!support::proper(g, xs.back())) {
            continue;
        }
        RecoloringInstance inst{g, s, xs.back(), 4, 0, std::nullopt};
        const auto sch = Schedule::from_trajectory(xs);
        CHECK(verify_strong(inst, sch).ok == support::strong_ok(g, inst.s, inst.t, sch, inst.k + inst.c));
    }
}
