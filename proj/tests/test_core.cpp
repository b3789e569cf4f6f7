#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tsn/core.hpp"

using namespace tsn;

TEST_CASE("build_frame_graph on empty input") {
    FrameGraph g = build_frame_graph({}, 1);
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("build_frame_graph merges duplicate edges by weight sum") {
    FrameGraph g = build_frame_graph({{1, 2, 0.5}, {1, 2, 0.5}}, 1);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0].from == 1);
    CHECK(g.edges()[0].to == 2);
    CHECK(g.edges()[0].weight == doctest::Approx(1.0));
}

TEST_CASE("build_frame_graph node set is the union of endpoints") {
    FrameGraph g = build_frame_graph({{4376, 27588, 0.0019}, {4376, 28598, 0.0048}}, 1);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.contains(4376));
    CHECK(g.contains(27588));
    CHECK(g.contains(28598));
}

TEST_CASE("build_frame_graph rejects self-loops and negative weights") {
    CHECK_THROWS_AS(build_frame_graph({{7, 7, 1.0}}, 1), InputError);
    CHECK_THROWS_AS(build_frame_graph({{1, 2, -1.0}}, 1), InputError);
}

TEST_CASE("window_interactions replicates the 90/45 overlapping layout") {
    // interactions on day 1 and day 100: day 1 is only in window one,
    // day 100 falls in windows [46,135) and [91,180)
    std::vector<Interaction> interactions = {
        {1, 2, 1.0, 1},
        {3, 4, 1.0, 100},
    };
    TemporalNetwork tsn = window_interactions(interactions, 90, 45);
    REQUIRE(tsn.size() == 3); // starts at 1, 46, 91 (136 > 100)
    CHECK(tsn.frame(1).contains(1));
    CHECK_FALSE(tsn.frame(1).contains(3));
    CHECK(tsn.frame(2).contains(3));
    CHECK_FALSE(tsn.frame(2).contains(1));
    CHECK(tsn.frame(3).contains(3));
}

TEST_CASE("window_interactions window boundaries are half open") {
    // day 90 belongs to window [1,91), day 91 does not
    TemporalNetwork tsn = window_interactions({{1, 2, 1.0, 1}, {3, 4, 1.0, 90}}, 90, 45);
    CHECK(tsn.frame(1).contains(3));
    tsn = window_interactions({{1, 2, 1.0, 1}, {3, 4, 1.0, 91}}, 90, 45);
    CHECK_FALSE(tsn.frame(1).contains(3));
}

TEST_CASE("window_interactions with no interactions") {
    CHECK(window_interactions({}, 90, 45).empty());
}

TEST_CASE("window count over a long span") {
    // activity on days 1 and 540: window starts run 1, 46, ..., 496
    std::vector<Interaction> interactions = {{1, 2, 1.0, 1}, {1, 2, 1.0, 540}};
    CHECK(window_interactions(interactions, 90, 45).size() == 12);
}

TEST_CASE("window_interactions with everything on day one") {
    std::vector<Interaction> interactions = {{1, 2, 1.0, 1}, {2, 3, 2.0, 1}, {1, 2, 0.5, 1}};
    TemporalNetwork tsn = window_interactions(interactions, 90, 45);
    REQUIRE(tsn.size() == 1);
    CHECK(tsn.frame(1).node_count() == 3);
    // weights summed per (from,to)
    CHECK(tsn.frame(1).edges()[0].weight == doctest::Approx(1.5));
}

TEST_CASE("window_interactions parameter checks") {
    CHECK_THROWS_AS(window_interactions({{1, 2, 1.0, 1}}, 0, 1), ParamError);
    CHECK_THROWS_AS(window_interactions({{1, 2, 1.0, 1}}, 10, 0), ParamError);
    CHECK_THROWS_AS(window_interactions({{1, 2, 1.0, 1}}, 10, 11), ParamError);
}

TEST_CASE("non-overlapping windows partition the covered span") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> day(1, 300);
    std::vector<Interaction> interactions;
    for (int i = 0; i < 200; ++i) {
        interactions.push_back({i % 10 + 1, (i + 3) % 10 + 1, 1.0, day(rng)});
    }
    for (auto& it : interactions) {
        if (it.from == it.to) it.to = it.from % 10 + 1;
    }
    TemporalNetwork tsn = window_interactions(interactions, 50, 50);
    double total = 0.0;
    for (const auto& frame : tsn.frames()) {
        for (const auto& e : frame.edges()) total += e.weight;
    }
    CHECK(total == doctest::Approx(static_cast<double>(interactions.size())));
}

TEST_CASE("induced_subgraph") {
    FrameGraph triangle = build_frame_graph({{1, 2, 1.0}, {2, 3, 1.0}, {3, 1, 1.0}}, 2);

    SUBCASE("on all nodes is the identity") {
        FrameGraph sub = induced_subgraph(triangle, {1, 2, 3});
        CHECK(sub.nodes() == triangle.nodes());
        CHECK(sub.edges() == triangle.edges());
        CHECK(sub.frame_index() == 2);
    }
    SUBCASE("on a single node has no edges") {
        FrameGraph sub = induced_subgraph(triangle, {2});
        CHECK(sub.node_count() == 1);
        CHECK(sub.edge_count() == 0);
    }
    SUBCASE("keeps only internal edges") {
        FrameGraph sub = induced_subgraph(triangle, {1, 2});
        CHECK(sub.node_count() == 2);
        REQUIRE(sub.edge_count() == 1);
        CHECK(sub.edges()[0].from == 1);
        CHECK(sub.edges()[0].to == 2);
    }
    SUBCASE("names the offending node") {
        CHECK_THROWS_WITH_AS(induced_subgraph(triangle, {1, 9}),
                             doctest::Contains("9"), InputError);
    }
    SUBCASE("is idempotent") {
        FrameGraph once = induced_subgraph(triangle, {1, 3});
        FrameGraph twice = induced_subgraph(once, {1, 3});
        CHECK(once.nodes() == twice.nodes());
        CHECK(once.edges() == twice.edges());
    }
}

TEST_CASE("join_frames") {
    FrameGraph a = build_frame_graph({{1, 2, 0.3}}, 1);
    FrameGraph b = build_frame_graph({{1, 2, 0.7}, {3, 4, 1.0}}, 2);

    SUBCASE("join with an empty frame keeps the graph") {
        FrameGraph empty(std::vector<NodeId>{}, {}, 2);
        FrameGraph joint = join_frames(a, empty);
        CHECK(joint.nodes() == a.nodes());
        CHECK(joint.edges() == a.edges());
        CHECK(joint.frame_index() == 1);
    }
    SUBCASE("disjoint node sets give a disjoint union") {
        FrameGraph c = build_frame_graph({{8, 9, 1.0}}, 2);
        FrameGraph joint = join_frames(a, c);
        CHECK(joint.node_count() == 4);
        CHECK(joint.edge_count() == 2);
    }
    SUBCASE("shared edges sum their weights") {
        FrameGraph joint = join_frames(a, b);
        REQUIRE(joint.edge_count() == 2);
        CHECK(joint.edges()[0].weight == doctest::Approx(1.0));
    }
    SUBCASE("rejects non-consecutive frames") {
        FrameGraph c = build_frame_graph({{8, 9, 1.0}}, 3);
        CHECK_THROWS_AS(join_frames(a, c), ParamError);
    }
    SUBCASE("content is symmetric for fixed index ordering") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<NodeId> node(1, 8);
        std::uniform_real_distribution<double> weight(0.1, 2.0);
        for (int round = 0; round < 20; ++round) {
            std::vector<WeightedEdge> e1, e2;
            for (int i = 0; i < 10; ++i) {
                NodeId u = node(rng), v = node(rng);
                if (u != v) e1.push_back({u, v, weight(rng)});
                u = node(rng), v = node(rng);
                if (u != v) e2.push_back({u, v, weight(rng)});
            }
            FrameGraph f1 = build_frame_graph(e1, 1);
            FrameGraph f2 = build_frame_graph(e2, 2);
            FrameGraph f1_as_second = build_frame_graph(e1, 2);
            FrameGraph f2_as_first = build_frame_graph(e2, 1);
            FrameGraph ab = join_frames(f1, f2);
            FrameGraph ba = join_frames(f2_as_first, f1_as_second);
            CHECK(ab.nodes() == ba.nodes());
            CHECK(ab.edges() == ba.edges());
        }
    }
}

TEST_CASE("temporal network frame indices must run 1..m") {
    FrameGraph f1 = build_frame_graph({{1, 2, 1.0}}, 1);
    FrameGraph f3 = build_frame_graph({{1, 2, 1.0}}, 3);
    CHECK_THROWS_AS(TemporalNetwork({f1, f3}), InputError);
}

TEST_CASE("grouping enforces unique ids per frame but allows overlap") {
    Grouping grouping;
    grouping.add(Group(1, 1, {1, 2, 3}));
    grouping.add(Group(2, 1, {3, 4, 5})); // member 3 in two groups
    grouping.add(Group(1, 2, {1, 2}));    // same id in another frame
    CHECK_THROWS_AS(grouping.add(Group(1, 1, {9})), InputError);
    CHECK(grouping.at(1).size() == 2);
    CHECK(grouping.at(2).size() == 1);
    CHECK(grouping.at(3).empty());
    CHECK(grouping.group_count() == 3);
}

TEST_CASE("groups reject empty member sets and deduplicate members") {
    CHECK_THROWS_AS(Group(1, 1, {}), InputError);
    Group g(1, 1, {5, 3, 5, 3});
    CHECK(g.members() == std::vector<NodeId>{3, 5});
}
