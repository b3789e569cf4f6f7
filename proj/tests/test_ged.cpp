#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "tsn/ged.hpp"

using namespace tsn;
using namespace tsn::ged;
using tsn::importance::ImportanceVector;
using tsn::importance::Measure;

namespace {

Group make_group(int id, int frame, std::vector<NodeId> members) {
    return Group(id, frame, std::move(members));
}

ImportanceVector uniform_importance(const Group& group, double value) {
    std::vector<std::pair<NodeId, double>> scores;
    for (NodeId node : group.members()) scores.emplace_back(node, value);
    return ImportanceVector::from_scores(Measure::social_position, group.group_id(),
                                         std::move(scores));
}

EventRecord make_event(EventType type, std::optional<GroupAt> g1, std::optional<GroupAt> g2) {
    EventRecord record;
    record.event = type;
    record.group1 = g1;
    record.group2 = g2;
    return record;
}

} // namespace

TEST_CASE("threshold validation") {
    Thresholds th;
    th.alpha = 101.0;
    CHECK_THROWS_AS(th.validate(), ParamError);
    th = Thresholds{};
    th.beta = -1.0;
    CHECK_THROWS_AS(th.validate(), ParamError);
    th = Thresholds{};
    CHECK_FALSE(th.below_recommended());
    th.alpha = 30.0;
    CHECK(th.below_recommended()); // allowed, but flagged
    CHECK_NOTHROW(th.validate());
}

TEST_CASE("overlap normalises by the bigger group") {
    Group a = make_group(1, 1, {1, 2, 3});
    Group b = make_group(2, 2, {1, 2, 3});
    CHECK(overlap(a, b) == doctest::Approx(100.0));

    Group c = make_group(3, 2, {7, 8, 9});
    CHECK(overlap(a, c) == doctest::Approx(0.0));

    // 7 and 7 members sharing 4 gives 4/7
    Group y1 = make_group(4, 1, {4, 5, 6, 7, 8, 9, 10});
    Group y2 = make_group(5, 2, {4, 5, 6, 7, 20, 21, 22});
    CHECK(overlap(y1, y2) == doctest::Approx(400.0 / 7.0).epsilon(1e-9));
}

TEST_CASE("inclusion blends quantity and quality") {
    SUBCASE("a group is fully included in itself") {
        Group g = make_group(1, 1, {1, 2, 3, 4});
        CHECK(inclusion(g, g, uniform_importance(g, 0.7)) == doctest::Approx(100.0));
    }
    SUBCASE("worked 19-member arithmetic, important shared members") {
        std::vector<NodeId> members;
        for (NodeId i = 1; i <= 19; ++i) members.push_back(i);
        Group g1 = make_group(1, 1, members);
        Group g2 = make_group(2, 2, {1, 2, 3, 4, 5, 100, 101});
        // shared members 1..5 carry importance 7 of the group total 19
        std::vector<std::pair<NodeId, double>> scores;
        for (NodeId i = 1; i <= 5; ++i) scores.emplace_back(i, 7.0 / 5.0);
        for (NodeId i = 6; i <= 19; ++i) scores.emplace_back(i, 12.0 / 14.0);
        auto importance = ImportanceVector::from_scores(Measure::social_position, 1, scores);
        CHECK(inclusion(g1, g2, importance) ==
              doctest::Approx(5.0 / 19.0 * 7.0 / 19.0 * 100.0));
        CHECK(inclusion(g1, g2, importance) == doctest::Approx(9.70).epsilon(0.01));
    }
    SUBCASE("worked 19-member arithmetic, mixed shared members") {
        std::vector<NodeId> members;
        for (NodeId i = 1; i <= 19; ++i) members.push_back(i);
        Group g1 = make_group(1, 1, members);
        Group g2 = make_group(2, 2, {1, 2, 3, 4, 5, 6, 7});
        std::vector<std::pair<NodeId, double>> scores;
        for (NodeId i = 1; i <= 7; ++i) scores.emplace_back(i, 6.0 / 7.0);
        for (NodeId i = 8; i <= 19; ++i) scores.emplace_back(i, 13.0 / 12.0);
        auto importance = ImportanceVector::from_scores(Measure::social_position, 1, scores);
        CHECK(inclusion(g1, g2, importance) ==
              doctest::Approx(7.0 / 19.0 * 6.0 / 19.0 * 100.0));
        CHECK(inclusion(g1, g2, importance) == doctest::Approx(11.63).epsilon(0.01));
    }
    SUBCASE("disjoint groups have zero inclusion") {
        Group g1 = make_group(1, 1, {1, 2});
        Group g2 = make_group(2, 2, {8, 9});
        CHECK(inclusion(g1, g2, uniform_importance(g1, 1.0)) == doctest::Approx(0.0));
    }
    SUBCASE("zero total importance is rejected") {
        Group g1 = make_group(1, 1, {1, 2});
        Group g2 = make_group(2, 2, {1});
        CHECK_THROWS_AS(inclusion(g1, g2, uniform_importance(g1, 0.0)), InputError);
    }
}

TEST_CASE("quantity-only inclusion") {
    Group g = make_group(1, 1, {1, 2, 3, 4});
    CHECK(inclusion_quantity_only(g, g) == doctest::Approx(100.0));
    Group one = make_group(2, 2, {4, 9, 10});
    CHECK(inclusion_quantity_only(g, one) == doctest::Approx(25.0));
}

TEST_CASE("measured inclusion never exceeds the quantity-only value") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<NodeId> node(1, 25);
    std::uniform_real_distribution<double> weight(0.01, 3.0);
    for (int round = 0; round < 200; ++round) {
        std::set<NodeId> m1, m2;
        while (m1.size() < 6) m1.insert(node(rng));
        while (m2.size() < 6) m2.insert(node(rng));
        Group g1 = make_group(1, 1, {m1.begin(), m1.end()});
        Group g2 = make_group(2, 2, {m2.begin(), m2.end()});
        std::vector<std::pair<NodeId, double>> scores;
        for (NodeId n : g1.members()) scores.emplace_back(n, weight(rng));
        auto importance = ImportanceVector::from_scores(Measure::social_position, 1, scores);
        CHECK(inclusion(g1, g2, importance) <= inclusion_quantity_only(g1, g2) + 1e-9);
    }
}

TEST_CASE("threshold grid drives the assigned event") {
    // a pair with inclusions 82% and 76%, the first group smaller, and more
    // than one next-frame match
    InclusionPair pair;
    pair.group1 = 40;
    pair.frame1 = 6;
    pair.group2 = 68;
    pair.frame2 = 7;
    pair.size1 = 5;
    pair.size2 = 8;
    pair.shared = 4;
    pair.i12 = 82.0;
    pair.i21 = 76.0;
    const int matches_g1_next = 2;
    const int matches_g2_prev = 1;

    auto at = [&](double alpha, double beta) {
        Thresholds th;
        th.alpha = alpha;
        th.beta = beta;
        return classify_pair(pair, matches_g1_next, matches_g2_prev, th);
    };

    for (double beta : {50.0, 60.0, 70.0}) {
        CHECK(at(70.0, beta) == EventType::growing);
    }
    for (double beta : {80.0, 90.0, 100.0}) {
        CHECK(at(70.0, beta) == EventType::merging);
    }
    for (double beta : {50.0, 60.0, 70.0}) {
        CHECK(at(100.0, beta) == EventType::merging);
    }
    for (double beta : {80.0, 90.0, 100.0}) {
        CHECK_FALSE(at(100.0, beta).has_value());
    }
}

TEST_CASE("classification corner cases") {
    Thresholds th; // 50/50
    InclusionPair pair;
    pair.i12 = 100.0;
    pair.i21 = 100.0;
    pair.size1 = 4;
    pair.size2 = 4;
    CHECK(classify_pair(pair, 1, 1, th) == EventType::continuing);

    SUBCASE("both-passing pairs follow the size relation") {
        pair.size1 = 6;
        CHECK(classify_pair(pair, 1, 1, th) == EventType::shrinking);
        pair.size1 = 2;
        CHECK(classify_pair(pair, 1, 1, th) == EventType::growing);
    }
    SUBCASE("one-sided matches need a qualifying rule") {
        pair.i12 = 80.0;
        pair.i21 = 20.0;
        pair.size1 = 6;
        pair.size2 = 4;
        // bigger first group, a single previous match: nothing fires
        CHECK_FALSE(classify_pair(pair, 1, 1, th).has_value());
        CHECK(classify_pair(pair, 1, 2, th) == EventType::splitting);

        pair.i12 = 20.0;
        pair.i21 = 80.0;
        pair.size1 = 3;
        pair.size2 = 4;
        CHECK_FALSE(classify_pair(pair, 1, 1, th).has_value());
        CHECK(classify_pair(pair, 2, 1, th) == EventType::merging);
    }
    SUBCASE("splitting outranks merging when both qualify") {
        pair.i12 = 80.0;
        pair.i21 = 20.0;
        pair.size1 = 4;
        pair.size2 = 4;
        CHECK(classify_pair(pair, 2, 2, th) == EventType::splitting);
    }
    SUBCASE("nothing passes, nothing fires") {
        pair.i12 = 20.0;
        pair.i21 = 20.0;
        CHECK_FALSE(classify_pair(pair, 5, 5, th).has_value());
    }
}

TEST_CASE("tracking a single frame yields no events") {
    Grouping grouping;
    grouping.add(make_group(1, 1, {1, 2, 3}));
    auto events = ged_track(oracles::frames_for(grouping), grouping, std::nullopt, Thresholds{});
    CHECK(events.empty());
}

TEST_CASE("an unchanged isolated group continues, with any measure") {
    FrameGraph f1 = build_frame_graph({{1, 2, 1.0}, {2, 3, 1.0}, {3, 1, 1.0}}, 1);
    FrameGraph f2 = build_frame_graph({{1, 2, 1.0}, {2, 3, 1.0}, {3, 1, 1.0}}, 2);
    TemporalNetwork tsn({f1, f2});
    Grouping grouping;
    grouping.add(make_group(1, 1, {1, 2, 3}));
    grouping.add(make_group(1, 2, {1, 2, 3}));

    for (auto measure : {std::optional<Measure>{}, std::optional<Measure>{Measure::social_position}}) {
        auto events = ged_track(tsn, grouping, measure, Thresholds{});
        REQUIRE(events.size() == 1);
        CHECK(events[0].event == EventType::continuing);
        CHECK(events[0].i12 == doctest::Approx(100.0));
        CHECK(events[0].i21 == doctest::Approx(100.0));
    }
}

TEST_CASE("a shrinking group is recognised when its core persists") {
    // red group 1..7 unchanged; yellow group 4..10 loses the shared members
    // 4,5,6 and keeps its strongly connected core 7,8,9,10
    std::vector<WeightedEdge> frame1_edges;
    for (NodeId u = 1; u <= 7; ++u) {
        for (NodeId v = 1; v <= 7; ++v) {
            if (u != v) frame1_edges.push_back({u, v, 1.0});
        }
    }
    for (NodeId u : {7, 8, 9, 10}) {
        for (NodeId v : {7, 8, 9, 10}) {
            if (u != v) frame1_edges.push_back({u, v, 10.0});
        }
    }
    std::vector<WeightedEdge> frame2_edges = frame1_edges;
    FrameGraph f1 = build_frame_graph(frame1_edges, 1);
    FrameGraph f2 = build_frame_graph(frame2_edges, 2);
    TemporalNetwork tsn({f1, f2});

    Grouping grouping;
    grouping.add(make_group(1, 1, {1, 2, 3, 4, 5, 6, 7}));          // red
    grouping.add(make_group(2, 1, {4, 5, 6, 7, 8, 9, 10}));         // yellow
    grouping.add(make_group(1, 2, {1, 2, 3, 4, 5, 6, 7}));          // red again
    grouping.add(make_group(2, 2, {7, 8, 9, 10}));                  // yellow core

    auto events = ged_track(tsn, grouping, Measure::social_position, Thresholds{});

    std::map<std::pair<int, int>, EventType> by_pair;
    for (const auto& event : events) {
        REQUIRE(event.group1.has_value());
        REQUIRE(event.group2.has_value());
        auto key = std::make_pair(event.group1->group_id, event.group2->group_id);
        CHECK(by_pair.emplace(key, event.event).second); // one event per pair
    }
    REQUIRE(by_pair.size() == 2);
    CHECK(by_pair.at({1, 1}) == EventType::continuing);
    CHECK(by_pair.at({2, 2}) == EventType::shrinking);
}

TEST_CASE("a genuine split assigns splitting to the parent") {
    Grouping grouping;
    grouping.add(make_group(1, 1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    grouping.add(make_group(2, 1, {3, 7, 8, 20}));
    grouping.add(make_group(1, 2, {1, 2, 3, 7, 8}));
    grouping.add(make_group(2, 2, {4, 5, 6, 9, 10}));

    Thresholds th;
    th.alpha = 90.0;
    th.beta = 60.0;
    auto events = ged_track(oracles::frames_for(grouping), grouping, std::nullopt, th);

    std::map<std::pair<int, int>, EventType> by_pair;
    for (const auto& event : events) {
        by_pair.emplace(std::make_pair(event.group1->group_id, event.group2->group_id),
                        event.event);
    }
    REQUIRE(by_pair.size() == 2);
    CHECK(by_pair.at({1, 1}) == EventType::splitting);
    CHECK(by_pair.at({1, 2}) == EventType::shrinking);
    // the helper pair passes one threshold but no rule, so it stays silent
    CHECK_FALSE(by_pair.contains({2, 1}));
}

TEST_CASE("a genuine merge assigns merging to the absorbed group") {
    Grouping grouping;
    grouping.add(make_group(1, 1, {1, 2, 3, 4}));
    grouping.add(make_group(2, 1, {5, 6, 7, 8}));
    grouping.add(make_group(1, 2, {1, 2, 3, 4, 5, 6, 7, 8}));
    grouping.add(make_group(2, 2, {1, 2, 3, 9}));

    Thresholds th;
    th.alpha = 50.0;
    th.beta = 60.0;
    auto events = ged_track(oracles::frames_for(grouping), grouping, std::nullopt, th);

    std::map<std::pair<int, int>, EventType> by_pair;
    for (const auto& event : events) {
        by_pair.emplace(std::make_pair(event.group1->group_id, event.group2->group_id),
                        event.event);
    }
    CHECK(by_pair.at({1, 1}) == EventType::merging);
    CHECK(by_pair.at({2, 1}) == EventType::growing);
}

TEST_CASE("forming and dissolving use the low-inclusion cut-off") {
    SUBCASE("a vanished group dissolves, a fresh one forms") {
        Grouping grouping;
        grouping.add(make_group(1, 1, {1, 2, 3}));
        grouping.add(make_group(1, 2, {50, 51, 52}));
        auto events =
            ged_track(oracles::frames_for(grouping), grouping, std::nullopt, Thresholds{});
        REQUIRE(events.size() == 2);
        CHECK(events[0].event == EventType::dissolving);
        CHECK(events[0].group1->group_id == 1);
        CHECK_FALSE(events[0].group2.has_value());
        CHECK(events[1].event == EventType::forming);
        CHECK(events[1].group2->group_id == 1);
        CHECK_FALSE(events[1].group1.has_value());
    }
    SUBCASE("an empty previous frame makes every group a formation") {
        Grouping grouping;
        grouping.add(make_group(1, 2, {1, 2, 3}));
        grouping.add(make_group(2, 2, {4, 5, 6}));
        std::vector<FrameGraph> frames;
        frames.emplace_back(std::vector<NodeId>{}, std::vector<WeightedEdge>{}, 1);
        frames.emplace_back(std::vector<NodeId>{1, 2, 3, 4, 5, 6},
                            std::vector<WeightedEdge>{}, 2);
        auto events = ged_track(TemporalNetwork(std::move(frames)), grouping, std::nullopt,
                                Thresholds{});
        REQUIRE(events.size() == 2);
        CHECK(events[0].event == EventType::forming);
        CHECK(events[1].event == EventType::forming);
    }
    SUBCASE("no forming in the first frame, no dissolving in the last") {
        Grouping grouping;
        grouping.add(make_group(1, 1, {1, 2, 3}));
        grouping.add(make_group(1, 2, {1, 2, 3}));
        auto events =
            ged_track(oracles::frames_for(grouping), grouping, std::nullopt, Thresholds{});
        for (const auto& event : events) {
            CHECK(event.event != EventType::forming);
            CHECK(event.event != EventType::dissolving);
        }
    }
    SUBCASE("a zero cut-off disables everything except the vacuous case") {
        Thresholds th;
        th.form_dissolve = 0.0;
        Grouping disjoint;
        disjoint.add(make_group(1, 1, {1, 2, 3}));
        disjoint.add(make_group(1, 2, {50, 51, 52}));
        // inclusions are 0, and 0 < 0 does not hold
        CHECK(ged_track(oracles::frames_for(disjoint), disjoint, std::nullopt, th).empty());

        Grouping vacuous;
        vacuous.add(make_group(1, 2, {1, 2, 3}));
        std::vector<FrameGraph> frames;
        frames.emplace_back(std::vector<NodeId>{}, std::vector<WeightedEdge>{}, 1);
        frames.emplace_back(std::vector<NodeId>{1, 2, 3}, std::vector<WeightedEdge>{}, 2);
        auto events = ged_track(TemporalNetwork(std::move(frames)), vacuous, std::nullopt, th);
        REQUIRE(events.size() == 1);
        CHECK(events[0].event == EventType::forming);
    }
    SUBCASE("a sub-threshold survivor still blocks dissolving") {
        Grouping grouping;
        grouping.add(make_group(1, 1, {1, 2, 3, 4, 5}));
        grouping.add(make_group(1, 2, {5, 60, 61, 62, 63}));
        // shared member 5: inclusions 20% both ways, above the 10% cut-off,
        // below alpha/beta: no pair event, but no forming/dissolving either
        auto events =
            ged_track(oracles::frames_for(grouping), grouping, std::nullopt, Thresholds{});
        CHECK(events.empty());
    }
}

TEST_CASE("tracking validates grouping against the network") {
    Grouping grouping;
    grouping.add(make_group(1, 3, {1, 2}));
    FrameGraph only(std::vector<NodeId>{1, 2}, {}, 1);
    CHECK_THROWS_AS(ged_track(TemporalNetwork({only}), grouping, std::nullopt, Thresholds{}),
                    InputError);

    Grouping bad_members;
    bad_members.add(make_group(1, 1, {1, 99}));
    CHECK_THROWS_WITH_AS(
        ged_track(TemporalNetwork({only}), bad_members, std::nullopt, Thresholds{}),
        doctest::Contains("99"), InputError);
}

TEST_CASE("random histories keep the single-event guarantee and threshold monotonicity") {
    std::mt19937 rng(404);
    for (int round = 0; round < 5; ++round) {
        Grouping grouping = oracles::random_overlapping_grouping(rng, 6, 50, 12);
        auto table = compute_inclusions(oracles::frames_for(grouping), grouping, std::nullopt);

        std::vector<std::vector<std::size_t>> totals;
        for (double alpha = 50.0; alpha <= 100.0; alpha += 10.0) {
            totals.emplace_back();
            for (double beta = 50.0; beta <= 100.0; beta += 10.0) {
                Thresholds th;
                th.alpha = alpha;
                th.beta = beta;
                auto events = track_events(table, th);
                std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
                for (const auto& event : events) {
                    if (!event.group1 || !event.group2) continue;
                    auto key = std::make_pair(
                        std::make_pair(event.group1->frame, event.group1->group_id),
                        std::make_pair(event.group2->frame, event.group2->group_id));
                    CHECK(pairs.insert(key).second);
                }
                totals.back().push_back(events.size());
            }
        }
        for (std::size_t row = 0; row < totals.size(); ++row) {
            for (std::size_t col = 0; col + 1 < totals[row].size(); ++col) {
                CHECK(totals[row][col] >= totals[row][col + 1]);
                CHECK(totals[col][row] >= totals[col + 1][row]);
            }
        }
    }
}

TEST_CASE("identical pairs continue at every threshold setting") {
    // lineages that only stay identical, grow or shrink: continuing counts
    // then coincide with the identical-pair count over the whole grid
    Grouping grouping;
    for (int f = 1; f <= 4; ++f) grouping.add(make_group(1, f, {1, 2, 3, 4, 5})); // constant
    grouping.add(make_group(2, 1, {10, 11, 12}));
    grouping.add(make_group(2, 2, {10, 11, 12, 13}));
    grouping.add(make_group(2, 3, {10, 11, 12, 13, 14}));
    grouping.add(make_group(2, 4, {10, 11, 12, 13, 14, 15}));
    grouping.add(make_group(3, 1, {20, 21, 22, 23, 24, 25, 26}));
    grouping.add(make_group(3, 2, {20, 21, 22, 23, 24, 25}));
    grouping.add(make_group(3, 3, {20, 21, 22, 23, 24}));
    grouping.add(make_group(3, 4, {20, 21, 22, 23}));
    grouping.add(make_group(4, 2, {30, 31, 32}));
    grouping.add(make_group(4, 3, {30, 31, 32}));
    const std::size_t identical_pairs = 4; // three for group 1, one for group 4

    auto table = compute_inclusions(oracles::frames_for(grouping), grouping, std::nullopt);
    for (double alpha = 50.0; alpha <= 100.0; alpha += 10.0) {
        for (double beta = 50.0; beta <= 100.0; beta += 10.0) {
            Thresholds th;
            th.alpha = alpha;
            th.beta = beta;
            std::size_t continuing = 0;
            for (const auto& event : track_events(table, th)) {
                if (event.event == EventType::continuing) ++continuing;
            }
            CHECK(continuing == identical_pairs);
        }
    }
}

TEST_CASE("at full thresholds continuing means identical") {
    std::mt19937 rng(909);
    for (int round = 0; round < 10; ++round) {
        Grouping grouping = oracles::random_overlapping_grouping(rng, 5, 40, 10);
        Thresholds th;
        th.alpha = 100.0;
        th.beta = 100.0;
        auto events =
            ged_track(oracles::frames_for(grouping), grouping, std::nullopt, th);
        std::size_t continuing = 0;
        for (const auto& event : events) {
            if (event.event == EventType::continuing) ++continuing;
        }
        std::size_t identical = 0;
        auto frames = grouping.frames();
        for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
            for (const auto& g1 : grouping.at(frames[i])) {
                for (const auto& g2 : grouping.at(frames[i + 1])) {
                    if (g1.members() == g2.members()) ++identical;
                }
            }
        }
        CHECK(continuing == identical);
    }
}

TEST_CASE("evolution chains") {
    auto at = [](int id, int frame) { return GroupAt{id, frame}; };

    SUBCASE("a linear lineage is one chain") {
        std::vector<EventRecord> events = {
            make_event(EventType::forming, std::nullopt, at(1, 2)),
            make_event(EventType::growing, at(1, 2), at(1, 3)),
        };
        auto chains = build_evolution_chains(events);
        REQUIRE(chains.size() == 1);
        CHECK(chains[0].records.size() == 2);
        CHECK(chains[0].records[0].event == EventType::forming);
        CHECK(chains[0].records[1].event == EventType::growing);
    }

    SUBCASE("the eight-frame reference lifetime yields three chains") {
        std::vector<EventRecord> events = {
            make_event(EventType::forming, std::nullopt, at(1, 2)),
            make_event(EventType::growing, at(1, 2), at(1, 3)),
            make_event(EventType::splitting, at(1, 3), at(2, 4)),
            make_event(EventType::splitting, at(1, 3), at(3, 4)),
            make_event(EventType::shrinking, at(2, 4), at(2, 5)),
            make_event(EventType::continuing, at(3, 4), at(3, 5)),
            make_event(EventType::continuing, at(2, 5), at(2, 6)),
            make_event(EventType::continuing, at(3, 5), at(3, 6)),
            make_event(EventType::forming, std::nullopt, at(4, 6)),
            make_event(EventType::merging, at(2, 6), at(5, 7)),
            make_event(EventType::merging, at(3, 6), at(5, 7)),
            make_event(EventType::merging, at(4, 6), at(5, 7)),
            make_event(EventType::dissolving, at(5, 7), std::nullopt),
        };
        auto chains = build_evolution_chains(events);
        REQUIRE(chains.size() == 3);

        auto names = [](const EvolutionChain& chain) {
            std::vector<EventType> out;
            for (const auto& record : chain.records) out.push_back(record.event);
            return out;
        };
        CHECK(names(chains[0]) ==
              std::vector<EventType>{EventType::forming, EventType::growing,
                                     EventType::splitting, EventType::shrinking,
                                     EventType::continuing, EventType::merging,
                                     EventType::dissolving});
        CHECK(names(chains[1]) ==
              std::vector<EventType>{EventType::forming, EventType::growing,
                                     EventType::splitting, EventType::continuing,
                                     EventType::continuing, EventType::merging,
                                     EventType::dissolving});
        CHECK(names(chains[2]) == std::vector<EventType>{EventType::forming, EventType::merging,
                                                         EventType::dissolving});
        // branches share the split prefix, merges share the dissolve suffix
        CHECK(chains[0].records[2].group2->group_id == 2);
        CHECK(chains[1].records[2].group2->group_id == 3);
    }

    SUBCASE("no events, no chains") {
        CHECK(build_evolution_chains({}).empty());
    }
}
