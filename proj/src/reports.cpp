#include "tsn/reports.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsn::reports {

namespace {

const Group& require_group(const Grouping& grouping, ged::GroupAt at) {
    const Group* group = grouping.find(at.frame, at.group_id);
    if (!group) {
        throw InputError("group " + std::to_string(at.group_id) + " in frame " +
                         std::to_string(at.frame) + " is unknown");
    }
    return *group;
}

// importance with every member weighted 1 when no measure is selected
std::optional<importance::ImportanceVector> scoped_importance(
    const TemporalNetwork& tsn, const Group& group,
    std::optional<importance::Measure> measure, const importance::SpConfig& cfg) {
    if (!measure) return std::nullopt;
    return importance::group_importance(tsn.frame(group.frame_index()), group, *measure, cfg);
}

double member_importance(const std::optional<importance::ImportanceVector>& imp, NodeId node) {
    return imp ? imp->score_of(node) : 1.0;
}

} // namespace

std::vector<NodeId> group_core(const Group& group,
                               const importance::ImportanceVector& importance) {
    std::vector<NodeId> ordered = group.members();
    std::sort(ordered.begin(), ordered.end(), [&](NodeId a, NodeId b) {
        int ra = importance.rank_of(a);
        int rb = importance.rank_of(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
    ordered.resize((ordered.size() + 1) / 2);
    std::sort(ordered.begin(), ordered.end());
    return ordered;
}

InclusionDetail report_inclusion(const TemporalNetwork& tsn, const Grouping& grouping,
                                 ged::GroupAt g1, ged::GroupAt g2,
                                 std::optional<importance::Measure> measure,
                                 const importance::SpConfig& cfg) {
    if (g2.frame != g1.frame + 1) {
        throw InputError("inclusion report needs groups in consecutive frames, got " +
                         std::to_string(g1.frame) + " and " + std::to_string(g2.frame));
    }
    const Group& first = require_group(grouping, g1);
    const Group& second = require_group(grouping, g2);

    auto imp1 = scoped_importance(tsn, first, measure, cfg);
    auto imp2 = scoped_importance(tsn, second, measure, cfg);

    InclusionDetail detail;
    detail.group1 = g1;
    detail.group2 = g2;
    detail.size1 = first.size();
    detail.size2 = second.size();

    for (NodeId node : first.members()) {
        if (second.contains(node)) detail.intersection.push_back(node);
    }

    for (NodeId node : first.members()) {
        double w = member_importance(imp1, node);
        detail.importance1_total += w;
        if (second.contains(node)) detail.importance1_shared += w;
    }
    for (NodeId node : second.members()) {
        double w = member_importance(imp2, node);
        detail.importance2_total += w;
        if (first.contains(node)) detail.importance2_shared += w;
    }

    if (imp1) {
        detail.i12 = ged::inclusion(first, second, *imp1);
        detail.i21 = ged::inclusion(second, first, *imp2);
        detail.core1 = group_core(first, *imp1);
        detail.core2 = group_core(second, *imp2);
        for (NodeId node : detail.core1) detail.core1_importance += imp1->score_of(node);
        for (NodeId node : detail.core2) detail.core2_importance += imp2->score_of(node);
    } else {
        detail.i12 = ged::inclusion_quantity_only(first, second);
        detail.i21 = ged::inclusion_quantity_only(second, first);
        detail.core1.assign(first.members().begin(),
                            first.members().begin() + (first.size() + 1) / 2);
        detail.core2.assign(second.members().begin(),
                            second.members().begin() + (second.size() + 1) / 2);
        detail.core1_importance = static_cast<double>(detail.core1.size());
        detail.core2_importance = static_cast<double>(detail.core2.size());
    }
    return detail;
}

MigrationDetail report_migration(const TemporalNetwork& tsn, const Grouping& grouping,
                                 const std::vector<ged::EventRecord>& events, ged::GroupAt at,
                                 std::optional<importance::Measure> measure,
                                 const importance::SpConfig& cfg) {
    const Group& group = require_group(grouping, at);
    auto imp = scoped_importance(tsn, group, measure, cfg);

    MigrationDetail detail;
    detail.group = at;
    detail.size = group.size();
    detail.core_size = (group.size() + 1) / 2;

    bool dissolved = false;
    const ged::EventRecord* best = nullptr;
    for (const auto& event : events) {
        if (!event.group1 || !(*event.group1 == at)) continue;
        if (event.event == ged::EventType::dissolving) {
            dissolved = true;
            continue;
        }
        if (!best || event.i12 > best->i12 ||
            (event.i12 == best->i12 && event.group2->group_id < best->group2->group_id)) {
            best = &event;
        }
    }

    if (dissolved) {
        detail.migrants = group.members();
        detail.note = "group dissolved; all members migrated with no destination";
    } else if (!best) {
        detail.note = "no matched successor";
        return detail;
    } else {
        detail.successor = best->group2;
        const Group& successor = require_group(grouping, *best->group2);
        detail.successor_size = successor.size();
        for (NodeId node : group.members()) {
            if (!successor.contains(node)) detail.migrants.push_back(node);
        }
    }

    if (!detail.migrants.empty()) {
        double before = 0.0;
        for (NodeId node : detail.migrants) {
            before += imp ? imp->rank_of(node) : 1.0;
        }
        detail.avg_rank_before = before / static_cast<double>(detail.migrants.size());

        // ranks inside whichever next-frame groups took the migrants in
        double after = 0.0;
        std::size_t landed = 0;
        for (const Group& host : grouping.at(at.frame + 1)) {
            std::vector<NodeId> present;
            for (NodeId node : detail.migrants) {
                if (host.contains(node)) present.push_back(node);
            }
            if (present.empty()) continue;
            auto host_imp = scoped_importance(tsn, host, measure, cfg);
            for (NodeId node : present) {
                after += host_imp ? host_imp->rank_of(node) : 1.0;
                ++landed;
            }
        }
        if (landed > 0) detail.avg_rank_after = after / static_cast<double>(landed);
    }
    return detail;
}

namespace {

std::vector<LabelledPair> sorted_pairs(std::vector<LabelledPair> pairs) {
    auto key = [](const LabelledPair& p) {
        auto side = [](const std::optional<ged::GroupAt>& g) {
            return g ? std::make_pair(g->frame, g->group_id) : std::make_pair(-1, -1);
        };
        return std::make_tuple(side(p.group1), side(p.group2), p.label);
    };
    std::sort(pairs.begin(), pairs.end(),
              [&](const LabelledPair& a, const LabelledPair& b) { return key(a) < key(b); });
    return pairs;
}

} // namespace

std::vector<LabelledPair> to_labelled_pairs(const std::vector<ged::EventRecord>& events) {
    std::vector<LabelledPair> pairs;
    pairs.reserve(events.size());
    for (const auto& event : events) {
        pairs.push_back(LabelledPair{event.group1, event.group2, ged::event_name(event.event)});
    }
    return sorted_pairs(std::move(pairs));
}

std::vector<LabelledPair> to_labelled_pairs(const std::vector<baselines::AsurEvent>& events) {
    std::vector<LabelledPair> pairs;
    pairs.reserve(events.size());
    for (const auto& event : events) {
        pairs.push_back(
            LabelledPair{event.group1, event.group2, baselines::asur_event_name(event.event)});
    }
    return sorted_pairs(std::move(pairs));
}

std::vector<LabelledPair> to_labelled_pairs(const baselines::PallaResult& result) {
    std::vector<LabelledPair> pairs;
    pairs.reserve(result.matches.size());
    for (const auto& match : result.matches) {
        pairs.push_back(LabelledPair{match.group1, match.group2, "matched"});
    }
    return sorted_pairs(std::move(pairs));
}

CompareReport report_compare(const std::vector<LabelledPair>& a,
                             const std::vector<LabelledPair>& b) {
    using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
    auto key_of = [](const LabelledPair& p) -> Key {
        auto side = [](const std::optional<ged::GroupAt>& g) {
            return g ? std::make_pair(g->frame, g->group_id) : std::make_pair(-1, -1);
        };
        return {side(p.group1), side(p.group2)};
    };
    auto collect = [&](const std::vector<LabelledPair>& pairs) {
        std::map<Key, std::string> labels;
        for (const auto& pair : pairs) {
            auto [it, inserted] = labels.try_emplace(key_of(pair), pair.label);
            if (!inserted) it->second += "+" + pair.label;
        }
        return labels;
    };
    auto labels_a = collect(a);
    auto labels_b = collect(b);

    CompareReport report;
    for (const auto& [key, label] : labels_a) {
        auto it = labels_b.find(key);
        ged::GroupAt g1{key.first.second, key.first.first};
        ged::GroupAt g2{key.second.second, key.second.first};
        std::optional<ged::GroupAt> group1 =
            key.first.first < 0 ? std::nullopt : std::optional<ged::GroupAt>(g1);
        std::optional<ged::GroupAt> group2 =
            key.second.first < 0 ? std::nullopt : std::optional<ged::GroupAt>(g2);
        if (it != labels_b.end()) {
            report.in_both.push_back(CompareReport::SharedRow{group1, group2, label, it->second});
        } else {
            report.only_a.push_back(LabelledPair{group1, group2, label});
        }
    }
    for (const auto& [key, label] : labels_b) {
        if (labels_a.contains(key)) continue;
        std::optional<ged::GroupAt> group1 =
            key.first.first < 0 ? std::nullopt
                                : std::optional<ged::GroupAt>(
                                      ged::GroupAt{key.first.second, key.first.first});
        std::optional<ged::GroupAt> group2 =
            key.second.first < 0 ? std::nullopt
                                 : std::optional<ged::GroupAt>(
                                       ged::GroupAt{key.second.second, key.second.first});
        report.only_b.push_back(LabelledPair{group1, group2, label});
    }

    auto frame_span = [](const std::vector<LabelledPair>& pairs) {
        std::set<int> frames;
        for (const auto& pair : pairs) {
            if (pair.group1) frames.insert(pair.group1->frame);
            if (pair.group2) frames.insert(pair.group2->frame);
        }
        return frames;
    };
    auto frames_a = frame_span(a);
    auto frames_b = frame_span(b);
    if (!frames_a.empty() && !frames_b.empty() && frames_a != frames_b) {
        report.warning = "inputs cover different frame ranges; results may not share provenance";
    }
    return report;
}

GroupEvolution report_evolution(const std::vector<ged::EventRecord>& events, ged::GroupAt group) {
    GroupEvolution evolution;
    evolution.group = group;
    bool known = false;
    for (const auto& event : events) {
        if (event.group1 && *event.group1 == group) {
            evolution.forward.push_back(event);
            known = true;
        }
        if (event.group2 && *event.group2 == group) {
            evolution.backward.push_back(event);
            known = true;
        }
    }
    if (!known) {
        throw InputError("group " + std::to_string(group.group_id) + " in frame " +
                         std::to_string(group.frame) + " does not appear in the events");
    }
    return evolution;
}

} // namespace tsn::reports
