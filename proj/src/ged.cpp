#include "tsn/ged.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsn::ged {

std::string event_name(EventType event) {
    switch (event) {
    case EventType::continuing: return "continuing";
    case EventType::shrinking: return "shrinking";
    case EventType::growing: return "growing";
    case EventType::splitting: return "splitting";
    case EventType::merging: return "merging";
    case EventType::dissolving: return "dissolving";
    case EventType::forming: return "forming";
    }
    return "continuing";
}

EventType event_from_name(const std::string& name) {
    if (name == "continuing") return EventType::continuing;
    if (name == "shrinking") return EventType::shrinking;
    if (name == "growing") return EventType::growing;
    if (name == "splitting") return EventType::splitting;
    if (name == "merging") return EventType::merging;
    if (name == "dissolving") return EventType::dissolving;
    if (name == "forming") return EventType::forming;
    throw InputError("unknown event type '" + name + "'");
}

void Thresholds::validate() const {
    if (alpha < 0.0 || alpha > 100.0) throw ParamError("alpha must be in [0,100]");
    if (beta < 0.0 || beta > 100.0) throw ParamError("beta must be in [0,100]");
    if (form_dissolve < 0.0 || form_dissolve > 100.0) {
        throw ParamError("form/dissolve threshold must be in [0,100]");
    }
}

double overlap(const Group& g1, const Group& g2) {
    if (g1.members().empty() || g2.members().empty()) {
        throw InputError("overlap needs nonempty groups");
    }
    double shared = static_cast<double>(shared_members(g1.members(), g2.members()));
    return shared * 100.0 / static_cast<double>(std::max(g1.size(), g2.size()));
}

double inclusion(const Group& g1, const Group& g2,
                 const importance::ImportanceVector& importance_in_g1) {
    double total = importance_in_g1.total();
    if (total <= 0.0) throw InputError("total importance within the group is zero");

    std::size_t shared = 0;
    double shared_importance = 0.0;
    for (NodeId node : g1.members()) {
        if (g2.contains(node)) {
            ++shared;
            shared_importance += importance_in_g1.score_of(node);
        }
    }
    double quantity = static_cast<double>(shared) * 100.0 / static_cast<double>(g1.size());
    return quantity * (shared_importance / total);
}

double inclusion_quantity_only(const Group& g1, const Group& g2) {
    if (g1.members().empty()) throw InputError("inclusion needs a nonempty group");
    double shared = static_cast<double>(shared_members(g1.members(), g2.members()));
    return shared * 100.0 / static_cast<double>(g1.size());
}

std::optional<EventType> classify_pair(const InclusionPair& pair, int matches_g1_next,
                                       int matches_g2_prev, const Thresholds& th) {
    const bool pass12 = pair.i12 >= th.alpha;
    const bool pass21 = pair.i21 >= th.beta;
    if (!pass12 && !pass21) return std::nullopt;

    if (pass12 && pass21 && pair.size1 == pair.size2) return EventType::continuing;

    if (pass12 && pass21 && pair.size1 > pair.size2) return EventType::shrinking;
    if (!pass12 && pass21 && pair.size1 >= pair.size2 && matches_g2_prev == 1) {
        return EventType::shrinking;
    }

    if (pass12 && pass21 && pair.size1 < pair.size2) return EventType::growing;
    if (pass12 && !pass21 && pair.size1 <= pair.size2 && matches_g1_next == 1) {
        return EventType::growing;
    }

    if (pair.size1 >= pair.size2 && matches_g2_prev > 1) return EventType::splitting;
    if (pair.size1 <= pair.size2 && matches_g1_next > 1) return EventType::merging;

    return std::nullopt;
}

const std::vector<int>& InclusionTable::groups_at(int frame_index) const {
    static const std::vector<int> empty;
    if (frame_index < 1 || frame_index > frame_count_) return empty;
    return groups_by_frame_[static_cast<std::size_t>(frame_index - 1)];
}

InclusionTable compute_inclusions(const TemporalNetwork& tsn, const Grouping& grouping,
                                  std::optional<importance::Measure> measure,
                                  const importance::SpConfig& cfg) {
    for (int frame_index : grouping.frames()) {
        if (!tsn.has_frame(frame_index)) {
            throw InputError("grouping references frame " + std::to_string(frame_index) +
                             " which is not in the network");
        }
        const FrameGraph& frame = tsn.frame(frame_index);
        for (const Group& group : grouping.at(frame_index)) {
            for (NodeId node : group.members()) {
                if (!frame.contains(node)) {
                    throw InputError("group " + std::to_string(group.group_id()) +
                                     " member " + std::to_string(node) +
                                     " is not in frame " + std::to_string(frame_index));
                }
            }
        }
    }

    InclusionTable table;
    table.frame_count_ = static_cast<int>(tsn.size());
    table.groups_by_frame_.resize(tsn.size());
    for (int f = 1; f <= table.frame_count_; ++f) {
        auto& ids = table.groups_by_frame_[static_cast<std::size_t>(f - 1)];
        for (const Group& group : grouping.at(f)) ids.push_back(group.group_id());
        std::sort(ids.begin(), ids.end());
    }

    // importance scoped to each group's induced subgraph, computed once
    std::map<std::pair<int, int>, importance::ImportanceVector> scoped;
    auto scoped_importance = [&](const Group& group) -> const importance::ImportanceVector& {
        auto key = std::make_pair(group.frame_index(), group.group_id());
        auto it = scoped.find(key);
        if (it == scoped.end()) {
            it = scoped
                     .emplace(key, importance::group_importance(tsn.frame(group.frame_index()),
                                                                group, *measure, cfg))
                     .first;
        }
        return it->second;
    };

    for (int f = 1; f < table.frame_count_; ++f) {
        std::vector<Group> first = grouping.at(f);
        std::vector<Group> second = grouping.at(f + 1);
        std::sort(first.begin(), first.end(),
                  [](const Group& a, const Group& b) { return a.group_id() < b.group_id(); });
        std::sort(second.begin(), second.end(),
                  [](const Group& a, const Group& b) { return a.group_id() < b.group_id(); });
        for (const Group& g1 : first) {
            for (const Group& g2 : second) {
                std::size_t shared = shared_members(g1.members(), g2.members());
                if (shared == 0) continue;
                InclusionPair pair;
                pair.group1 = g1.group_id();
                pair.frame1 = f;
                pair.group2 = g2.group_id();
                pair.frame2 = f + 1;
                pair.size1 = g1.size();
                pair.size2 = g2.size();
                pair.shared = shared;
                if (measure) {
                    pair.i12 = inclusion(g1, g2, scoped_importance(g1));
                    pair.i21 = inclusion(g2, g1, scoped_importance(g2));
                } else {
                    pair.i12 = inclusion_quantity_only(g1, g2);
                    pair.i21 = inclusion_quantity_only(g2, g1);
                }
                table.pairs_.push_back(pair);
            }
        }
    }
    return table;
}

std::vector<EventRecord> track_events(const InclusionTable& table, const Thresholds& th) {
    th.validate();
    std::vector<EventRecord> events;

    std::size_t cursor = 0;
    for (int f = 1; f < table.frame_count(); ++f) {
        std::vector<InclusionPair> frame_pairs;
        while (cursor < table.pairs().size() && table.pairs()[cursor].frame1 == f) {
            frame_pairs.push_back(table.pairs()[cursor]);
            ++cursor;
        }

        // pass one: candidate matches per side
        std::map<int, int> matches_next; // group id in frame f
        std::map<int, int> matches_prev; // group id in frame f+1
        for (const auto& pair : frame_pairs) {
            if (pair.i12 >= th.alpha || pair.i21 >= th.beta) {
                ++matches_next[pair.group1];
                ++matches_prev[pair.group2];
            }
        }

        // pass two: classify candidates
        for (const auto& pair : frame_pairs) {
            if (!(pair.i12 >= th.alpha || pair.i21 >= th.beta)) continue;
            auto type = classify_pair(pair, matches_next[pair.group1],
                                      matches_prev[pair.group2], th);
            if (!type) continue;
            EventRecord record;
            record.event = *type;
            record.group1 = GroupAt{pair.group1, pair.frame1};
            record.group2 = GroupAt{pair.group2, pair.frame2};
            record.i12 = pair.i12;
            record.i21 = pair.i21;
            record.thresholds = th;
            events.push_back(record);
        }

        // dissolving: a group in frame f below the cut-off with every group
        // of frame f+1 (sparse pairs: missing pair means no shared members)
        std::map<int, double> max_incl_next, max_incl_prev;
        for (const auto& pair : frame_pairs) {
            double high = std::max(pair.i12, pair.i21);
            auto [it1, ins1] = max_incl_next.try_emplace(pair.group1, high);
            if (!ins1) it1->second = std::max(it1->second, high);
            auto [it2, ins2] = max_incl_prev.try_emplace(pair.group2, high);
            if (!ins2) it2->second = std::max(it2->second, high);
        }
        // a frame without groups satisfies the every-counterpart condition
        // vacuously; otherwise non-intersecting pairs count as inclusion 0
        const bool next_empty = table.groups_at(f + 1).empty();
        for (int group_id : table.groups_at(f)) {
            if (!next_empty) {
                auto it = max_incl_next.find(group_id);
                double top = it == max_incl_next.end() ? 0.0 : it->second;
                if (!(top < th.form_dissolve)) continue;
            }
            EventRecord record;
            record.event = EventType::dissolving;
            record.group1 = GroupAt{group_id, f};
            record.thresholds = th;
            events.push_back(record);
        }
        // forming: a group in frame f+1 below the cut-off with every group of frame f
        const bool prev_empty = table.groups_at(f).empty();
        for (int group_id : table.groups_at(f + 1)) {
            if (!prev_empty) {
                auto it = max_incl_prev.find(group_id);
                double top = it == max_incl_prev.end() ? 0.0 : it->second;
                if (!(top < th.form_dissolve)) continue;
            }
            EventRecord record;
            record.event = EventType::forming;
            record.group2 = GroupAt{group_id, f + 1};
            record.thresholds = th;
            events.push_back(record);
        }
    }
    return events;
}

std::vector<EventRecord> ged_track(const TemporalNetwork& tsn, const Grouping& grouping,
                                   std::optional<importance::Measure> measure,
                                   const Thresholds& th, const importance::SpConfig& cfg) {
    th.validate();
    return track_events(compute_inclusions(tsn, grouping, measure, cfg), th);
}

namespace {

GroupAt start_point(const EventRecord& record) {
    return record.group1 ? *record.group1 : *record.group2;
}

} // namespace

std::vector<EvolutionChain> build_evolution_chains(const std::vector<EventRecord>& events) {
    std::map<GroupAt, std::vector<std::size_t>> outgoing;
    std::set<GroupAt> has_incoming;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].group1) outgoing[*events[i].group1].push_back(i);
        if (events[i].group2) has_incoming.insert(*events[i].group2);
    }
    for (auto& [key, list] : outgoing) {
        std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            if (events[a].group2 && events[b].group2) return *events[a].group2 < *events[b].group2;
            return static_cast<bool>(events[b].group2); // dissolving last
        });
    }

    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!events[i].group1) {
            starts.push_back(i); // forming
        } else if (!has_incoming.contains(*events[i].group1)) {
            starts.push_back(i);
        }
    }
    std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
        return start_point(events[a]) < start_point(events[b]);
    });

    std::vector<EvolutionChain> chains;
    std::vector<std::size_t> path;

    auto extend = [&](auto&& self, std::size_t record) -> void {
        path.push_back(record);
        const auto& rec = events[record];
        bool extended = false;
        if (rec.group2) {
            auto it = outgoing.find(*rec.group2);
            if (it != outgoing.end()) {
                for (std::size_t next : it->second) {
                    self(self, next);
                    extended = true;
                }
            }
        }
        if (!extended) {
            EvolutionChain chain;
            chain.records.reserve(path.size());
            for (std::size_t idx : path) chain.records.push_back(events[idx]);
            chains.push_back(std::move(chain));
        }
        path.pop_back();
    };

    for (std::size_t start : starts) extend(extend, start);
    return chains;
}

} // namespace tsn::ged
