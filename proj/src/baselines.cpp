#include "tsn/baselines.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace tsn::baselines {

std::string asur_event_name(AsurEventType event) {
    switch (event) {
    case AsurEventType::continuing: return "continuing";
    case AsurEventType::forming: return "forming";
    case AsurEventType::dissolving: return "dissolving";
    case AsurEventType::merging: return "merging";
    case AsurEventType::splitting: return "splitting";
    }
    return "continuing";
}

AsurEventType asur_event_from_name(const std::string& name) {
    if (name == "continuing") return AsurEventType::continuing;
    if (name == "forming") return AsurEventType::forming;
    if (name == "dissolving") return AsurEventType::dissolving;
    if (name == "merging") return AsurEventType::merging;
    if (name == "splitting") return AsurEventType::splitting;
    throw InputError("unknown asur event type '" + name + "'");
}

namespace {

std::size_t union_size(const Group& a, const Group& b) {
    return a.size() + b.size() - shared_members(a.members(), b.members());
}

std::size_t union_intersection(const Group& a, const Group& b, const Group& target) {
    std::size_t count = 0;
    for (NodeId node : target.members()) {
        if (a.contains(node) || b.contains(node)) ++count;
    }
    return count;
}

} // namespace

std::vector<AsurEvent> asur_events(const Grouping& grouping, double kappa) {
    if (!(kappa > 0.0 && kappa <= 100.0)) throw ParamError("kappa must be in (0,100]");
    std::vector<AsurEvent> events;
    if (grouping.empty()) return events;

    auto frames = grouping.frames();
    int min_frame = frames.front();
    int max_frame = frames.back();

    // one row per (type, group1, group2); repeated firings keep the
    // highest overlap
    std::map<std::tuple<AsurEventType, int, int>, double> pair_rows;

    for (int f = min_frame; f < max_frame; ++f) {
        std::vector<Group> current = grouping.at(f);
        std::vector<Group> next = grouping.at(f + 1);
        auto by_id = [](const Group& a, const Group& b) { return a.group_id() < b.group_id(); };
        std::sort(current.begin(), current.end(), by_id);
        std::sort(next.begin(), next.end(), by_id);

        pair_rows.clear();

        for (const Group& g : current) {
            bool any_shared = false;
            for (const Group& h : next) {
                std::size_t shared = shared_members(g.members(), h.members());
                if (shared > 1) any_shared = true;
                if (g.members() == h.members()) {
                    pair_rows[{AsurEventType::continuing, g.group_id(), h.group_id()}] = 100.0;
                }
            }
            if (!any_shared) {
                AsurEvent event;
                event.event = AsurEventType::dissolving;
                event.group1 = ged::GroupAt{g.group_id(), f};
                events.push_back(event);
            }
        }
        for (const Group& h : next) {
            bool any_shared = false;
            for (const Group& g : current) {
                if (shared_members(g.members(), h.members()) > 1) {
                    any_shared = true;
                    break;
                }
            }
            if (!any_shared) {
                AsurEvent event;
                event.event = AsurEventType::forming;
                event.group2 = ged::GroupAt{h.group_id(), f + 1};
                events.push_back(event);
            }
        }

        // merge: two groups at f jointly covering a group at f+1
        for (std::size_t k = 0; k < current.size(); ++k) {
            for (std::size_t l = k + 1; l < current.size(); ++l) {
                for (const Group& j : next) {
                    double cover = static_cast<double>(
                        union_intersection(current[k], current[l], j));
                    double denom = static_cast<double>(
                        std::max(union_size(current[k], current[l]), j.size()));
                    double ov = cover * 100.0 / denom;
                    if (ov <= kappa) continue;
                    double from_k = static_cast<double>(
                        shared_members(current[k].members(), j.members()));
                    double from_l = static_cast<double>(
                        shared_members(current[l].members(), j.members()));
                    if (from_k <= current[k].size() / 2.0) continue;
                    if (from_l <= current[l].size() / 2.0) continue;
                    for (std::size_t side : {k, l}) {
                        auto key = std::make_tuple(AsurEventType::merging,
                                                   current[side].group_id(), j.group_id());
                        auto [it, inserted] = pair_rows.try_emplace(key, ov);
                        if (!inserted) it->second = std::max(it->second, ov);
                    }
                }
            }
        }

        // split: one group at f covered by two groups at f+1
        for (const Group& j : current) {
            for (std::size_t k = 0; k < next.size(); ++k) {
                for (std::size_t l = k + 1; l < next.size(); ++l) {
                    double cover =
                        static_cast<double>(union_intersection(next[k], next[l], j));
                    double denom = static_cast<double>(
                        std::max(union_size(next[k], next[l]), j.size()));
                    double ov = cover * 100.0 / denom;
                    if (ov <= kappa) continue;
                    double from_k =
                        static_cast<double>(shared_members(next[k].members(), j.members()));
                    double from_l =
                        static_cast<double>(shared_members(next[l].members(), j.members()));
                    if (from_k <= next[k].size() / 2.0) continue;
                    if (from_l <= next[l].size() / 2.0) continue;
                    for (std::size_t side : {k, l}) {
                        auto key = std::make_tuple(AsurEventType::splitting, j.group_id(),
                                                   next[side].group_id());
                        auto [it, inserted] = pair_rows.try_emplace(key, ov);
                        if (!inserted) it->second = std::max(it->second, ov);
                    }
                }
            }
        }

        for (const auto& [key, overlap] : pair_rows) {
            AsurEvent event;
            event.event = std::get<0>(key);
            event.group1 = ged::GroupAt{std::get<1>(key), f};
            event.group2 = ged::GroupAt{std::get<2>(key), f + 1};
            event.overlap = overlap;
            events.push_back(event);
        }
    }
    return events;
}

std::size_t count_pair_anomalies(const std::vector<AsurEvent>& events) {
    std::map<std::pair<ged::GroupAt, ged::GroupAt>, std::size_t> rows;
    for (const auto& event : events) {
        if (event.group1 && event.group2) ++rows[{*event.group1, *event.group2}];
    }
    std::size_t anomalies = 0;
    for (const auto& [pair, count] : rows) {
        if (count > 1) ++anomalies;
    }
    return anomalies;
}

std::vector<ContainmentRecord> palla_containment(const Grouping& grouping,
                                                 const Grouping& joint_grouping) {
    std::vector<ContainmentRecord> records;
    for (int jf : joint_grouping.frames()) {
        std::vector<Group> joints = joint_grouping.at(jf);
        std::sort(joints.begin(), joints.end(),
                  [](const Group& a, const Group& b) { return a.group_id() < b.group_id(); });
        for (const Group& joint : joints) {
            for (int frame : {jf, jf + 1}) {
                std::vector<Group> singles = grouping.at(frame);
                std::sort(singles.begin(), singles.end(), [](const Group& a, const Group& b) {
                    return a.group_id() < b.group_id();
                });
                for (const Group& g : singles) {
                    if (std::includes(joint.members().begin(), joint.members().end(),
                                      g.members().begin(), g.members().end())) {
                        records.push_back(
                            ContainmentRecord{g.group_id(), frame, joint.group_id(), jf});
                    }
                }
            }
        }
    }
    return records;
}

PallaResult palla_match(const std::vector<ContainmentRecord>& containment,
                        const Grouping& grouping) {
    PallaResult result;

    // containment grouped per joined frame pair
    std::map<int, std::vector<ContainmentRecord>> by_pair;
    for (const auto& record : containment) by_pair[record.joint_frame].push_back(record);

    for (const auto& [jf, records] : by_pair) {
        // cross-frame candidates sharing a joint group; a pair contained in
        // several joint groups keeps the lowest joint id
        std::map<int, std::vector<const ContainmentRecord*>> by_joint;
        for (const auto& record : records) by_joint[record.joint_group].push_back(&record);

        struct Candidate {
            double overlap;
            int group1, group2, joint;
        };
        std::map<std::pair<int, int>, Candidate> candidates;
        for (const auto& [joint_id, members] : by_joint) {
            for (const auto* a : members) {
                if (a->frame != jf) continue;
                const Group* ga = grouping.find(a->frame, a->group_id);
                if (!ga) {
                    throw InputError("containment references unknown group " +
                                     std::to_string(a->group_id) + " in frame " +
                                     std::to_string(a->frame));
                }
                for (const auto* b : members) {
                    if (b->frame != jf + 1) continue;
                    const Group* gb = grouping.find(b->frame, b->group_id);
                    if (!gb) {
                        throw InputError("containment references unknown group " +
                                         std::to_string(b->group_id) + " in frame " +
                                         std::to_string(b->frame));
                    }
                    std::size_t shared = shared_members(ga->members(), gb->members());
                    std::size_t unioned = ga->size() + gb->size() - shared;
                    double overlap = static_cast<double>(shared) * 100.0 /
                                     static_cast<double>(unioned);
                    auto key = std::make_pair(a->group_id, b->group_id);
                    auto [it, inserted] =
                        candidates.try_emplace(key, Candidate{overlap, a->group_id,
                                                              b->group_id, joint_id});
                    if (!inserted && joint_id < it->second.joint) it->second.joint = joint_id;
                }
            }
        }

        std::vector<Candidate> ordered;
        ordered.reserve(candidates.size());
        for (const auto& [key, candidate] : candidates) ordered.push_back(candidate);
        std::sort(ordered.begin(), ordered.end(), [](const Candidate& a, const Candidate& b) {
            if (a.overlap != b.overlap) return a.overlap > b.overlap;
            if (a.group1 != b.group1) return a.group1 < b.group1;
            return a.group2 < b.group2;
        });

        std::set<int> matched_first;
        std::set<int> matched_second;
        for (const auto& candidate : ordered) {
            if (candidate.overlap <= 0.0) continue;
            if (matched_first.contains(candidate.group1)) continue;
            matched_first.insert(candidate.group1);
            matched_second.insert(candidate.group2);
            result.matches.push_back(PallaMatch{ged::GroupAt{candidate.group1, jf},
                                                ged::GroupAt{candidate.group2, jf + 1},
                                                candidate.overlap, candidate.joint});
        }

        std::set<int> next_frame_groups;
        for (const auto& record : records) {
            if (record.frame == jf + 1) next_frame_groups.insert(record.group_id);
        }
        for (int group_id : next_frame_groups) {
            if (!matched_second.contains(group_id)) {
                result.unmatched.push_back(ged::GroupAt{group_id, jf + 1});
            }
        }
    }
    return result;
}

} // namespace tsn::baselines
