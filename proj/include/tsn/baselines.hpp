// baselines.hpp -- comparison trackers: Asur et al. event rules and
// Palla et al. joint-graph matching
#ifndef TSN_BASELINES_HPP
#define TSN_BASELINES_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsn/core.hpp"
#include "tsn/ged.hpp"

namespace tsn::baselines {

enum class AsurEventType { continuing, forming, dissolving, merging, splitting };

std::string asur_event_name(AsurEventType event);
AsurEventType asur_event_from_name(const std::string& name);

// One row per (event type, group pair); merge and split rows are emitted per
// participating pair, so one pair of groups can legitimately collect several
// rows of different types on overlapping groupings.
struct AsurEvent {
    AsurEventType event = AsurEventType::continuing;
    std::optional<ged::GroupAt> group1; // frame i side, absent for forming
    std::optional<ged::GroupAt> group2; // frame i+1 side, absent for dissolving
    std::optional<double> overlap;      // percent, where the rule defines one
};

// Events over every consecutive frame pair of the grouping:
//   continue  when member sets are identical,
//   dissolve  when no next-frame group shares more than one node,
//   form      symmetric to dissolve,
//   merge     when two groups jointly overlap a next-frame group above
//             kappa percent and each contributes more than half of itself,
//   split     symmetric to merge.
std::vector<AsurEvent> asur_events(const Grouping& grouping, double kappa);

// Ordered group pairs that received more than one event type.
std::size_t count_pair_anomalies(const std::vector<AsurEvent>& events);

// A single-timeframe group fully contained in a joint-graph group.
struct ContainmentRecord {
    int group_id = 0;
    int frame = 0;       // i or i+1
    int joint_group = 0;
    int joint_frame = 0; // first frame of the joined pair
};

// Joint groupings are indexed by the first frame of each joined pair.
std::vector<ContainmentRecord> palla_containment(const Grouping& grouping,
                                                 const Grouping& joint_grouping);

struct PallaMatch {
    ged::GroupAt group1;  // frame i
    ged::GroupAt group2;  // frame i+1
    double overlap = 0.0; // percent, |A n B| / |A u B|
    int joint_group = 0;
};

struct PallaResult {
    std::vector<PallaMatch> matches;
    // next-frame groups that took part in containment but won no match
    std::vector<ged::GroupAt> unmatched;
};

// Within each joint group, cross-frame pairs are ranked by relative overlap
// (descending, ties towards the lower frame-i group id) and matched greedily
// so that every frame-i group is matched at most once. Zero-overlap pairs
// are discarded.
PallaResult palla_match(const std::vector<ContainmentRecord>& containment,
                        const Grouping& grouping);

} // namespace tsn::baselines

#endif
