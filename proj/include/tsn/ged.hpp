// ged.hpp -- group evolution discovery: inclusion measure, event
// classification over consecutive timeframes, evolution chains
#ifndef TSN_GED_HPP
#define TSN_GED_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsn/core.hpp"
#include "tsn/importance.hpp"

namespace tsn::ged {

enum class EventType { continuing, shrinking, growing, splitting, merging, dissolving, forming };

std::string event_name(EventType event);
EventType event_from_name(const std::string& name);

struct Thresholds {
    double alpha = 50.0;         // percent, for inclusion of G1 in G2
    double beta = 50.0;          // percent, for inclusion of G2 in G1
    double form_dissolve = 10.0; // percent, forming/dissolving cut-off

    void validate() const;
    // Values under 50% are allowed but weaken the match guarantee.
    bool below_recommended() const { return alpha < 50.0 || beta < 50.0; }
};

// |G1 n G2| / max(|G1|, |G2|) * 100
double overlap(const Group& g1, const Group& g2);

// (|G1 n G2| / |G1|) * (importance of shared members / total importance
// within G1) * 100. The importance vector must be scoped to G1.
double inclusion(const Group& g1, const Group& g2,
                 const importance::ImportanceVector& importance_in_g1);

// The measure-free variant: (|G1 n G2| / |G1|) * 100.
double inclusion_quantity_only(const Group& g1, const Group& g2);

// Both inclusions for one ordered pair of groups in consecutive frames.
struct InclusionPair {
    int group1 = 0;
    int frame1 = 0;
    int group2 = 0;
    int frame2 = 0;
    std::size_t size1 = 0;
    std::size_t size2 = 0;
    std::size_t shared = 0;
    double i12 = 0.0; // percent, inclusion of G1 in G2
    double i21 = 0.0; // percent, inclusion of G2 in G1
};

struct GroupAt {
    int group_id = 0;
    int frame = 0;

    friend bool operator==(const GroupAt&, const GroupAt&) = default;
    friend auto operator<=>(const GroupAt&, const GroupAt&) = default;
};

struct EventRecord {
    EventType event = EventType::continuing;
    std::optional<GroupAt> group1; // absent for forming
    std::optional<GroupAt> group2; // absent for dissolving
    double i12 = 0.0;
    double i21 = 0.0;
    Thresholds thresholds;
};

// Assigns at most one event to the pair. `matches_g1_next` and
// `matches_g2_prev` are the numbers of candidate pairs (those passing at
// least one threshold) involving G1 on the next-frame side and G2 on the
// previous-frame side; the pair itself counts when it is a candidate.
// Rules are checked in order continuing, shrinking, growing, splitting,
// merging, so a splitting/merging tie at equal sizes resolves to splitting.
std::optional<EventType> classify_pair(const InclusionPair& pair, int matches_g1_next,
                                       int matches_g2_prev, const Thresholds& th);

// All intersecting group pairs across consecutive frames with both
// inclusions computed. Thresholds are not applied here, so one table can
// serve a whole threshold sweep.
class InclusionTable {
public:
    const std::vector<InclusionPair>& pairs() const { return pairs_; }
    int frame_count() const { return frame_count_; }
    const std::vector<int>& groups_at(int frame_index) const;

private:
    friend InclusionTable compute_inclusions(const TemporalNetwork&, const Grouping&,
                                             std::optional<importance::Measure>,
                                             const importance::SpConfig&);
    std::vector<InclusionPair> pairs_;               // sorted by (frame1, group1, group2)
    std::vector<std::vector<int>> groups_by_frame_;  // [frame-1] -> ascending group ids
    int frame_count_ = 0;
};

InclusionTable compute_inclusions(const TemporalNetwork& tsn, const Grouping& grouping,
                                  std::optional<importance::Measure> measure,
                                  const importance::SpConfig& cfg = {});

// The two-pass assignment over a precomputed table: pass one collects
// candidate matches, pass two classifies them and emits forming/dissolving
// for groups whose inclusions stay under the forming threshold with every
// counterpart (no forming in the first frame, no dissolving in the last).
std::vector<EventRecord> track_events(const InclusionTable& table, const Thresholds& th);

// Convenience composition of compute_inclusions + track_events.
std::vector<EventRecord> ged_track(const TemporalNetwork& tsn, const Grouping& grouping,
                                   std::optional<importance::Measure> measure,
                                   const Thresholds& th,
                                   const importance::SpConfig& cfg = {});

// One community's lifetime: consecutive records connect at a common group.
struct EvolutionChain {
    std::vector<EventRecord> records;
};

// Follows group lineage forward through the event list; splits branch into
// several chains sharing a prefix, merges make chains share a suffix.
std::vector<EvolutionChain> build_evolution_chains(const std::vector<EventRecord>& events);

} // namespace tsn::ged

#endif
