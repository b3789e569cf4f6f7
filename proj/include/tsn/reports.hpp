// reports.hpp -- analysis reports: inclusion detail, migration, method
// comparison, per-group evolution
#ifndef TSN_REPORTS_HPP
#define TSN_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsn/baselines.hpp"
#include "tsn/core.hpp"
#include "tsn/ged.hpp"
#include "tsn/importance.hpp"

namespace tsn::reports {

// Top half of a group by importance rank (ties resolved towards lower node
// ids); with n members the core holds ceil(n/2) of them.
std::vector<NodeId> group_core(const Group& group,
                               const importance::ImportanceVector& importance);

struct InclusionDetail {
    ged::GroupAt group1, group2;
    std::size_t size1 = 0, size2 = 0;
    double i12 = 0.0, i21 = 0.0;
    std::vector<NodeId> intersection;
    double importance1_total = 0.0, importance2_total = 0.0;
    double importance1_shared = 0.0, importance2_shared = 0.0;
    std::vector<NodeId> core1, core2;
    double core1_importance = 0.0, core2_importance = 0.0;
};

// Detailed record for one pair of groups in consecutive frames. Without a
// measure every member counts as importance 1, so the importance sums
// degrade to member counts.
InclusionDetail report_inclusion(const TemporalNetwork& tsn, const Grouping& grouping,
                                 ged::GroupAt g1, ged::GroupAt g2,
                                 std::optional<importance::Measure> measure,
                                 const importance::SpConfig& cfg = {});

struct MigrationDetail {
    ged::GroupAt group;
    std::size_t size = 0;
    std::size_t core_size = 0;
    std::optional<ged::GroupAt> successor;
    std::size_t successor_size = 0;
    std::vector<NodeId> migrants;
    std::optional<double> avg_rank_before; // rank of migrants inside the group
    std::optional<double> avg_rank_after;  // rank inside next-frame groups hosting them
    std::string note;
};

// Members lost on the way to the group's matched successor (the counterpart
// with the highest inclusion among its events). A dissolved group counts all
// members as migrants with no destination.
MigrationDetail report_migration(const TemporalNetwork& tsn, const Grouping& grouping,
                                 const std::vector<ged::EventRecord>& events, ged::GroupAt group,
                                 std::optional<importance::Measure> measure,
                                 const importance::SpConfig& cfg = {});

// A tracker result reduced to labelled group pairs so runs of different
// methods can be diffed.
struct LabelledPair {
    std::optional<ged::GroupAt> group1, group2;
    std::string label;
};

std::vector<LabelledPair> to_labelled_pairs(const std::vector<ged::EventRecord>& events);
std::vector<LabelledPair> to_labelled_pairs(const std::vector<baselines::AsurEvent>& events);
std::vector<LabelledPair> to_labelled_pairs(const baselines::PallaResult& result);

struct CompareReport {
    struct SharedRow {
        std::optional<ged::GroupAt> group1, group2;
        std::string labels_a, labels_b;
    };
    std::vector<SharedRow> in_both;
    std::vector<LabelledPair> only_a;
    std::vector<LabelledPair> only_b;
    std::optional<std::string> warning; // set when the frame ranges disagree
};

CompareReport report_compare(const std::vector<LabelledPair>& a,
                             const std::vector<LabelledPair>& b);

struct GroupEvolution {
    ged::GroupAt group;
    std::vector<ged::EventRecord> forward;  // events leaving the group
    std::vector<ged::EventRecord> backward; // events arriving at the group
};

// Forward/backward matches of one group; unknown groups are rejected.
GroupEvolution report_evolution(const std::vector<ged::EventRecord>& events, ged::GroupAt group);

} // namespace tsn::reports

#endif
