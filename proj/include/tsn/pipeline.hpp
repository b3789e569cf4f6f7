// pipeline.hpp -- end-to-end orchestration: ingest, group, score, track, write
#ifndef TSN_PIPELINE_HPP
#define TSN_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsn/ged.hpp"
#include "tsn/importance.hpp"
#include "tsn/io.hpp"

namespace tsn::pipeline {

enum class GroupingMethod { cpm, louvain, pregrouped };

GroupingMethod grouping_from_name(const std::string& name);

struct SweepGrid {
    double lo = 50.0;
    double hi = 100.0;
    double step = 10.0;
};

SweepGrid sweep_from_spec(const std::string& spec); // "lo:hi:step"

struct Config {
    std::optional<std::string> edges_path;
    io::EdgeDialect edges_dialect = io::EdgeDialect::tab_point;
    std::optional<std::string> groups_path;
    std::optional<GroupingMethod> grouping; // defaults: pregrouped if groups given, else cpm
    int k = 6;

    // nullopt = quantity-only inclusion; defaults to social position when an
    // edge file is available, otherwise to none
    std::optional<importance::Measure> measure = importance::Measure::social_position;
    bool measure_explicit = false;

    bool track_ged = true;
    bool track_asur = false;
    bool track_palla = false;

    ged::Thresholds thresholds;
    double kappa = 50.0;
    std::optional<SweepGrid> sweep;

    // when set, the fourth edge column is a timestamp and frames come from
    // windowing; otherwise it is a timeframe index
    std::optional<std::int64_t> window_len;
    std::optional<std::int64_t> window_step;

    std::string out_dir = "out";
    importance::SpConfig sp;
};

// Reads a JSON config file; unknown keys are rejected.
Config load_config_file(const std::string& path);

void set_trackers(Config& config, const std::vector<std::string>& trackers);

// Frame assembly shared by runs and reports. With a window length the
// fourth edge column is a timestamp; otherwise it is a timeframe index and
// frames must run 1..m (three-column files become a single frame).
TemporalNetwork assemble_network(const std::vector<io::EdgeFileRecord>& records,
                                 std::optional<std::int64_t> window_len,
                                 std::optional<std::int64_t> window_step);

// Node-only frames derived from group memberships, for runs without edges.
TemporalNetwork network_from_groups(const Grouping& grouping);

// Consistency checks run before any computation.
void validate(const Config& config);

struct RunResult {
    std::vector<std::string> files_written;
    std::vector<std::string> warnings;
    std::size_t event_count = 0;
};

RunResult run_pipeline(Config config);

} // namespace tsn::pipeline

#endif
