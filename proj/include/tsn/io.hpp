// io.hpp -- file ingestion and the flat tab-delimited output tables
#ifndef TSN_IO_HPP
#define TSN_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsn/baselines.hpp"
#include "tsn/core.hpp"
#include "tsn/ged.hpp"
#include "tsn/importance.hpp"

namespace tsn::io {

// Edge list dialects: fields split on ';' with decimal comma, or split on
// tab with decimal point. Weights are rounded to four decimal places on
// ingest in both cases.
enum class EdgeDialect { semicolon_comma, tab_point };

EdgeDialect dialect_from_name(const std::string& name); // "semicolon-comma" | "tab-point"
std::string dialect_name(EdgeDialect dialect);

struct EdgeFileRecord {
    NodeId from = 0;
    NodeId to = 0;
    double weight = 0.0;
    std::optional<int> frame; // fourth column: timeframe index or timestamp

    friend bool operator==(const EdgeFileRecord&, const EdgeFileRecord&) = default;
};

std::vector<EdgeFileRecord> parse_edges(std::istream& in, EdgeDialect dialect,
                                        const std::string& name = "<edges>");
std::vector<EdgeFileRecord> parse_edges_file(const std::string& path, EdgeDialect dialect);
void write_edges(std::ostream& out, const std::vector<EdgeFileRecord>& records,
                 EdgeDialect dialect);

// Tab-delimited rows: group number, member id, timeframe number.
Grouping parse_groups(std::istream& in, const std::string& name = "<groups>");
Grouping parse_groups_file(const std::string& path);
void write_groups(std::ostream& out, const Grouping& grouping);

// Per-group importance scores: group_id, node_id, score, ranking, timeframe.
struct ImportanceRow {
    int group_id = 0;
    NodeId node_id = 0;
    double score = 0.0;
    int ranking = 0;
    int timeframe = 0;
};
void write_importance(std::ostream& out, const std::vector<ImportanceRow>& rows);

// Event table: id, event_type, group1, timeframe1, group2, timeframe2,
// alpha, beta, threshold. Missing sides are left empty.
void write_events(std::ostream& out, const std::vector<ged::EventRecord>& events);
std::vector<ged::EventRecord> read_events(std::istream& in, const std::string& name = "<events>");
std::vector<ged::EventRecord> read_events_file(const std::string& path);

// Asur table: id, event_type, group1, timeframe1, group2, timeframe2, overlap.
void write_asur_events(std::ostream& out, const std::vector<baselines::AsurEvent>& events);
std::vector<baselines::AsurEvent> read_asur_events(std::istream& in,
                                                   const std::string& name = "<asur>");
std::vector<baselines::AsurEvent> read_asur_events_file(const std::string& path);

// Containment table: id, group_id, timeframe, group_joint, timeframe_joint.
void write_contained(std::ostream& out, const std::vector<baselines::ContainmentRecord>& records);

// Match table: id, group1, timeframe1, group2, timeframe2, overlap; unmatched
// next-frame groups appear with an empty first side.
void write_palla_matched(std::ostream& out, const baselines::PallaResult& result);
baselines::PallaResult read_palla_matched(std::istream& in, const std::string& name = "<palla>");
baselines::PallaResult read_palla_matched_file(const std::string& path);

// Threshold sweep: alpha,beta,form,dissolve,shrink,growth,continue,split,merge,total
struct SweepCell {
    double alpha = 0.0;
    double beta = 0.0;
    std::size_t forming = 0;
    std::size_t dissolving = 0;
    std::size_t shrinking = 0;
    std::size_t growing = 0;
    std::size_t continuing = 0;
    std::size_t splitting = 0;
    std::size_t merging = 0;

    std::size_t total() const {
        return forming + dissolving + shrinking + growing + continuing + splitting + merging;
    }
};
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells);

// One row per evolution chain, frame-aligned like an event/group grid.
void write_chains(std::ostream& out, const std::vector<ged::EvolutionChain>& chains);

// Locale-independent numeric formatting used across all outputs.
std::string format_percent(double value); // 2 decimals
std::string format_score(double value);   // 6 decimals

} // namespace tsn::io

#endif
