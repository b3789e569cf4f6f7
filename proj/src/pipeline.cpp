#include "tsn/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

#include "tsn/community.hpp"

namespace tsn::pipeline {

GroupingMethod grouping_from_name(const std::string& name) {
    if (name == "cpm") return GroupingMethod::cpm;
    if (name == "louvain") return GroupingMethod::louvain;
    if (name == "pregrouped") return GroupingMethod::pregrouped;
    throw ParamError("unknown grouping method '" + name + "' (use cpm, louvain or pregrouped)");
}

SweepGrid sweep_from_spec(const std::string& spec) {
    SweepGrid grid;
    if (spec.empty()) return grid;
    std::size_t first = spec.find(':');
    std::size_t second = spec.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw ParamError("sweep grid must look like lo:hi:step, got '" + spec + "'");
    }
    try {
        grid.lo = std::stod(spec.substr(0, first));
        grid.hi = std::stod(spec.substr(first + 1, second - first - 1));
        grid.step = std::stod(spec.substr(second + 1));
    } catch (const std::exception&) {
        throw ParamError("sweep grid must look like lo:hi:step, got '" + spec + "'");
    }
    if (grid.step <= 0.0 || grid.lo > grid.hi) {
        throw ParamError("sweep grid needs lo <= hi and a positive step");
    }
    return grid;
}

void set_trackers(Config& config, const std::vector<std::string>& trackers) {
    config.track_ged = false;
    config.track_asur = false;
    config.track_palla = false;
    for (const auto& name : trackers) {
        if (name == "ged") {
            config.track_ged = true;
        } else if (name == "asur") {
            config.track_asur = true;
        } else if (name == "palla") {
            config.track_palla = true;
        } else {
            throw ParamError("unknown tracker '" + name + "' (use ged, asur or palla)");
        }
    }
    if (!config.track_ged && !config.track_asur && !config.track_palla) {
        throw ParamError("at least one tracker is required");
    }
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config '" + path + "'");
    nlohmann::json json;
    try {
        in >> json;
    } catch (const std::exception& e) {
        throw InputError("config '" + path + "' is not valid JSON: " + e.what());
    }

    Config config;
    static const std::vector<std::string> known = {
        "edges",      "edges_dialect", "groups",   "grouping",      "k",
        "measure",    "trackers",      "alpha",    "beta",          "form_dissolve",
        "kappa",      "sweep",         "window_len", "window_step", "out",
        "sp_epsilon", "sp_tolerance",  "sp_max_iterations"};
    for (const auto& [key, value] : json.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ParamError("unknown config key '" + key + "'");
        }
    }

    if (json.contains("edges")) config.edges_path = json["edges"].get<std::string>();
    if (json.contains("edges_dialect")) {
        config.edges_dialect = io::dialect_from_name(json["edges_dialect"].get<std::string>());
    }
    if (json.contains("groups")) config.groups_path = json["groups"].get<std::string>();
    if (json.contains("grouping")) {
        config.grouping = grouping_from_name(json["grouping"].get<std::string>());
    }
    if (json.contains("k")) config.k = json["k"].get<int>();
    if (json.contains("measure")) {
        config.measure = importance::measure_from_tag(json["measure"].get<std::string>());
        config.measure_explicit = true;
    }
    if (json.contains("trackers")) {
        std::vector<std::string> trackers;
        if (json["trackers"].is_array()) {
            for (const auto& item : json["trackers"]) trackers.push_back(item.get<std::string>());
        } else {
            trackers.push_back(json["trackers"].get<std::string>());
        }
        set_trackers(config, trackers);
    }
    if (json.contains("alpha")) config.thresholds.alpha = json["alpha"].get<double>();
    if (json.contains("beta")) config.thresholds.beta = json["beta"].get<double>();
    if (json.contains("form_dissolve")) {
        config.thresholds.form_dissolve = json["form_dissolve"].get<double>();
    }
    if (json.contains("kappa")) config.kappa = json["kappa"].get<double>();
    if (json.contains("sweep")) config.sweep = sweep_from_spec(json["sweep"].get<std::string>());
    if (json.contains("window_len")) config.window_len = json["window_len"].get<std::int64_t>();
    if (json.contains("window_step")) config.window_step = json["window_step"].get<std::int64_t>();
    if (json.contains("out")) config.out_dir = json["out"].get<std::string>();
    if (json.contains("sp_epsilon")) config.sp.epsilon = json["sp_epsilon"].get<double>();
    if (json.contains("sp_tolerance")) config.sp.tolerance = json["sp_tolerance"].get<double>();
    if (json.contains("sp_max_iterations")) {
        config.sp.max_iterations = json["sp_max_iterations"].get<int>();
    }
    return config;
}

namespace {

GroupingMethod effective_grouping(const Config& config) {
    if (config.grouping) return *config.grouping;
    return config.groups_path ? GroupingMethod::pregrouped : GroupingMethod::cpm;
}

std::optional<importance::Measure> effective_measure(const Config& config) {
    if (config.measure_explicit || config.edges_path) return config.measure;
    return std::nullopt; // no edges: fall back to quantity-only inclusion
}

} // namespace

void validate(const Config& config) {
    GroupingMethod grouping = effective_grouping(config);
    if ((grouping == GroupingMethod::cpm || grouping == GroupingMethod::louvain) &&
        !config.edges_path) {
        throw ParamError("grouping by cpm/louvain requires an edges file");
    }
    if (grouping == GroupingMethod::pregrouped && !config.groups_path) {
        throw ParamError("pregrouped input requires a groups file");
    }
    if (effective_measure(config) && !config.edges_path) {
        throw ParamError("an importance measure requires an edges file");
    }
    if (config.track_palla) {
        if (!config.edges_path) {
            throw ParamError("the palla tracker requires an edges file to build joint graphs");
        }
        if (grouping == GroupingMethod::louvain) {
            throw ParamError("the palla tracker works on clique-percolation groupings only");
        }
    }
    if (config.sweep && !config.track_ged) {
        throw ParamError("a threshold sweep requires the ged tracker");
    }
    if (config.k < 3) throw ParamError("k must be at least 3");
    if (!(config.kappa > 0.0 && config.kappa <= 100.0)) {
        throw ParamError("kappa must be in (0,100]");
    }
    if (config.window_step && !config.window_len) {
        throw ParamError("window_step without window_len");
    }
    if (config.window_len) {
        std::int64_t len = *config.window_len;
        std::int64_t step = config.window_step.value_or(len);
        if (len <= 0 || step <= 0 || step > len) {
            throw ParamError("window needs len > 0 and 0 < step <= len");
        }
    }
    config.thresholds.validate();
    config.sp.validate();
}

TemporalNetwork assemble_network(const std::vector<io::EdgeFileRecord>& records,
                                 std::optional<std::int64_t> window_len,
                                 std::optional<std::int64_t> window_step) {
    if (window_len) {
        std::vector<Interaction> interactions;
        interactions.reserve(records.size());
        for (const auto& record : records) {
            if (!record.frame) {
                throw InputError("windowing needs a timestamp column on every edge row");
            }
            interactions.push_back(Interaction{record.from, record.to, record.weight,
                                               static_cast<std::int64_t>(*record.frame)});
        }
        return window_interactions(interactions, *window_len, window_step.value_or(*window_len));
    }

    bool any_framed = std::any_of(records.begin(), records.end(),
                                  [](const auto& record) { return record.frame.has_value(); });
    if (!any_framed) {
        std::vector<WeightedEdge> edges;
        edges.reserve(records.size());
        for (const auto& record : records) {
            edges.push_back(WeightedEdge{record.from, record.to, record.weight});
        }
        return TemporalNetwork({build_frame_graph(edges, 1)});
    }

    std::map<int, std::vector<WeightedEdge>> by_frame;
    for (const auto& record : records) {
        if (!record.frame) {
            throw InputError("mixed rows: some edges carry a timeframe and some do not");
        }
        by_frame[*record.frame].push_back(WeightedEdge{record.from, record.to, record.weight});
    }
    std::vector<FrameGraph> frames;
    int expected = 1;
    for (const auto& [frame_index, edges] : by_frame) {
        if (frame_index != expected) {
            throw InputError("timeframe indices must be contiguous from 1; missing frame " +
                             std::to_string(expected));
        }
        frames.push_back(build_frame_graph(edges, frame_index));
        ++expected;
    }
    return TemporalNetwork(std::move(frames));
}

TemporalNetwork network_from_groups(const Grouping& grouping) {
    int max_frame = 0;
    for (int frame : grouping.frames()) {
        if (frame < 1) throw InputError("timeframe indices must start at 1");
        max_frame = std::max(max_frame, frame);
    }
    std::vector<FrameGraph> frames;
    for (int f = 1; f <= max_frame; ++f) {
        std::vector<NodeId> nodes;
        for (const Group& group : grouping.at(f)) {
            nodes.insert(nodes.end(), group.members().begin(), group.members().end());
        }
        frames.push_back(FrameGraph(std::move(nodes), {}, f));
    }
    return TemporalNetwork(std::move(frames));
}

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    return out;
}

} // namespace

RunResult run_pipeline(Config config) {
    validate(config);
    RunResult result;
    if (config.thresholds.below_recommended()) {
        result.warnings.push_back("alpha/beta below 50% weaken the match guarantee");
    }

    const GroupingMethod grouping_method = effective_grouping(config);
    const auto measure = effective_measure(config);
    if (!config.measure_explicit && !config.edges_path && config.measure) {
        result.warnings.push_back("no edges file: falling back to quantity-only inclusion");
    }

    TemporalNetwork tsn;
    if (config.edges_path) {
        auto records = io::parse_edges_file(*config.edges_path, config.edges_dialect);
        tsn = assemble_network(records, config.window_len, config.window_step);
    }

    Grouping grouping;
    switch (grouping_method) {
    case GroupingMethod::cpm:
        for (const FrameGraph& frame : tsn.frames()) {
            for (Group& group : community::cpm_extract(frame, config.k)) {
                grouping.add(std::move(group));
            }
        }
        break;
    case GroupingMethod::louvain:
        for (const FrameGraph& frame : tsn.frames()) {
            if (frame.node_count() == 0) continue;
            auto hierarchy = community::louvain_extract(frame);
            if (hierarchy.empty()) continue;
            for (const Group& group : hierarchy.top()) grouping.add(group);
        }
        break;
    case GroupingMethod::pregrouped:
        grouping = io::parse_groups_file(*config.groups_path);
        break;
    }
    if (!config.edges_path) tsn = network_from_groups(grouping);

    std::filesystem::create_directories(config.out_dir);
    auto out_path = [&](const std::string& name) {
        return (std::filesystem::path(config.out_dir) / name).string();
    };

    {
        auto out = open_output(out_path("groups.tsv"));
        io::write_groups(out, grouping);
        result.files_written.push_back(out_path("groups.tsv"));
    }

    if (measure) {
        std::vector<io::ImportanceRow> rows;
        for (int frame_index : grouping.frames()) {
            const FrameGraph& frame = tsn.frame(frame_index);
            for (const Group& group : grouping.at(frame_index)) {
                auto scores = importance::group_importance(frame, group, *measure, config.sp);
                for (NodeId node : group.members()) {
                    rows.push_back(io::ImportanceRow{group.group_id(), node,
                                                     scores.score_of(node), scores.rank_of(node),
                                                     frame_index});
                }
            }
        }
        auto out = open_output(out_path("importance.tsv"));
        io::write_importance(out, rows);
        result.files_written.push_back(out_path("importance.tsv"));
    }

    if (config.track_ged) {
        auto table = ged::compute_inclusions(tsn, grouping, measure, config.sp);
        auto events = ged::track_events(table, config.thresholds);
        result.event_count = events.size();
        {
            auto out = open_output(out_path("events.tsv"));
            io::write_events(out, events);
            result.files_written.push_back(out_path("events.tsv"));
        }
        {
            auto chains = ged::build_evolution_chains(events);
            auto out = open_output(out_path("chains.tsv"));
            io::write_chains(out, chains);
            result.files_written.push_back(out_path("chains.tsv"));
        }
        if (config.sweep) {
            std::vector<io::SweepCell> cells;
            for (double alpha = config.sweep->lo; alpha <= config.sweep->hi + 1e-9;
                 alpha += config.sweep->step) {
                for (double beta = config.sweep->lo; beta <= config.sweep->hi + 1e-9;
                     beta += config.sweep->step) {
                    ged::Thresholds th = config.thresholds;
                    th.alpha = alpha;
                    th.beta = beta;
                    io::SweepCell cell;
                    cell.alpha = alpha;
                    cell.beta = beta;
                    for (const auto& event : ged::track_events(table, th)) {
                        switch (event.event) {
                        case ged::EventType::forming: ++cell.forming; break;
                        case ged::EventType::dissolving: ++cell.dissolving; break;
                        case ged::EventType::shrinking: ++cell.shrinking; break;
                        case ged::EventType::growing: ++cell.growing; break;
                        case ged::EventType::continuing: ++cell.continuing; break;
                        case ged::EventType::splitting: ++cell.splitting; break;
                        case ged::EventType::merging: ++cell.merging; break;
                        }
                    }
                    cells.push_back(cell);
                }
            }
            auto out = open_output(out_path("sweep.csv"));
            io::write_sweep_csv(out, cells);
            result.files_written.push_back(out_path("sweep.csv"));
        }
    }

    if (config.track_asur) {
        auto events = baselines::asur_events(grouping, config.kappa);
        auto out = open_output(out_path("asur_events.tsv"));
        io::write_asur_events(out, events);
        result.files_written.push_back(out_path("asur_events.tsv"));
    }

    if (config.track_palla) {
        Grouping joint_grouping;
        for (std::size_t i = 0; i + 1 < tsn.size(); ++i) {
            FrameGraph joint = join_frames(tsn.frames()[i], tsn.frames()[i + 1]);
            for (Group& group : community::cpm_extract(joint, config.k)) {
                joint_grouping.add(std::move(group));
            }
        }
        auto containment = baselines::palla_containment(grouping, joint_grouping);
        {
            auto out = open_output(out_path("contained.tsv"));
            io::write_contained(out, containment);
            result.files_written.push_back(out_path("contained.tsv"));
        }
        auto matches = baselines::palla_match(containment, grouping);
        auto out = open_output(out_path("palla_matched.tsv"));
        io::write_palla_matched(out, matches);
        result.files_written.push_back(out_path("palla_matched.tsv"));
    }

    return result;
}

} // namespace tsn::pipeline
