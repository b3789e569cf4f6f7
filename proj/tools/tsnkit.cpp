// tsnkit -- temporal social network analytics: community extraction,
// member importance, and group evolution tracking
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsn/io.hpp"
#include "tsn/pipeline.hpp"
#include "tsn/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitConfigError = 2;

struct GroupArg {
    int group_id = 0;
    int frame = 0;
};

// "ID@FRAME"
GroupArg parse_group_arg(const std::string& text) {
    std::size_t at = text.find('@');
    if (at == std::string::npos) {
        throw tsn::ParamError("expected GROUP@FRAME, got '" + text + "'");
    }
    try {
        return GroupArg{std::stoi(text.substr(0, at)), std::stoi(text.substr(at + 1))};
    } catch (const std::exception&) {
        throw tsn::ParamError("expected GROUP@FRAME, got '" + text + "'");
    }
}

std::string group_str(const std::optional<tsn::ged::GroupAt>& group) {
    if (!group) return "-";
    return "G" + std::to_string(group->group_id) + "@T" + std::to_string(group->frame);
}

struct ReportInputs {
    std::string edges_path;
    std::string edges_dialect = "tab-point";
    std::string groups_path;
    std::string measure = "sp";
    std::optional<std::int64_t> window_len;
    std::optional<std::int64_t> window_step;
};

// assembles the network + grouping a report needs, reusing the pipeline's
// ingestion rules
std::pair<tsn::TemporalNetwork, tsn::Grouping> load_report_inputs(const ReportInputs& inputs) {
    tsn::Grouping grouping = tsn::io::parse_groups_file(inputs.groups_path);
    tsn::TemporalNetwork net;
    if (!inputs.edges_path.empty()) {
        auto records = tsn::io::parse_edges_file(
            inputs.edges_path, tsn::io::dialect_from_name(inputs.edges_dialect));
        net = tsn::pipeline::assemble_network(records, inputs.window_len, inputs.window_step);
    } else {
        net = tsn::pipeline::network_from_groups(grouping);
    }
    return {std::move(net), std::move(grouping)};
}

std::vector<tsn::reports::LabelledPair> load_labelled(const std::string& path,
                                                      const std::string& kind) {
    if (kind == "ged") return tsn::reports::to_labelled_pairs(tsn::io::read_events_file(path));
    if (kind == "asur") {
        return tsn::reports::to_labelled_pairs(tsn::io::read_asur_events_file(path));
    }
    if (kind == "palla") {
        return tsn::reports::to_labelled_pairs(tsn::io::read_palla_matched_file(path));
    }
    throw tsn::ParamError("unknown event file kind '" + kind + "' (use ged, asur or palla)");
}

void print_labelled(const std::vector<tsn::reports::LabelledPair>& pairs) {
    for (const auto& pair : pairs) {
        std::cout << '\t' << group_str(pair.group1) << '\t' << group_str(pair.group2) << '\t'
                  << pair.label << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal social network analytics toolkit"};
    app.require_subcommand(1);

    // ---- run ----------------------------------------------------------
    auto* run = app.add_subcommand("run", "run the analysis pipeline");
    std::string config_path;
    std::string edges_path, edges_dialect, groups_path, grouping, measure, out_dir, sweep_spec;
    std::vector<std::string> trackers;
    int k = -1;
    double alpha = -1.0, beta = -1.0, form_dissolve = -1.0, kappa = -1.0;
    std::int64_t window_len = -1, window_step = -1;
    run->add_option("--config", config_path, "JSON config file");
    run->add_option("--edges", edges_path, "edge list file");
    run->add_option("--edges-dialect", edges_dialect, "semicolon-comma or tab-point");
    run->add_option("--groups", groups_path, "pregrouped membership file");
    run->add_option("--grouping", grouping, "cpm, louvain or pregrouped");
    run->add_option("--k", k, "clique size for cpm");
    run->add_option("--measure", measure, "sp, cd, cc, cb or none");
    run->add_option("--tracker", trackers, "ged, asur, palla (repeatable)");
    run->add_option("--alpha", alpha, "inclusion threshold for G1 in G2, percent");
    run->add_option("--beta", beta, "inclusion threshold for G2 in G1, percent");
    run->add_option("--form-dissolve", form_dissolve, "forming/dissolving cut-off, percent");
    run->add_option("--sweep", sweep_spec, "threshold grid lo:hi:step")
        ->expected(0, 1)
        ->default_str("50:100:10");
    run->add_option("--kappa", kappa, "asur merge/split threshold, percent");
    run->add_option("--window-len", window_len, "window length in time units");
    run->add_option("--window-step", window_step, "window start step in time units");
    run->add_option("--out", out_dir, "output directory");

    // ---- report -------------------------------------------------------
    auto* report = app.add_subcommand("report", "analysis reports");
    report->require_subcommand(1);

    ReportInputs report_inputs;
    auto add_input_options = [&](CLI::App* cmd, bool need_edges) {
        auto* edges_opt = cmd->add_option("--edges", report_inputs.edges_path, "edge list file");
        if (need_edges) edges_opt->required();
        cmd->add_option("--edges-dialect", report_inputs.edges_dialect,
                        "semicolon-comma or tab-point");
        cmd->add_option("--groups", report_inputs.groups_path, "group membership file")
            ->required();
        cmd->add_option("--measure", report_inputs.measure, "sp, cd, cc, cb or none");
        cmd->add_option("--window-len", report_inputs.window_len, "window length");
        cmd->add_option("--window-step", report_inputs.window_step, "window step");
    };

    auto* inclusion = report->add_subcommand("inclusion", "inclusion detail for a group pair");
    std::string arg_g1, arg_g2;
    add_input_options(inclusion, false);
    inclusion->add_option("--group1", arg_g1, "GROUP@FRAME")->required();
    inclusion->add_option("--group2", arg_g2, "GROUP@FRAME in the next frame")->required();

    auto* migration = report->add_subcommand("migration", "migration detail for a group");
    std::string arg_group, events_path;
    add_input_options(migration, false);
    migration->add_option("--events", events_path, "events.tsv from a ged run")->required();
    migration->add_option("--group", arg_group, "GROUP@FRAME")->required();

    auto* compare = report->add_subcommand("compare", "diff two tracking runs");
    std::string path_a, path_b, kind_a = "ged", kind_b = "ged";
    compare->add_option("--a", path_a, "first event/match file")->required();
    compare->add_option("--b", path_b, "second event/match file")->required();
    compare->add_option("--a-kind", kind_a, "ged, asur or palla");
    compare->add_option("--b-kind", kind_b, "ged, asur or palla");

    auto* evolution = report->add_subcommand("evolution", "chains or one group's matches");
    std::string evo_events, evo_group;
    evolution->add_option("--events", evo_events, "events.tsv from a ged run")->required();
    evolution->add_option("--group", evo_group, "GROUP@FRAME (omit for the full chain grid)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) {
            tsn::pipeline::Config config;
            if (!config_path.empty()) config = tsn::pipeline::load_config_file(config_path);
            if (!edges_path.empty()) config.edges_path = edges_path;
            if (!edges_dialect.empty()) {
                config.edges_dialect = tsn::io::dialect_from_name(edges_dialect);
            }
            if (!groups_path.empty()) config.groups_path = groups_path;
            if (!grouping.empty()) {
                config.grouping = tsn::pipeline::grouping_from_name(grouping);
            }
            if (k >= 0) config.k = k;
            if (!measure.empty()) {
                config.measure = tsn::importance::measure_from_tag(measure);
                config.measure_explicit = true;
            }
            if (!trackers.empty()) tsn::pipeline::set_trackers(config, trackers);
            if (alpha >= 0.0) config.thresholds.alpha = alpha;
            if (beta >= 0.0) config.thresholds.beta = beta;
            if (form_dissolve >= 0.0) config.thresholds.form_dissolve = form_dissolve;
            if (kappa >= 0.0) config.kappa = kappa;
            if (run->count("--sweep") > 0) {
                config.sweep = tsn::pipeline::sweep_from_spec(sweep_spec);
            }
            if (window_len >= 0) config.window_len = window_len;
            if (window_step >= 0) config.window_step = window_step;
            if (!out_dir.empty()) config.out_dir = out_dir;

            auto result = tsn::pipeline::run_pipeline(config);
            for (const auto& warning : result.warnings) {
                std::cerr << "warning: " << warning << '\n';
            }
            for (const auto& file : result.files_written) std::cout << file << '\n';
            return kExitOk;
        }

        if (inclusion->parsed()) {
            auto [net, groups] = load_report_inputs(report_inputs);
            GroupArg g1 = parse_group_arg(arg_g1);
            GroupArg g2 = parse_group_arg(arg_g2);
            auto detail = tsn::reports::report_inclusion(
                net, groups, tsn::ged::GroupAt{g1.group_id, g1.frame},
                tsn::ged::GroupAt{g2.group_id, g2.frame},
                tsn::importance::measure_from_tag(report_inputs.measure));
            std::cout << "group1\t" << group_str(detail.group1) << "\tsize\t" << detail.size1
                      << '\n'
                      << "group2\t" << group_str(detail.group2) << "\tsize\t" << detail.size2
                      << '\n'
                      << "inclusion_1_in_2\t" << tsn::io::format_percent(detail.i12) << '\n'
                      << "inclusion_2_in_1\t" << tsn::io::format_percent(detail.i21) << '\n';
            std::cout << "intersection";
            for (auto node : detail.intersection) std::cout << '\t' << node;
            std::cout << '\n';
            std::cout << "importance_total\t" << tsn::io::format_score(detail.importance1_total)
                      << '\t' << tsn::io::format_score(detail.importance2_total) << '\n'
                      << "importance_shared\t" << tsn::io::format_score(detail.importance1_shared)
                      << '\t' << tsn::io::format_score(detail.importance2_shared) << '\n'
                      << "core_importance\t" << tsn::io::format_score(detail.core1_importance)
                      << '\t' << tsn::io::format_score(detail.core2_importance) << '\n';
            std::cout << "core1";
            for (auto node : detail.core1) std::cout << '\t' << node;
            std::cout << "\ncore2";
            for (auto node : detail.core2) std::cout << '\t' << node;
            std::cout << '\n';
            return kExitOk;
        }

        if (migration->parsed()) {
            auto [net, groups] = load_report_inputs(report_inputs);
            GroupArg g = parse_group_arg(arg_group);
            auto events = tsn::io::read_events_file(events_path);
            auto detail = tsn::reports::report_migration(
                net, groups, events, tsn::ged::GroupAt{g.group_id, g.frame},
                tsn::importance::measure_from_tag(report_inputs.measure));
            std::cout << "group\t" << group_str(detail.group) << '\n'
                      << "size\t" << detail.size << '\n'
                      << "core_size\t" << detail.core_size << '\n'
                      << "successor\t" << group_str(detail.successor) << '\n'
                      << "successor_size\t" << detail.successor_size << '\n';
            std::cout << "migrants";
            for (auto node : detail.migrants) std::cout << '\t' << node;
            std::cout << '\n';
            std::cout << "avg_rank_before\t"
                      << (detail.avg_rank_before
                              ? tsn::io::format_score(*detail.avg_rank_before)
                              : "-")
                      << '\n'
                      << "avg_rank_after\t"
                      << (detail.avg_rank_after ? tsn::io::format_score(*detail.avg_rank_after)
                                                : "-")
                      << '\n';
            if (!detail.note.empty()) std::cout << "note\t" << detail.note << '\n';
            return kExitOk;
        }

        if (compare->parsed()) {
            auto a = load_labelled(path_a, kind_a);
            auto b = load_labelled(path_b, kind_b);
            auto diff = tsn::reports::report_compare(a, b);
            if (diff.warning) std::cerr << "warning: " << *diff.warning << '\n';
            std::cout << "in_both\t" << diff.in_both.size() << '\n';
            for (const auto& row : diff.in_both) {
                std::cout << '\t' << group_str(row.group1) << '\t' << group_str(row.group2)
                          << '\t' << row.labels_a << '\t' << row.labels_b << '\n';
            }
            std::cout << "only_in_a\t" << diff.only_a.size() << '\n';
            print_labelled(diff.only_a);
            std::cout << "only_in_b\t" << diff.only_b.size() << '\n';
            print_labelled(diff.only_b);
            return kExitOk;
        }

        if (evolution->parsed()) {
            auto events = tsn::io::read_events_file(evo_events);
            if (evo_group.empty()) {
                auto chains = tsn::ged::build_evolution_chains(events);
                tsn::io::write_chains(std::cout, chains);
            } else {
                GroupArg g = parse_group_arg(evo_group);
                auto evo = tsn::reports::report_evolution(
                    events, tsn::ged::GroupAt{g.group_id, g.frame});
                std::cout << "group\t" << group_str(evo.group) << '\n';
                std::cout << "forward\t" << evo.forward.size() << '\n';
                for (const auto& event : evo.forward) {
                    std::cout << '\t' << tsn::ged::event_name(event.event) << '\t'
                              << group_str(event.group2) << '\t'
                              << tsn::io::format_percent(event.i12) << '\t'
                              << tsn::io::format_percent(event.i21) << '\n';
                }
                std::cout << "backward\t" << evo.backward.size() << '\n';
                for (const auto& event : evo.backward) {
                    std::cout << '\t' << tsn::ged::event_name(event.event) << '\t'
                              << group_str(event.group1) << '\t'
                              << tsn::io::format_percent(event.i12) << '\t'
                              << tsn::io::format_percent(event.i21) << '\n';
                }
            }
            return kExitOk;
        }
    } catch (const tsn::ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const tsn::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
