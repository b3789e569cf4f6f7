#include "tsn/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tsn::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

[[noreturn]] void fail(const std::string& name, std::size_t line_no, const std::string& message) {
    throw InputError(name + ":" + std::to_string(line_no) + ": " + message);
}

long long parse_int(const std::string& field, const std::string& name, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        fail(name, line_no, "expected an integer, got '" + field + "'");
    }
    return value;
}

double parse_double(std::string field, bool decimal_comma, const std::string& name,
                    std::size_t line_no) {
    if (decimal_comma) {
        if (field.find('.') != std::string::npos) {
            fail(name, line_no, "expected decimal comma, got '" + field + "'");
        }
        std::replace(field.begin(), field.end(), ',', '.');
    } else if (field.find(',') != std::string::npos) {
        fail(name, line_no, "expected decimal point, got '" + field + "'");
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
        fail(name, line_no, "expected a number, got '" + field + "'");
    }
    return value;
}

bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::string format_fixed(double value, int precision) {
    char buffer[64];
    auto [ptr, ec] =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed, precision);
    return std::string(buffer, ptr);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

} // namespace

std::string format_percent(double value) { return format_fixed(value, 2); }
std::string format_score(double value) { return format_fixed(value, 6); }

EdgeDialect dialect_from_name(const std::string& name) {
    if (name == "semicolon-comma") return EdgeDialect::semicolon_comma;
    if (name == "tab-point") return EdgeDialect::tab_point;
    throw ParamError("unknown edge dialect '" + name + "' (use semicolon-comma or tab-point)");
}

std::string dialect_name(EdgeDialect dialect) {
    return dialect == EdgeDialect::semicolon_comma ? "semicolon-comma" : "tab-point";
}

std::vector<EdgeFileRecord> parse_edges(std::istream& in, EdgeDialect dialect,
                                        const std::string& name) {
    const char sep = dialect == EdgeDialect::semicolon_comma ? ';' : '\t';
    const bool decimal_comma = dialect == EdgeDialect::semicolon_comma;

    std::vector<EdgeFileRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split(line, sep);
        if (fields.size() != 3 && fields.size() != 4) {
            fail(name, line_no, "expected 3 or 4 fields, got " + std::to_string(fields.size()));
        }
        EdgeFileRecord record;
        record.from = parse_int(fields[0], name, line_no);
        record.to = parse_int(fields[1], name, line_no);
        double weight = parse_double(fields[2], decimal_comma, name, line_no);
        if (weight < 0.0) fail(name, line_no, "negative weight");
        record.weight = std::round(weight * 10000.0) / 10000.0;
        if (fields.size() == 4) {
            record.frame = static_cast<int>(parse_int(fields[3], name, line_no));
        }
        records.push_back(record);
    }
    return records;
}

std::vector<EdgeFileRecord> parse_edges_file(const std::string& path, EdgeDialect dialect) {
    auto in = open_input(path);
    return parse_edges(in, dialect, path);
}

void write_edges(std::ostream& out, const std::vector<EdgeFileRecord>& records,
                 EdgeDialect dialect) {
    const char sep = dialect == EdgeDialect::semicolon_comma ? ';' : '\t';
    for (const auto& record : records) {
        std::string weight = format_fixed(record.weight, 4);
        if (dialect == EdgeDialect::semicolon_comma) {
            std::replace(weight.begin(), weight.end(), '.', ',');
        }
        out << record.from << sep << record.to << sep << weight;
        if (record.frame) out << sep << *record.frame;
        out << '\n';
    }
}

Grouping parse_groups(std::istream& in, const std::string& name) {
    std::map<std::pair<int, int>, std::vector<NodeId>> members; // (frame, group) -> nodes
    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() != 3) {
            fail(name, line_no, "expected 3 fields, got " + std::to_string(fields.size()));
        }
        int group_id = static_cast<int>(parse_int(fields[0], name, line_no));
        NodeId node = parse_int(fields[1], name, line_no);
        int frame = static_cast<int>(parse_int(fields[2], name, line_no));
        members[{frame, group_id}].push_back(node);
    }
    Grouping grouping;
    for (auto& [key, nodes] : members) {
        grouping.add(Group(key.second, key.first, std::move(nodes)));
    }
    return grouping;
}

Grouping parse_groups_file(const std::string& path) {
    auto in = open_input(path);
    return parse_groups(in, path);
}

void write_groups(std::ostream& out, const Grouping& grouping) {
    for (int frame : grouping.frames()) {
        std::vector<Group> groups = grouping.at(frame);
        std::sort(groups.begin(), groups.end(),
                  [](const Group& a, const Group& b) { return a.group_id() < b.group_id(); });
        for (const Group& group : groups) {
            for (NodeId node : group.members()) {
                out << group.group_id() << '\t' << node << '\t' << frame << '\n';
            }
        }
    }
}

void write_importance(std::ostream& out, const std::vector<ImportanceRow>& rows) {
    out << "group_id\tnode_id\tscore\tranking\ttimeframe\n";
    for (const auto& row : rows) {
        out << row.group_id << '\t' << row.node_id << '\t' << format_score(row.score) << '\t'
            << row.ranking << '\t' << row.timeframe << '\n';
    }
}

void write_events(std::ostream& out, const std::vector<ged::EventRecord>& events) {
    out << "id\tevent_type\tgroup1\ttimeframe1\tgroup2\ttimeframe2\talpha\tbeta\tthreshold\n";
    std::size_t id = 1;
    for (const auto& event : events) {
        out << id++ << '\t' << ged::event_name(event.event) << '\t';
        if (event.group1) {
            out << event.group1->group_id << '\t' << event.group1->frame << '\t';
        } else {
            out << "\t\t";
        }
        if (event.group2) {
            out << event.group2->group_id << '\t' << event.group2->frame << '\t';
        } else {
            out << "\t\t";
        }
        const auto& th = event.thresholds;
        out << format_percent(th.alpha) << '\t' << format_percent(th.beta) << '\t'
            << format_percent(th.alpha) << '/' << format_percent(th.beta) << '/'
            << format_percent(th.form_dissolve) << '\n';
    }
}

std::vector<ged::EventRecord> read_events(std::istream& in, const std::string& name) {
    std::vector<ged::EventRecord> events;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("id\t", 0) == 0) continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 9) {
            fail(name, line_no, "expected 9 fields, got " + std::to_string(fields.size()));
        }
        ged::EventRecord event;
        event.event = ged::event_from_name(fields[1]);
        if (!fields[2].empty()) {
            event.group1 = ged::GroupAt{static_cast<int>(parse_int(fields[2], name, line_no)),
                                        static_cast<int>(parse_int(fields[3], name, line_no))};
        }
        if (!fields[4].empty()) {
            event.group2 = ged::GroupAt{static_cast<int>(parse_int(fields[4], name, line_no)),
                                        static_cast<int>(parse_int(fields[5], name, line_no))};
        }
        event.thresholds.alpha = parse_double(fields[6], false, name, line_no);
        event.thresholds.beta = parse_double(fields[7], false, name, line_no);
        auto parts = split(fields[8], '/');
        if (parts.size() == 3) {
            event.thresholds.form_dissolve = parse_double(parts[2], false, name, line_no);
        }
        events.push_back(event);
    }
    return events;
}

std::vector<ged::EventRecord> read_events_file(const std::string& path) {
    auto in = open_input(path);
    return read_events(in, path);
}

void write_asur_events(std::ostream& out, const std::vector<baselines::AsurEvent>& events) {
    out << "id\tevent_type\tgroup1\ttimeframe1\tgroup2\ttimeframe2\toverlap\n";
    std::size_t id = 1;
    for (const auto& event : events) {
        out << id++ << '\t' << baselines::asur_event_name(event.event) << '\t';
        if (event.group1) {
            out << event.group1->group_id << '\t' << event.group1->frame << '\t';
        } else {
            out << "\t\t";
        }
        if (event.group2) {
            out << event.group2->group_id << '\t' << event.group2->frame << '\t';
        } else {
            out << "\t\t";
        }
        if (event.overlap) out << format_percent(*event.overlap);
        out << '\n';
    }
}

std::vector<baselines::AsurEvent> read_asur_events(std::istream& in, const std::string& name) {
    std::vector<baselines::AsurEvent> events;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("id\t", 0) == 0) continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 7) {
            fail(name, line_no, "expected 7 fields, got " + std::to_string(fields.size()));
        }
        baselines::AsurEvent event;
        event.event = baselines::asur_event_from_name(fields[1]);
        if (!fields[2].empty()) {
            event.group1 = ged::GroupAt{static_cast<int>(parse_int(fields[2], name, line_no)),
                                        static_cast<int>(parse_int(fields[3], name, line_no))};
        }
        if (!fields[4].empty()) {
            event.group2 = ged::GroupAt{static_cast<int>(parse_int(fields[4], name, line_no)),
                                        static_cast<int>(parse_int(fields[5], name, line_no))};
        }
        if (!fields[6].empty()) {
            event.overlap = parse_double(fields[6], false, name, line_no);
        }
        events.push_back(event);
    }
    return events;
}

std::vector<baselines::AsurEvent> read_asur_events_file(const std::string& path) {
    auto in = open_input(path);
    return read_asur_events(in, path);
}

void write_contained(std::ostream& out,
                     const std::vector<baselines::ContainmentRecord>& records) {
    out << "id\tgroup_id\ttimeframe\tgroup_joint\ttimeframe_joint\n";
    std::size_t id = 1;
    for (const auto& record : records) {
        out << id++ << '\t' << record.group_id << '\t' << record.frame << '\t'
            << record.joint_group << '\t' << record.joint_frame << '\n';
    }
}

void write_palla_matched(std::ostream& out, const baselines::PallaResult& result) {
    out << "id\tgroup1\ttimeframe1\tgroup2\ttimeframe2\toverlap\n";
    std::size_t id = 1;
    for (const auto& match : result.matches) {
        out << id++ << '\t' << match.group1.group_id << '\t' << match.group1.frame << '\t'
            << match.group2.group_id << '\t' << match.group2.frame << '\t'
            << format_percent(match.overlap) << '\n';
    }
    for (const auto& group : result.unmatched) {
        out << id++ << "\t\t\t" << group.group_id << '\t' << group.frame << "\t\n";
    }
}

baselines::PallaResult read_palla_matched(std::istream& in, const std::string& name) {
    baselines::PallaResult result;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("id\t", 0) == 0) continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 6) {
            fail(name, line_no, "expected 6 fields, got " + std::to_string(fields.size()));
        }
        if (fields[1].empty()) {
            result.unmatched.push_back(
                ged::GroupAt{static_cast<int>(parse_int(fields[3], name, line_no)),
                             static_cast<int>(parse_int(fields[4], name, line_no))});
            continue;
        }
        baselines::PallaMatch match;
        match.group1 = ged::GroupAt{static_cast<int>(parse_int(fields[1], name, line_no)),
                                    static_cast<int>(parse_int(fields[2], name, line_no))};
        match.group2 = ged::GroupAt{static_cast<int>(parse_int(fields[3], name, line_no)),
                                    static_cast<int>(parse_int(fields[4], name, line_no))};
        if (!fields[5].empty()) match.overlap = parse_double(fields[5], false, name, line_no);
        result.matches.push_back(match);
    }
    return result;
}

baselines::PallaResult read_palla_matched_file(const std::string& path) {
    auto in = open_input(path);
    return read_palla_matched(in, path);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
    out << "alpha,beta,form,dissolve,shrink,growth,continue,split,merge,total\n";
    for (const auto& cell : cells) {
        out << format_percent(cell.alpha) << ',' << format_percent(cell.beta) << ','
            << cell.forming << ',' << cell.dissolving << ',' << cell.shrinking << ','
            << cell.growing << ',' << cell.continuing << ',' << cell.splitting << ','
            << cell.merging << ',' << cell.total() << '\n';
    }
}

void write_chains(std::ostream& out, const std::vector<ged::EvolutionChain>& chains) {
    int min_frame = 0, max_frame = -1;
    for (const auto& chain : chains) {
        for (const auto& record : chain.records) {
            if (!record.group2) continue;
            int f = record.group2->frame;
            if (max_frame < min_frame) {
                min_frame = max_frame = f;
            } else {
                min_frame = std::min(min_frame, f);
                max_frame = std::max(max_frame, f);
            }
        }
    }

    out << "chain";
    for (int f = min_frame; f <= max_frame; ++f) {
        out << "\tevent_T" << f << "\tgroup_T" << f;
    }
    out << "\tfinal\n";

    std::size_t id = 1;
    for (const auto& chain : chains) {
        out << id++;
        for (int f = min_frame; f <= max_frame; ++f) {
            const ged::EventRecord* hit = nullptr;
            for (const auto& record : chain.records) {
                if (record.group2 && record.group2->frame == f) {
                    hit = &record;
                    break;
                }
            }
            if (hit) {
                out << '\t' << ged::event_name(hit->event) << "\tG" << hit->group2->group_id;
            } else {
                out << "\t-\t-";
            }
        }
        bool dissolved = !chain.records.empty() && !chain.records.back().group2;
        out << '\t' << (dissolved ? ged::event_name(chain.records.back().event) : "-") << '\n';
    }
}

} // namespace tsn::io
