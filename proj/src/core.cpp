#include "tsn/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace tsn {

namespace {

std::string node_str(NodeId node) { return std::to_string(node); }

std::vector<NodeId> sorted_unique(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

} // namespace

FrameGraph::FrameGraph(std::vector<NodeId> nodes, std::vector<WeightedEdge> edges,
                       int frame_index)
    : frame_index_(frame_index), nodes_(sorted_unique(std::move(nodes))) {
    // merge duplicate (from,to) pairs
    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const auto& e : edges) {
        if (e.from == e.to) {
            throw InputError("self-loop edge on node " + node_str(e.from));
        }
        if (e.weight < 0.0 || !std::isfinite(e.weight)) {
            throw InputError("negative or non-finite weight on edge " + node_str(e.from) +
                             " -> " + node_str(e.to));
        }
        merged[{e.from, e.to}] += e.weight;
    }
    edges_.reserve(merged.size());
    for (const auto& [key, w] : merged) {
        edges_.push_back(WeightedEdge{key.first, key.second, w});
    }

    out_.assign(nodes_.size(), {});
    std::vector<std::map<std::size_t, double>> und(nodes_.size());
    for (const auto& e : edges_) {
        auto fi = index_of(e.from);
        auto ti = index_of(e.to);
        if (!fi || !ti) {
            throw InputError("edge endpoint " + node_str(!fi ? e.from : e.to) +
                             " is not a node of frame " + std::to_string(frame_index_));
        }
        out_[*fi].emplace_back(*ti, e.weight);
        und[*fi][*ti] += e.weight;
        und[*ti][*fi] += e.weight;
    }
    und_.assign(nodes_.size(), {});
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        und_[i].assign(und[i].begin(), und[i].end());
        for (const auto& [j, w] : und_[i]) {
            if (i < j) und_total_ += w;
        }
    }
}

bool FrameGraph::contains(NodeId node) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::optional<std::size_t> FrameGraph::index_of(NodeId node) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
    if (it == nodes_.end() || *it != node) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

TemporalNetwork::TemporalNetwork(std::vector<FrameGraph> frames) : frames_(std::move(frames)) {
    for (std::size_t i = 0; i < frames_.size(); ++i) {
        if (frames_[i].frame_index() != static_cast<int>(i) + 1) {
            throw InputError("frame indices must run 1..m; frame at position " +
                             std::to_string(i + 1) + " has index " +
                             std::to_string(frames_[i].frame_index()));
        }
    }
}

bool TemporalNetwork::has_frame(int frame_index) const {
    return frame_index >= 1 && frame_index <= static_cast<int>(frames_.size());
}

const FrameGraph& TemporalNetwork::frame(int frame_index) const {
    if (!has_frame(frame_index)) {
        throw InputError("no frame with index " + std::to_string(frame_index));
    }
    return frames_[static_cast<std::size_t>(frame_index - 1)];
}

Group::Group(int group_id, int frame_index, std::vector<NodeId> members)
    : group_id_(group_id), frame_index_(frame_index), members_(sorted_unique(std::move(members))) {
    if (members_.empty()) {
        throw InputError("group " + std::to_string(group_id) + " in frame " +
                         std::to_string(frame_index) + " has no members");
    }
}

bool Group::contains(NodeId node) const {
    return std::binary_search(members_.begin(), members_.end(), node);
}

void Grouping::add(Group group) {
    auto it = std::lower_bound(by_frame_.begin(), by_frame_.end(), group.frame_index(),
                               [](const auto& entry, int f) { return entry.first < f; });
    if (it == by_frame_.end() || it->first != group.frame_index()) {
        it = by_frame_.insert(it, {group.frame_index(), {}});
    }
    for (const auto& existing : it->second) {
        if (existing.group_id() == group.group_id()) {
            throw InputError("duplicate group id " + std::to_string(group.group_id()) +
                             " in frame " + std::to_string(group.frame_index()));
        }
    }
    it->second.push_back(std::move(group));
}

const std::vector<Group>& Grouping::at(int frame_index) const {
    static const std::vector<Group> empty;
    auto it = std::lower_bound(by_frame_.begin(), by_frame_.end(), frame_index,
                               [](const auto& entry, int f) { return entry.first < f; });
    if (it == by_frame_.end() || it->first != frame_index) return empty;
    return it->second;
}

const Group* Grouping::find(int frame_index, int group_id) const {
    for (const auto& g : at(frame_index)) {
        if (g.group_id() == group_id) return &g;
    }
    return nullptr;
}

std::vector<int> Grouping::frames() const {
    std::vector<int> result;
    result.reserve(by_frame_.size());
    for (const auto& [frame, groups] : by_frame_) result.push_back(frame);
    return result;
}

std::size_t Grouping::group_count() const {
    std::size_t n = 0;
    for (const auto& [frame, groups] : by_frame_) n += groups.size();
    return n;
}

bool Grouping::empty() const { return by_frame_.empty(); }

std::size_t shared_members(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

FrameGraph build_frame_graph(const std::vector<WeightedEdge>& edges, int frame_index) {
    std::vector<NodeId> nodes;
    nodes.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        nodes.push_back(e.from);
        nodes.push_back(e.to);
    }
    return FrameGraph(std::move(nodes), edges, frame_index);
}

TemporalNetwork window_interactions(const std::vector<Interaction>& interactions,
                                    std::int64_t window_len, std::int64_t step) {
    if (window_len <= 0) throw ParamError("window length must be positive");
    if (step <= 0 || step > window_len) {
        throw ParamError("window step must be in (0, window length]");
    }
    if (interactions.empty()) return TemporalNetwork{};

    std::int64_t min_ts = interactions.front().timestamp;
    std::int64_t max_ts = min_ts;
    for (const auto& it : interactions) {
        min_ts = std::min(min_ts, it.timestamp);
        max_ts = std::max(max_ts, it.timestamp);
    }

    std::vector<FrameGraph> frames;
    int frame_index = 1;
    for (std::int64_t start = min_ts; start <= max_ts; start += step, ++frame_index) {
        std::vector<WeightedEdge> edges;
        for (const auto& it : interactions) {
            if (it.timestamp >= start && it.timestamp < start + window_len) {
                edges.push_back(WeightedEdge{it.from, it.to, it.weight});
            }
        }
        frames.push_back(build_frame_graph(edges, frame_index));
    }
    return TemporalNetwork(std::move(frames));
}

FrameGraph induced_subgraph(const FrameGraph& frame, const std::vector<NodeId>& members) {
    std::vector<NodeId> wanted;
    wanted.reserve(members.size());
    for (NodeId node : members) {
        if (!frame.contains(node)) {
            throw InputError("node " + node_str(node) + " is not in frame " +
                             std::to_string(frame.frame_index()));
        }
        wanted.push_back(node);
    }
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::vector<WeightedEdge> edges;
    for (const auto& e : frame.edges()) {
        if (std::binary_search(wanted.begin(), wanted.end(), e.from) &&
            std::binary_search(wanted.begin(), wanted.end(), e.to)) {
            edges.push_back(e);
        }
    }
    return FrameGraph(std::move(wanted), std::move(edges), frame.frame_index());
}

FrameGraph join_frames(const FrameGraph& first, const FrameGraph& second) {
    if (second.frame_index() != first.frame_index() + 1) {
        throw ParamError("join_frames requires consecutive frames, got " +
                         std::to_string(first.frame_index()) + " and " +
                         std::to_string(second.frame_index()));
    }
    std::vector<NodeId> nodes = first.nodes();
    nodes.insert(nodes.end(), second.nodes().begin(), second.nodes().end());
    std::vector<WeightedEdge> edges = first.edges();
    edges.insert(edges.end(), second.edges().begin(), second.edges().end());
    return FrameGraph(std::move(nodes), std::move(edges), first.frame_index());
}

} // namespace tsn
