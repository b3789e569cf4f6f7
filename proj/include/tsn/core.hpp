// core.hpp -- temporal network data model: frames, windowing, subgraphs, joins
#ifndef TSN_CORE_HPP
#define TSN_CORE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsn/errors.hpp"

namespace tsn {

using NodeId = std::int64_t;

struct WeightedEdge {
    NodeId from = 0;
    NodeId to = 0;
    double weight = 0.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// One timestamped interaction (e.g. an email exchange on a given day).
struct Interaction {
    NodeId from = 0;
    NodeId to = 0;
    double weight = 0.0;
    std::int64_t timestamp = 0;
};

// A single timeframe's directed weighted graph. Immutable after construction:
// no self-loops, every edge endpoint is a node, duplicate (from,to) pairs are
// merged by summing weights. Nodes and edges are kept sorted, and dense
// adjacency (directed and undirected views) is precomputed.
class FrameGraph {
public:
    FrameGraph() = default;
    FrameGraph(std::vector<NodeId> nodes, std::vector<WeightedEdge> edges, int frame_index);

    int frame_index() const { return frame_index_; }
    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool contains(NodeId node) const;
    // Dense index of a node in nodes(); nodes are sorted ascending.
    std::optional<std::size_t> index_of(NodeId node) const;
    NodeId node_at(std::size_t index) const { return nodes_[index]; }

    // Outgoing neighbours of nodes()[i] as (dense index, weight), sorted.
    const std::vector<std::pair<std::size_t, double>>& out(std::size_t i) const { return out_[i]; }
    // Undirected view: weight(x,y) = w(x->y) + w(y->x), neighbours sorted.
    const std::vector<std::pair<std::size_t, double>>& undirected(std::size_t i) const {
        return und_[i];
    }
    // Sum of undirected edge weights (each unordered pair counted once).
    double total_weight_undirected() const { return und_total_; }

private:
    int frame_index_ = 1;
    std::vector<NodeId> nodes_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::vector<std::pair<std::size_t, double>>> out_;
    std::vector<std::vector<std::pair<std::size_t, double>>> und_;
    double und_total_ = 0.0;
};

// Ordered sequence of timeframes with frame_index running 1..m.
class TemporalNetwork {
public:
    TemporalNetwork() = default;
    explicit TemporalNetwork(std::vector<FrameGraph> frames);

    const std::vector<FrameGraph>& frames() const { return frames_; }
    std::size_t size() const { return frames_.size(); }
    bool empty() const { return frames_.empty(); }
    bool has_frame(int frame_index) const;
    const FrameGraph& frame(int frame_index) const;

private:
    std::vector<FrameGraph> frames_;
};

// A community: nonempty member set extracted from one timeframe.
// Members are stored sorted and deduplicated.
class Group {
public:
    Group() = default;
    Group(int group_id, int frame_index, std::vector<NodeId> members);

    int group_id() const { return group_id_; }
    int frame_index() const { return frame_index_; }
    const std::vector<NodeId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(NodeId node) const;

    friend bool operator==(const Group&, const Group&) = default;

private:
    int group_id_ = 0;
    int frame_index_ = 0;
    std::vector<NodeId> members_;
};

// Per-frame lists of groups; groups may overlap, ids unique within a frame.
class Grouping {
public:
    void add(Group group);
    const std::vector<Group>& at(int frame_index) const;
    const Group* find(int frame_index, int group_id) const;
    std::vector<int> frames() const;
    std::size_t group_count() const;
    bool empty() const;

private:
    // kept sorted by frame index
    std::vector<std::pair<int, std::vector<Group>>> by_frame_;
};

// Number of members shared by two sorted member lists.
std::size_t shared_members(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

// Node set = union of endpoints; duplicate (from,to) edges merged by
// weight sum. Self-loops are rejected.
FrameGraph build_frame_graph(const std::vector<WeightedEdge>& edges, int frame_index);

// Slice interactions into half-open windows [start, start+window_len),
// the first window anchored at the earliest timestamp, subsequent starts
// advancing by `step` while start <= max timestamp. Weights are summed
// per (from,to) within a window.
TemporalNetwork window_interactions(const std::vector<Interaction>& interactions,
                                    std::int64_t window_len, std::int64_t step);

// Restriction of a frame to `members` and the edges between them.
FrameGraph induced_subgraph(const FrameGraph& frame, const std::vector<NodeId>& members);

// Union of two consecutive frames; shared edges get summed weights.
// The joint frame keeps the first frame's index.
FrameGraph join_frames(const FrameGraph& first, const FrameGraph& second);

} // namespace tsn

#endif
