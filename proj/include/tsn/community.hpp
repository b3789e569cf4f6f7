// community.hpp -- per-frame community extraction: k-clique percolation and
// Louvain-style modularity optimisation
#ifndef TSN_COMMUNITY_HPP
#define TSN_COMMUNITY_HPP

#include <vector>

#include "tsn/core.hpp"

namespace tsn::community {

// All complete subgraphs of exactly k nodes (undirected, unweighted view).
struct CliqueSet {
    int k = 0;
    std::vector<std::vector<NodeId>> cliques; // each sorted, lexicographic order
};

CliqueSet enumerate_k_cliques(const FrameGraph& frame, int k);

// Clique percolation: groups are node unions of connected components of the
// clique adjacency graph, where two k-cliques adjoin iff they share exactly
// k-1 members. Groups may overlap; nodes in no k-clique get no group.
std::vector<Group> cpm_extract(const FrameGraph& frame, int k);

// Newman-style modularity of a disjoint partition, undirected accounting
// with weight(x,y) = w(x->y) + w(y->x).
double modularity(const FrameGraph& frame, const std::vector<Group>& partition);

// Bookkeeping for the local-moving loop: per-community internal and incident
// weight sums, per-node incident weights, and the total network weight.
// Also tracks the current community assignment, including self-loop weights
// produced by collapsing levels.
class ModularityState {
public:
    // Singleton communities over the frame's undirected view.
    explicit ModularityState(const FrameGraph& frame);
    // Assignment taken from an explicit disjoint partition.
    ModularityState(const FrameGraph& frame, const std::vector<Group>& partition);
    // Internal representation used by the collapsed levels: adjacency lists
    // (undirected, each unordered pair listed on both endpoints) plus
    // per-node self-loop weights; nodes start as singletons.
    ModularityState(std::vector<std::vector<std::pair<int, double>>> adjacency,
                    std::vector<double> self_loops);

    int node_count() const { return static_cast<int>(adj_.size()); }
    double total_weight() const { return m_; }       // m
    double node_weight(int node) const;              // k_i
    double community_internal(int community) const;  // sigma_in
    double community_incident(int community) const;  // sigma_tot
    int community_of(int node) const;
    bool community_exists(int community) const;

    // Remove a node from its community; it becomes a pending singleton.
    void isolate(int node);
    // Place an isolated node into a community (possibly its old one).
    void place(int node, int community);
    // Sum of weights between an isolated node and a community's members.
    double weight_to_community(int node, int community) const;
    // Communities of the node's neighbours, deduplicated, ascending.
    std::vector<int> neighbour_communities(int node) const;

private:
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<double> self_;
    std::vector<double> weight_; // k_i, self-loops counted twice
    std::vector<int> comm_;      // -1 while isolated
    std::vector<double> sigma_in_;
    std::vector<double> sigma_tot_;
    double m_ = 0.0;

    void init_singletons();
};

// Modularity gain of placing the (currently isolated) node into the
// community: k_i,in / m - sigma_tot * k_i / (2 m^2).
double modularity_gain(const ModularityState& state, int node, int community);

// Nested partitions, level 0 finest; every level is a disjoint cover of the
// frame's nodes and each coarser group is a union of finer groups.
struct HierarchicalPartition {
    std::vector<std::vector<Group>> levels;

    bool empty() const { return levels.empty(); }
    const std::vector<Group>& top() const { return levels.back(); }
};

// Louvain: local moving in ascending node order (ties broken towards the
// lowest community id), then collapse communities into super-nodes and
// repeat until a pass changes nothing.
HierarchicalPartition louvain_extract(const FrameGraph& frame);

} // namespace tsn::community

#endif
