#include "tsn/community.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace tsn::community {

namespace {

// neighbour index lists for the undirected, unweighted view
std::vector<std::vector<std::size_t>> undirected_neighbours(const FrameGraph& frame) {
    std::vector<std::vector<std::size_t>> nbr(frame.node_count());
    for (std::size_t i = 0; i < frame.node_count(); ++i) {
        nbr[i].reserve(frame.undirected(i).size());
        for (const auto& [j, w] : frame.undirected(i)) nbr[i].push_back(j);
    }
    return nbr;
}

void extend_clique(const std::vector<std::vector<std::size_t>>& nbr,
                   std::vector<std::size_t>& current, const std::vector<std::size_t>& candidates,
                   int k, std::vector<std::vector<std::size_t>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
        std::size_t u = candidates[pos];
        // keep candidates adjacent to u (and beyond it, to emit each clique once)
        std::vector<std::size_t> next;
        for (std::size_t q = pos + 1; q < candidates.size(); ++q) {
            std::size_t v = candidates[q];
            if (std::binary_search(nbr[u].begin(), nbr[u].end(), v)) next.push_back(v);
        }
        if (static_cast<int>(current.size()) + 1 + static_cast<int>(next.size()) < k) continue;
        current.push_back(u);
        extend_clique(nbr, current, next, k, out);
        current.pop_back();
    }
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

CliqueSet enumerate_k_cliques(const FrameGraph& frame, int k) {
    if (k < 3) throw ParamError("k must be at least 3");
    auto nbr = undirected_neighbours(frame);

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> current;
    for (std::size_t v = 0; v < frame.node_count(); ++v) {
        std::vector<std::size_t> candidates;
        for (std::size_t u : nbr[v]) {
            if (u > v) candidates.push_back(u);
        }
        current.push_back(v);
        extend_clique(nbr, current, candidates, k, found);
        current.pop_back();
    }

    CliqueSet result;
    result.k = k;
    result.cliques.reserve(found.size());
    for (const auto& clique : found) {
        std::vector<NodeId> members;
        members.reserve(clique.size());
        for (std::size_t i : clique) members.push_back(frame.node_at(i));
        result.cliques.push_back(std::move(members));
    }
    std::sort(result.cliques.begin(), result.cliques.end());
    return result;
}

std::vector<Group> cpm_extract(const FrameGraph& frame, int k) {
    CliqueSet cliques = enumerate_k_cliques(frame, k);
    const std::size_t n = cliques.cliques.size();

    // two distinct k-cliques adjoin iff they share a (k-1)-subset
    UnionFind components(n);
    std::map<std::vector<NodeId>, std::size_t> seen;
    std::vector<NodeId> sub;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& clique = cliques.cliques[c];
        for (std::size_t skip = 0; skip < clique.size(); ++skip) {
            sub.clear();
            for (std::size_t i = 0; i < clique.size(); ++i) {
                if (i != skip) sub.push_back(clique[i]);
            }
            auto [it, inserted] = seen.try_emplace(sub, c);
            if (!inserted) components.unite(c, it->second);
        }
    }

    std::map<std::size_t, std::vector<NodeId>> members_by_root;
    for (std::size_t c = 0; c < n; ++c) {
        auto& members = members_by_root[components.find(c)];
        members.insert(members.end(), cliques.cliques[c].begin(), cliques.cliques[c].end());
    }

    std::vector<std::vector<NodeId>> communities;
    communities.reserve(members_by_root.size());
    for (auto& [root, members] : members_by_root) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        communities.push_back(std::move(members));
    }
    std::sort(communities.begin(), communities.end());

    std::vector<Group> groups;
    groups.reserve(communities.size());
    int id = 1;
    for (auto& members : communities) {
        groups.emplace_back(id++, frame.frame_index(), std::move(members));
    }
    return groups;
}

double modularity(const FrameGraph& frame, const std::vector<Group>& partition) {
    const double m = frame.total_weight_undirected();
    if (m <= 0.0) throw InputError("modularity needs a graph with positive total weight");

    std::vector<int> community(frame.node_count(), -1);
    for (std::size_t g = 0; g < partition.size(); ++g) {
        for (NodeId node : partition[g].members()) {
            auto idx = frame.index_of(node);
            if (!idx) {
                throw InputError("partition member " + std::to_string(node) +
                                 " is not in the frame");
            }
            if (community[*idx] != -1) {
                throw InputError("node " + std::to_string(node) +
                                 " appears in more than one community");
            }
            community[*idx] = static_cast<int>(g);
        }
    }
    for (std::size_t i = 0; i < community.size(); ++i) {
        if (community[i] == -1) {
            throw InputError("node " + std::to_string(frame.node_at(i)) +
                             " is not covered by the partition");
        }
    }

    std::vector<double> internal(partition.size(), 0.0);
    std::vector<double> incident(partition.size(), 0.0);
    for (std::size_t i = 0; i < frame.node_count(); ++i) {
        for (const auto& [j, w] : frame.undirected(i)) {
            incident[community[i]] += w;
            if (i < j && community[i] == community[j]) internal[community[i]] += w;
        }
    }

    double q = 0.0;
    for (std::size_t c = 0; c < partition.size(); ++c) {
        double frac = incident[c] / (2.0 * m);
        q += internal[c] / m - frac * frac;
    }
    return q;
}

ModularityState::ModularityState(const FrameGraph& frame)
    : adj_(frame.node_count()), self_(frame.node_count(), 0.0) {
    for (std::size_t i = 0; i < frame.node_count(); ++i) {
        adj_[i].reserve(frame.undirected(i).size());
        for (const auto& [j, w] : frame.undirected(i)) {
            adj_[i].emplace_back(static_cast<int>(j), w);
        }
    }
    init_singletons();
}

ModularityState::ModularityState(const FrameGraph& frame, const std::vector<Group>& partition)
    : ModularityState(frame) {
    std::vector<int> target(adj_.size(), -1);
    for (const auto& group : partition) {
        for (NodeId node : group.members()) {
            auto idx = frame.index_of(node);
            if (!idx) {
                throw InputError("partition member " + std::to_string(node) +
                                 " is not in the frame");
            }
            if (target[*idx] != -1) {
                throw InputError("node " + std::to_string(node) +
                                 " appears in more than one community");
            }
            target[*idx] = static_cast<int>(&group - partition.data());
        }
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i] == -1) {
            throw InputError("node " + std::to_string(frame.node_at(i)) +
                             " is not covered by the partition");
        }
    }
    for (int node = 0; node < node_count(); ++node) isolate(node);
    for (int node = 0; node < node_count(); ++node) place(node, target[node]);
}

ModularityState::ModularityState(std::vector<std::vector<std::pair<int, double>>> adjacency,
                                 std::vector<double> self_loops)
    : adj_(std::move(adjacency)), self_(std::move(self_loops)) {
    init_singletons();
}

void ModularityState::init_singletons() {
    const std::size_t n = adj_.size();
    weight_.assign(n, 0.0);
    comm_.resize(n);
    m_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        comm_[i] = static_cast<int>(i);
        weight_[i] = 2.0 * self_[i];
        m_ += self_[i];
        for (const auto& [j, w] : adj_[i]) {
            weight_[i] += w;
            if (static_cast<std::size_t>(j) > i) m_ += w;
        }
    }
    sigma_in_.assign(n, 0.0);
    sigma_tot_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        sigma_in_[i] = self_[i];
        sigma_tot_[i] = weight_[i];
    }
}

double ModularityState::node_weight(int node) const { return weight_[node]; }

double ModularityState::community_internal(int community) const {
    if (!community_exists(community)) throw ParamError("unknown community");
    return sigma_in_[community];
}

double ModularityState::community_incident(int community) const {
    if (!community_exists(community)) throw ParamError("unknown community");
    return sigma_tot_[community];
}

int ModularityState::community_of(int node) const { return comm_[node]; }

bool ModularityState::community_exists(int community) const {
    return community >= 0 && community < static_cast<int>(sigma_in_.size());
}

double ModularityState::weight_to_community(int node, int community) const {
    if (!community_exists(community)) throw ParamError("unknown community");
    double sum = 0.0;
    for (const auto& [j, w] : adj_[node]) {
        if (comm_[j] == community) sum += w;
    }
    return sum;
}

void ModularityState::isolate(int node) {
    int c = comm_[node];
    if (c == -1) return;
    sigma_in_[c] -= weight_to_community(node, c) + self_[node];
    sigma_tot_[c] -= weight_[node];
    comm_[node] = -1;
}

void ModularityState::place(int node, int community) {
    if (!community_exists(community)) throw ParamError("unknown community");
    if (comm_[node] != -1) throw ParamError("node must be isolated before placing");
    sigma_in_[community] += weight_to_community(node, community) + self_[node];
    sigma_tot_[community] += weight_[node];
    comm_[node] = community;
}

std::vector<int> ModularityState::neighbour_communities(int node) const {
    std::vector<int> result;
    result.reserve(adj_[node].size());
    for (const auto& [j, w] : adj_[node]) {
        if (comm_[j] != -1) result.push_back(comm_[j]);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

double modularity_gain(const ModularityState& state, int node, int community) {
    if (!state.community_exists(community)) throw ParamError("unknown community");
    const double m = state.total_weight();
    const double k_in = state.weight_to_community(node, community);
    const double k = state.node_weight(node);
    return k_in / m - state.community_incident(community) * k / (2.0 * m * m);
}

namespace {

// One local-moving pass: visit nodes in ascending order, move each to the
// neighbour community with the biggest positive gain (lowest community id on
// ties), repeat until a sweep changes nothing. Returns the community per
// node, or an empty vector when no node ever moved.
std::vector<int> local_moving_phase(ModularityState& state) {
    const int n = state.node_count();
    bool any_change = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int node = 0; node < n; ++node) {
            const int original = state.community_of(node);
            state.isolate(node);
            int best = original;
            double best_gain = 0.0;
            bool have_candidate = false;
            for (int candidate : state.neighbour_communities(node)) {
                double gain = modularity_gain(state, node, candidate);
                if (!have_candidate || gain > best_gain) {
                    best = candidate;
                    best_gain = gain;
                    have_candidate = true;
                }
            }
            if (!have_candidate || best_gain <= 0.0) best = original;
            state.place(node, best);
            if (best != original) {
                improved = true;
                any_change = true;
            }
        }
    }
    if (!any_change) return {};

    std::vector<int> result(n);
    for (int node = 0; node < n; ++node) result[node] = state.community_of(node);
    return result;
}

} // namespace

HierarchicalPartition louvain_extract(const FrameGraph& frame) {
    HierarchicalPartition result;
    if (frame.node_count() == 0) return result;
    if (frame.total_weight_undirected() <= 0.0) {
        throw InputError("louvain needs a graph with positive total weight");
    }

    // current coarse graph; membership[i] = original nodes behind node i
    std::vector<std::vector<std::pair<int, double>>> adj(frame.node_count());
    std::vector<double> self(frame.node_count(), 0.0);
    std::vector<std::vector<NodeId>> membership(frame.node_count());
    for (std::size_t i = 0; i < frame.node_count(); ++i) {
        for (const auto& [j, w] : frame.undirected(i)) {
            adj[i].emplace_back(static_cast<int>(j), w);
        }
        membership[i] = {frame.node_at(i)};
    }

    while (true) {
        ModularityState state(adj, self);
        std::vector<int> assignment = local_moving_phase(state);
        if (assignment.empty()) {
            if (result.levels.empty()) {
                std::vector<Group> level;
                int id = 1;
                for (const auto& members : membership) {
                    level.emplace_back(id++, frame.frame_index(), members);
                }
                result.levels.push_back(std::move(level));
            }
            break;
        }

        // gather communities and number them by their lowest original node
        std::map<int, std::vector<int>> nodes_by_community;
        for (std::size_t i = 0; i < assignment.size(); ++i) {
            nodes_by_community[assignment[i]].push_back(static_cast<int>(i));
        }
        std::vector<std::vector<int>> community_nodes;
        community_nodes.reserve(nodes_by_community.size());
        for (auto& [c, nodes] : nodes_by_community) community_nodes.push_back(std::move(nodes));
        std::sort(community_nodes.begin(), community_nodes.end(),
                  [&](const std::vector<int>& a, const std::vector<int>& b) {
                      return membership[a.front()].front() < membership[b.front()].front();
                  });
        const int communities = static_cast<int>(community_nodes.size());
        std::vector<int> renumbered(assignment.size());
        for (int c = 0; c < communities; ++c) {
            for (int node : community_nodes[c]) renumbered[node] = c;
        }

        std::vector<std::vector<NodeId>> next_membership(communities);
        for (int c = 0; c < communities; ++c) {
            for (int node : community_nodes[c]) {
                auto& bucket = next_membership[c];
                bucket.insert(bucket.end(), membership[node].begin(), membership[node].end());
            }
            std::sort(next_membership[c].begin(), next_membership[c].end());
        }

        std::vector<Group> level;
        level.reserve(communities);
        for (int c = 0; c < communities; ++c) {
            level.emplace_back(c + 1, frame.frame_index(), next_membership[c]);
        }
        result.levels.push_back(std::move(level));

        // collapse into super-nodes: internal weights become self-loops,
        // weights between communities are summed
        std::vector<double> next_self(communities, 0.0);
        std::vector<std::map<int, double>> between(communities);
        for (std::size_t u = 0; u < adj.size(); ++u) {
            int cu = renumbered[u];
            next_self[cu] += self[u];
            for (const auto& [v, w] : adj[u]) {
                if (static_cast<std::size_t>(v) < u) continue; // each pair once
                int cv = renumbered[v];
                if (cu == cv) {
                    next_self[cu] += w;
                } else {
                    between[cu][cv] += w;
                    between[cv][cu] += w;
                }
            }
        }
        adj.assign(communities, {});
        for (int c = 0; c < communities; ++c) {
            adj[c].assign(between[c].begin(), between[c].end());
        }
        self = std::move(next_self);
        membership = std::move(next_membership);
    }
    return result;
}

} // namespace tsn::community
