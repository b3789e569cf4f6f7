#include "tsn/importance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace tsn::importance {

std::string measure_tag(Measure measure) {
    switch (measure) {
    case Measure::social_position: return "sp";
    case Measure::degree: return "cd";
    case Measure::closeness: return "cc";
    case Measure::betweenness: return "cb";
    }
    return "sp";
}

std::optional<Measure> measure_from_tag(const std::string& tag) {
    if (tag == "sp") return Measure::social_position;
    if (tag == "cd") return Measure::degree;
    if (tag == "cc") return Measure::closeness;
    if (tag == "cb") return Measure::betweenness;
    if (tag == "none") return std::nullopt;
    throw ParamError("unknown importance measure '" + tag + "'");
}

void SpConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParamError("epsilon must be in (0,1)");
    if (!(tolerance > 0.0)) throw ParamError("tolerance must be positive");
    if (max_iterations < 1) throw ParamError("max_iterations must be at least 1");
}

ImportanceVector ImportanceVector::from_scores(Measure measure, std::optional<int> group_id,
                                               std::vector<std::pair<NodeId, double>> scores,
                                               bool converged) {
    std::sort(scores.begin(), scores.end());
    ImportanceVector v;
    v.measure_ = measure;
    v.group_id_ = group_id;
    v.converged_ = converged;
    v.nodes_.reserve(scores.size());
    v.scores_.reserve(scores.size());
    for (const auto& [node, score] : scores) {
        v.nodes_.push_back(node);
        v.scores_.push_back(score);
    }

    // dense ranking by descending score
    std::vector<std::size_t> order(v.nodes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v.scores_[a] > v.scores_[b]; });
    v.ranks_.assign(v.nodes_.size(), 0);
    int rank = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos == 0 || v.scores_[order[pos]] != v.scores_[order[pos - 1]]) ++rank;
        v.ranks_[order[pos]] = rank;
    }
    return v;
}

double ImportanceVector::score_of(NodeId node) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
    if (it == nodes_.end() || *it != node) {
        throw InputError("node " + std::to_string(node) + " is not in scope");
    }
    return scores_[static_cast<std::size_t>(it - nodes_.begin())];
}

int ImportanceVector::rank_of(NodeId node) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
    if (it == nodes_.end() || *it != node) {
        throw InputError("node " + std::to_string(node) + " is not in scope");
    }
    return ranks_[static_cast<std::size_t>(it - nodes_.begin())];
}

double ImportanceVector::total() const {
    double sum = 0.0;
    for (double s : scores_) sum += s;
    return sum;
}

CommitmentMatrix commitment_from_weights(const FrameGraph& frame) {
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(frame.node_count());
    for (std::size_t i = 0; i < frame.node_count(); ++i) {
        double out_sum = 0.0;
        for (const auto& [j, w] : frame.out(i)) out_sum += w;
        if (out_sum <= 0.0) continue; // dangling node: all-zero row
        rows[i].reserve(frame.out(i).size());
        for (const auto& [j, w] : frame.out(i)) rows[i].emplace_back(j, w / out_sum);
    }
    return CommitmentMatrix(std::move(rows));
}

ImportanceVector social_position(const FrameGraph& frame, const CommitmentMatrix& commitment,
                                 const SpConfig& cfg) {
    cfg.validate();
    if (commitment.size() != frame.node_count()) {
        throw ParamError("commitment matrix does not match the frame");
    }
    const std::size_t n = frame.node_count();
    std::vector<double> sp(n, 1.0);
    std::vector<double> next(n, 0.0);
    bool converged = n == 0;
    for (int iter = 0; iter < cfg.max_iterations && !converged; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t y = 0; y < n; ++y) {
            for (const auto& [x, c] : commitment.row(y)) next[x] += sp[y] * c;
        }
        double max_change = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            next[x] = (1.0 - cfg.epsilon) + cfg.epsilon * next[x];
            max_change = std::max(max_change, std::abs(next[x] - sp[x]));
        }
        sp.swap(next);
        converged = max_change <= cfg.tolerance;
    }

    std::vector<std::pair<NodeId, double>> scores;
    scores.reserve(n);
    for (std::size_t i = 0; i < n; ++i) scores.emplace_back(frame.node_at(i), sp[i]);
    return ImportanceVector::from_scores(Measure::social_position, std::nullopt,
                                         std::move(scores), converged);
}

ImportanceVector degree_centrality(const FrameGraph& frame) {
    const std::size_t n = frame.node_count();
    if (n < 2) throw InputError("degree centrality needs at least 2 members");
    std::vector<std::pair<NodeId, double>> scores;
    scores.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(frame.undirected(i).size());
        scores.emplace_back(frame.node_at(i), d / static_cast<double>(n - 1));
    }
    return ImportanceVector::from_scores(Measure::degree, std::nullopt, std::move(scores));
}

namespace {

constexpr int kUnreached = -1;

// hop distances over the undirected view
std::vector<int> bfs_distances(const FrameGraph& frame, std::size_t source) {
    std::vector<int> dist(frame.node_count(), kUnreached);
    dist[source] = 0;
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop();
        for (const auto& [v, w] : frame.undirected(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

// shortest-path counts from `source` to every node
std::vector<double> bfs_path_counts(const FrameGraph& frame, std::size_t source,
                                    const std::vector<int>& dist) {
    std::vector<double> sigma(frame.node_count(), 0.0);
    sigma[source] = 1.0;
    std::vector<std::size_t> order;
    order.reserve(frame.node_count());
    for (std::size_t i = 0; i < frame.node_count(); ++i) {
        if (dist[i] != kUnreached) order.push_back(i);
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    for (std::size_t u : order) {
        if (u == source) continue;
        for (const auto& [v, w] : frame.undirected(u)) {
            if (dist[v] == dist[u] - 1) sigma[u] += sigma[v];
        }
    }
    return sigma;
}

} // namespace

ImportanceVector closeness_centrality(const FrameGraph& frame) {
    const std::size_t n = frame.node_count();
    if (n < 2) throw InputError("closeness centrality needs at least 2 members");
    std::vector<std::pair<NodeId, double>> scores;
    scores.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto dist = bfs_distances(frame, i);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            sum += dist[j] == kUnreached ? static_cast<double>(n) : dist[j];
        }
        scores.emplace_back(frame.node_at(i), static_cast<double>(n - 1) / sum);
    }
    return ImportanceVector::from_scores(Measure::closeness, std::nullopt, std::move(scores));
}

ImportanceVector betweenness_centrality(const FrameGraph& frame) {
    const std::size_t n = frame.node_count();
    if (n < 3) throw InputError("betweenness centrality needs at least 3 members");

    std::vector<std::vector<int>> dist(n);
    std::vector<std::vector<double>> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = bfs_distances(frame, i);
        sigma[i] = bfs_path_counts(frame, i, dist[i]);
    }

    std::vector<std::pair<NodeId, double>> scores;
    scores.reserve(n);
    for (std::size_t z = 0; z < n; ++z) {
        double sum = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            if (x == z) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                if (dist[x][y] == kUnreached) continue;
                if (dist[x][z] == kUnreached || dist[z][y] == kUnreached) continue;
                if (dist[x][z] + dist[z][y] != dist[x][y]) continue;
                sum += sigma[x][z] * sigma[z][y] / sigma[x][y];
            }
        }
        scores.emplace_back(frame.node_at(z), sum / static_cast<double>(n - 1));
    }
    return ImportanceVector::from_scores(Measure::betweenness, std::nullopt, std::move(scores));
}

ImportanceVector group_importance(const FrameGraph& frame, const Group& group, Measure measure,
                                  const SpConfig& cfg) {
    FrameGraph sub = induced_subgraph(frame, group.members());
    ImportanceVector base;
    switch (measure) {
    case Measure::social_position:
        base = social_position(sub, commitment_from_weights(sub), cfg);
        break;
    case Measure::degree: base = degree_centrality(sub); break;
    case Measure::closeness: base = closeness_centrality(sub); break;
    case Measure::betweenness: base = betweenness_centrality(sub); break;
    }
    std::vector<std::pair<NodeId, double>> scores;
    scores.reserve(base.size());
    for (NodeId node : base.nodes()) scores.emplace_back(node, base.score_of(node));
    return ImportanceVector::from_scores(measure, group.group_id(), std::move(scores),
                                         base.converged());
}

} // namespace tsn::importance
