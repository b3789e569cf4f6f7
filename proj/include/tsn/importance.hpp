// importance.hpp -- member importance: social position and centrality measures
#ifndef TSN_IMPORTANCE_HPP
#define TSN_IMPORTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsn/core.hpp"

namespace tsn::importance {

enum class Measure { social_position, degree, closeness, betweenness };

std::string measure_tag(Measure measure);                       // "sp", "cd", "cc", "cb"
std::optional<Measure> measure_from_tag(const std::string& tag); // nullopt for "none"

// Parameters of the social position iteration.
struct SpConfig {
    double epsilon = 0.5;       // damping coefficient, in (0,1)
    double tolerance = 1e-6;    // max per-node change at which iteration stops
    int max_iterations = 1000;

    void validate() const;
};

// Row-normalised relation strengths for one frame: commitment(y,x) is the
// fraction of y's total outgoing weight directed at x. Rows are aligned with
// the frame's dense node indices; nodes without out-edges get empty rows.
class CommitmentMatrix {
public:
    CommitmentMatrix() = default;
    explicit CommitmentMatrix(std::vector<std::vector<std::pair<std::size_t, double>>> rows)
        : rows_(std::move(rows)) {}

    std::size_t size() const { return rows_.size(); }
    const std::vector<std::pair<std::size_t, double>>& row(std::size_t source) const {
        return rows_[source];
    }

private:
    std::vector<std::vector<std::pair<std::size_t, double>>> rows_;
};

// Scores for every node in scope, with a dense ranking (rank 1 = highest
// score, equal scores share a rank, the next distinct score takes the next
// integer).
class ImportanceVector {
public:
    ImportanceVector() = default;
    static ImportanceVector from_scores(Measure measure, std::optional<int> group_id,
                                        std::vector<std::pair<NodeId, double>> scores,
                                        bool converged = true);

    Measure measure() const { return measure_; }
    // Scope: nullopt = whole frame, otherwise the group the scores belong to.
    std::optional<int> group_id() const { return group_id_; }
    bool converged() const { return converged_; }

    const std::vector<NodeId>& nodes() const { return nodes_; }
    double score_of(NodeId node) const;
    int rank_of(NodeId node) const;
    double total() const;
    std::size_t size() const { return nodes_.size(); }

private:
    Measure measure_ = Measure::social_position;
    std::optional<int> group_id_;
    bool converged_ = true;
    std::vector<NodeId> nodes_;  // sorted
    std::vector<double> scores_; // aligned with nodes_
    std::vector<int> ranks_;     // aligned with nodes_
};

// commitment(y,x) = weight(y,x) / sum of y's outgoing weights.
CommitmentMatrix commitment_from_weights(const FrameGraph& frame);

// Iterates sp(x) <- (1 - eps) + eps * sum_y sp(y) * commitment(y,x) from
// sp = 1 until the largest per-node change is within tolerance. A run that
// hits max_iterations is returned with converged() == false.
ImportanceVector social_position(const FrameGraph& frame, const CommitmentMatrix& commitment,
                                 const SpConfig& cfg = {});

// Fraction of the other members directly connected (undirected view).
ImportanceVector degree_centrality(const FrameGraph& frame);

// (m-1) / sum of hop distances; unreachable nodes count distance m.
ImportanceVector closeness_centrality(const FrameGraph& frame);

// Sum over ordered pairs (x,y) of the fraction of shortest x-y paths passing
// through z, divided by m-1. Unreachable pairs contribute nothing.
ImportanceVector betweenness_centrality(const FrameGraph& frame);

// Runs the selected measure on the group's induced subgraph, so scores
// reflect standing inside the community rather than the whole frame.
// For social position the commitment matrix is re-derived on the subgraph.
ImportanceVector group_importance(const FrameGraph& frame, const Group& group, Measure measure,
                                  const SpConfig& cfg = {});

} // namespace tsn::importance

#endif
