#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "opinion/errors.hpp"

namespace opinion {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// One real opinion per agent; trajectories are sequences of these.
using OpinionVector = Eigen::VectorXd;

/// Tolerance for the per-row constraint sum_j W(i,j) + w(i) == 1.
inline constexpr double kRowSumTol = 1e-12;

// ---------------------------------------------------------------------------
// Group structure
// ---------------------------------------------------------------------------

/// Partition of agents into labeled groups 0..k-1. Every group is nonempty.
/// Immutable after construction.
class GroupAssignment {
public:
    /// Builds from per-agent labels. Labels must use every id in 0..max contiguously.
    explicit GroupAssignment(std::vector<int> labels);

    /// All n agents in one group.
    static GroupAssignment single_group(int n);

    /// Contiguous blocks: the first sizes[0] agents get group 0, and so on.
    static GroupAssignment blocks(const std::vector<int>& sizes);

    int size() const { return static_cast<int>(labels_.size()); }
    int group_count() const { return static_cast<int>(sizes_.size()); }
    int group_of(int agent) const;
    bool same_group(int a, int b) const { return group_of(a) == group_of(b); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<int>& group_sizes() const { return sizes_; }

private:
    std::vector<int> labels_;
    std::vector<int> sizes_;
};

// ---------------------------------------------------------------------------
// Identity parameters
// ---------------------------------------------------------------------------

/// Intensity of in-group identity (alpha >= 0) and out-group conflict (beta <= 0).
/// The residual 1 - alpha - beta scales the truth weights and must stay in [0,1].
struct IdentityParams {
    double alpha{1.0};
    double beta{-1.0};

    double truth_scale() const { return 1.0 - alpha - beta; }
    bool valid() const;
    /// Throws ValidationError if out of range.
    void require_valid() const;
};

// ---------------------------------------------------------------------------
// Interaction network (nonnegative attention + truth weights)
// ---------------------------------------------------------------------------

struct ValidationReport {
    bool ok{true};
    /// Signed deviation of (row sum + truth weight) from 1, one entry per row.
    std::vector<double> row_sum_deviation;
    /// Rows whose |deviation| exceeds kRowSumTol.
    std::vector<int> bad_rows;
    /// Negative entries as (row, col); col == n refers to the truth weight.
    std::vector<std::pair<int, int>> negative_entries;
    /// NaN or infinite entries, same coordinate convention.
    std::vector<std::pair<int, int>> nonfinite_entries;

    std::string summary() const;
};

/// Who pays attention to whom (nonnegative weights, self-loops allowed) plus the
/// per-agent weight on the external signal. Rows satisfy
/// sum_j W(i,j) + w(i) == 1; use validate() to check and normalized() to repair
/// rounding error in user-authored files. Immutable after construction.
class InteractionNetwork {
public:
    /// Shape checks only; value invariants are reported by validate().
    InteractionNetwork(Matrix attention, Vector truth_weights);

    int size() const { return static_cast<int>(truth_weights_.size()); }
    const Matrix& attention() const { return attention_; }
    const Vector& truth_weights() const { return truth_weights_; }

    /// Rescales each (row, truth weight) jointly so they sum to 1.
    /// Throws ValidationError for rows that sum to 0 or contain bad values.
    InteractionNetwork normalized() const;

private:
    Matrix attention_;
    Vector truth_weights_;
};

/// Reports per-row sum deviations, negative entries and non-finite entries.
/// Never throws; the network passes iff report.ok.
ValidationReport validate(const InteractionNetwork& net);

// ---------------------------------------------------------------------------
// Opinion exchange network (signed)
// ---------------------------------------------------------------------------

/// Signed weights driving the opinion update mu' = Wt * mu + wt * theta.
/// Entries lie in [-1, 1], truth weights are nonnegative, and every row
/// satisfies sum_j |Wt(i,j)| + wt(i) <= 1. Constructible from an
/// InteractionNetwork via build_opinion_exchange or supplied directly
/// (heterogeneous intensities). Immutable after construction.
class OpinionExchangeNetwork {
public:
    /// Validates the stacked row invariant; throws ValidationError on violation.
    OpinionExchangeNetwork(Matrix signed_weights, Vector truth_weights);

    int size() const { return static_cast<int>(truth_weights_.size()); }
    const Matrix& weights() const { return weights_; }
    const Vector& truth_weights() const { return truth_weights_; }

private:
    Matrix weights_;
    Vector truth_weights_;
};

/// Applies identity intensities to an interaction network: in-group entries are
/// scaled by alpha, cross-group entries by beta, truth weights by 1-alpha-beta.
/// Works for any number of groups; with two groups this is the canonical
/// signed construction, with one group there is no conflict block at all.
OpinionExchangeNetwork build_opinion_exchange(const InteractionNetwork& net,
                                              const GroupAssignment& groups,
                                              const IdentityParams& params);

}  // namespace opinion
