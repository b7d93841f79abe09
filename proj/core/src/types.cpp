#include "opinion/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace opinion {

// ---------------------------------------------------------------------------
// GroupAssignment
// ---------------------------------------------------------------------------

GroupAssignment::GroupAssignment(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw ValidationError("group assignment needs at least one agent");
    }
    int max_label = *std::max_element(labels_.begin(), labels_.end());
    int min_label = *std::min_element(labels_.begin(), labels_.end());
    if (min_label < 0) {
        throw ValidationError("group labels must be nonnegative");
    }
    sizes_.assign(static_cast<std::size_t>(max_label) + 1, 0);
    for (int l : labels_) {
        ++sizes_[static_cast<std::size_t>(l)];
    }
    for (std::size_t g = 0; g < sizes_.size(); ++g) {
        if (sizes_[g] == 0) {
            std::ostringstream msg;
            msg << "group " << g << " is empty; labels must use 0..k-1 contiguously";
            throw ValidationError(msg.str());
        }
    }
}

GroupAssignment GroupAssignment::single_group(int n) {
    if (n < 1) throw ValidationError("group assignment needs at least one agent");
    return GroupAssignment(std::vector<int>(static_cast<std::size_t>(n), 0));
}

GroupAssignment GroupAssignment::blocks(const std::vector<int>& sizes) {
    std::vector<int> labels;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        if (sizes[g] < 1) throw ValidationError("every group size must be >= 1");
        labels.insert(labels.end(), static_cast<std::size_t>(sizes[g]), static_cast<int>(g));
    }
    return GroupAssignment(std::move(labels));
}

int GroupAssignment::group_of(int agent) const {
    if (agent < 0 || agent >= size()) {
        throw DimensionError("agent index out of range");
    }
    return labels_[static_cast<std::size_t>(agent)];
}

// ---------------------------------------------------------------------------
// IdentityParams
// ---------------------------------------------------------------------------

bool IdentityParams::valid() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) return false;
    if (alpha < 0.0 || alpha > 1.0) return false;
    if (beta < -1.0 || beta > 0.0) return false;
    double scale = truth_scale();
    return scale >= 0.0 && scale <= 1.0;
}

void IdentityParams::require_valid() const {
    if (!valid()) {
        std::ostringstream msg;
        msg << "identity params out of range: alpha=" << alpha << " beta=" << beta
            << " (need alpha in [0,1], beta in [-1,0], 1-alpha-beta in [0,1])";
        throw ValidationError(msg.str());
    }
}

// ---------------------------------------------------------------------------
// InteractionNetwork
// ---------------------------------------------------------------------------

InteractionNetwork::InteractionNetwork(Matrix attention, Vector truth_weights)
    : attention_(std::move(attention)), truth_weights_(std::move(truth_weights)) {
    if (attention_.rows() != attention_.cols()) {
        throw DimensionError("attention matrix must be square");
    }
    if (attention_.rows() != truth_weights_.size()) {
        throw DimensionError("truth-weight vector length must match the matrix size");
    }
    if (truth_weights_.size() == 0) {
        throw DimensionError("network needs at least one agent");
    }
}

InteractionNetwork InteractionNetwork::normalized() const {
    const int n = size();
    Matrix w = attention_;
    Vector tw = truth_weights_;
    for (int i = 0; i < n; ++i) {
        double total = w.row(i).sum() + tw(i);
        if (!std::isfinite(total)) {
            std::ostringstream msg;
            msg << "row " << i << " contains non-finite entries";
            throw ValidationError(msg.str());
        }
        if (total <= 0.0) {
            std::ostringstream msg;
            msg << "row " << i << " sums to " << total << "; cannot rescale to 1";
            throw ValidationError(msg.str());
        }
        w.row(i) /= total;
        tw(i) /= total;
    }
    return InteractionNetwork(std::move(w), std::move(tw));
}

ValidationReport validate(const InteractionNetwork& net) {
    const int n = net.size();
    const Matrix& w = net.attention();
    const Vector& tw = net.truth_weights();

    ValidationReport report;
    report.row_sum_deviation.resize(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = w(i, j);
            if (!std::isfinite(v)) {
                report.nonfinite_entries.emplace_back(i, j);
            } else if (v < 0.0) {
                report.negative_entries.emplace_back(i, j);
            }
        }
        double t = tw(i);
        if (!std::isfinite(t)) {
            report.nonfinite_entries.emplace_back(i, n);
        } else if (t < 0.0) {
            report.negative_entries.emplace_back(i, n);
        }
        double deviation = w.row(i).sum() + t - 1.0;
        report.row_sum_deviation[static_cast<std::size_t>(i)] = deviation;
        if (!(std::abs(deviation) <= kRowSumTol)) {
            report.bad_rows.push_back(i);
        }
    }
    report.ok = report.bad_rows.empty() && report.negative_entries.empty() &&
                report.nonfinite_entries.empty();
    return report;
}

std::string ValidationReport::summary() const {
    if (ok) return "ok";
    std::ostringstream out;
    out << "invalid network:";
    for (int r : bad_rows) {
        out << " row " << r << " deviates by " << row_sum_deviation[static_cast<std::size_t>(r)]
            << ";";
    }
    for (const auto& [i, j] : negative_entries) {
        out << " negative entry at (" << i << "," << j << ");";
    }
    for (const auto& [i, j] : nonfinite_entries) {
        out << " non-finite entry at (" << i << "," << j << ");";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// OpinionExchangeNetwork
// ---------------------------------------------------------------------------

OpinionExchangeNetwork::OpinionExchangeNetwork(Matrix signed_weights, Vector truth_weights)
    : weights_(std::move(signed_weights)), truth_weights_(std::move(truth_weights)) {
    if (weights_.rows() != weights_.cols()) {
        throw DimensionError("exchange matrix must be square");
    }
    if (weights_.rows() != truth_weights_.size()) {
        throw DimensionError("truth-weight vector length must match the matrix size");
    }
    const int n = size();
    if (n == 0) throw DimensionError("network needs at least one agent");
    for (int i = 0; i < n; ++i) {
        double abs_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = weights_(i, j);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "non-finite exchange weight at (" << i << "," << j << ")";
                throw ValidationError(msg.str());
            }
            abs_sum += std::abs(v);
        }
        double t = truth_weights_(i);
        if (!std::isfinite(t) || t < 0.0) {
            std::ostringstream msg;
            msg << "truth weight of agent " << i << " must be finite and >= 0";
            throw ValidationError(msg.str());
        }
        if (abs_sum + t > 1.0 + kRowSumTol) {
            std::ostringstream msg;
            msg << "row " << i << ": sum_j |Wt(i,j)| + wt(i) = " << abs_sum + t
                << " exceeds 1";
            throw ValidationError(msg.str());
        }
    }
}

OpinionExchangeNetwork build_opinion_exchange(const InteractionNetwork& net,
                                              const GroupAssignment& groups,
                                              const IdentityParams& params) {
    if (groups.size() != net.size()) {
        throw DimensionError("group assignment does not cover the network");
    }
    params.require_valid();

    const int n = net.size();
    const Matrix& w = net.attention();
    Matrix signed_w(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            signed_w(i, j) = groups.same_group(i, j) ? params.alpha * w(i, j)
                                                     : params.beta * w(i, j);
        }
    }
    Vector wt = params.truth_scale() * net.truth_weights();
    return OpinionExchangeNetwork(std::move(signed_w), std::move(wt));
}

}  // namespace opinion
