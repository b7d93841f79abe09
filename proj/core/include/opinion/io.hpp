#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opinion/bias.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/rational.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// Complete problem description as stored on disk: network, partition,
/// identity intensities, the true signal value and an optional bias.
struct NetworkSpec {
    InteractionNetwork net;
    GroupAssignment groups;
    IdentityParams params;
    double theta_star{1.0};
    std::optional<double> xi;

    /// Signed exchange structure implied by the stored parameters.
    OpinionExchangeNetwork exchange() const {
        return build_opinion_exchange(net, groups, params);
    }
};

/// Parses the JSON document {"n", "groups", "W", "w", "alpha", "beta",
/// "theta_star", optional "xi"} with row-major W. Throws ParseError on
/// malformed documents, DimensionError on shape mismatches and
/// ValidationError when the stored network violates the row invariants.
NetworkSpec parse_network(const std::string& json_text);

NetworkSpec read_network(const std::string& path);

/// Loads the signed exchange structure of a document: either derived from the
/// standard interaction format, or stored directly as {"n", "Wt", "wt"} with
/// a row-major signed matrix (heterogeneous intensities).
OpinionExchangeNetwork read_exchange(const std::string& path);

std::string network_to_json(const NetworkSpec& spec);

/// Writes the JSON document; a read of the written file reproduces every
/// binary64 field bit-exactly.
void write_network(const NetworkSpec& spec, const std::string& path);

/// CSV with header "step,agent_0,...,agent_{n-1}", one row per iterate,
/// values at full double precision (17 significant digits).
void write_trajectory_csv(const std::vector<OpinionVector>& trajectory,
                          std::ostream& out);

/// {"mu", "b", "b_tilde", "residual", "nash_residual", "iterations"}.
std::string to_json_string(const SteadyStateResult& result);

/// Same fields plus "b_tilde_B", "xi" and "biased_group".
std::string to_json_string(const BiasedSteadyState& result);

/// Lossless conversion of a parsed problem into the exact pipeline.
exact::Problem to_exact(const NetworkSpec& spec);

/// Full-precision decimal rendering of a double ("%.17g").
std::string format_full(double value);

}  // namespace opinion
