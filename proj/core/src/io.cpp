#include "opinion/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace opinion {

namespace {

using nlohmann::json;

json require_field(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ParseError(std::string("network document is missing field \"") + key +
                         "\"");
    }
    return doc.at(key);
}

double as_number(const json& value, const char* what) {
    if (!value.is_number()) {
        throw ParseError(std::string(what) + " must be a number");
    }
    return value.get<double>();
}

std::vector<double> vector_to_std(const Vector& v) {
    return {v.data(), v.data() + v.size()};
}

}  // namespace

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

NetworkSpec parse_network(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("network document must be a JSON object");

    const json n_field = require_field(doc, "n");
    if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
        throw ParseError("field \"n\" must be a positive integer");
    }
    const int n = n_field.get<int>();

    const json groups_field = require_field(doc, "groups");
    if (!groups_field.is_array() || static_cast<int>(groups_field.size()) != n) {
        throw DimensionError("field \"groups\" must be an array of n labels");
    }
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& g : groups_field) {
        if (!g.is_number_integer()) throw ParseError("group labels must be integers");
        labels.push_back(g.get<int>());
    }

    const json w_field = require_field(doc, "W");
    if (!w_field.is_array() || static_cast<int>(w_field.size()) != n) {
        throw DimensionError("field \"W\" must be an n x n array of rows");
    }
    Matrix attention(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = w_field.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            std::ostringstream msg;
            msg << "row " << i << " of \"W\" must hold exactly n entries";
            throw DimensionError(msg.str());
        }
        for (int j = 0; j < n; ++j) {
            attention(i, j) = as_number(row.at(static_cast<std::size_t>(j)), "W entry");
        }
    }

    const json tw_field = require_field(doc, "w");
    if (!tw_field.is_array() || static_cast<int>(tw_field.size()) != n) {
        throw DimensionError("field \"w\" must be an array of n truth weights");
    }
    Vector truth_weights(n);
    for (int i = 0; i < n; ++i) {
        truth_weights(i) =
            as_number(tw_field.at(static_cast<std::size_t>(i)), "truth weight");
    }

    IdentityParams params{as_number(require_field(doc, "alpha"), "alpha"),
                          as_number(require_field(doc, "beta"), "beta")};
    double theta_star = as_number(require_field(doc, "theta_star"), "theta_star");
    std::optional<double> xi;
    if (doc.contains("xi")) xi = as_number(doc.at("xi"), "xi");

    InteractionNetwork net(std::move(attention), std::move(truth_weights));
    ValidationReport report = validate(net);
    if (!report.ok) {
        throw ValidationError(report.summary());
    }
    params.require_valid();

    return NetworkSpec{std::move(net), GroupAssignment(std::move(labels)), params,
                       theta_star, xi};
}

NetworkSpec read_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_network(text.str());
}

OpinionExchangeNetwork read_exchange(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("Wt")) {
        return parse_network(text).exchange();
    }

    const json n_field = require_field(doc, "n");
    if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
        throw ParseError("field \"n\" must be a positive integer");
    }
    const int n = n_field.get<int>();
    const json w_field = doc.at("Wt");
    if (!w_field.is_array() || static_cast<int>(w_field.size()) != n) {
        throw DimensionError("field \"Wt\" must be an n x n array of rows");
    }
    Matrix weights(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = w_field.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            std::ostringstream msg;
            msg << "row " << i << " of \"Wt\" must hold exactly n entries";
            throw DimensionError(msg.str());
        }
        for (int j = 0; j < n; ++j) {
            weights(i, j) = as_number(row.at(static_cast<std::size_t>(j)), "Wt entry");
        }
    }
    const json tw_field = require_field(doc, "wt");
    if (!tw_field.is_array() || static_cast<int>(tw_field.size()) != n) {
        throw DimensionError("field \"wt\" must be an array of n truth weights");
    }
    Vector truth_weights(n);
    for (int i = 0; i < n; ++i) {
        truth_weights(i) =
            as_number(tw_field.at(static_cast<std::size_t>(i)), "truth weight");
    }
    return OpinionExchangeNetwork(std::move(weights), std::move(truth_weights));
}

std::string network_to_json(const NetworkSpec& spec) {
    const int n = spec.net.size();
    json doc;
    doc["n"] = n;
    doc["groups"] = spec.groups.labels();
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        rows.push_back(vector_to_std(spec.net.attention().row(i)));
    }
    doc["W"] = std::move(rows);
    doc["w"] = vector_to_std(spec.net.truth_weights());
    doc["alpha"] = spec.params.alpha;
    doc["beta"] = spec.params.beta;
    doc["theta_star"] = spec.theta_star;
    if (spec.xi) doc["xi"] = *spec.xi;
    return doc.dump(2) + "\n";
}

void write_network(const NetworkSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
    out << network_to_json(spec);
}

void write_trajectory_csv(const std::vector<OpinionVector>& trajectory,
                          std::ostream& out) {
    if (trajectory.empty()) throw ValidationError("trajectory is empty");
    const auto n = trajectory.front().size();
    out << "step";
    for (Eigen::Index j = 0; j < n; ++j) out << ",agent_" << j;
    out << "\n";
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        out << t;
        for (Eigen::Index j = 0; j < n; ++j) {
            out << ',' << format_full(trajectory[t](j));
        }
        out << "\n";
    }
}

std::string to_json_string(const SteadyStateResult& result) {
    json doc;
    doc["mu"] = vector_to_std(result.mu);
    doc["b"] = vector_to_std(result.b);
    doc["b_tilde"] = vector_to_std(result.b_tilde);
    doc["residual"] = result.residual;
    doc["nash_residual"] = result.nash_residual;
    doc["iterations"] = result.iterations;
    return doc.dump(2) + "\n";
}

std::string to_json_string(const BiasedSteadyState& result) {
    json doc = json::parse(to_json_string(result.result));
    doc["b_tilde_B"] = vector_to_std(result.b_tilde_biased);
    doc["xi"] = result.xi;
    doc["biased_group"] = result.biased_group;
    return doc.dump(2) + "\n";
}

exact::Problem to_exact(const NetworkSpec& spec) {
    const int n = spec.net.size();
    exact::Problem p;
    p.attention.assign(static_cast<std::size_t>(n),
                       exact::RationalVector(static_cast<std::size_t>(n)));
    p.truth_weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p.attention[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                exact::from_double(spec.net.attention()(i, j));
        }
        p.truth_weights[static_cast<std::size_t>(i)] =
            exact::from_double(spec.net.truth_weights()(i));
    }
    p.labels = spec.groups.labels();
    p.alpha = exact::from_double(spec.params.alpha);
    p.beta = exact::from_double(spec.params.beta);
    p.theta_star = exact::from_double(spec.theta_star);
    return p;
}

}  // namespace opinion
