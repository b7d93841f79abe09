// Command-line front end: steady states, trajectories, parameter sweeps,
// balance reports, centralities and the bundled reference tables.
//
// Exit codes: 0 success / reproduce pass, 1 reproduce mismatch,
// 2 invalid input, 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opinion/balance.hpp"
#include "opinion/bias.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/homogeneous.hpp"
#include "opinion/io.hpp"
#include "opinion/netgen.hpp"
#include "opinion/rational.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

bool rational_mode() {
    const char* v = std::getenv("OPINION_RATIONAL");
    return v != nullptr && std::string(v) == "1";
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> to_std(const opinion::Vector& v) {
    return {v.data(), v.data() + v.size()};
}

opinion::Vector to_vector(const opinion::exact::RationalVector& q) {
    opinion::Vector v(static_cast<long>(q.size()));
    for (std::size_t i = 0; i < q.size(); ++i) {
        v(static_cast<long>(i)) = opinion::exact::to_double(q[i]);
    }
    return v;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw opinion::ParseError("cannot open \"" + path + "\" for writing");
    return file;
}

// ---------------------------------------------------------------------------
// steady-state / centrality
// ---------------------------------------------------------------------------

struct SteadyOptions {
    std::string file;
    std::optional<double> theta;
    std::optional<double> xi;
    int biased_group = 1;
    std::string format = "json";
};

void print_steady_csv(std::ostream& out, const opinion::SteadyStateResult& r,
                      const opinion::Vector* b_tilde_biased) {
    out << "agent,mu,b,b_tilde";
    if (b_tilde_biased != nullptr) out << ",b_tilde_B";
    out << "\n";
    for (long i = 0; i < r.mu.size(); ++i) {
        out << i << ',' << opinion::format_full(r.mu(i)) << ','
            << opinion::format_full(r.b(i)) << ',' << opinion::format_full(r.b_tilde(i));
        if (b_tilde_biased != nullptr) {
            out << ',' << opinion::format_full((*b_tilde_biased)(i));
        }
        out << "\n";
    }
    out << "# residual=" << opinion::format_full(r.residual) << "\n";
    out << "# nash_residual=" << opinion::format_full(r.nash_residual) << "\n";
    out << "# iterations=" << r.iterations << "\n";
}

void print_steady_table(std::ostream& out, const opinion::SteadyStateResult& r,
                        const opinion::Vector* b_tilde_biased) {
    out << "agent          mu           b     b_tilde";
    if (b_tilde_biased != nullptr) out << "   b_tilde_B";
    out << "\n";
    for (long i = 0; i < r.mu.size(); ++i) {
        char line[160];
        std::snprintf(line, sizeof(line), "%5ld %11s %11s %11s", i, fmt6(r.mu(i)).c_str(),
                      fmt6(r.b(i)).c_str(), fmt6(r.b_tilde(i)).c_str());
        out << line;
        if (b_tilde_biased != nullptr) {
            std::snprintf(line, sizeof(line), " %11s", fmt6((*b_tilde_biased)(i)).c_str());
            out << line;
        }
        out << "\n";
    }
    out << "residual " << fmt6(r.residual) << ", nash residual " << fmt6(r.nash_residual)
        << ", iterations " << r.iterations << "\n";
}

int run_steady_state(const SteadyOptions& opt) {
    opinion::NetworkSpec spec = opinion::read_network(opt.file);
    double theta = opt.theta.value_or(spec.theta_star);
    std::optional<double> xi = opt.xi ? opt.xi : spec.xi;
    opinion::OpinionExchangeNetwork x = spec.exchange();

    if (xi) {
        opinion::BiasSpec bias{*xi, opt.biased_group};
        opinion::BiasedSteadyState full =
            opinion::solve_biased(x, spec.groups, theta, bias);
        if (rational_mode()) {
            opinion::exact::Problem p = opinion::to_exact(spec);
            opinion::exact::Exchange ex = opinion::exact::build_exchange(p);
            full.result.mu = to_vector(opinion::exact::steady_state_biased(
                ex, p.labels, opinion::exact::from_double(theta),
                opinion::exact::from_double(*xi), opt.biased_group));
            full.result.b_tilde = to_vector(opinion::exact::weighted_bonacich(ex));
            full.result.b = to_vector(opinion::exact::bonacich_unsigned(ex));
            opinion::Vector injection(x.size());
            for (int i = 0; i < x.size(); ++i) {
                double signal = theta;
                if (spec.groups.group_of(i) == opt.biased_group) signal += *xi;
                injection(i) = x.truth_weights()(i) * signal;
            }
            full.result.residual =
                (full.result.mu - x.weights() * full.result.mu - injection)
                    .lpNorm<Eigen::Infinity>();
            full.result.nash_residual = full.result.residual;
        }
        if (opt.format == "json") {
            std::cout << opinion::to_json_string(full);
        } else if (opt.format == "csv") {
            print_steady_csv(std::cout, full.result, &full.b_tilde_biased);
        } else {
            print_steady_table(std::cout, full.result, &full.b_tilde_biased);
        }
        return kExitOk;
    }

    opinion::SteadyStateResult result = opinion::steady_state_direct(x, theta);
    if (rational_mode()) {
        opinion::exact::Problem p = opinion::to_exact(spec);
        opinion::exact::Exchange ex = opinion::exact::build_exchange(p);
        result.b_tilde = to_vector(opinion::exact::weighted_bonacich(ex));
        result.mu = to_vector(opinion::exact::steady_state(
            ex, opinion::exact::from_double(theta)));
        result.b = to_vector(opinion::exact::bonacich_unsigned(ex));
        result.residual =
            (result.mu - x.weights() * result.mu - x.truth_weights() * theta)
                .lpNorm<Eigen::Infinity>();
        result.nash_residual =
            opinion::verify_nash(result.mu, x, theta).max_deviation;
    }
    if (opt.format == "json") {
        std::cout << opinion::to_json_string(result);
    } else if (opt.format == "csv") {
        print_steady_csv(std::cout, result, nullptr);
    } else {
        print_steady_table(std::cout, result, nullptr);
    }
    return kExitOk;
}

struct CentralityOptions {
    std::string file;
    std::string format = "json";
};

int run_centrality(const CentralityOptions& opt) {
    opinion::NetworkSpec spec = opinion::read_network(opt.file);
    opinion::Vector b;
    opinion::Vector b_tilde;
    if (rational_mode()) {
        opinion::exact::Problem p = opinion::to_exact(spec);
        b = to_vector(opinion::exact::bonacich(p));
        b_tilde = to_vector(opinion::exact::weighted_bonacich(opinion::exact::build_exchange(p)));
    } else {
        b = opinion::bonacich(spec.net);
        b_tilde = opinion::weighted_bonacich(spec.exchange());
    }
    if (opt.format == "json") {
        std::cout << "{\n  \"b\": [";
        for (long i = 0; i < b.size(); ++i) {
            std::cout << (i ? ", " : "") << opinion::format_full(b(i));
        }
        std::cout << "],\n  \"b_tilde\": [";
        for (long i = 0; i < b_tilde.size(); ++i) {
            std::cout << (i ? ", " : "") << opinion::format_full(b_tilde(i));
        }
        std::cout << "]\n}\n";
    } else if (opt.format == "csv") {
        std::cout << "agent,b,b_tilde\n";
        for (long i = 0; i < b.size(); ++i) {
            std::cout << i << ',' << opinion::format_full(b(i)) << ','
                      << opinion::format_full(b_tilde(i)) << "\n";
        }
    } else {
        std::cout << "agent           b     b_tilde\n";
        for (long i = 0; i < b.size(); ++i) {
            char line[96];
            std::snprintf(line, sizeof(line), "%5ld %11s %11s\n", i, fmt6(b(i)).c_str(),
                          fmt6(b_tilde(i)).c_str());
            std::cout << line;
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOptions {
    std::string file;
    std::optional<double> theta;
    int steps = 100000;
    double tol = opinion::defaults::iteration_tol;
    std::string out;
};

int run_simulate(const SimulateOptions& opt) {
    opinion::NetworkSpec spec = opinion::read_network(opt.file);
    double theta = opt.theta.value_or(spec.theta_star);
    opinion::OpinionExchangeNetwork x = spec.exchange();

    opinion::SimulationResult run = opinion::simulate(
        x, opinion::Vector::Zero(x.size()), theta, opt.steps, opt.tol);

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    opinion::write_trajectory_csv(run.trajectory, out);

    std::cout << "converged=" << (run.converged ? "true" : "false")
              << " iterations=" << run.steps
              << " final_residual=" << opinion::format_full(run.final_delta) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
    std::string param;
    double from = 0.0;
    double to = 1.0;
    int points = 50;
    double eta = 0.25;
    double w_a = 0.2;
    double w_b = 0.2;
    double h_a = 0.0;
    double h_b = 0.0;
    double theta = 1.0;
    std::string out;
};

int run_sweep(const SweepOptions& opt) {
    if (opt.points < 1) throw opinion::ValidationError("--points must be >= 1");

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(opt.points));
    if (opt.points == 1) {
        values.push_back(opt.from);
    } else {
        for (int i = 0; i < opt.points; ++i) {
            values.push_back(opt.from + (opt.to - opt.from) * i / (opt.points - 1));
        }
    }
    std::sort(values.begin(), values.end());

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out);
    out << "param,value,mu_A,mu_B,d_muA_d_param,d_muB_d_param\n";
    for (double v : values) {
        double eta = opt.eta, wa = opt.w_a, wb = opt.w_b, ha = opt.h_a, hb = opt.h_b;
        if (opt.param == "eta") eta = v;
        else if (opt.param == "wA") wa = v;
        else if (opt.param == "wB") wb = v;
        else if (opt.param == "hA") ha = v;
        else if (opt.param == "hB") hb = v;

        opinion::HomogeneousSociety s(eta, wa, wb, ha, hb, opt.theta);
        opinion::GroupOpinions mu = opinion::steady_state_homophily(s);
        opinion::ComparativeStatics cs = opinion::comparative_statics(s);
        double da = 0.0, db = 0.0;
        if (opt.param == "eta") { da = cs.dmuA_deta; db = cs.dmuB_deta; }
        else if (opt.param == "wA") { da = cs.dmuA_dwA; db = cs.dmuB_dwA; }
        else if (opt.param == "wB") { da = cs.dmuA_dwB; db = cs.dmuB_dwB; }
        else if (opt.param == "hA") { da = cs.dmuA_dhA; db = cs.dmuB_dhA; }
        else if (opt.param == "hB") { da = cs.dmuA_dhB; db = cs.dmuB_dhB; }

        out << opt.param << ',' << opinion::format_full(v) << ','
            << opinion::format_full(mu.mu_a) << ',' << opinion::format_full(mu.mu_b)
            << ',' << opinion::format_full(da) << ',' << opinion::format_full(db)
            << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// balance
// ---------------------------------------------------------------------------

std::string cluster_list(const opinion::GroupAssignment& part) {
    std::ostringstream out;
    for (int g = 0; g < part.group_count(); ++g) {
        if (g > 0) out << ',';
        out << '{';
        bool first = true;
        for (int i = 0; i < part.size(); ++i) {
            if (part.group_of(i) != g) continue;
            if (!first) out << ',';
            out << i;
            first = false;
        }
        out << '}';
    }
    return out.str();
}

int run_balance(const std::string& path) {
    opinion::OpinionExchangeNetwork x = opinion::read_exchange(path);
    opinion::BalanceReport report = opinion::check_structural_balance(x);
    if (report.strongly_balanced) {
        std::cout << "strongly balanced, clusters " << cluster_list(*report.recovered_partition)
                  << "\n";
    } else if (report.weakly_balanced) {
        std::cout << "weakly balanced, clusters " << cluster_list(*report.recovered_partition)
                  << "\n";
        std::cout << "witness cycle (odd negative count):";
        for (int v : report.witness) std::cout << ' ' << v;
        std::cout << "\n";
    } else {
        std::cout << "unbalanced\n";
        std::cout << "witness cycle (one negative edge):";
        for (int v : report.witness) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct ReferenceTable {
    std::string name;
    std::string description;
    opinion::exact::Problem problem;
    std::optional<opinion::exact::Rational> xi;  // biased solve when present
    opinion::exact::RationalVector expected_mu;
    opinion::exact::RationalVector expected_b;
};

ReferenceTable make_table(const std::string& id) {
    using opinion::exact::Rational;
    using opinion::exact::ratio;
    ReferenceTable t;
    t.name = id;
    if (id == "1") {
        t.description = "complete network, groups 1|3";
        t.problem = opinion::exact::complete_network({1, 3});
        t.expected_mu = {ratio(-1, 5), ratio(3, 5), ratio(3, 5), ratio(3, 5)};
        t.expected_b.assign(4, Rational(5));
    } else if (id == "2") {
        t.description = "six-agent ring, groups 3|3";
        t.problem = opinion::exact::ring_network({0, 0, 0, 1, 1, 1});
        t.expected_mu = {ratio(2, 5), ratio(3, 5), ratio(2, 5),
                         ratio(2, 5), ratio(3, 5), ratio(2, 5)};
        t.expected_b.assign(6, Rational(4));
    } else if (id == "3") {
        t.description = "complete network, groups 2|2";
        t.problem = opinion::exact::complete_network({2, 2});
        t.expected_mu.assign(4, ratio(1, 5));
        t.expected_b.assign(4, Rational(5));
    } else if (id == "4") {
        t.description = "complete network, strong source for agent 0";
        t.problem = opinion::exact::complete_network({1, 3});
        for (int j = 0; j < 4; ++j) {
            t.problem.attention[0][static_cast<std::size_t>(j)] = ratio(1, 8);
        }
        t.problem.truth_weights[0] = ratio(1, 2);
        t.expected_mu = {ratio(5, 11), ratio(3, 11), ratio(3, 11), ratio(3, 11)};
        t.expected_b = {ratio(31, 11), ratio(43, 11), ratio(43, 11), ratio(43, 11)};
    } else if (id == "5") {
        t.description = "homophilous majority (h_B = 1/2)";
        t.problem = opinion::exact::homogeneous_network(ratio(1, 4), ratio(1, 5),
                                                        ratio(1, 5), Rational(0),
                                                        ratio(1, 2), 4);
        t.expected_mu = {ratio(-1, 3), ratio(7, 9), ratio(7, 9), ratio(7, 9)};
        t.expected_b.assign(4, Rational(5));
    } else if (id == "bias") {
        t.description = "complete 2|2 network, biased source for group 1";
        t.problem = opinion::exact::complete_network({2, 2});
        t.xi = ratio(3, 2);
        t.expected_mu = {ratio(-2, 5), ratio(-2, 5), ratio(11, 10), ratio(11, 10)};
        t.expected_b.assign(4, Rational(5));
    } else {
        throw opinion::ValidationError("unknown table \"" + id +
                                       "\" (use 1, 2, 3, 4, 5 or bias)");
    }
    return t;
}

// Float-path counterpart of an exact problem.
opinion::SteadyStateResult solve_float(const ReferenceTable& t, opinion::Vector* mu_out) {
    const int n = t.problem.n();
    opinion::Matrix w(n, n);
    opinion::Vector tw(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            w(i, j) = opinion::exact::to_double(
                t.problem.attention[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        tw(i) = opinion::exact::to_double(t.problem.truth_weights[static_cast<std::size_t>(i)]);
    }
    opinion::InteractionNetwork net(w, tw);
    opinion::GroupAssignment groups(t.problem.labels);
    opinion::OpinionExchangeNetwork x =
        opinion::build_opinion_exchange(net, groups, {1.0, -1.0});
    opinion::SteadyStateResult r = opinion::steady_state_direct(x, 1.0);
    if (t.xi) {
        *mu_out = opinion::steady_state_biased(x, groups, 1.0,
                                               {opinion::exact::to_double(*t.xi), 1});
    } else {
        *mu_out = r.mu;
    }
    r.b = opinion::bonacich(net);
    return r;
}

int run_reproduce(const std::string& id) {
    using opinion::exact::Rational;
    ReferenceTable t = make_table(id);

    opinion::exact::Exchange ex = opinion::exact::build_exchange(t.problem);
    opinion::exact::RationalVector exact_mu =
        t.xi ? opinion::exact::steady_state_biased(ex, t.problem.labels, Rational(1),
                                                   *t.xi, 1)
             : opinion::exact::steady_state(ex, Rational(1));
    opinion::exact::RationalVector exact_b = opinion::exact::bonacich(t.problem);

    opinion::Vector float_mu;
    opinion::SteadyStateResult float_result = solve_float(t, &float_mu);

    std::cout << "table " << t.name << " (" << t.description << ", theta*=1";
    if (t.xi) std::cout << ", xi=" << t.xi->get_str();
    std::cout << ")\n";
    std::cout << "agent  expected_mu  exact_mu  float_mu              expected_b  exact_b\n";

    bool exact_ok = true;
    double max_mu_diff = 0.0;
    double max_b_diff = 0.0;
    for (int i = 0; i < t.problem.n(); ++i) {
        auto u = static_cast<std::size_t>(i);
        exact_ok = exact_ok && exact_mu[u] == t.expected_mu[u] &&
                   exact_b[u] == t.expected_b[u];
        max_mu_diff = std::max(
            max_mu_diff,
            std::abs(float_mu(i) - opinion::exact::to_double(t.expected_mu[u])));
        max_b_diff = std::max(
            max_b_diff,
            std::abs(float_result.b(i) - opinion::exact::to_double(t.expected_b[u])));
        char line[160];
        std::snprintf(line, sizeof(line), "%5d %12s %9s %21s %11s %8s\n", i,
                      t.expected_mu[u].get_str().c_str(), exact_mu[u].get_str().c_str(),
                      opinion::format_full(float_mu(i)).c_str(),
                      t.expected_b[u].get_str().c_str(), exact_b[u].get_str().c_str());
        std::cout << line;
    }

    bool float_ok = max_mu_diff <= 1e-12 && max_b_diff <= 1e-12;
    std::cout << "exact: " << (exact_ok ? "all entries equal" : "MISMATCH") << "\n";
    std::cout << "float: max |mu diff| = " << opinion::format_full(max_mu_diff)
              << ", max |b diff| = " << opinion::format_full(max_b_diff)
              << " (tol 1e-12)\n";

    bool pass = exact_ok && float_ok;
    if (id == "5") {
        // the closed form and the full engine must tell the same story
        auto [mu_a, mu_b] = opinion::exact::homogeneous_steady_state(
            opinion::exact::ratio(1, 4), opinion::exact::ratio(1, 5),
            opinion::exact::ratio(1, 5), Rational(0), opinion::exact::ratio(1, 2),
            Rational(1));
        bool closed_ok = mu_a == t.expected_mu[0] && mu_b == t.expected_mu[1];
        opinion::GroupOpinions closed_float = opinion::steady_state_homophily(
            opinion::HomogeneousSociety(0.25, 0.2, 0.2, 0.0, 0.5));
        double path_gap = std::max(std::abs(closed_float.mu_a - float_mu(0)),
                                   std::abs(closed_float.mu_b - float_mu(1)));
        std::cout << "closed form vs engine: exact "
                  << (closed_ok ? "equal" : "MISMATCH") << ", float gap "
                  << opinion::format_full(path_gap) << "\n";
        pass = pass && closed_ok && path_gap <= 1e-12;
    }
    if (id == "bias") {
        // recomposition mu = b_tilde * theta + b_tilde_B * xi, exact; the
        // bias response is the masked solve (zero signal, unit bias)
        opinion::exact::RationalVector b_tilde = opinion::exact::weighted_bonacich(ex);
        opinion::exact::RationalVector b_tilde_biased = opinion::exact::steady_state_biased(
            ex, t.problem.labels, Rational(0), Rational(1), 1);
        bool recompose_ok = true;
        for (int i = 0; i < t.problem.n(); ++i) {
            auto u = static_cast<std::size_t>(i);
            recompose_ok = recompose_ok &&
                           b_tilde[u] + b_tilde_biased[u] * *t.xi == exact_mu[u];
        }
        std::cout << "recomposition: " << (recompose_ok ? "holds" : "MISMATCH") << "\n";
        pass = pass && recompose_ok;
    }

    std::cout << "table " << t.name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Opinion dynamics on signed two-group networks"};
    app.require_subcommand(1);

    SteadyOptions steady;
    CLI::App* cmd_steady = app.add_subcommand(
        "steady-state", "Solve the long-run opinion profile of a network file");
    cmd_steady->add_option("file", steady.file, "network JSON file")->required();
    cmd_steady->add_option("--theta", steady.theta, "signal value (default: from file)");
    cmd_steady->add_option("--xi", steady.xi, "bias on the signal of one group");
    cmd_steady->add_option("--biased-group", steady.biased_group,
                           "group receiving the bias (default 1)");
    cmd_steady->add_option("--format", steady.format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    SimulateOptions sim;
    CLI::App* cmd_sim = app.add_subcommand(
        "simulate", "Iterate the update map and export the trajectory");
    cmd_sim->add_option("file", sim.file, "network JSON file")->required();
    cmd_sim->add_option("--theta", sim.theta, "signal value (default: from file)");
    cmd_sim->add_option("--steps", sim.steps, "maximum update steps");
    cmd_sim->add_option("--tol", sim.tol, "sup-norm stopping tolerance");
    cmd_sim->add_option("--out", sim.out, "trajectory CSV path (default: stdout)");

    SweepOptions sweep;
    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "Sweep one homogeneous-society parameter and report statics");
    cmd_sweep->add_option("--param", sweep.param, "eta|wA|wB|hA|hB")
        ->required()
        ->check(CLI::IsMember({"eta", "wA", "wB", "hA", "hB"}));
    cmd_sweep->add_option("--from", sweep.from, "first value")->required();
    cmd_sweep->add_option("--to", sweep.to, "last value")->required();
    cmd_sweep->add_option("--points", sweep.points, "sample count (default 50)");
    cmd_sweep->add_option("--eta", sweep.eta, "share of group A (default 0.25)");
    cmd_sweep->add_option("--wA", sweep.w_a, "truth weight of group A (default 0.2)");
    cmd_sweep->add_option("--wB", sweep.w_b, "truth weight of group B (default 0.2)");
    cmd_sweep->add_option("--hA", sweep.h_a, "homophily of group A (default 0)");
    cmd_sweep->add_option("--hB", sweep.h_b, "homophily of group B (default 0)");
    cmd_sweep->add_option("--theta", sweep.theta, "signal value (default 1)");
    cmd_sweep->add_option("--out", sweep.out, "CSV path (default: stdout)");

    std::string table_id;
    CLI::App* cmd_repro = app.add_subcommand(
        "reproduce", "Check the bundled reference tables against both solvers");
    cmd_repro->add_option("--table", table_id, "1|2|3|4|5|bias")->required();

    std::string balance_file;
    CLI::App* cmd_balance =
        app.add_subcommand("balance", "Classify the signed structure of a network file");
    cmd_balance->add_option("file", balance_file, "network JSON file")->required();

    CentralityOptions centrality;
    CLI::App* cmd_centrality =
        app.add_subcommand("centrality", "Print both centrality vectors");
    cmd_centrality->add_option("file", centrality.file, "network JSON file")->required();
    cmd_centrality->add_option("--format", centrality.format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*cmd_steady) return run_steady_state(steady);
        if (*cmd_sim) return run_simulate(sim);
        if (*cmd_sweep) return run_sweep(sweep);
        if (*cmd_repro) return run_reproduce(table_id);
        if (*cmd_balance) return run_balance(balance_file);
        if (*cmd_centrality) return run_centrality(centrality);
    } catch (const opinion::SingularSystemError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const opinion::ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const opinion::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
