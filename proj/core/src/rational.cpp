#include "opinion/rational.hpp"

#include <sstream>

namespace opinion::exact {

namespace {

void require_exact_size(std::size_t n) {
    if (n > static_cast<std::size_t>(kMaxExactAgents)) {
        std::ostringstream msg;
        msg << "exact mode supports at most " << kMaxExactAgents << " agents, got " << n;
        throw ValidationError(msg.str());
    }
}

RationalMatrix identity_minus(const RationalMatrix& w) {
    const std::size_t n = w.size();
    RationalMatrix a(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = (i == j ? Rational(1) : Rational(0)) - w[i][j];
        }
    }
    return a;
}

}  // namespace

Rational ratio(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational from_double(double x) {
    return Rational(x);  // mpq_class stores the dyadic value exactly
}

double to_double(const Rational& q) { return q.get_d(); }

RationalVector solve(RationalMatrix a, RationalVector rhs) {
    const std::size_t n = a.size();
    require_exact_size(n);
    if (rhs.size() != n) throw DimensionError("rhs length does not match the matrix");
    for (const auto& row : a) {
        if (row.size() != n) throw DimensionError("matrix is not square");
    }

    // Forward elimination with first-nonzero pivoting (exact, so magnitude
    // does not matter for stability).
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) {
            throw SingularSystemError("exact solve: matrix is singular");
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational factor = a[row][col] / a[col][col];
            a[row][col] = 0;
            for (std::size_t j = col + 1; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
            }
            rhs[row] -= factor * rhs[col];
        }
    }

    RationalVector x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    return x;
}

Exchange build_exchange(const Problem& p) {
    const std::size_t n = p.truth_weights.size();
    if (p.labels.size() != n || p.attention.size() != n) {
        throw DimensionError("problem fields have inconsistent sizes");
    }
    Rational truth_scale = Rational(1) - p.alpha - p.beta;
    Exchange x;
    x.weights.assign(n, RationalVector(n, Rational(0)));
    x.truth_weights.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x.weights[i][j] = (p.labels[i] == p.labels[j] ? p.alpha : p.beta) *
                              p.attention[i][j];
        }
        x.truth_weights[i] = truth_scale * p.truth_weights[i];
    }
    return x;
}

RationalVector steady_state(const Exchange& x, const Rational& theta_star) {
    RationalVector injection = x.truth_weights;
    for (auto& v : injection) v *= theta_star;
    return solve(identity_minus(x.weights), std::move(injection));
}

RationalVector steady_state_biased(const Exchange& x, const std::vector<int>& labels,
                                   const Rational& theta_star, const Rational& xi,
                                   int biased_group) {
    const std::size_t n = x.truth_weights.size();
    if (labels.size() != n) throw DimensionError("labels length does not match");
    RationalVector injection(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational signal = theta_star;
        if (labels[i] == biased_group) signal += xi;
        injection[i] = x.truth_weights[i] * signal;
    }
    return solve(identity_minus(x.weights), std::move(injection));
}

RationalVector weighted_bonacich(const Exchange& x) {
    return solve(identity_minus(x.weights), x.truth_weights);
}

RationalVector bonacich_unsigned(const Exchange& x) {
    const std::size_t n = x.weights.size();
    RationalMatrix abs_w(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            abs_w[i][j] = abs(x.weights[i][j]);
        }
    }
    return solve(identity_minus(abs_w), RationalVector(n, Rational(1)));
}

RationalVector bonacich(const Problem& p) {
    return solve(identity_minus(p.attention),
                 RationalVector(p.attention.size(), Rational(1)));
}

Problem complete_network(const std::vector<int>& group_sizes) {
    int n = 0;
    std::vector<int> labels;
    for (std::size_t g = 0; g < group_sizes.size(); ++g) {
        if (group_sizes[g] < 1) throw ValidationError("every group size must be >= 1");
        n += group_sizes[g];
        labels.insert(labels.end(), static_cast<std::size_t>(group_sizes[g]),
                      static_cast<int>(g));
    }
    if (n < 2) throw ValidationError("complete network needs at least 2 agents");
    require_exact_size(static_cast<std::size_t>(n));

    Rational share = ratio(1, n + 1);
    Problem p;
    p.attention.assign(static_cast<std::size_t>(n),
                       RationalVector(static_cast<std::size_t>(n), share));
    p.truth_weights.assign(static_cast<std::size_t>(n), share);
    p.labels = std::move(labels);
    return p;
}

Problem ring_network(const std::vector<int>& ring_labels) {
    const int n = static_cast<int>(ring_labels.size());
    if (n < 3) throw ValidationError("ring network needs at least 3 agents");
    require_exact_size(static_cast<std::size_t>(n));

    Rational share = ratio(1, 4);
    Problem p;
    p.attention.assign(static_cast<std::size_t>(n),
                       RationalVector(static_cast<std::size_t>(n), Rational(0)));
    p.truth_weights.assign(static_cast<std::size_t>(n), share);
    p.labels = ring_labels;
    for (int i = 0; i < n; ++i) {
        auto u = static_cast<std::size_t>(i);
        p.attention[u][u] = share;
        p.attention[u][static_cast<std::size_t>((i + 1) % n)] = share;
        p.attention[u][static_cast<std::size_t>((i + n - 1) % n)] = share;
    }
    return p;
}

Problem homogeneous_network(const Rational& eta, const Rational& w_a,
                            const Rational& w_b, const Rational& h_a,
                            const Rational& h_b, int n) {
    if (n < 2) throw ValidationError("homogeneous network needs at least 2 agents");
    require_exact_size(static_cast<std::size_t>(n));
    Rational size_a = eta * n;
    if (size_a.get_den() != 1) {
        throw ValidationError("eta * n must be an integer group size");
    }
    long n_a = size_a.get_num().get_si();
    long n_b = n - n_a;
    if (n_a < 1 || n_b < 1) throw ValidationError("both groups need at least one agent");

    Rational rho_a = h_a + (Rational(1) - h_a) * eta;
    Rational rho_b = h_b + (Rational(1) - h_b) * (Rational(1) - eta);

    Problem p;
    p.attention.assign(static_cast<std::size_t>(n),
                       RationalVector(static_cast<std::size_t>(n), Rational(0)));
    p.truth_weights.assign(static_cast<std::size_t>(n), Rational(0));
    p.labels.assign(static_cast<std::size_t>(n), 1);
    for (long i = 0; i < n_a; ++i) p.labels[static_cast<std::size_t>(i)] = 0;

    for (int i = 0; i < n; ++i) {
        bool in_a = i < n_a;
        Rational w_own = in_a ? w_a : w_b;
        Rational rho = in_a ? rho_a : rho_b;
        Rational in_share = rho * (Rational(1) - w_own) / Rational(in_a ? n_a : n_b);
        Rational cross_share =
            (Rational(1) - rho) * (Rational(1) - w_own) / Rational(in_a ? n_b : n_a);
        for (int j = 0; j < n; ++j) {
            bool j_in_a = j < n_a;
            p.attention[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (in_a == j_in_a) ? in_share : cross_share;
        }
        p.truth_weights[static_cast<std::size_t>(i)] = w_own;
    }
    return p;
}

std::pair<Rational, Rational> homogeneous_steady_state(const Rational& eta,
                                                       const Rational& w_a,
                                                       const Rational& w_b,
                                                       const Rational& h_a,
                                                       const Rational& h_b,
                                                       const Rational& theta_star) {
    Rational rho_a = h_a + (Rational(1) - h_a) * eta;
    Rational rho_b = h_b + (Rational(1) - h_b) * (Rational(1) - eta);
    RationalMatrix m{
        {Rational(1) - rho_a * (Rational(1) - w_a), (Rational(1) - rho_a) * (Rational(1) - w_a)},
        {(Rational(1) - rho_b) * (Rational(1) - w_b), Rational(1) - rho_b * (Rational(1) - w_b)}};
    RationalVector rhs{w_a * theta_star, w_b * theta_star};
    RationalVector mu = solve(std::move(m), std::move(rhs));
    return {mu[0], mu[1]};
}

}  // namespace opinion::exact
