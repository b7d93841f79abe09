#include "opinion/balance.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace opinion {

namespace {

struct Edge {
    int to;
    bool negative;
};

// Union-find over agents, used for the positive-subgraph clustering.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[static_cast<std::size_t>(a)] != a) {
            parent_[static_cast<std::size_t>(a)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
            a = parent_[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

// Relabels arbitrary cluster ids to 0..k-1 in order of first appearance.
GroupAssignment compact_labels(const std::vector<int>& raw) {
    std::vector<int> labels(raw.size(), -1);
    std::vector<int> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), raw[i]);
        if (it == seen.end()) {
            labels[i] = static_cast<int>(seen.size());
            seen.push_back(raw[i]);
        } else {
            labels[i] = static_cast<int>(it - seen.begin());
        }
    }
    return GroupAssignment(labels);
}

// Path from `node` to the BFS root, inclusive.
std::vector<int> chain_to_root(int node, const std::vector<int>& parent) {
    std::vector<int> chain;
    for (int v = node; v != -1; v = parent[static_cast<std::size_t>(v)]) {
        chain.push_back(v);
    }
    return chain;
}

// Cycle through the tree paths of u and v plus the closing edge (u,v).
std::vector<int> tree_cycle(int u, int v, const std::vector<int>& parent) {
    std::vector<int> up = chain_to_root(u, parent);
    std::vector<int> vp = chain_to_root(v, parent);
    // Trim the shared tail above the lowest common ancestor.
    while (up.size() > 1 && vp.size() > 1 && up[up.size() - 1] == vp[vp.size() - 1] &&
           up[up.size() - 2] == vp[vp.size() - 2]) {
        up.pop_back();
        vp.pop_back();
    }
    // up ends at the LCA; append v's path (excluding the LCA) in reverse.
    std::vector<int> cycle = up;
    for (std::size_t i = vp.size() - 1; i-- > 0;) {
        cycle.push_back(vp[i]);
    }
    return cycle;
}

}  // namespace

BalanceReport check_structural_balance(const OpinionExchangeNetwork& x) {
    const int n = x.size();
    const Matrix& w = x.weights();

    BalanceReport report;

    // Symmetrize the sign pattern; conflicting directions or a negative
    // self-loop defeat both balance notions outright.
    std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (w(i, i) < 0.0) {
            report.witness = {i};
            return report;
        }
        for (int j = i + 1; j < n; ++j) {
            bool pos = w(i, j) > 0.0 || w(j, i) > 0.0;
            bool neg = w(i, j) < 0.0 || w(j, i) < 0.0;
            if (pos && neg) {
                report.witness = {i, j};
                return report;
            }
            if (!pos && !neg) continue;
            adj[static_cast<std::size_t>(i)].push_back({j, neg});
            adj[static_cast<std::size_t>(j)].push_back({i, neg});
        }
    }

    // Weak balance: positive components must not contain a negative edge.
    DisjointSets positive_clusters(n);
    for (int i = 0; i < n; ++i) {
        for (const Edge& e : adj[static_cast<std::size_t>(i)]) {
            if (!e.negative) positive_clusters.unite(i, e.to);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (const Edge& e : adj[static_cast<std::size_t>(i)]) {
            if (e.negative && i < e.to &&
                positive_clusters.find(i) == positive_clusters.find(e.to)) {
                // Close a positive path from i to e.to with the negative edge:
                // a cycle with exactly one negative edge.
                std::vector<int> parent(static_cast<std::size_t>(n), -1);
                std::vector<char> visited(static_cast<std::size_t>(n), 0);
                std::deque<int> queue{i};
                visited[static_cast<std::size_t>(i)] = 1;
                while (!queue.empty()) {
                    int u = queue.front();
                    queue.pop_front();
                    if (u == e.to) break;
                    for (const Edge& f : adj[static_cast<std::size_t>(u)]) {
                        if (!f.negative && !visited[static_cast<std::size_t>(f.to)]) {
                            visited[static_cast<std::size_t>(f.to)] = 1;
                            parent[static_cast<std::size_t>(f.to)] = u;
                            queue.push_back(f.to);
                        }
                    }
                }
                std::vector<int> path = chain_to_root(e.to, parent);
                std::reverse(path.begin(), path.end());  // i ... e.to
                report.witness = path;
                report.weakly_balanced = false;
                report.strongly_balanced = false;
                return report;
            }
        }
    }
    report.weakly_balanced = true;

    // Strong balance: 2-color across sign-flipping edges.
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    bool strong = true;
    std::vector<int> odd_cycle;
    for (int start = 0; start < n && strong; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty() && strong) {
            int u = queue.front();
            queue.pop_front();
            for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
                int want = color[static_cast<std::size_t>(u)] ^ (e.negative ? 1 : 0);
                if (color[static_cast<std::size_t>(e.to)] == -1) {
                    color[static_cast<std::size_t>(e.to)] = want;
                    parent[static_cast<std::size_t>(e.to)] = u;
                    queue.push_back(e.to);
                } else if (color[static_cast<std::size_t>(e.to)] != want) {
                    odd_cycle = tree_cycle(u, e.to, parent);
                    strong = false;
                    break;
                }
            }
        }
    }

    report.strongly_balanced = strong;
    if (strong) {
        report.recovered_partition = compact_labels(color);
    } else {
        report.witness = odd_cycle;
        std::vector<int> clusters(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            clusters[static_cast<std::size_t>(i)] = positive_clusters.find(i);
        }
        report.recovered_partition = compact_labels(clusters);
    }
    return report;
}

}  // namespace opinion
