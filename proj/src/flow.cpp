#include "resfit/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace resfit {

FlowNetwork::FlowNetwork(int num_nodes) : head_(num_nodes) {}

int FlowNetwork::add_arc(int u, int v, double cap, double rev_cap) {
    if (cap < 0 || rev_cap < 0) throw std::invalid_argument("negative capacity");
    int id = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    orig_cap_.push_back(cap);
    head_[u].push_back(id);
    to_.push_back(u);
    cap_.push_back(rev_cap);
    orig_cap_.push_back(rev_cap);
    head_[v].push_back(id + 1);
    return id;
}

bool FlowNetwork::bfs_levels(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int a : head_[u]) {
            if (cap_[a] > eps_ && level_[to_[a]] < 0) {
                level_[to_[a]] = level_[u] + 1;
                q.push(to_[a]);
            }
        }
    }
    return level_[t] >= 0;
}

double FlowNetwork::dfs_push(int u, int t, double limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter_[u]; i < head_[u].size(); ++i) {
        int a = head_[u][i];
        int v = to_[a];
        if (cap_[a] > eps_ && level_[v] == level_[u] + 1) {
            double pushed = dfs_push(v, t, std::min(limit, cap_[a]));
            if (pushed > 0) {
                cap_[a] -= pushed;
                cap_[a ^ 1] += pushed;
                return pushed;
            }
        }
    }
    level_[u] = -1;  // dead end within this phase
    return 0;
}

CutResult FlowNetwork::max_flow_min_cut(int s, int t) {
    if (s == t) throw std::invalid_argument("source equals sink");
    // scale the saturation threshold to the largest capacity in the network
    double max_cap = 0;
    for (double c : orig_cap_) max_cap = std::max(max_cap, c);
    eps_ = 1e-12 * std::max(1.0, max_cap);

    double total = 0;
    while (bfs_levels(s, t)) {
        iter_.assign(head_.size(), 0);
        while (true) {
            double pushed = dfs_push(s, t, std::numeric_limits<double>::infinity());
            if (pushed <= 0) break;
            total += pushed;
        }
    }

    CutResult res;
    res.flow = total;
    int nn = num_nodes();

    // minimal source side: residual reachability from s
    std::vector<char> reach(nn, 0);
    {
        std::queue<int> q;
        reach[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : head_[u]) {
                if (cap_[a] > eps_ && !reach[to_[a]]) {
                    reach[to_[a]] = 1;
                    q.push(to_[a]);
                }
            }
        }
    }
    // maximal source side: complement of the set that can still reach t
    std::vector<char> to_t(nn, 0);
    {
        std::queue<int> q;
        to_t[t] = 1;
        q.push(t);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : head_[u]) {
                // arc (a^1) points into u; traverse backwards along residual arcs
                int v = to_[a];
                if (!to_t[v] && cap_[a ^ 1] > eps_) {
                    to_t[v] = 1;
                    q.push(v);
                }
            }
        }
    }

    res.in_source_side.assign(nn, 0);
    res.in_source_side_max.assign(nn, 0);
    for (int u = 0; u < nn; ++u) {
        if (u == s || u == t) continue;
        res.in_source_side[u] = reach[u];
        res.in_source_side_max[u] = !to_t[u];
    }

    // report the exact capacity crossing the minimal cut
    double crossing = 0;
    for (int u = 0; u < nn; ++u) {
        if (!reach[u]) continue;
        for (int a : head_[u]) {
            if (!reach[to_[a]]) crossing += orig_cap_[a];
        }
    }
    res.value = crossing;
    return res;
}

LocalNetwork build_local_network(const Graph& g, const NodeSet& r, double alpha, double eps) {
    if (r.empty()) throw std::invalid_argument("reference set R must be nonempty");
    if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
    auto in_r = r.flags(g.n());
    LocalNetwork ln{FlowNetwork(0), -1, -1, {}, {}};

    if (std::isinf(eps)) {
        int k = static_cast<int>(r.size());
        ln.net = FlowNetwork(k + 2);
        ln.s = k;
        ln.t = k + 1;
        ln.index_of.assign(g.n(), -1);
        ln.node_of = r.ids;
        for (int i = 0; i < k; ++i) ln.index_of[r.ids[i]] = i;
        for (int i = 0; i < k; ++i) {
            NodeId u = r.ids[i];
            ln.net.add_arc(ln.s, i, alpha * g.degree(u));
            std::int64_t boundary = 0;
            for (NodeId v : g.neighbors(u)) {
                if (!in_r[v]) {
                    ++boundary;
                } else if (u < v) {
                    ln.net.add_arc(i, ln.index_of[v], 1.0, 1.0);
                }
            }
            if (boundary > 0) ln.net.add_arc(i, ln.t, static_cast<double>(boundary));
        }
        return ln;
    }

    if (eps < 0) throw std::invalid_argument("eps must be nonnegative or +inf");
    int n = g.n();
    ln.net = FlowNetwork(n + 2);
    ln.s = n;
    ln.t = n + 1;
    ln.index_of.resize(n);
    ln.node_of.resize(n);
    for (NodeId u = 0; u < n; ++u) {
        ln.index_of[u] = u;
        ln.node_of[u] = u;
    }
    for (NodeId u = 0; u < n; ++u) {
        if (in_r[u]) {
            ln.net.add_arc(ln.s, u, alpha * g.degree(u));
        } else if (eps > 0) {
            ln.net.add_arc(u, ln.t, alpha * eps * g.degree(u));
        }
        for (NodeId v : g.neighbors(u))
            if (u < v) ln.net.add_arc(u, v, 1.0, 1.0);
    }
    return ln;
}

}  // namespace resfit
