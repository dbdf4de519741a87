#include "netcap/flows.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace netcap {

namespace {

constexpr double kResidualEps = 1e-12;

// Dinic on real capacities; the phase count is bounded by the node count, so
// termination does not depend on capacities being integral.
struct Dinic {
    struct Arc {
        int to;
        double cap;
        int rev;
        int orig_edge;  // index into Network::edges(), -1 for auxiliary arcs
    };
    std::vector<std::vector<Arc>> g;
    std::vector<int> level, it;

    explicit Dinic(int n) : g(n), level(n), it(n) {}

    void add_arc(int u, int v, double cap, int orig = -1) {
        g[u].push_back({v, cap, static_cast<int>(g[v].size()), orig});
        g[v].push_back({u, 0.0, static_cast<int>(g[u].size()) - 1, -1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : g[u])
                if (a.cap > kResidualEps && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    double dfs(int u, int t, double f) {
        if (u == t) return f;
        for (int& i = it[u]; i < static_cast<int>(g[u].size()); ++i) {
            Arc& a = g[u][i];
            if (a.cap > kResidualEps && level[a.to] == level[u] + 1) {
                double d = dfs(a.to, t, std::min(f, a.cap));
                if (d > kResidualEps) {
                    a.cap -= d;
                    g[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0.0;
    }

    double run(int s, int t) {
        double total = 0.0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            for (;;) {
                double f = dfs(s, t, std::numeric_limits<double>::infinity());
                if (f <= kResidualEps) break;
                total += f;
            }
        }
        return total;
    }

    std::uint64_t reachable(int s) const {
        std::uint64_t seen = 0;
        std::vector<int> stack = {s};
        std::vector<bool> vis(g.size(), false);
        vis[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u < 64) seen |= std::uint64_t{1} << u;
            for (const Arc& a : g[u])
                if (a.cap > kResidualEps && !vis[a.to]) {
                    vis[a.to] = true;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }
};

}  // namespace

MaxFlowResult max_flow(const Network& net, std::uint64_t source_mask, int sink) {
    int n = net.node_count();
    if (sink < 0 || sink >= n) throw ValidationError("sink index out of range");
    if ((source_mask >> sink) & 1) throw ValidationError("sink is a member of the source set");
    if (source_mask == 0) throw ValidationError("empty source set");

    double total_upper = 0.0;
    for (const Edge& e : net.edges()) total_upper += e.upper;
    const double sentinel = 1.0 + total_upper;

    Dinic d(n + 1);
    const int super = n;
    for (int e = 0; e < net.edge_count(); ++e)
        d.add_arc(net.tail_index(e), net.head_index(e), net.edges()[e].upper, e);
    for (int v = 0; v < n; ++v)
        if ((source_mask >> v) & 1) d.add_arc(super, v, sentinel);

    MaxFlowResult res;
    res.value = d.run(super, sink);
    res.flow.edge_flow.assign(net.edge_count(), 0.0);
    for (int u = 0; u < n; ++u)
        for (const Dinic::Arc& a : d.g[u])
            if (a.orig_edge >= 0)
                res.flow.edge_flow[a.orig_edge] = net.edges()[a.orig_edge].upper - a.cap;
    std::uint64_t reach = d.reachable(super);
    res.min_cut_mask = reach & ((std::uint64_t{1} << n) - 1);
    res.min_cut = cut_from_mask(net, res.min_cut_mask);
    return res;
}

MaxFlowResult max_flow(const Network& net, const std::vector<std::string>& source_set,
                       const std::string& sink) {
    return max_flow(net, net.node_mask(source_set), net.node_index(sink));
}

HoffmanResult hoffman_feasible(const Network& net, double tol) {
    int n = net.node_count();
    if (n > 62) throw GuardError("hoffman_feasible: node count guard exceeded");

    // excess(v) = sum of lower bounds in minus lower bounds out
    std::vector<double> excess(n, 0.0);
    for (int e = 0; e < net.edge_count(); ++e) {
        excess[net.head_index(e)] += net.edges()[e].lower;
        excess[net.tail_index(e)] -= net.edges()[e].lower;
    }

    Dinic d(n + 2);
    const int super_s = n, super_t = n + 1;
    for (int e = 0; e < net.edge_count(); ++e)
        d.add_arc(net.tail_index(e), net.head_index(e),
                  net.edges()[e].upper - net.edges()[e].lower, e);
    double demand = 0.0;
    for (int v = 0; v < n; ++v) {
        if (excess[v] > 0) {
            d.add_arc(super_s, v, excess[v]);
            demand += excess[v];
        } else if (excess[v] < 0) {
            d.add_arc(v, super_t, -excess[v]);
        }
    }

    double pushed = d.run(super_s, super_t);
    HoffmanResult res;
    if (pushed >= demand - tol) {
        res.feasible = true;
        Flow g;
        g.edge_flow.assign(net.edge_count(), 0.0);
        for (int u = 0; u < n; ++u)
            for (const Dinic::Arc& a : d.g[u])
                if (a.orig_edge >= 0) {
                    const Edge& e = net.edges()[a.orig_edge];
                    g.edge_flow[a.orig_edge] = e.lower + ((e.upper - e.lower) - a.cap);
                }
        res.circulation = std::move(g);
    } else {
        res.feasible = false;
        // The residual-reachable side of the super source, restricted to the
        // original nodes, violates c(M,Mbar) >= d(Mbar,M).
        std::uint64_t reach = d.reachable(super_s);
        res.violating_mask = reach & ((std::uint64_t{1} << n) - 1);
        res.violating_cut = cut_from_mask(net, res.violating_mask);
    }
    return res;
}

HoffmanResult cut_enumeration_oracle(const Network& net, double tol) {
    int n = net.node_count();
    if (n > 24) throw GuardError("cut_enumeration_oracle: node count guard exceeded (|V| <= 24)");
    HoffmanResult res;
    res.feasible = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (cut_value(net, m) < reverse_lower_value(net, m) - tol) {
            res.feasible = false;
            res.violating_mask = m;
            res.violating_cut = cut_from_mask(net, m);
            return res;
        }
    }
    return res;
}

}  // namespace netcap
