#include "netcap/network.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "netcap/setfn.hpp"

namespace netcap {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

// Decimal real or the h(<p>) binary-entropy shorthand. Locale-independent.
double parse_capacity(const std::string& tok, int line) {
    if (tok.size() > 3 && tok.rfind("h(", 0) == 0 && tok.back() == ')') {
        std::string inner = tok.substr(2, tok.size() - 3);
        size_t pos = 0;
        double p;
        try {
            p = std::stod(inner, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad h() argument '" + inner + "'", line);
        }
        if (pos != inner.size()) throw ParseError("bad h() argument '" + inner + "'", line);
        if (p < 0.0 || p > 1.0) throw ParseError("h() argument outside [0,1]", line);
        return binary_entropy(p);
    }
    size_t pos = 0;
    double v;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad number '" + tok + "'", line);
    }
    if (pos != tok.size()) throw ParseError("bad number '" + tok + "'", line);
    return v;
}

}  // namespace

Network Network::create(std::vector<std::string> nodes, std::vector<Edge> edges,
                        std::vector<std::string> sources, std::vector<std::string> sinks,
                        const NetworkOptions& opts) {
    Network net;
    net.nodes_ = std::move(nodes);
    for (int i = 0; i < static_cast<int>(net.nodes_.size()); ++i) {
        if (!net.index_.emplace(net.nodes_[i], i).second)
            throw ValidationError("duplicate node '" + net.nodes_[i] + "'");
    }
    net.edges_ = std::move(edges);
    for (const auto& name : sources) net.sources_.push_back(net.node_index(name));
    for (const auto& name : sinks) net.sinks_.push_back(net.node_index(name));

    std::set<int> src(net.sources_.begin(), net.sources_.end());
    std::set<int> snk(net.sinks_.begin(), net.sinks_.end());
    for (int s : net.sources_)
        if (snk.count(s))
            throw ValidationError("node '" + net.nodes_[s] + "' declared both source and sink");
    if (opts.require_roles) {
        if (net.sources_.empty()) throw ValidationError("no source nodes declared");
        if (net.sinks_.empty()) throw ValidationError("no sink nodes declared");
    }

    for (const Edge& e : net.edges_) {
        int t = net.node_index(e.tail);
        int h = net.node_index(e.head);
        if (t == h) throw ValidationError("self-loop on node '" + e.tail + "'");
        if (!(e.lower >= 0.0))
            throw ValidationError("negative lower capacity on edge " + e.tail + "->" + e.head);
        if (!(e.lower <= e.upper))
            throw ValidationError("lower > upper on edge " + e.tail + "->" + e.head);
        if (!opts.allow_edges_into_sources && src.count(h))
            throw ValidationError("edge into source node '" + e.head + "'");
        net.edge_tail_.push_back(t);
        net.edge_head_.push_back(h);
    }

    if (opts.require_acyclic) topological_order(net);  // throws on a cycle
    return net;
}

int Network::node_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown node '" + name + "'");
    return it->second;
}

std::optional<int> Network::find_node(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Network::is_source(int i) const {
    return std::find(sources_.begin(), sources_.end(), i) != sources_.end();
}

bool Network::is_sink(int i) const {
    return std::find(sinks_.begin(), sinks_.end(), i) != sinks_.end();
}

std::uint64_t Network::node_mask(const std::vector<std::string>& names) const {
    std::uint64_t m = 0;
    for (const auto& n : names) m |= std::uint64_t{1} << node_index(n);
    return m;
}

std::uint64_t Network::source_mask() const {
    std::uint64_t m = 0;
    for (int s : sources_) m |= std::uint64_t{1} << s;
    return m;
}

std::uint64_t Network::sink_mask() const {
    std::uint64_t m = 0;
    for (int t : sinks_) m |= std::uint64_t{1} << t;
    return m;
}

Network parse_network(const std::string& text, const NetworkOptions& opts) {
    std::vector<std::string> nodes, sources, sinks;
    std::vector<Edge> edges;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "node") {
            if (tok.size() < 2 || tok.size() > 3)
                throw ParseError("expected: node <name> [source|sink]", lineno);
            nodes.push_back(tok[1]);
            if (tok.size() == 3) {
                if (tok[2] == "source")
                    sources.push_back(tok[1]);
                else if (tok[2] == "sink")
                    sinks.push_back(tok[1]);
                else
                    throw ParseError("unknown role '" + tok[2] + "'", lineno);
            }
        } else if (tok[0] == "edge") {
            if (tok.size() != 5)
                throw ParseError("expected: edge <tail> <head> <lower> <upper>", lineno);
            edges.push_back(Edge{tok[1], tok[2], parse_capacity(tok[3], lineno),
                                 parse_capacity(tok[4], lineno)});
        } else if (tok[0] == "pair") {
            if (tok.size() != 3) throw ParseError("expected: pair <source> <sink>", lineno);
            pairs.emplace_back(tok[1], tok[2]);
        } else {
            throw ParseError("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    Network net = Network::create(std::move(nodes), std::move(edges), std::move(sources),
                                  std::move(sinks), opts);
    std::vector<std::pair<int, int>> ip;
    for (const auto& [s, t] : pairs) ip.emplace_back(net.node_index(s), net.node_index(t));
    net.set_pairings(std::move(ip));
    return net;
}

std::string render_network(const Network& net) {
    std::ostringstream os;
    for (int i = 0; i < net.node_count(); ++i) {
        os << "node " << net.node_name(i);
        if (net.is_source(i))
            os << " source";
        else if (net.is_sink(i))
            os << " sink";
        os << "\n";
    }
    for (const Edge& e : net.edges())
        os << "edge " << e.tail << " " << e.head << " " << fmt12(e.lower) << " "
           << fmt12(e.upper) << "\n";
    for (const auto& [s, t] : net.pairings())
        os << "pair " << net.node_name(s) << " " << net.node_name(t) << "\n";
    return os.str();
}

double cut_value(const Network& net, std::uint64_t m) {
    double v = 0.0;
    for (int e = 0; e < net.edge_count(); ++e) {
        bool tin = (m >> net.tail_index(e)) & 1;
        bool hin = (m >> net.head_index(e)) & 1;
        if (tin && !hin) v += net.edges()[e].upper;
    }
    return v;
}

double cut_value(const Network& net, const Cut& cut) {
    return cut_value(net, net.node_mask(cut.members));
}

double reverse_lower_value(const Network& net, std::uint64_t m) {
    double v = 0.0;
    for (int e = 0; e < net.edge_count(); ++e) {
        bool tin = (m >> net.tail_index(e)) & 1;
        bool hin = (m >> net.head_index(e)) & 1;
        if (!tin && hin) v += net.edges()[e].lower;
    }
    return v;
}

double reverse_lower_value(const Network& net, const Cut& cut) {
    return reverse_lower_value(net, net.node_mask(cut.members));
}

std::vector<int> topological_order(const Network& net) {
    int n = net.node_count();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < net.edge_count(); ++e) {
        out[net.tail_index(e)].push_back(net.head_index(e));
        ++indeg[net.head_index(e)];
    }
    // min-heap on node name keeps the order deterministic
    auto cmp = [&](int a, int b) { return net.node_name(a) > net.node_name(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : out[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) == n) return order;

    // Locate one cycle among the leftover nodes for the error message.
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> stack, path;
    std::string cycle;
    std::function<bool(int)> dfs = [&](int u) {
        state[u] = 1;
        path.push_back(u);
        for (int v : out[u]) {
            if (state[v] == 1) {
                auto it = std::find(path.begin(), path.end(), v);
                for (; it != path.end(); ++it) cycle += net.node_name(*it) + " -> ";
                cycle += net.node_name(v);
                return true;
            }
            if (state[v] == 0 && dfs(v)) return true;
        }
        state[u] = 2;
        path.pop_back();
        return false;
    };
    for (int i = 0; i < n && cycle.empty(); ++i)
        if (state[i] == 0 && indeg[i] > 0) dfs(i);
    throw ValidationError("cycle found: " + cycle);
}

Cut cut_from_mask(const Network& net, std::uint64_t mask) {
    Cut c;
    for (int i = 0; i < net.node_count(); ++i)
        if ((mask >> i) & 1) c.members.push_back(net.node_name(i));
    return c;
}

}  // namespace netcap
