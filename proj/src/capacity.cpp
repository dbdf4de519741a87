#include "netcap/capacity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "netcap/flows.hpp"

namespace netcap {

double rho_t(const Network& net, std::uint32_t source_subset, int sink) {
    if (source_subset == 0) throw ValidationError("rho_t: empty source subset");
    if (!net.is_sink(sink))
        throw ValidationError("rho_t: node '" + net.node_name(sink) + "' is not a sink");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < net.sources().size(); ++i)
        if ((source_subset >> i) & 1) mask |= std::uint64_t{1} << net.sources()[i];
    return max_flow(net, mask, sink).value;
}

double rho_t(const Network& net, const std::vector<std::string>& subset,
             const std::string& sink) {
    std::uint32_t s = 0;
    for (const auto& name : subset) {
        int idx = net.node_index(name);
        bool found = false;
        for (std::size_t i = 0; i < net.sources().size(); ++i)
            if (net.sources()[i] == idx) {
                s |= std::uint32_t{1} << i;
                found = true;
            }
        if (!found) throw ValidationError("rho_t: '" + name + "' is not a source");
    }
    return rho_t(net, s, net.node_index(sink));
}

double rho_N(const Network& net, std::uint32_t source_subset) {
    if (source_subset == 0) throw ValidationError("rho_N: empty source subset");
    double best = std::numeric_limits<double>::infinity();
    for (int t : net.sinks()) best = std::min(best, rho_t(net, source_subset, t));
    return best;
}

double rho_N(const Network& net, const std::vector<std::string>& subset) {
    double best = std::numeric_limits<double>::infinity();
    for (int t : net.sinks()) best = std::min(best, rho_t(net, subset, net.node_name(t)));
    return best;
}

SetFunction capacity_setfunction(const Network& net, const std::optional<std::string>& sink) {
    int p = static_cast<int>(net.sources().size());
    if (p > 12) throw GuardError("capacity_setfunction: source set guard exceeded (p <= 12)");
    SetFunction f;
    for (int s : net.sources()) f.ground.push_back(net.node_name(s));
    f.values.assign(std::size_t{1} << p, 0.0);
    int t = sink ? net.node_index(*sink) : -1;
    for (std::uint32_t s = 1; s < f.values.size(); ++s)
        f.values[s] = t >= 0 ? rho_t(net, s, t) : rho_N(net, s);
    return f;
}

void ChannelMatrix::validate(double tol) const {
    if (inputs <= 0 || outputs <= 0) throw ValidationError("channel: empty matrix");
    if (w.size() != static_cast<std::size_t>(inputs) * outputs)
        throw ValidationError("channel: matrix size mismatch");
    for (int x = 0; x < inputs; ++x) {
        double sum = 0.0;
        for (int y = 0; y < outputs; ++y) {
            if (at(x, y) < 0.0) throw ValidationError("channel: negative transition probability");
            sum += at(x, y);
        }
        if (std::abs(sum - 1.0) > std::max(tol, 1e-9))
            throw ValidationError("channel: row " + std::to_string(x) + " sums to " + fmt12(sum));
    }
}

ChannelMatrix parse_channel(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    ChannelMatrix m;
    int rows_read = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) {
            if (t[0] == '#') break;
            tok.push_back(t);
        }
        if (tok.empty()) continue;
        if (tok[0] == "channel") {
            if (tok.size() != 3) throw ParseError("expected: channel <rows> <cols>", lineno);
            m.inputs = std::stoi(tok[1]);
            m.outputs = std::stoi(tok[2]);
            if (m.inputs <= 0 || m.outputs <= 0)
                throw ParseError("channel dimensions must be positive", lineno);
            m.w.assign(static_cast<std::size_t>(m.inputs) * m.outputs, 0.0);
        } else {
            if (m.inputs == 0) throw ParseError("row before channel header", lineno);
            if (rows_read >= m.inputs) throw ParseError("too many rows", lineno);
            if (static_cast<int>(tok.size()) != m.outputs)
                throw ParseError("expected " + std::to_string(m.outputs) + " probabilities",
                                 lineno);
            for (int y = 0; y < m.outputs; ++y) {
                try {
                    m.w[static_cast<std::size_t>(rows_read) * m.outputs + y] = std::stod(tok[y]);
                } catch (const std::exception&) {
                    throw ParseError("bad probability '" + tok[y] + "'", lineno);
                }
            }
            ++rows_read;
        }
    }
    if (m.inputs == 0) throw ParseError("missing channel header", lineno);
    if (rows_read != m.inputs) throw ParseError("missing matrix rows", lineno);
    m.validate();
    return m;
}

DmcResult dmc_capacity(const ChannelMatrix& w, double tol) {
    w.validate();
    const int nx = w.inputs, ny = w.outputs;
    DmcResult res;
    res.input_dist.assign(nx, 1.0 / nx);
    std::vector<double> q(ny), d(nx);
    const int max_iters = 200000;
    for (int it = 1; it <= max_iters; ++it) {
        res.iterations = it;
        for (int y = 0; y < ny; ++y) {
            q[y] = 0.0;
            for (int x = 0; x < nx; ++x) q[y] += res.input_dist[x] * w.at(x, y);
        }
        // d[x] = D(W(.|x) || q), the per-input divergence
        double lower = 0.0, upper = -std::numeric_limits<double>::infinity();
        for (int x = 0; x < nx; ++x) {
            d[x] = 0.0;
            for (int y = 0; y < ny; ++y) {
                double p = w.at(x, y);
                if (p > 0.0) d[x] += p * std::log2(p / q[y]);
            }
            lower += res.input_dist[x] * d[x];
            upper = std::max(upper, d[x]);
        }
        if (upper - lower < tol) {
            res.capacity = lower;
            return res;
        }
        // Blahut update r_x <- r_x 2^{d_x} / Z, deterministic order.
        double z = 0.0;
        for (int x = 0; x < nx; ++x) {
            res.input_dist[x] *= std::exp2(d[x]);
            z += res.input_dist[x];
        }
        for (int x = 0; x < nx; ++x) res.input_dist[x] /= z;
    }
    throw NetcapError("dmc_capacity: iteration limit exceeded before reaching tolerance");
}

}  // namespace netcap
