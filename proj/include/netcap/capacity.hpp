#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netcap/network.hpp"
#include "netcap/setfn.hpp"

namespace netcap {

// rho_t(S): min cut separating the source subset S from sink t, over upper
// capacities; equals the merged-source max flow by duality.
double rho_t(const Network& net, const std::vector<std::string>& subset,
             const std::string& sink);
double rho_t(const Network& net, std::uint32_t source_subset, int sink);

// rho_N(S) = min over sinks t of rho_t(S).
double rho_N(const Network& net, const std::vector<std::string>& subset);
double rho_N(const Network& net, std::uint32_t source_subset);

// Tabulation over all subsets of the source set; sink == nullopt means rho_N.
// value({}) := 0.
SetFunction capacity_setfunction(const Network& net,
                                 const std::optional<std::string>& sink = std::nullopt);

struct ChannelMatrix {
    int inputs = 0, outputs = 0;
    std::vector<double> w;  // row-major, w[x * outputs + y]
    double at(int x, int y) const { return w[static_cast<std::size_t>(x) * outputs + y]; }
    void validate(double tol = kDefaultTol) const;
};

ChannelMatrix parse_channel(const std::string& text);

struct DmcResult {
    double capacity = 0.0;       // bits per symbol
    std::vector<double> input_dist;
    int iterations = 0;
};

// Alternating maximization from the uniform input distribution, iterated
// until the standard upper and lower capacity bounds differ by < tol.
DmcResult dmc_capacity(const ChannelMatrix& w, double tol = 1e-9);

}  // namespace netcap
