#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netcap/network.hpp"

namespace netcap {

struct Flow {
    std::vector<double> edge_flow;  // aligned with Network::edges()
};

struct MaxFlowResult {
    double value = 0.0;
    Flow flow;
    Cut min_cut;
    std::uint64_t min_cut_mask = 0;
};

// Min cut over upper capacities between a merged source set and one sink.
// Multiple sources are merged through a virtual super-source whose edge
// capacity is 1 + sum of all upper capacities. Lower bounds are ignored.
MaxFlowResult max_flow(const Network& net, const std::vector<std::string>& source_set,
                       const std::string& sink);
MaxFlowResult max_flow(const Network& net, std::uint64_t source_mask, int sink);

struct HoffmanResult {
    bool feasible = false;
    std::optional<Flow> circulation;   // witness when feasible
    std::optional<Cut> violating_cut;  // cut M with c(M,Mbar) < d(Mbar,M) otherwise
    std::uint64_t violating_mask = 0;
};

// Circulation feasibility with lower bounds, by reduction to a single
// max-flow on the excess/deficit-transformed graph.
HoffmanResult hoffman_feasible(const Network& net, double tol = kDefaultTol);

// Exhaustive-subset cross-check of the same condition; |V| <= 24.
HoffmanResult cut_enumeration_oracle(const Network& net, double tol = kDefaultTol);

}  // namespace netcap
