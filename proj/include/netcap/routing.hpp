#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcap/network.hpp"
#include "netcap/setfn.hpp"

namespace netcap {

enum class RoutingKind { MultipleAccess, Broadcast, Interference };

// A return edge pinned to [R_k, R_k]; the rate is symbolic, not a number.
struct FictEdge {
    int tail = 0, head = 0;
    int rate_index = 0;
};

struct ModifiedNetwork {
    Network base;  // the real edges only
    std::vector<FictEdge> fict;
    std::vector<std::string> rate_names;
};

// MA: edges t1 -> s_i, one rate per source. BC: edges t_j -> s1, one rate per
// sink. Interference: edges t_i -> s_i along the given bijective pairing.
ModifiedNetwork modified_network(
    const Network& net, RoutingKind kind,
    const std::vector<std::pair<std::string, std::string>>& pairing = {});

// Instantiates the fictitious edges at concrete rates, yielding an ordinary
// (cyclic) network suitable for circulation feasibility checks.
Network instantiate(const ModifiedNetwork& ns, const RatePoint& rates);

// sum_i coeff_i * R_i <= bound, coefficients in {-1, 0, +1}.
struct SymbolicInequality {
    std::vector<int> coeff;
    double bound = 0.0;
    bool operator==(const SymbolicInequality&) const = default;
};

std::string render_inequality(const SymbolicInequality& q,
                              const std::vector<std::string>& names);

// The full Hoffman cut family of the modified network, with fictitious-edge
// contributions kept symbolic; per-signature dominated rows removed. |V| <= 20.
std::vector<SymbolicInequality> symbolic_hoffman_cuts(const ModifiedNetwork& ns);

struct RoutingRegion {
    std::vector<std::string> rate_names;
    SetFunction rho, sigma;                       // MA/BC capacity functions
    std::vector<SymbolicInequality> inequalities; // general form (interference)

    bool contains(const RatePoint& r, double tol = kDefaultTol) const;
};

RoutingRegion ma_region(const Network& net);
RoutingRegion bc_region(const Network& net);

// Necessary cut conditions only; redundant inequalities are pruned by linear
// programming so the printed family is irredundant.
RoutingRegion interference_necessary_region(
    const Network& net, const std::vector<std::pair<std::string, std::string>>& pairing);

struct PathFlow {
    int commodity = 0;
    std::vector<int> nodes;  // s_i .. t_i
    double amount = 0.0;
};

struct RoutingFeasibility {
    bool feasible = false;
    std::vector<PathFlow> witness;
};

// Exact per-point oracle: nonnegative flows on elementary s_i -> t_i paths
// summing to R_i per commodity, with every edge load inside [lower, upper].
RoutingFeasibility interference_routing_feasible(
    const Network& net, const std::vector<std::pair<std::string, std::string>>& pairing,
    const RatePoint& rates, double tol = kDefaultTol);

}  // namespace netcap
