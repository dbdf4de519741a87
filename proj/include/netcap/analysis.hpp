#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcap/capacity.hpp"
#include "netcap/network.hpp"
#include "netcap/setfn.hpp"

namespace netcap {

// Conjunction of subset-sum bounds over per-source rate variables, plus the
// implicit R_i >= 0.
struct Region {
    struct Constraint {
        std::uint32_t subset = 0;  // nonempty
        bool is_upper = true;      // sum_{i in subset} R_i <= value (else >=)
        double value = 0.0;
    };
    std::vector<std::string> ground;
    std::vector<Constraint> constraints;

    bool contains(const RatePoint& r, double tol = kDefaultTol) const;
};

struct Margin {
    std::uint32_t subset = 0;
    std::string label;  // e.g. sink name for per-sink comparisons
    double lhs = 0.0, rhs = 0.0, slack = 0.0;
};

struct Verdict {
    bool decision = false;
    std::vector<Margin> margins;
    std::optional<RatePoint> witness;
    std::optional<std::uint32_t> violator;
    std::string violator_label;
    std::map<std::string, RatePoint> sink_witnesses;  // filled by check_condition2
};

// Theorem-level transmissibility test: H(X_S|X_Sbar) <= rho_N(S) for all
// nonempty S.
Verdict check_transmissible(const Network& net, const JointPMF& pmf,
                            double tol = kDefaultTol);

// Per-sink cut-bound region C_t and the Slepian-Wolf region R_SW.
Region region_Ct(const Network& net, const std::string& sink);
Region region_SW(const JointPMF& pmf);
Region independent_capacity_region(const Network& net);

// Equivalent per-sink condition: R_SW intersects C_t for every sink.
Verdict check_condition2(const Network& net, const JointPMF& pmf, double tol = kDefaultTol);

// Separability: a single rate point in R_SW and every C_t simultaneously.
Verdict check_separable(const Network& net, const JointPMF& pmf, double tol = kDefaultTol);

// Vertices of a two-variable region, counterclockwise, starting from the
// lexicographically smallest vertex. Empty sequence for an empty region.
std::vector<std::array<double, 2>> region_vertices_2d(const Region& r,
                                                      double tol = kDefaultTol);

}  // namespace netcap
