#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netcap/common.hpp"

namespace netcap {

// Total mapping from subsets of an ordered ground set to reals; subsets are
// bitmasks over the ground order.
struct SetFunction {
    std::vector<std::string> ground;
    std::vector<double> values;  // size 1 << ground.size()

    int arity() const { return static_cast<int>(ground.size()); }
    std::uint32_t full_mask() const { return (std::uint32_t{1} << arity()) - 1; }
    double at(std::uint32_t mask) const { return values.at(mask); }

    std::string subset_name(std::uint32_t mask) const;
};

// Memoryless joint distribution of one symbol per source node.
struct JointPMF {
    std::vector<std::string> sources;
    std::vector<int> alphabet_sizes;
    std::vector<double> probs;  // dense, mixed-radix indexed, first source fastest

    int arity() const { return static_cast<int>(sources.size()); }
    std::size_t table_size() const;
    void validate(double tol = kDefaultTol) const;
};

struct RatePoint {
    std::vector<double> rates;  // one nonnegative rate per ground element
};

double binary_entropy(double p);

// H(X_S) in bits.
double joint_entropy(const JointPMF& pmf, std::uint32_t subset);
// H(X_S | X_{complement of S}) = H(X_all) - H(X_{complement}).
double conditional_entropy(const JointPMF& pmf, std::uint32_t subset);

SetFunction entropy_setfunction(const JointPMF& pmf);

struct AxiomCheck {
    bool ok = true;
    std::string axiom;         // "normalization", "monotonicity", "submodularity", ...
    std::uint32_t s = 0, t = 0;
    double margin = 0.0;       // amount by which the axiom is violated
};

AxiomCheck is_polymatroid(const SetFunction& f, double tol = kDefaultTol);
AxiomCheck is_copolymatroid(const SetFunction& f, double tol = kDefaultTol);

struct HanVerdict {
    bool feasible = true;
    std::uint32_t violator = 0;  // subset with sigma(S) > rho(S) when infeasible
    double sigma_value = 0.0, rho_value = 0.0;
};

// Pointwise test sigma <= rho; valid as a rate-point existence criterion only
// under the (co-)polymatroid axioms, which are checked first.
HanVerdict han_feasible(const SetFunction& sigma, const SetFunction& rho,
                        double tol = kDefaultTol);

// Nonnegative R with lower(S) <= sum_{i in S} R_i <= min_k upper_k(S) for all
// nonempty S, via linear feasibility (exact rationals when all bounds are
// exactly representable, doubles otherwise).
std::optional<RatePoint> find_rate_point(const SetFunction& lower,
                                         const std::vector<SetFunction>& uppers,
                                         double tol = kDefaultTol);

JointPMF parse_pmf(const std::string& text);
std::string render_pmf(const JointPMF& pmf);

}  // namespace netcap
