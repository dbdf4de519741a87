#include "netcap/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace netcap {

namespace {

void require_matching_sources(const Network& net, const JointPMF& pmf) {
    std::vector<std::string> net_sources;
    for (int s : net.sources()) net_sources.push_back(net.node_name(s));
    if (net_sources != pmf.sources)
        throw ValidationError("source sets of network and pmf do not match");
}

double subset_sum(const RatePoint& r, std::uint32_t subset) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.rates.size(); ++i)
        if ((subset >> i) & 1) s += r.rates[i];
    return s;
}

}  // namespace

bool Region::contains(const RatePoint& r, double tol) const {
    if (r.rates.size() != ground.size()) throw ValidationError("rate point dimension mismatch");
    for (double v : r.rates)
        if (v < -tol) return false;
    for (const Constraint& c : constraints) {
        double s = subset_sum(r, c.subset);
        if (c.is_upper ? s > c.value + tol : s < c.value - tol) return false;
    }
    return true;
}

Verdict check_transmissible(const Network& net, const JointPMF& pmf, double tol) {
    require_matching_sources(net, pmf);
    SetFunction sigma = entropy_setfunction(pmf);
    SetFunction rho = capacity_setfunction(net);
    Verdict v;
    v.decision = true;
    std::uint32_t n = std::uint32_t{1} << sigma.arity();
    for (std::uint32_t s = 1; s < n; ++s) {
        Margin m;
        m.subset = s;
        m.lhs = sigma.at(s);
        m.rhs = rho.at(s);
        m.slack = m.rhs - m.lhs;
        v.margins.push_back(m);
        if (m.slack < -tol && v.decision) {
            v.decision = false;
            v.violator = s;
            v.violator_label = sigma.subset_name(s);
        }
    }
    return v;
}

Region region_Ct(const Network& net, const std::string& sink) {
    SetFunction rho = capacity_setfunction(net, sink);
    Region r;
    r.ground = rho.ground;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << rho.arity()); ++s)
        r.constraints.push_back({s, true, rho.at(s)});
    return r;
}

Region region_SW(const JointPMF& pmf) {
    SetFunction sigma = entropy_setfunction(pmf);
    Region r;
    r.ground = sigma.ground;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << sigma.arity()); ++s)
        r.constraints.push_back({s, false, sigma.at(s)});
    return r;
}

Region independent_capacity_region(const Network& net) {
    SetFunction rho = capacity_setfunction(net);
    Region r;
    r.ground = rho.ground;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << rho.arity()); ++s)
        r.constraints.push_back({s, true, rho.at(s)});
    return r;
}

Verdict check_condition2(const Network& net, const JointPMF& pmf, double tol) {
    require_matching_sources(net, pmf);
    SetFunction sigma = entropy_setfunction(pmf);
    Verdict v;
    v.decision = true;
    for (int t : net.sinks()) {
        const std::string sink = net.node_name(t);
        SetFunction rho = capacity_setfunction(net, sink);
        HanVerdict h = han_feasible(sigma, rho, tol);
        std::uint32_t n = std::uint32_t{1} << sigma.arity();
        for (std::uint32_t s = 1; s < n; ++s) {
            Margin m;
            m.subset = s;
            m.label = sink;
            m.lhs = sigma.at(s);
            m.rhs = rho.at(s);
            m.slack = m.rhs - m.lhs;
            v.margins.push_back(m);
        }
        if (!h.feasible) {
            if (v.decision) {
                v.decision = false;
                v.violator = h.violator;
                v.violator_label = sink + ":" + sigma.subset_name(h.violator);
            }
            continue;
        }
        if (auto w = find_rate_point(sigma, {rho}, tol)) v.sink_witnesses[sink] = *w;
    }
    if (v.decision && !v.sink_witnesses.empty())
        v.witness = v.sink_witnesses.begin()->second;
    return v;
}

Verdict check_separable(const Network& net, const JointPMF& pmf, double tol) {
    require_matching_sources(net, pmf);
    if (net.sources().size() > 12)
        throw GuardError("check_separable: source set guard exceeded (p <= 12)");
    SetFunction sigma = entropy_setfunction(pmf);
    SetFunction rho = capacity_setfunction(net);
    Verdict v;
    std::uint32_t n = std::uint32_t{1} << sigma.arity();
    for (std::uint32_t s = 1; s < n; ++s) {
        Margin m;
        m.subset = s;
        m.lhs = sigma.at(s);
        m.rhs = rho.at(s);
        m.slack = m.rhs - m.lhs;
        v.margins.push_back(m);
    }
    auto w = find_rate_point(sigma, {rho}, tol);
    v.decision = w.has_value();
    if (w) {
        v.witness = *w;
    } else {
        // report the most violated pointwise comparison, if any
        auto worst = std::min_element(v.margins.begin(), v.margins.end(),
                                      [](const Margin& a, const Margin& b) {
                                          return a.slack < b.slack;
                                      });
        if (worst != v.margins.end() && worst->slack < -tol) {
            v.violator = worst->subset;
            v.violator_label = sigma.subset_name(worst->subset);
        }
    }
    return v;
}

std::vector<std::array<double, 2>> region_vertices_2d(const Region& r, double tol) {
    if (r.ground.size() != 2)
        throw ValidationError("region_vertices_2d: exactly 2 rate variables required");

    // Half-planes a.x <= b, including nonnegativity.
    struct Half {
        double ax, ay, b;
    };
    std::vector<Half> hp = {{-1, 0, 0}, {0, -1, 0}};
    for (const auto& c : r.constraints) {
        double ax = (c.subset & 1) ? 1.0 : 0.0;
        double ay = (c.subset & 2) ? 1.0 : 0.0;
        if (c.is_upper)
            hp.push_back({ax, ay, c.value});
        else
            hp.push_back({-ax, -ay, -c.value});
    }

    auto feasible = [&](double x, double y) {
        for (const Half& h : hp)
            if (h.ax * x + h.ay * y > h.b + 10 * tol) return false;
        return true;
    };

    std::vector<std::array<double, 2>> pts;
    for (std::size_t i = 0; i < hp.size(); ++i)
        for (std::size_t j = i + 1; j < hp.size(); ++j) {
            double det = hp[i].ax * hp[j].ay - hp[j].ax * hp[i].ay;
            if (std::abs(det) < 1e-12) continue;
            double x = (hp[i].b * hp[j].ay - hp[j].b * hp[i].ay) / det;
            double y = (hp[i].ax * hp[j].b - hp[j].ax * hp[i].b) / det;
            if (feasible(x, y)) pts.push_back({x, y});
        }
    if (pts.empty()) return {};

    // Dedupe, then order counterclockwise around the centroid.
    const double dd = 1e-7;
    std::vector<std::array<double, 2>> uniq;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : uniq)
            seen |= std::abs(p[0] - q[0]) < dd && std::abs(p[1] - q[1]) < dd;
        if (!seen) uniq.push_back(p);
    }
    double cx = 0, cy = 0;
    for (const auto& p : uniq) {
        cx += p[0];
        cy += p[1];
    }
    cx /= uniq.size();
    cy /= uniq.size();
    std::sort(uniq.begin(), uniq.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
    });
    // rotate so the lexicographically smallest vertex comes first
    auto smallest = std::min_element(uniq.begin(), uniq.end());
    std::rotate(uniq.begin(), smallest, uniq.end());
    return uniq;
}

}  // namespace netcap
