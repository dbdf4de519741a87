#include "netcap/setfn.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "netcap/linprog.hpp"

namespace netcap {

using Rational = boost::multiprecision::cpp_rational;

std::string SetFunction::subset_name(std::uint32_t mask) const {
    if (mask == 0) return "{}";
    std::string out = "{";
    for (int i = 0; i < arity(); ++i)
        if ((mask >> i) & 1) {
            if (out.size() > 1) out += ",";
            out += ground[i];
        }
    return out + "}";
}

std::size_t JointPMF::table_size() const {
    std::size_t n = 1;
    for (int a : alphabet_sizes) n *= static_cast<std::size_t>(a);
    return n;
}

void JointPMF::validate(double tol) const {
    if (sources.empty()) throw ValidationError("pmf: no sources");
    if (sources.size() != alphabet_sizes.size())
        throw ValidationError("pmf: alphabet count mismatch");
    for (int a : alphabet_sizes)
        if (a <= 0) throw ValidationError("pmf: nonpositive alphabet size");
    if (probs.size() != table_size()) throw ValidationError("pmf: table size mismatch");
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw ValidationError("pmf: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > std::max(tol, 1e-9))
        throw ValidationError("pmf: probabilities sum to " + fmt12(sum));
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("binary_entropy: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;  // continuity extension
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double joint_entropy(const JointPMF& pmf, std::uint32_t subset) {
    int p = pmf.arity();
    if (subset >= (std::uint32_t{1} << p)) throw ValidationError("subset out of range");
    // Marginalize onto the subset by accumulating over a reduced index.
    std::size_t sub_size = 1;
    for (int i = 0; i < p; ++i)
        if ((subset >> i) & 1) sub_size *= pmf.alphabet_sizes[i];
    std::vector<double> marg(sub_size, 0.0);
    std::size_t n = pmf.table_size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t rest = idx, key = 0, stride = 1;
        for (int i = 0; i < p; ++i) {
            std::size_t sym = rest % pmf.alphabet_sizes[i];
            rest /= pmf.alphabet_sizes[i];
            if ((subset >> i) & 1) {
                key += sym * stride;
                stride *= pmf.alphabet_sizes[i];
            }
        }
        marg[key] += pmf.probs[idx];
    }
    double h = 0.0;
    for (double q : marg)
        if (q > 0.0) h -= q * std::log2(q);  // 0 log 0 := 0
    return h;
}

double conditional_entropy(const JointPMF& pmf, std::uint32_t subset) {
    std::uint32_t full = (std::uint32_t{1} << pmf.arity()) - 1;
    if (subset == 0) return 0.0;
    return joint_entropy(pmf, full) - joint_entropy(pmf, full & ~subset);
}

SetFunction entropy_setfunction(const JointPMF& pmf) {
    int p = pmf.arity();
    if (p > 20) throw GuardError("entropy_setfunction: ground set guard exceeded (p <= 20)");
    pmf.validate();
    SetFunction f;
    f.ground = pmf.sources;
    f.values.resize(std::size_t{1} << p);
    for (std::uint32_t s = 0; s < f.values.size(); ++s)
        f.values[s] = conditional_entropy(pmf, s);
    return f;
}

namespace {

AxiomCheck check_axioms(const SetFunction& f, double tol, bool submodular) {
    AxiomCheck res;
    int p = f.arity();
    if (p > 12) throw GuardError("axiom check: ground set guard exceeded (p <= 12)");
    std::uint32_t n = std::uint32_t{1} << p;
    if (f.values.size() != n) throw ValidationError("set function table size mismatch");

    if (std::abs(f.at(0)) > tol) {
        res.ok = false;
        res.axiom = "normalization";
        res.margin = std::abs(f.at(0));
        return res;
    }
    // Monotonicity over all comparable pairs: iterate T, then S over subsets of T.
    for (std::uint32_t t = 0; t < n; ++t) {
        for (std::uint32_t s = t; ; s = (s - 1) & t) {
            if (f.at(s) > f.at(t) + tol) {
                res.ok = false;
                res.axiom = "monotonicity";
                res.s = s;
                res.t = t;
                res.margin = f.at(s) - f.at(t);
                return res;
            }
            if (s == 0) break;
        }
    }
    // Sub/supermodularity over all pairs.
    for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t = 0; t < n; ++t) {
            double lhs = f.at(s & t) + f.at(s | t);
            double rhs = f.at(s) + f.at(t);
            double viol = submodular ? lhs - rhs : rhs - lhs;
            if (viol > tol) {
                res.ok = false;
                res.axiom = submodular ? "submodularity" : "supermodularity";
                res.s = s;
                res.t = t;
                res.margin = viol;
                return res;
            }
        }
    return res;
}

}  // namespace

AxiomCheck is_polymatroid(const SetFunction& f, double tol) {
    return check_axioms(f, tol, /*submodular=*/true);
}

AxiomCheck is_copolymatroid(const SetFunction& f, double tol) {
    return check_axioms(f, tol, /*submodular=*/false);
}

HanVerdict han_feasible(const SetFunction& sigma, const SetFunction& rho, double tol) {
    if (sigma.ground != rho.ground)
        throw ValidationError("han_feasible: mismatched ground sets");
    if (auto c = is_copolymatroid(sigma, tol); !c.ok)
        throw ValidationError("han_feasible: sigma violates co-polymatroid axiom (" + c.axiom +
                              ")");
    if (auto c = is_polymatroid(rho, tol); !c.ok)
        throw ValidationError("han_feasible: rho violates polymatroid axiom (" + c.axiom + ")");
    HanVerdict v;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << sigma.arity()); ++s) {
        if (sigma.at(s) > rho.at(s) + tol) {
            v.feasible = false;
            v.violator = s;
            v.sigma_value = sigma.at(s);
            v.rho_value = rho.at(s);
            return v;
        }
    }
    return v;
}

namespace {

// Exact rational reconstruction of a double, accepted only when it converts
// back bit-for-bit.
std::optional<Rational> to_exact_rational(double v, long max_den = 1000000000L) {
    if (!std::isfinite(v)) return std::nullopt;
    double x = v;
    long long num[3] = {0, 1, 0}, den[3] = {1, 0, 0};
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        if (fl > 9e17 || fl < -9e17) return std::nullopt;
        long long a = static_cast<long long>(fl);
        num[2] = a * num[1] + num[0];
        den[2] = a * den[1] + den[0];
        if (den[2] > max_den) break;
        if (den[2] != 0 &&
            static_cast<double>(num[2]) / static_cast<double>(den[2]) == v)
            return Rational(num[2], den[2]);
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
        num[0] = num[1];
        num[1] = num[2];
        den[0] = den[1];
        den[1] = den[2];
    }
    return std::nullopt;
}

template <class T>
std::optional<std::vector<T>> solve_rate_lp(int p, const std::vector<T>& lo,
                                            const std::vector<T>& hi, bool has_upper,
                                            const T& eps) {
    LinearProgram<T> lp;
    lp.num_vars = p;
    std::uint32_t n = std::uint32_t{1} << p;
    for (std::uint32_t s = 1; s < n; ++s) {
        std::vector<T> a(p, T(0));
        for (int i = 0; i < p; ++i)
            if ((s >> i) & 1) a[i] = T(1);
        lp.add_row(a, LinearProgram<T>::GE, lo[s]);
        if (has_upper) lp.add_row(a, LinearProgram<T>::LE, hi[s]);
    }
    auto res = solve_lp(lp, eps);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    return res.x;
}

}  // namespace

std::optional<RatePoint> find_rate_point(const SetFunction& lower,
                                         const std::vector<SetFunction>& uppers,
                                         double tol) {
    int p = lower.arity();
    if (p > 12) throw GuardError("find_rate_point: ground set guard exceeded (p <= 12)");
    for (const auto& u : uppers)
        if (u.ground != lower.ground)
            throw ValidationError("find_rate_point: mismatched ground sets");

    const bool has_upper = !uppers.empty();
    std::uint32_t n = std::uint32_t{1} << p;
    std::vector<double> lo(n, 0.0), hi(n, 0.0);
    for (std::uint32_t s = 1; s < n; ++s) {
        lo[s] = lower.at(s);
        double h = std::numeric_limits<double>::infinity();
        for (const auto& u : uppers) h = std::min(h, u.at(s));
        hi[s] = has_upper ? h : 0.0;
    }

    // Exact route when every bound is exactly rational.
    bool all_rational = true;
    std::vector<Rational> rlo(n), rhi(n);
    for (std::uint32_t s = 1; s < n && all_rational; ++s) {
        auto a = to_exact_rational(lo[s]);
        auto b = has_upper ? to_exact_rational(hi[s]) : std::optional<Rational>(Rational(0));
        if (a && b) {
            rlo[s] = *a;
            rhi[s] = *b;
        } else {
            all_rational = false;
        }
    }

    if (all_rational) {
        auto x = solve_rate_lp<Rational>(p, rlo, rhi, has_upper, Rational(0));
        if (!x) return std::nullopt;
        RatePoint r;
        for (const auto& v : *x) r.rates.push_back(static_cast<double>(v));
        return r;
    }
    auto x = solve_rate_lp<double>(p, lo, hi, has_upper, tol);
    if (!x) return std::nullopt;
    RatePoint r;
    r.rates = *x;
    return r;
}

JointPMF parse_pmf(const std::string& text) {
    JointPMF pmf;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<std::vector<std::string>> prob_lines;
    std::vector<int> prob_linenos;
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
        if (tok[0] == "alphabet") {
            if (tok.size() != 3) throw ParseError("expected: alphabet <source> <size>", lineno);
            pmf.sources.push_back(tok[1]);
            int sz;
            try {
                sz = std::stoi(tok[2]);
            } catch (const std::exception&) {
                throw ParseError("bad alphabet size '" + tok[2] + "'", lineno);
            }
            if (sz <= 0) throw ParseError("alphabet size must be positive", lineno);
            pmf.alphabet_sizes.push_back(sz);
        } else if (tok[0] == "prob") {
            prob_lines.push_back(tok);
            prob_linenos.push_back(lineno);
        } else {
            throw ParseError("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    if (pmf.sources.empty()) throw ParseError("no alphabet lines", lineno);
    pmf.probs.assign(pmf.table_size(), 0.0);  // omitted tuples have probability 0
    for (std::size_t k = 0; k < prob_lines.size(); ++k) {
        const auto& tok = prob_lines[k];
        int ln = prob_linenos[k];
        if (tok.size() != pmf.sources.size() + 2)
            throw ParseError("expected: prob <sym per source> <value>", ln);
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < pmf.sources.size(); ++i) {
            int sym;
            try {
                sym = std::stoi(tok[1 + i]);
            } catch (const std::exception&) {
                throw ParseError("bad symbol '" + tok[1 + i] + "'", ln);
            }
            if (sym < 0 || sym >= pmf.alphabet_sizes[i])
                throw ParseError("symbol out of alphabet range", ln);
            idx += static_cast<std::size_t>(sym) * stride;
            stride *= pmf.alphabet_sizes[i];
        }
        try {
            pmf.probs[idx] = std::stod(tok.back());
        } catch (const std::exception&) {
            throw ParseError("bad probability '" + tok.back() + "'", ln);
        }
    }
    pmf.validate();
    return pmf;
}

std::string render_pmf(const JointPMF& pmf) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pmf.sources.size(); ++i)
        os << "alphabet " << pmf.sources[i] << " " << pmf.alphabet_sizes[i] << "\n";
    std::size_t n = pmf.table_size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        if (pmf.probs[idx] == 0.0) continue;
        os << "prob";
        std::size_t rest = idx;
        for (std::size_t i = 0; i < pmf.sources.size(); ++i) {
            os << " " << rest % pmf.alphabet_sizes[i];
            rest /= pmf.alphabet_sizes[i];
        }
        os << " " << fmt12(pmf.probs[idx]) << "\n";
    }
    return os.str();
}

}  // namespace netcap
