#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parachern/localize.hpp"

namespace parachern {

/// One numerical extension candidate at an exceptional divisor. Incident
/// components are indexed in a fixed (name-sorted) order.
struct ExtensionCandidate {
    std::vector<long long> mu_seq;
    std::vector<long long> d; // deg_delta_loc per incident component
    long long f0_deg_delta = 0;
    std::vector<int> tau; // +1 or -1 per incident component
    Rat beta0;

    int g() const { return static_cast<int>(mu_seq.size()); }
    long long mu() const { return mu_seq.empty() ? 0 : mu_seq.back(); }
    bool is_pullback() const;

    /// Lexicographic order on (g, mu_seq, d, f0, tau, beta0); +1 before -1.
    bool operator<(const ExtensionCandidate& o) const;
    bool operator==(const ExtensionCandidate& o) const;
};

/// Value of a candidate relative to the pullback baseline, through the rank-2
/// local difference formula with Delta^Vb_loc = (1/2) sum (mu_j - 1/2).
Rat candidate_value(const ExtensionCandidate& c, const std::vector<Rat>& betas);

/// Exact minimizer of beta0^2 + beta0 (f0 - 2 sum tau_i beta_i) over
/// beta0 in [0, 1/4]: the clamped vertex of the convex quadratic. Returns
/// (beta0*, contribution).
std::pair<Rat, Rat> optimal_beta0(long long f0_deg_delta, const std::vector<int>& tau,
                                  const std::vector<Rat>& betas);

struct MinimizeOptions {
    /// Cap on the final mu of enumerated chains; -1 means max(kappa, 1).
    long long mu_cap = -1;
    /// Skip whole chain lengths g once (g^2-2g)/4 - (g+1) kappa / 2 exceeds
    /// the best value found.
    bool prune = true;
};

struct PruneStats {
    long long evaluated = 0;
    std::vector<int> g_pruned;
};

struct MinimizationReport {
    std::string point;
    std::vector<std::string> incident; // name-sorted; candidate vectors use this order
    std::vector<Rat> incident_betas;
    Rat baseline;         // local invariant of the pullback extension
    Rat minimum_relative; // min over candidates, relative to the baseline
    std::vector<ExtensionCandidate> argmin;
    int g_max_used = 0;
    long long mu_cap_used = 0;
    PruneStats stats;
    bool panov_ok = true;        // every argmin has mu <= kappa
    bool stationarity_ok = true; // interior beta0 argmins satisfy the vanishing derivative

    int kappa() const { return static_cast<int>(incident.size()); }
    Rat minimum_absolute() const { return baseline + minimum_relative; }
};

/// Exhaustive (optionally pruned) search over the numerical extension
/// candidates at one multiple point of a rank-2 scenario.
MinimizationReport minimize_at_point(const BundleView& base_view, const std::string& point,
                                     const MinimizeOptions& options = {});

struct GlobalMinimumReport {
    Rat delta_par_base; // global invariant of the base bundle
    std::vector<MinimizationReport> points;
    Rat delta_par_min; // delta_par_base + sum of absolute per-point minima
};

/// Runs the minimizer at every multiple point; the per-point problems are
/// independent, so the global minimum is the sum.
GlobalMinimumReport global_minimum(const BundleView& base_view,
                                   const MinimizeOptions& options = {});

} // namespace parachern
