#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parachern/chern.hpp"
#include "parachern/elemtrans.hpp"

namespace parachern {

/// Local discriminant of an extension at one exceptional divisor:
/// (1/2r) ch1_loc^2 - ch2_loc with ch1_loc^2 = -a^2.
Rat delta_vb_loc(const LocalChernData& d, int rank);

/// Splits ch(E) - ch(pullback) into per-exceptional contributions. The ch1
/// difference must be supported on exceptional classes with integer
/// coefficients. The ch2 difference is attributed per point from the supplied
/// per-point records; without records only single-point models are
/// unambiguous.
std::vector<LocalChernData> ch_decompose(
    const DivisorClass& ch1_e, const Rat& ch2_e, const DivisorClass& ch1_pullback,
    const Rat& ch2_pullback, const ChowModel& chow,
    const std::optional<std::map<std::string, Rat>>& ch2_records = std::nullopt);

/// Everything the local parabolic invariant at one exceptional divisor
/// depends on.
struct LocalRecord {
    std::string point;
    int rank = 0;
    LocalChernData ch;
    std::vector<Rat> betas_exceptional;     // normalized weights of the flag on P
    std::vector<long long> gr_exceptional;  // graded degrees of the flag on P

    struct Incident {
        std::string name;
        std::vector<Rat> betas;              // normalized weights along the branch
        std::vector<long long> deg_loc;      // local graded-degree contributions at P
        std::vector<int> sigma_to_exceptional; // branch flag index -> P flag index
    };
    std::vector<Incident> incident;

    /// Flag-matching permutations of the branch pairs at the blown-up point,
    /// keyed by indices into `incident` (i < j).
    std::map<std::pair<int, int>, std::vector<int>> sigma_base;
};

/// The absolute local parabolic invariant at P: local discriminant, the
/// beta-weighted exceptional and local graded degrees, the squared-beta
/// terms (the exceptional square is -1, each branch loses one self-pairing),
/// the branch/exceptional crossing terms, and the compensating pairwise term
/// of the blown-up point.
Rat delta_par_loc(const LocalRecord& rec);

/// Value of delta_par_loc for the plain pullback extension with zero weights
/// on P: only the squared-beta and compensating terms survive.
Rat delta_par_loc_baseline(const LocalRecord& rec);

/// Rank-2 difference form: delta_par_loc(E) - delta_par_loc(pullback) =
/// Delta^Vb_loc + beta0 deg_delta(F0) + sum beta_i deg_delta_loc + beta0^2
/// - 2 sum tau_i beta_i beta0.
struct Rank2LocalDiffInput {
    Rat delta_vb_loc;
    Rat beta0;
    long long f0_deg_delta = 0;
    std::vector<Rat> incident_betas;
    std::vector<long long> incident_deg_delta;
    std::vector<int> incident_tau; // +1 or -1
};
Rat delta_par_loc_diff_rank2(const Rank2LocalDiffInput& in);

/// Numerical record of one extension across an exceptional divisor, as read
/// from a scenario file. An empty chain with zero data is the plain pullback
/// (the only record accepted for ranks other than 2).
struct ExtensionRecord {
    std::vector<long long> mu_chain;
    std::map<std::string, long long> deg_delta_loc;
    long long f0_deg_delta = 0;
    Rat beta0;
    std::map<std::string, int> tau; // +1 or -1 per incident component

    bool is_pullback() const;
};
using ExtensionMap = std::map<std::string, ExtensionRecord>;

/// The blown-up scenario together with the extension bundle it determines and
/// the per-point local records.
struct BuiltExtension {
    BlowUpResult blowup;
    ParabolicBundle bundle_x; // extension of the base bundle across the exceptional divisors
    std::vector<LocalRecord> locals;
    std::vector<std::string> warnings;
};

/// Assembles the extension of `base` across every multiple point prescribed
/// by `ext`; validates chain/degree/weight congruences per point.
BuiltExtension build_extension(const SurfaceScenario& scenario, const ParabolicBundle& base,
                               const ExtensionMap& ext);

/// The global invariant of the base scenario (multiple points contribute one
/// crossing term per incident pair), same as delta_par.
Rat delta_par_global(const BundleView& v);

/// Two-sided evaluation of the local-to-global decomposition:
/// delta_par on the blown-up surface against the base global term plus the
/// per-point local invariants.
struct DecompositionReport {
    Rat lhs;        // delta_par of the extension on the blown-up surface
    Rat rhs_global; // delta_par_global of the base bundle
    struct LocalTerm {
        std::string point;
        int g = 0;
        Rat delta_vb_loc;
        Rat diff;     // relative to the pullback extension
        Rat baseline; // pullback value
        Rat absolute; // baseline + diff
    };
    std::vector<LocalTerm> locals;
    std::vector<std::string> warnings;

    Rat rhs() const;
    Rat discrepancy() const { return lhs - rhs(); }
    bool pass() const { return discrepancy() == 0; }
};
DecompositionReport decomposition_check(const SurfaceScenario& scenario,
                                        const ParabolicBundle& base, const ExtensionMap& ext);

} // namespace parachern
