#pragma once

#include <map>
#include <string>
#include <vector>

#include "parachern/parastruct.hpp"
#include "parachern/surface.hpp"

namespace parachern {

/// A parabolic bundle given by its numerical shadow: rank, first and second
/// Chern data, one full flag per divisor component, and the flag-matching
/// permutations at the crossing points.
struct ParabolicBundle {
    int rank = 0;
    DivisorClass ch1;
    Rat ch2;
    std::map<std::string, FlagData> flags;
    std::vector<CrossingPermutation> permutations;
};

/// Validated view of a bundle over a scenario. Resolves the permutation for
/// every crossing-pair instance (defaulting to the identity, with a warning)
/// and caches the normalized weights per component.
class BundleView {
public:
    BundleView(const SurfaceScenario& scenario, const ParabolicBundle& bundle);

    const SurfaceScenario& scenario() const { return *scenario_; }
    const ParabolicBundle& bundle() const { return *bundle_; }
    int rank() const { return bundle_->rank; }

    const FlagData& flag(const std::string& comp) const;
    const std::vector<Rat>& betas(const std::string& comp) const;
    const Rat& alpha_tot(const std::string& comp) const;

    /// Flag index along `from` -> flag index along `to` at the given point.
    const std::vector<int>& sigma(const std::string& point, const std::string& from,
                                  const std::string& to) const;

    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    const SurfaceScenario* scenario_;
    const ParabolicBundle* bundle_;
    std::map<std::string, NormalizedWeights> normalized_;
    std::map<std::string, std::vector<int>> sigma_; // key: point|from|to
    std::vector<std::string> warnings_;
};

/// ch1 of the parabolic structure: ch1 minus the weight-laden component classes.
DivisorClass ch1_par(const BundleView& v);

/// ch2 of the parabolic structure: graded-degree, squared-weight and crossing
/// corrections to ch2. Multiple points contribute one crossing term per
/// incident pair of branches.
Rat ch2_par(const BundleView& v);

/// Discriminant (1/2r) ch1^2 - ch2 of plain Chern data.
Rat delta_vb(const Rat& ch1_sq, const Rat& ch2, int rank);
Rat delta_vb(const BundleView& v);

/// Parabolic discriminant in the trace-free form: Delta^Vb plus beta-weighted
/// graded degrees minus the squared-beta and crossing corrections.
Rat delta_par(const BundleView& v);

/// Same invariant computed through ch1_par/ch2_par; equals delta_par exactly.
Rat delta_par_dual(const BundleView& v);

/// Rank-2 specialization of delta_par; exact agreement with the general form.
Rat delta_par_rank2(const BundleView& v);

/// Tensors by an integral line-bundle class: ch1 += r L, ch2 += ch1.L +
/// r L^2/2, every graded degree on a component C gains L.C; weights unchanged.
ParabolicBundle tensor_line_bundle(const ParabolicBundle& b, const DivisorClass& L,
                                   const SurfaceScenario& scenario);

} // namespace parachern
